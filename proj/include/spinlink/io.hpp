#pragma once

// Structured-text (JSON) serialization of the engine's document types, plus
// the small string parsers the command line uses. Rational values travel as
// exact "n/d" strings; no floats appear in exact data.

#include <iosfwd>
#include <string>

#include "spinlink/boundary.hpp"

namespace spinlink {

// {"orders":[...], "q_gen":["n/d",...], "l_gen":[["n/d",...],...]}
std::string serialize_theory(const AnyonTheory& t);
AnyonTheory parse_theory(const std::string& text);

// {"gram": [[int,...],...]}
std::string serialize_gram(const GramLattice& l);
GramLattice parse_gram(const std::string& text);

// {"components":[{"name":"K1","framing":0},...],"linking":[[0,2],[2,0]]}
std::string serialize_kirby(const KirbyDiagram& d);
KirbyDiagram parse_kirby(const std::string& text);

// {"pos_basis": [[real,...],...]} rows; attached to a lattice separately.
Eigen::MatrixXd parse_pos_basis(const std::string& text);
std::string serialize_pos_basis(const Eigen::MatrixXd& b);

// Bundle for composite boundaries:
// {"bulk": <theory>, "subgroup": [[...],...], "residual_gram": [[...],...],
//  "identification": [[...],...], "pos_basis": [[...],...]}
std::string serialize_bordism(const BordismBoundaryData& d);
BordismBoundaryData parse_bordism(const std::string& text);

// "x+yi" with y > 0, e.g. "0.1+1.2i", "0+1i", "-0.3+0.8i".
TauPoint parse_tau(const std::string& text);

// Semicolon-separated generator tuples of comma-separated integers:
// "1,0;0,1". An empty string is the trivial subgroup.
std::vector<std::vector<Int>> parse_generator_list(const std::string& text);
std::vector<Int> parse_coeff_tuple(const std::string& text);

// Detects whether a document is a Kirby diagram ("linking"), a bare Gram
// matrix ("gram"), or a theory ("q_gen"), and produces the theory with the
// lattice data when present.
struct LoadedInput {
  AnyonTheory theory;
  bool has_lattice = false;
  DiscriminantData disc;   // valid when has_lattice
  GramLattice lattice;     // valid when has_lattice
};
LoadedInput load_input_document(const std::string& text);

std::string read_stream(std::istream& in);
std::string read_file_or_stdin(const std::string& path);  // "-" means stdin

}  // namespace spinlink
