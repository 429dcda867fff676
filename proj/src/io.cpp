#include "spinlink/io.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace spinlink {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("malformed document: ") + e.what());
  }
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  fail(ErrorKind::ParseError, where + ": " + what);
}

Int int_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  schema_error(where, "expected an integer");
}

RationalMod1 rational_from_string(const std::string& s, const std::string& where) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return RationalMod1(Int(s), Int(1));
    return RationalMod1(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    schema_error(where, "expected an exact rational 'n/d', got '" + s + "'");
  }
}

IntMat int_matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j[0].size());
  IntMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      schema_error(where + "[" + std::to_string(i) + "]", "ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = int_from_json(row[static_cast<std::size_t>(k)],
                              where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

Json int_matrix_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_int64(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json theory_to_json(const AnyonTheory& t) {
  Json doc;
  Json orders = Json::array();
  for (const Int& d : t.group().orders()) orders.push_back(to_int64(d));
  doc["orders"] = std::move(orders);
  Json q = Json::array();
  for (const auto& v : t.q_gen()) q.push_back(v.str());
  doc["q_gen"] = std::move(q);
  Json l = Json::array();
  for (int i = 0; i < t.group().rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < t.group().rank(); ++j) row.push_back(t.l_gen()(i, j).str());
    l.push_back(std::move(row));
  }
  doc["l_gen"] = std::move(l);
  return doc;
}

AnyonTheory theory_from_json(const Json& doc) {
  if (!doc.contains("orders") || !doc.contains("q_gen") || !doc.contains("l_gen"))
    schema_error("theory", "missing orders/q_gen/l_gen");
  std::vector<Int> orders;
  for (std::size_t i = 0; i < doc["orders"].size(); ++i)
    orders.push_back(int_from_json(doc["orders"][i], "orders[" + std::to_string(i) + "]"));
  FinAbGroup g = group_from_orders(orders);
  const auto k = static_cast<std::size_t>(g.rank());
  if (doc["q_gen"].size() != k) schema_error("q_gen", "length does not match the group rank");
  std::vector<RationalMod1> q(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!doc["q_gen"][i].is_string()) schema_error("q_gen", "entries must be 'n/d' strings");
    q[i] = rational_from_string(doc["q_gen"][i].get<std::string>(),
                                "q_gen[" + std::to_string(i) + "]");
  }
  QzMat l(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  if (doc["l_gen"].size() != k) schema_error("l_gen", "row count does not match the group rank");
  for (std::size_t i = 0; i < k; ++i) {
    if (doc["l_gen"][i].size() != k) schema_error("l_gen", "ragged matrix");
    for (std::size_t j = 0; j < k; ++j) {
      if (!doc["l_gen"][i][j].is_string()) schema_error("l_gen", "entries must be 'n/d' strings");
      l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rational_from_string(
          doc["l_gen"][i][j].get<std::string>(),
          "l_gen[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  return AnyonTheory::make(std::move(g), std::move(q), std::move(l));
}

Json kirby_to_json(const KirbyDiagram& d) {
  Json doc;
  Json comps = Json::array();
  for (const auto& c : d.components()) {
    Json comp;
    comp["name"] = c.name;
    comp["framing"] = to_int64(c.framing);
    comps.push_back(std::move(comp));
  }
  doc["components"] = std::move(comps);
  doc["linking"] = int_matrix_to_json(d.linking());
  return doc;
}

KirbyDiagram kirby_from_json(const Json& doc) {
  if (!doc.contains("components") || !doc.contains("linking"))
    schema_error("diagram", "missing components/linking");
  if (!doc["components"].is_array()) schema_error("components", "expected an array");
  std::vector<KirbyComponent> comps;
  for (std::size_t i = 0; i < doc["components"].size(); ++i) {
    const Json& c = doc["components"][i];
    const std::string where = "components[" + std::to_string(i) + "]";
    if (!c.contains("name") || !c["name"].is_string()) schema_error(where, "missing name");
    if (!c.contains("framing")) schema_error(where, "missing framing");
    comps.push_back({c["name"].get<std::string>(), int_from_json(c["framing"], where + ".framing")});
  }
  IntMat linking = int_matrix_from_json(doc["linking"], "linking");
  return KirbyDiagram(std::move(comps), std::move(linking));
}

Eigen::MatrixXd real_matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      schema_error(where, "ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Json& v = row[static_cast<std::size_t>(k)];
      if (!v.is_number()) schema_error(where, "expected a number");
      m(i, k) = v.get<double>();
    }
  }
  return m;
}

Json real_matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string serialize_theory(const AnyonTheory& t) { return dump(theory_to_json(t)); }

AnyonTheory parse_theory(const std::string& text) { return theory_from_json(parse_json(text)); }

std::string serialize_gram(const GramLattice& l) {
  Json doc;
  doc["gram"] = int_matrix_to_json(l.gram());
  return dump(doc);
}

GramLattice parse_gram(const std::string& text) {
  Json doc = parse_json(text);
  if (!doc.contains("gram")) schema_error("gram", "missing field");
  IntMat m = int_matrix_from_json(doc["gram"], "gram");
  if (!is_symmetric(m)) fail(ErrorKind::ParseError, "gram: matrix must be symmetric");
  return GramLattice(std::move(m));
}

std::string serialize_kirby(const KirbyDiagram& d) { return dump(kirby_to_json(d)); }

KirbyDiagram parse_kirby(const std::string& text) { return kirby_from_json(parse_json(text)); }

Eigen::MatrixXd parse_pos_basis(const std::string& text) {
  Json doc = parse_json(text);
  if (!doc.contains("pos_basis")) schema_error("pos_basis", "missing field");
  return real_matrix_from_json(doc["pos_basis"], "pos_basis");
}

std::string serialize_pos_basis(const Eigen::MatrixXd& b) {
  Json doc;
  doc["pos_basis"] = real_matrix_to_json(b);
  return dump(doc);
}

std::string serialize_bordism(const BordismBoundaryData& d) {
  Json doc;
  doc["bulk"] = theory_to_json(d.bulk());
  Json gens = Json::array();
  for (const auto& g : d.condensed_subgroup().generators()) {
    Json row = Json::array();
    for (const Int& x : g) row.push_back(to_int64(x));
    gens.push_back(std::move(row));
  }
  doc["subgroup"] = std::move(gens);
  doc["residual_gram"] = int_matrix_to_json(d.residual().gram());
  // one row per residual generator: its image in the condensed phase
  doc["identification"] = int_matrix_to_json(d.identification().transpose());
  doc["pos_basis"] = real_matrix_to_json(d.polarization().pos_basis());
  return dump(doc);
}

BordismBoundaryData parse_bordism(const std::string& text) {
  Json doc = parse_json(text);
  for (const char* field : {"bulk", "subgroup", "residual_gram", "identification", "pos_basis"})
    if (!doc.contains(field)) schema_error("boundary data", std::string("missing ") + field);
  AnyonTheory bulk = theory_from_json(doc["bulk"]);
  std::vector<std::vector<Int>> gens;
  for (std::size_t i = 0; i < doc["subgroup"].size(); ++i) {
    const Json& row = doc["subgroup"][i];
    if (!row.is_array()) schema_error("subgroup", "expected generator tuples");
    std::vector<Int> gen;
    for (std::size_t j = 0; j < row.size(); ++j)
      gen.push_back(int_from_json(row[j], "subgroup"));
    gens.push_back(std::move(gen));
  }
  Subgroup a = subgroup_generate_coeffs(bulk.group(), std::move(gens));
  GramLattice residual(int_matrix_from_json(doc["residual_gram"], "residual_gram"));
  IntMat ident = int_matrix_from_json(doc["identification"], "identification").transpose();
  Eigen::MatrixXd basis = real_matrix_from_json(doc["pos_basis"], "pos_basis");
  Polarization pol(residual, std::move(basis));
  return BordismBoundaryData(std::move(bulk), std::move(a), std::move(residual), std::move(ident),
                             std::move(pol));
}

TauPoint parse_tau(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s.back() != 'i')
    fail(ErrorKind::ParseError, "tau must look like 'x+yi', got '" + text + "'");
  s.pop_back();
  // split at the last +/- that is not an exponent sign and not leading
  std::size_t split = std::string::npos;
  for (std::size_t p = s.size(); p-- > 1;) {
    if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  try {
    double x = 0.0, y = 0.0;
    if (split == std::string::npos) {
      y = std::stod(s.empty() ? "1" : s);
    } else {
      x = std::stod(s.substr(0, split));
      y = std::stod(s.substr(split));
    }
    return TauPoint(x, y);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "tau must look like 'x+yi', got '" + text + "'");
  }
}

std::vector<Int> parse_coeff_tuple(const std::string& text) {
  std::vector<Int> out;
  std::string cur;
  std::stringstream ss(text);
  while (std::getline(ss, cur, ',')) {
    std::erase_if(cur, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (cur.empty()) fail(ErrorKind::ParseError, "empty coefficient in '" + text + "'");
    try {
      out.push_back(Int(cur));
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "bad integer '" + cur + "'");
    }
  }
  return out;
}

std::vector<std::vector<Int>> parse_generator_list(const std::string& text) {
  std::vector<std::vector<Int>> out;
  if (text.empty()) return out;
  std::string part;
  std::stringstream ss(text);
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    out.push_back(parse_coeff_tuple(part));
  }
  return out;
}

LoadedInput load_input_document(const std::string& text) {
  Json doc = parse_json(text);
  LoadedInput out;
  if (doc.contains("linking")) {
    KirbyDiagram d = kirby_from_json(doc);
    EvenReport even = validate_even(d);
    if (!even.even) {
      std::string names;
      for (const auto& n : even.odd_components) names += (names.empty() ? "" : ", ") + n;
      fail(ErrorKind::SpinViolation, "odd framings on: " + names);
    }
    out.lattice = to_gram(d);
    out.disc = discriminant_theory(out.lattice);
    out.theory = out.disc.theory();
    out.has_lattice = true;
  } else if (doc.contains("gram")) {
    out.lattice = GramLattice(int_matrix_from_json(doc["gram"], "gram"));
    out.disc = discriminant_theory(out.lattice);
    out.theory = out.disc.theory();
    out.has_lattice = true;
  } else if (doc.contains("q_gen")) {
    out.theory = theory_from_json(doc);
  } else {
    schema_error("input", "expected a Kirby diagram, a Gram matrix, or a theory document");
  }
  return out;
}

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_file_or_stdin(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream f(path);
  if (!f) fail(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  return read_stream(f);
}

}  // namespace spinlink
