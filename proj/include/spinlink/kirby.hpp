#pragma once

// Kirby diagrams at the linking-matrix level: named framed-link presentations
// with framings on the diagonal and pairwise linking numbers off it. All
// framings must be even (the spin condition); planar geometry is not modeled.

#include <string>
#include <vector>

#include "spinlink/lattice.hpp"

namespace spinlink {

struct KirbyComponent {
  std::string name;
  Int framing;
};

class KirbyDiagram {
 public:
  KirbyDiagram() : linking_(0, 0) {}
  // Validates symmetry and diagonal == framings.
  KirbyDiagram(std::vector<KirbyComponent> components, IntMat linking);

  const std::vector<KirbyComponent>& components() const { return components_; }
  const IntMat& linking() const { return linking_; }
  Eigen::Index size() const { return linking_.rows(); }
  bool is_even() const;

  friend bool operator==(const KirbyDiagram& a, const KirbyDiagram& b);

 private:
  std::vector<KirbyComponent> components_;
  IntMat linking_;
};

struct EvenReport {
  bool even = true;
  std::vector<std::string> odd_components;
};

EvenReport validate_even(const KirbyDiagram& d);

GramLattice to_gram(const KirbyDiagram& d);

// Single unknot with framing n; n must be even (odd framings break the spin
// condition and are rejected).
KirbyDiagram lens_diagram(const Int& n);

// Two 0-framed unknots linking n times.
KirbyDiagram zn_gauge_diagram(const Int& n);

// Abstract diagram whose linking matrix is the given even form.
KirbyDiagram from_k_matrix(const GramLattice& k);

// Slide component i over component j (adds +/- column i to column j in the
// congruence P^T G P); preserves evenness and the discriminant theory.
KirbyDiagram handle_slide(const KirbyDiagram& d, Eigen::Index i, Eigen::Index j, int sign);

}  // namespace spinlink
