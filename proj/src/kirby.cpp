#include "spinlink/kirby.hpp"

namespace spinlink {

KirbyDiagram::KirbyDiagram(std::vector<KirbyComponent> components, IntMat linking)
    : components_(std::move(components)), linking_(std::move(linking)) {
  const auto n = static_cast<Eigen::Index>(components_.size());
  if (linking_.rows() != n || linking_.cols() != n)
    fail(ErrorKind::ParseError, "linking matrix size does not match component count");
  if (!is_symmetric(linking_))
    fail(ErrorKind::ParseError, "linking matrix must be symmetric");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(linking_(i, i) == components_[static_cast<std::size_t>(i)].framing))
      fail(ErrorKind::ParseError,
           "framing of component '" + components_[static_cast<std::size_t>(i)].name +
               "' does not match the linking diagonal");
  }
}

bool KirbyDiagram::is_even() const {
  for (const auto& c : components_)
    if (c.framing.is_odd()) return false;
  return true;
}

bool operator==(const KirbyDiagram& a, const KirbyDiagram& b) {
  if (a.components_.size() != b.components_.size()) return false;
  for (std::size_t i = 0; i < a.components_.size(); ++i) {
    if (a.components_[i].name != b.components_[i].name) return false;
    if (!(a.components_[i].framing == b.components_[i].framing)) return false;
  }
  return a.linking_ == b.linking_;
}

EvenReport validate_even(const KirbyDiagram& d) {
  EvenReport r;
  for (const auto& c : d.components()) {
    if (c.framing.is_odd()) {
      r.even = false;
      r.odd_components.push_back(c.name);
    }
  }
  return r;
}

GramLattice to_gram(const KirbyDiagram& d) { return GramLattice(d.linking()); }

namespace {

std::string default_name(Eigen::Index i) { return "K" + std::to_string(i + 1); }

}  // namespace

KirbyDiagram lens_diagram(const Int& n) {
  if (n.is_odd())
    fail(ErrorKind::SpinViolation,
         "framing " + n.str() + " is odd; only even framings give spin manifolds");
  IntMat l(1, 1);
  l(0, 0) = n;
  return KirbyDiagram({{default_name(0), n}}, std::move(l));
}

KirbyDiagram zn_gauge_diagram(const Int& n) {
  if (n < Int(1)) fail(ErrorKind::InvalidArgument, "linking number must be at least 1");
  IntMat l = IntMat::Zero(2, 2);
  l(0, 1) = l(1, 0) = n;
  return KirbyDiagram({{default_name(0), Int(0)}, {default_name(1), Int(0)}}, std::move(l));
}

KirbyDiagram from_k_matrix(const GramLattice& k) {
  if (!k.is_even())
    fail(ErrorKind::OddLattice, "K-matrix must be even to present a spin manifold");
  std::vector<KirbyComponent> comps;
  comps.reserve(static_cast<std::size_t>(k.rank()));
  for (Eigen::Index i = 0; i < k.rank(); ++i)
    comps.push_back({default_name(i), k.gram()(i, i)});
  return KirbyDiagram(std::move(comps), k.gram());
}

KirbyDiagram handle_slide(const KirbyDiagram& d, Eigen::Index i, Eigen::Index j, int sign) {
  if (i == j) fail(ErrorKind::InvalidArgument, "cannot slide a component over itself");
  if (i < 0 || j < 0 || i >= d.size() || j >= d.size())
    fail(ErrorKind::InvalidArgument, "component index out of range");
  if (sign != 1 && sign != -1) fail(ErrorKind::InvalidArgument, "slide sign must be +1 or -1");
  IntMat p = IntMat::Identity(d.size(), d.size());
  p(i, j) = Int(sign);
  IntMat g = p.transpose() * d.linking() * p;
  std::vector<KirbyComponent> comps = d.components();
  for (Eigen::Index r = 0; r < d.size(); ++r) comps[static_cast<std::size_t>(r)].framing = g(r, r);
  return KirbyDiagram(std::move(comps), std::move(g));
}

}  // namespace spinlink
