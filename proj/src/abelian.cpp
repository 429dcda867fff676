#include "spinlink/abelian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace spinlink {

RationalMod1::RationalMod1(const Int& n, const Int& d) {
  if (d.is_zero()) fail(ErrorKind::InvalidArgument, "rational mod 1 with zero denominator");
  Int dd = abs(d);
  Int nn = d.sign() < 0 ? -n : n;
  nn = mod_floor(nn, dd);
  Int g = gcd(nn, dd);
  if (g.is_zero()) g = Int(1);
  num_ = nn / g;
  den_ = dd / g;
}

RationalMod1::RationalMod1(const Rat& r) : RationalMod1(r.num(), r.den()) {}

std::complex<double> phase(const RationalMod1& x) {
  // Quarter turns come up constantly (half-integer spins, Z2 braidings) and
  // the gapped-boundary checks need them bit-exact.
  if (x.den() == Int(1)) return {1.0, 0.0};
  if (x.den() == Int(2)) return {-1.0, 0.0};
  if (x.den() == Int(4)) {
    if (x.num() == Int(1)) return {0.0, 1.0};
    return {0.0, -1.0};
  }
  double t = 2.0 * std::numbers::pi * x.value();
  return {std::cos(t), std::sin(t)};
}

FinAbGroup FinAbGroup::from_canonical(std::vector<Int> orders) {
  FinAbGroup g;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < Int(2))
      fail(ErrorKind::InvalidArgument, "canonical order below 2");
    if (i + 1 < orders.size() && !(orders[i + 1] % orders[i]).is_zero())
      fail(ErrorKind::InvalidArgument, "orders do not form a divisibility chain");
  }
  g.orders_ = std::move(orders);
  return g;
}

FinAbGroup FinAbGroup::from_orders(std::vector<Int> orders) {
  for (const Int& d : orders)
    if (d < Int(1)) fail(ErrorKind::InvalidArgument, "group order factors must be positive");
  std::vector<Int> kept;
  for (const Int& d : orders)
    if (d > Int(1)) kept.push_back(d);
  // Already a chain? Then the diagonal matrix below is its own Smith form.
  bool chain = true;
  for (std::size_t i = 0; i + 1 < kept.size(); ++i)
    if (!(kept[i + 1] % kept[i]).is_zero()) { chain = false; break; }
  if (!chain) {
    const Eigen::Index k = static_cast<Eigen::Index>(kept.size());
    IntMat diag = IntMat::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) diag(i, i) = kept[i];
    SnfResult r = snf(diag);
    kept.clear();
    for (Eigen::Index i = 0; i < k; ++i)
      if (r.s(i, i) > Int(1)) kept.push_back(r.s(i, i));
  }
  FinAbGroup g;
  g.orders_ = std::move(kept);
  return g;
}

Int FinAbGroup::order() const {
  Int n(1);
  for (const Int& d : orders_) n *= d;
  return n;
}

GroupElement::GroupElement(FinAbGroup group, std::vector<Int> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(group_.rank()))
    fail(ErrorKind::InvalidArgument, "element coefficient count does not match group rank");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = mod_floor(coeffs_[i], group_.orders()[i]);
}

bool GroupElement::is_identity() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& x) { return x.is_zero(); });
}

std::string GroupElement::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << coeffs_[i];
  }
  os << ")";
  return os.str();
}

GroupElement identity_element(const FinAbGroup& g) {
  return GroupElement(g, std::vector<Int>(g.rank(), Int(0)));
}

GroupElement element_add(const GroupElement& a, const GroupElement& b) {
  if (!(a.group() == b.group()))
    fail(ErrorKind::InvalidArgument, "cannot add elements of different groups");
  std::vector<Int> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs()[i] + b.coeffs()[i];
  return GroupElement(a.group(), std::move(c));
}

GroupElement element_neg(const GroupElement& a) {
  std::vector<Int> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs()[i];
  return GroupElement(a.group(), std::move(c));
}

GroupElement element_scale(const Int& k, const GroupElement& a) {
  std::vector<Int> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.coeffs()[i];
  return GroupElement(a.group(), std::move(c));
}

Int element_order(const GroupElement& a) {
  Int r(1);
  const auto& d = a.group().orders();
  for (std::size_t i = 0; i < d.size(); ++i) {
    Int g = gcd(a.coeffs()[i], d[i]);
    r = lcm(r, d[i] / g);
  }
  return r;
}

std::vector<std::vector<Int>> enumerate_coeffs(const FinAbGroup& g, std::int64_t bound) {
  Int n = g.order();
  if (n > Int(bound))
    fail(ErrorKind::ResourceLimit,
         "group of order " + n.str() + " exceeds enumeration bound " + std::to_string(bound));
  std::int64_t count = to_int64(n);
  std::vector<std::vector<Int>> out;
  out.reserve(count);
  std::vector<Int> cur(g.rank(), Int(0));
  for (std::int64_t i = 0; i < count; ++i) {
    out.push_back(cur);
    for (int j = 0; j < g.rank(); ++j) {
      ++cur[j];
      if (cur[j] < g.orders()[j]) break;
      cur[j] = Int(0);
    }
  }
  return out;
}

std::int64_t element_index(const FinAbGroup& g, const std::vector<Int>& coeffs) {
  Int idx(0);
  Int stride(1);
  for (int j = 0; j < g.rank(); ++j) {
    idx += coeffs[j] * stride;
    stride *= g.orders()[j];
  }
  return to_int64(idx);
}

bool Subgroup::contains(const std::vector<Int>& coeffs) const {
  return std::binary_search(members_.begin(), members_.end(), coeffs);
}

const std::vector<Int>& Subgroup::rep_of(const std::vector<Int>& coeffs) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), coeffs);
  if (it == members_.end() || *it != coeffs)
    fail(ErrorKind::InvalidArgument, "element is not a member of the subgroup");
  return reps_[static_cast<std::size_t>(it - members_.begin())];
}

Subgroup subgroup_generate_coeffs(const FinAbGroup& g, std::vector<std::vector<Int>> gens,
                                  std::int64_t bound) {
  if (g.order() > Int(bound))
    fail(ErrorKind::ResourceLimit, "ambient group exceeds enumeration bound");
  Subgroup s;
  s.group_ = g;
  for (auto& c : gens) {
    if (c.size() != static_cast<std::size_t>(g.rank()))
      fail(ErrorKind::InvalidArgument, "generator coefficient count does not match group rank");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_floor(c[i], g.orders()[i]);
  }
  s.gens_ = gens;

  const std::size_t m = gens.size();
  std::map<std::vector<Int>, std::vector<Int>> closure;
  std::vector<std::vector<Int>> frontier;
  std::vector<Int> id(g.rank(), Int(0));
  closure.emplace(id, std::vector<Int>(m, Int(0)));
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<Int> x = std::move(frontier.back());
    frontier.pop_back();
    const std::vector<Int> rep = closure.at(x);
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Int> y(g.rank());
      for (int i = 0; i < g.rank(); ++i)
        y[i] = mod_floor(x[static_cast<std::size_t>(i)] + gens[j][static_cast<std::size_t>(i)],
                         g.orders()[static_cast<std::size_t>(i)]);
      auto it = closure.find(y);
      if (it != closure.end()) continue;
      std::vector<Int> yrep = rep;
      ++yrep[j];
      closure.emplace(y, std::move(yrep));
      frontier.push_back(std::move(y));
    }
  }
  s.members_.reserve(closure.size());
  s.reps_.reserve(closure.size());
  for (auto& [member, rep] : closure) {
    s.members_.push_back(member);
    s.reps_.push_back(rep);
  }
  return s;
}

Subgroup subgroup_generate(const FinAbGroup& g, const std::vector<GroupElement>& gens,
                           std::int64_t bound) {
  std::vector<std::vector<Int>> coeffs;
  coeffs.reserve(gens.size());
  for (const auto& e : gens) {
    if (!(e.group() == g))
      fail(ErrorKind::InvalidArgument, "generator belongs to a different group");
    coeffs.push_back(e.coeffs());
  }
  return subgroup_generate_coeffs(g, std::move(coeffs), bound);
}

std::vector<Int> GroupHom::apply(const std::vector<Int>& coeffs) const {
  std::vector<Int> out(codomain.rank(), Int(0));
  for (int i = 0; i < codomain.rank(); ++i) {
    Int acc(0);
    for (int j = 0; j < domain.rank(); ++j) acc += matrix(i, j) * coeffs[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = mod_floor(acc, codomain.orders()[static_cast<std::size_t>(i)]);
  }
  return out;
}

GroupElement GroupHom::operator()(const GroupElement& a) const {
  if (!(a.group() == domain))
    fail(ErrorKind::InvalidArgument, "homomorphism applied to element of wrong group");
  return GroupElement(codomain, apply(a.coeffs()));
}

Presentation normalize_presentation(Eigen::Index k, const IntMat& relations) {
  if (relations.rows() != k)
    fail(ErrorKind::InvalidArgument, "relation matrix row count does not match rank");
  SnfResult r = snf(relations);
  if (r.rank() < k)
    fail(ErrorKind::InvalidArgument, "presented group is infinite");
  std::vector<Int> orders;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (r.s(i, i) > Int(1)) {
      orders.push_back(r.s(i, i));
      kept.push_back(i);
    }
  }
  Presentation p;
  p.group = FinAbGroup::from_canonical(std::move(orders));
  const Eigen::Index q = static_cast<Eigen::Index>(kept.size());
  p.to_canonical = IntMat(q, k);
  for (Eigen::Index i = 0; i < q; ++i) p.to_canonical.row(i) = r.u.row(kept[i]);
  IntMat uinv = unimodular_inverse(r.u);
  p.gen_lifts = IntMat(k, q);
  for (Eigen::Index i = 0; i < q; ++i) p.gen_lifts.col(i) = uinv.col(kept[i]);
  return p;
}

QuotientResult quotient(const FinAbGroup& g, const Subgroup& sub) {
  if (!(sub.group() == g))
    fail(ErrorKind::InvalidArgument, "subgroup belongs to a different ambient group");
  const Eigen::Index k = g.rank();
  const Eigen::Index m = static_cast<Eigen::Index>(sub.generators().size());
  IntMat rel = IntMat::Zero(k, k + m);
  for (Eigen::Index i = 0; i < k; ++i) rel(i, i) = g.orders()[static_cast<std::size_t>(i)];
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = 0; i < k; ++i)
      rel(i, k + j) = sub.generators()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  Presentation p = normalize_presentation(k, rel);
  QuotientResult out;
  out.group = p.group;
  out.projection = GroupHom{g, p.group, p.to_canonical};
  for (Eigen::Index j = 0; j < p.gen_lifts.cols(); ++j) {
    std::vector<Int> lift(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i)
      lift[static_cast<std::size_t>(i)] =
          mod_floor(p.gen_lifts(i, j), g.orders()[static_cast<std::size_t>(i)]);
    out.gen_lifts.push_back(std::move(lift));
  }
  return out;
}

std::vector<Int> AbstractSubgroup::coords_of(const Subgroup& sub,
                                             const std::vector<Int>& member) const {
  const std::vector<Int>& rep = sub.rep_of(member);
  std::vector<Int> out(group.rank(), Int(0));
  for (int i = 0; i < group.rank(); ++i) {
    Int acc(0);
    for (Eigen::Index j = 0; j < coord_matrix.cols(); ++j)
      acc += coord_matrix(i, j) * rep[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = mod_floor(acc, group.orders()[static_cast<std::size_t>(i)]);
  }
  return out;
}

AbstractSubgroup subgroup_to_abstract(const Subgroup& sub) {
  const FinAbGroup& g = sub.group();
  const Eigen::Index k = g.rank();
  const Eigen::Index m = static_cast<Eigen::Index>(sub.generators().size());
  // Relation lattice of the generators: integer combinations that vanish in
  // the ambient group.
  IntMat gmat(k, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = 0; i < k; ++i)
      gmat(i, j) = sub.generators()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  IntMat combined(k, m + k);
  combined.leftCols(m) = gmat;
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) combined(i, m + j) = Int(0);
    combined(i, m + i) = g.orders()[static_cast<std::size_t>(i)];
  }
  IntMat ker = int_kernel(combined);
  IntMat rel = ker.topRows(m);
  Presentation p = normalize_presentation(m, rel);
  AbstractSubgroup out;
  out.group = p.group;
  out.coord_matrix = p.to_canonical;
  for (Eigen::Index j = 0; j < p.gen_lifts.cols(); ++j) {
    std::vector<Int> lift(static_cast<std::size_t>(k));
    IntVec amb = gmat * p.gen_lifts.col(j);
    for (Eigen::Index i = 0; i < k; ++i)
      lift[static_cast<std::size_t>(i)] = mod_floor(amb(i), g.orders()[static_cast<std::size_t>(i)]);
    out.gen_lifts.push_back(std::move(lift));
  }
  return out;
}

}  // namespace spinlink
