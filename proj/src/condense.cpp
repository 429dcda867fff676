#include "spinlink/condense.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spinlink {

std::vector<GroupElement> bosons(const AnyonTheory& t, std::int64_t bound) {
  std::vector<GroupElement> out;
  for (const auto& c : enumerate_coeffs(t.group(), bound))
    if (q_eval_coeffs(t, c).is_zero()) out.emplace_back(t.group(), c);
  return out;
}

bool is_isotropic(const AnyonTheory& t, const Subgroup& a) {
  if (!(a.group() == t.group()))
    fail(ErrorKind::InvalidArgument, "subgroup belongs to a different group");
  for (const auto& m : a.members())
    if (!q_eval_coeffs(t, m).is_zero()) return false;
  return true;
}

namespace {

// Small generating set for a member predicate: scan the group, adding any
// element not yet generated.
Subgroup subgroup_from_predicate(const FinAbGroup& g,
                                 const std::function<bool(const std::vector<Int>&)>& pred,
                                 std::int64_t bound) {
  std::vector<std::vector<Int>> gens;
  Subgroup current = subgroup_generate_coeffs(g, gens, bound);
  for (const auto& c : enumerate_coeffs(g, bound)) {
    if (!pred(c) || current.contains(c)) continue;
    gens.push_back(c);
    current = subgroup_generate_coeffs(g, gens, bound);
  }
  return current;
}

}  // namespace

Subgroup annihilator(const AnyonTheory& t, const Subgroup& a, std::int64_t bound) {
  if (!(a.group() == t.group()))
    fail(ErrorKind::InvalidArgument, "subgroup belongs to a different group");
  auto braids_trivially = [&](const std::vector<Int>& b) {
    for (const auto& gen : a.generators())
      if (!braiding_coeffs(t, gen, b).is_zero()) return false;
    return true;
  };
  return subgroup_from_predicate(t.group(), braids_trivially, bound);
}

GroupElement CondensationResult::to_wall(const GroupElement& bulk) const {
  return wall_.projection(bulk);
}

GroupElement CondensationResult::to_condensed(const GroupElement& surviving) const {
  if (!ann_.contains(surviving.coeffs()))
    fail(ErrorKind::InvalidArgument, "anyon braids nontrivially with the condensed set");
  std::vector<Int> abs_coords = ann_abs_.coords_of(ann_, surviving.coeffs());
  return GroupElement(condensed_.group(), abs_to_condensed_.apply(abs_coords));
}

std::vector<Int> CondensationResult::lift_to_bulk(const GroupElement& condensed_anyon) const {
  if (!(condensed_anyon.group() == condensed_.group()))
    fail(ErrorKind::InvalidArgument, "anyon does not belong to the condensed theory");
  const int k = ann_.group().rank();
  std::vector<Int> out(static_cast<std::size_t>(k), Int(0));
  for (std::size_t j = 0; j < condensed_gen_bulk_lifts_.size(); ++j) {
    const Int& x = condensed_anyon.coeffs()[j];
    for (int i = 0; i < k; ++i)
      out[static_cast<std::size_t>(i)] += x * condensed_gen_bulk_lifts_[j][static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < k; ++i)
    out[static_cast<std::size_t>(i)] =
        mod_floor(out[static_cast<std::size_t>(i)], ann_.group().orders()[static_cast<std::size_t>(i)]);
  return out;
}

CondensationResult condense(const AnyonTheory& t, const Subgroup& a, std::int64_t bound) {
  if (!is_isotropic(t, a))
    fail(ErrorKind::NotIsotropic,
         "condensation requires a subgroup of mutual bosons (q = 0 on the subgroup)");
  CondensationResult r;
  if (a.order() == Int(1)) {
    // Condensing the vacuum: everything survives unchanged.
    const int k = t.group().rank();
    std::vector<std::vector<Int>> canon;
    for (int j = 0; j < k; ++j) {
      std::vector<Int> g(static_cast<std::size_t>(k), Int(0));
      g[static_cast<std::size_t>(j)] = Int(1);
      canon.push_back(std::move(g));
    }
    r.ann_ = subgroup_generate_coeffs(t.group(), canon, bound);
    r.ann_abs_ = AbstractSubgroup{t.group(), canon, IntMat::Identity(k, k)};
    r.wall_ = quotient(t.group(), a);
    r.abs_to_condensed_ = GroupHom{t.group(), t.group(), IntMat::Identity(k, k)};
    r.condensed_ = t;
    r.condensed_gen_bulk_lifts_ = canon;
    return r;
  }
  r.ann_ = annihilator(t, a, bound);
  for (const auto& m : a.members()) {
    if (!r.ann_.contains(m))
      fail(ErrorKind::NotIsotropic, "subgroup does not annihilate itself");
  }
  r.ann_abs_ = subgroup_to_abstract(r.ann_);
  // A inside the abstract annihilator.
  std::vector<std::vector<Int>> a_abs;
  for (const auto& gen : a.generators()) a_abs.push_back(r.ann_abs_.coords_of(r.ann_, gen));
  Subgroup a_in_abs = subgroup_generate_coeffs(r.ann_abs_.group, a_abs, bound);
  QuotientResult q = quotient(r.ann_abs_.group, a_in_abs);
  r.abs_to_condensed_ = q.projection;
  r.wall_ = quotient(t.group(), a);

  // Spins and braidings descend along representatives.
  const int k = t.group().rank();
  const int kq = q.group.rank();
  std::vector<std::vector<Int>> bulk_lifts;
  for (const auto& lift_abs : q.gen_lifts) {
    std::vector<Int> amb(static_cast<std::size_t>(k), Int(0));
    for (std::size_t j = 0; j < lift_abs.size(); ++j)
      for (int i = 0; i < k; ++i)
        amb[static_cast<std::size_t>(i)] +=
            lift_abs[j] * r.ann_abs_.gen_lifts[j][static_cast<std::size_t>(i)];
    bulk_lifts.push_back(std::move(amb));
  }
  std::vector<RationalMod1> qq(static_cast<std::size_t>(kq));
  QzMat ll(kq, kq);
  for (int i = 0; i < kq; ++i) {
    qq[static_cast<std::size_t>(i)] = q_eval_coeffs(t, bulk_lifts[static_cast<std::size_t>(i)]);
    for (int j = 0; j < kq; ++j)
      ll(i, j) = braiding_coeffs(t, bulk_lifts[static_cast<std::size_t>(i)],
                                 bulk_lifts[static_cast<std::size_t>(j)]);
  }
  r.condensed_ = AnyonTheory::make(q.group, std::move(qq), std::move(ll));
  r.condensed_gen_bulk_lifts_ = std::move(bulk_lifts);

  if (!(r.condensed_.group().order() * a.order() == r.ann_.order()))
    fail(ErrorKind::InvalidForm, "condensed phase has the wrong size");
  if (t.nondegenerate() && !r.condensed_.nondegenerate())
    fail(ErrorKind::InvalidForm, "condensation of a nondegenerate theory degenerated");
  return r;
}

std::vector<Subgroup> isotropic_subgroups(const AnyonTheory& t, std::int64_t bound) {
  if (t.group().order() > Int(bound))
    fail(ErrorKind::ResourceLimit, "group exceeds bound for subgroup enumeration");
  std::vector<GroupElement> bos = bosons(t, bound);
  std::vector<Subgroup> out;
  std::set<std::vector<std::vector<Int>>> seen;
  std::vector<Subgroup> frontier;
  Subgroup trivial = subgroup_generate_coeffs(t.group(), {}, bound);
  seen.insert(trivial.members());
  out.push_back(trivial);
  frontier.push_back(std::move(trivial));
  while (!frontier.empty()) {
    Subgroup s = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& b : bos) {
      if (b.is_identity() || s.contains(b.coeffs())) continue;
      bool mutual = true;
      for (const auto& gen : s.generators())
        if (!braiding_coeffs(t, gen, b.coeffs()).is_zero()) { mutual = false; break; }
      if (!mutual) continue;
      std::vector<std::vector<Int>> gens = s.generators();
      gens.push_back(b.coeffs());
      Subgroup bigger = subgroup_generate_coeffs(t.group(), std::move(gens), bound);
      if (!seen.insert(bigger.members()).second) continue;
      out.push_back(bigger);
      frontier.push_back(std::move(bigger));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.members() < b.members(); });
  return out;
}

std::vector<Subgroup> lagrangians(const AnyonTheory& t, std::int64_t bound) {
  Int n = t.group().order();
  Int root = Int(mp::sqrt(n.raw()));
  if (!(root * root == n)) return {};
  std::vector<Subgroup> out;
  for (auto& s : isotropic_subgroups(t, bound))
    if (s.order() == root) out.push_back(std::move(s));
  return out;
}

std::vector<int> gapped_boundary_vector(const AnyonTheory& t, const Subgroup& a) {
  Int n = t.group().order();
  if (!is_isotropic(t, a) || !(a.order() * a.order() == n))
    fail(ErrorKind::NotLagrangian,
         "gapped boundary requires a Lagrangian subgroup (isotropic of order sqrt |D|)");
  auto elems = enumerate_coeffs(t.group());
  std::vector<int> out(elems.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (a.contains(elems[i])) out[i] = 1;
  return out;
}

namespace {

GramLattice wall_surgery_step(const GramLattice& g, const IntVec& c, bool require_nondegenerate) {
  if (!g.is_even())
    fail(ErrorKind::OddLattice, "wall surgery requires an even linking matrix");
  if (c.size() != g.rank())
    fail(ErrorKind::InvalidArgument, "meridian vector length does not match rank");
  RatVec w;
  if (require_nondegenerate) {
    w = dual_coords(g, c);
  } else {
    auto sol = rat_solve(to_rat(g.gram()), to_rat(c));
    if (!sol)
      fail(ErrorKind::InvalidArgument, "meridian class is not torsion; no surgery framing exists");
    w = *sol;
  }
  Rat self(0);
  for (Eigen::Index i = 0; i < c.size(); ++i) self += Rat(c(i)) * w(i);
  if (!self.is_integer())
    fail(ErrorKind::TorsionLift,
         "class has nonzero self-braiding; no torsion parallel exists");
  Int f = self.num();
  if (f.is_odd())
    fail(ErrorKind::NotABoson, "class has spin 1/2; only bosons can be condensed");

  const Eigen::Index n = g.rank();
  IntMat ext(n + 1, n + 1);
  ext.topLeftCorner(n, n) = g.gram();
  for (Eigen::Index i = 0; i < n; ++i) {
    ext(i, n) = c(i);
    ext(n, i) = c(i);
  }
  ext(n, n) = f;
  return GramLattice(std::move(ext));
}

}  // namespace

GramLattice wall_surgery(const GramLattice& g, const IntVec& c) {
  return wall_surgery_step(g, c, /*require_nondegenerate=*/true);
}

GramLattice wall_surgery_iterate(const GramLattice& g, const std::vector<IntVec>& meridians) {
  const Eigen::Index base = g.rank();
  GramLattice cur = g;
  for (const IntVec& c : meridians) {
    if (c.size() > cur.rank())
      fail(ErrorKind::InvalidArgument, "meridian vector longer than current rank");
    IntVec padded = IntVec::Zero(cur.rank());
    padded.head(c.size()) = c;
    // Re-express the class in the current presentation: twisting by the
    // meridians of the components added so far is the remaining freedom, and
    // there must be a torsion representative (orthogonal to the radical).
    const Eigen::Index extra = cur.rank() - base;
    if (extra > 0) {
      IntMat kernel = int_kernel(cur.gram());
      if (kernel.cols() > 0) {
        IntMat a = kernel.bottomRows(extra).transpose();  // kernel x extra
        IntVec rhs = -(kernel.transpose() * padded);
        auto adjust = int_solve(a, rhs);
        if (!adjust)
          fail(ErrorKind::TorsionLift,
               "class has no torsion representative in the surgered presentation");
        padded.tail(extra) += *adjust;
      }
    }
    cur = wall_surgery_step(cur, padded, /*require_nondegenerate=*/false);
  }
  return cur;
}

}  // namespace spinlink
