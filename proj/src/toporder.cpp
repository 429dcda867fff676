#include "spinlink/toporder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>

namespace spinlink {

AnyonTheory AnyonTheory::make(FinAbGroup group, std::vector<RationalMod1> q_gen, QzMat l_full) {
  const int k = group.rank();
  if (static_cast<int>(q_gen.size()) != k || l_full.rows() != k || l_full.cols() != k)
    fail(ErrorKind::InvalidForm, "anyon data dimensions do not match group rank");
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j)
      if (!(l_full(i, j) == l_full(j, i)))
        fail(ErrorKind::InvalidForm, "braiding matrix is not symmetric");
    if (!(l_full(i, i) == q_gen[i] + q_gen[i]))
      fail(ErrorKind::InvalidForm, "braiding diagonal does not equal twice the spin");
  }
  const auto& d = group.orders();
  for (int i = 0; i < k; ++i) {
    if (!(d[i] * d[i] * q_gen[i]).is_zero())
      fail(ErrorKind::InvalidForm, "spin incompatible with generator order");
    for (int j = 0; j < k; ++j)
      if (!(d[i] * l_full(i, j)).is_zero())
        fail(ErrorKind::InvalidForm, "braiding incompatible with generator order");
  }
  AnyonTheory t;
  t.group_ = std::move(group);
  t.q_gen_ = std::move(q_gen);
  t.l_gen_ = std::move(l_full);

  // Nondegeneracy: a |-> L(a,-) must have trivial kernel. Checked by
  // enumeration at desk scale, by the determinant of the lifted braiding
  // matrix beyond it.
  Int n = t.group_.order();
  if (n <= Int(4096)) {
    auto elems = enumerate_coeffs(t.group_, 4096);
    for (const auto& a : elems) {
      if (std::all_of(a.begin(), a.end(), [](const Int& x) { return x.is_zero(); })) continue;
      bool in_kernel = true;
      for (int j = 0; j < k && in_kernel; ++j) {
        RationalMod1 v;
        for (int i = 0; i < k; ++i) v += a[static_cast<std::size_t>(i)] * t.l_gen_(i, j);
        if (!v.is_zero()) in_kernel = false;
      }
      if (in_kernel) { t.nondegenerate_ = false; break; }
    }
  } else {
    // The kernel of a |-> L(a,-) is { x : C^T x = 0 mod orders } / orders,
    // where C_ij = d_j * L_ij is the integer charge matrix. The form is
    // nondegenerate exactly when the preimage lattice has index |D| in Z^k,
    // i.e. when the determinant of the lifted lattice matches the product of
    // the orders.
    const auto& dd = t.group_.orders();
    IntMat combined = IntMat::Zero(k, 2 * k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const RationalMod1& lij = t.l_gen_(j, i);
        combined(i, j) = lij.num() * (dd[static_cast<std::size_t>(i)] / lij.den());
      }
      combined(i, k + i) = dd[static_cast<std::size_t>(i)];
    }
    IntMat ker = int_kernel(combined);
    IntMat preimage = ker.topRows(k);
    t.nondegenerate_ = (abs(det(preimage)) == n);
  }
  return t;
}

AnyonTheory AnyonTheory::make_offdiag(FinAbGroup group, std::vector<RationalMod1> q_gen,
                                      const QzMat& l_offdiag) {
  const int k = group.rank();
  QzMat full(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) full(i, j) = (i == j) ? q_gen[i] + q_gen[i] : l_offdiag(i, j);
  }
  return make(std::move(group), std::move(q_gen), std::move(full));
}

bool operator==(const AnyonTheory& a, const AnyonTheory& b) {
  if (!(a.group_ == b.group_) || a.q_gen_ != b.q_gen_) return false;
  for (int i = 0; i < a.group_.rank(); ++i)
    for (int j = 0; j < a.group_.rank(); ++j)
      if (!(a.l_gen_(i, j) == b.l_gen_(i, j))) return false;
  return true;
}

RationalMod1 q_eval_coeffs(const AnyonTheory& t, const std::vector<Int>& coeffs) {
  const int k = t.group().rank();
  RationalMod1 acc;
  for (int i = 0; i < k; ++i) {
    const Int& xi = coeffs[static_cast<std::size_t>(i)];
    if (xi.is_zero()) continue;
    acc += (xi * xi) * t.q_gen()[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      const Int& xj = coeffs[static_cast<std::size_t>(j)];
      if (xj.is_zero()) continue;
      acc += (xi * xj) * t.l_gen()(i, j);
    }
  }
  return acc;
}

RationalMod1 braiding_coeffs(const AnyonTheory& t, const std::vector<Int>& a,
                             const std::vector<Int>& b) {
  const int k = t.group().rank();
  RationalMod1 acc;
  for (int i = 0; i < k; ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < k; ++j) {
      if (b[static_cast<std::size_t>(j)].is_zero()) continue;
      acc += (a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) * t.l_gen()(i, j);
    }
  }
  return acc;
}

RationalMod1 q_eval(const AnyonTheory& t, const GroupElement& a) {
  if (!(a.group() == t.group()))
    fail(ErrorKind::InvalidArgument, "element does not belong to the theory's group");
  return q_eval_coeffs(t, a.coeffs());
}

RationalMod1 braiding(const AnyonTheory& t, const GroupElement& a, const GroupElement& b) {
  if (!(a.group() == t.group()) || !(b.group() == t.group()))
    fail(ErrorKind::InvalidArgument, "element does not belong to the theory's group");
  return q_eval(t, element_add(a, b)) - q_eval(t, a) - q_eval(t, b);
}

int ModularData::sigma_mod8() const {
  return static_cast<int>(to_int64(sigma_over_8.num() * (Int(8) / sigma_over_8.den())));
}

Eigen::MatrixXcd ModularData::normalized_s() const {
  return s_matrix / std::sqrt(static_cast<double>(s_matrix.rows()));
}

ModularData modular_data(const AnyonTheory& t, std::int64_t bound) {
  if (!t.nondegenerate())
    fail(ErrorKind::DegenerateForm, "modular data requires a nondegenerate braiding form");
  auto elems = enumerate_coeffs(t.group(), bound);
  const auto n = static_cast<Eigen::Index>(elems.size());
  ModularData md;
  md.t_vector.resize(n);
  md.s_matrix.resize(n, n);
  std::vector<RationalMod1> q_vals(elems.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    q_vals[static_cast<std::size_t>(i)] = q_eval_coeffs(t, elems[static_cast<std::size_t>(i)]);
    md.t_vector(i) = phase(q_vals[static_cast<std::size_t>(i)]);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      RationalMod1 l =
          braiding_coeffs(t, elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]);
      md.s_matrix(i, j) = md.s_matrix(j, i) = phase(l);
    }
  }
  std::complex<double> gm = gauss_milgram(t);
  double turns = std::arg(gm) / (2.0 * std::numbers::pi);
  long sigma = std::lround(turns * 8.0);
  sigma = ((sigma % 8) + 8) % 8;
  if (std::abs(gm - phase(RationalMod1(Int(sigma), Int(8)))) > 1e-6)
    fail(ErrorKind::DegenerateForm, "Gauss-Milgram phase is not an eighth root of unity");
  md.sigma_over_8 = RationalMod1(Int(sigma), Int(8));
  return md;
}

std::complex<double> gauss_milgram(const AnyonTheory& t, std::int64_t bound) {
  Int n = t.group().order();
  if (n > Int(bound))
    fail(ErrorKind::ResourceLimit, "group exceeds enumeration bound for Gauss-Milgram sum");
  const int k = t.group().rank();

  // Common denominator of all exact phases. Orders form a chain, so it
  // divides 2 * d_max^2 and fits in 64 bits for any enumerable group.
  Int big_n(1);
  for (int i = 0; i < k; ++i) {
    big_n = lcm(big_n, t.q_gen()[static_cast<std::size_t>(i)].den());
    for (int j = i + 1; j < k; ++j) big_n = lcm(big_n, t.l_gen()(i, j).den());
  }
  const std::int64_t nn = to_int64(big_n);
  std::vector<std::int64_t> q_num(static_cast<std::size_t>(k));
  std::vector<std::vector<std::int64_t>> l_num(static_cast<std::size_t>(k),
                                               std::vector<std::int64_t>(static_cast<std::size_t>(k), 0));
  for (int i = 0; i < k; ++i) {
    q_num[static_cast<std::size_t>(i)] =
        to_int64(t.q_gen()[static_cast<std::size_t>(i)].num() *
                 (big_n / t.q_gen()[static_cast<std::size_t>(i)].den()));
    for (int j = 0; j < k; ++j)
      l_num[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          to_int64(t.l_gen()(i, j).num() * (big_n / t.l_gen()(i, j).den()));
  }
  std::vector<std::int64_t> d(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) d[static_cast<std::size_t>(i)] = to_int64(t.group().orders()[static_cast<std::size_t>(i)]);

  // Depth-first walk with exact integer phases mod nn. Within the innermost
  // coordinate the phase advances by second differences, so the hot loop is
  // additions only.
  double re = 0.0, im = 0.0, re_c = 0.0, im_c = 0.0;
  const double scale = 2.0 * std::numbers::pi / static_cast<double>(nn);
  auto emit = [&](std::int64_t phase_num) {
    double a = scale * static_cast<double>(phase_num);
    double x = std::cos(a), y = std::sin(a);
    double t1 = x - re_c;
    double s1 = re + t1;
    re_c = (s1 - re) - t1;
    re = s1;
    double t2 = y - im_c;
    double s2 = im + t2;
    im_c = (s2 - im) - t2;
    im = s2;
  };
  // linear[j] = L(prefix, g_j) for coordinates not yet assigned.
  std::vector<std::int64_t> linear(static_cast<std::size_t>(k), 0);
  auto dfs = [&](auto&& self, int level, std::int64_t base) -> void {
    if (level < 0) { emit(base); return; }
    const auto lv = static_cast<std::size_t>(level);
    std::int64_t cur = base;
    std::int64_t step = (q_num[lv] + linear[lv]) % nn;
    std::int64_t step2 = (2 * q_num[lv]) % nn;
    std::vector<std::int64_t> saved;
    if (level > 0) saved.assign(linear.begin(), linear.begin() + level);
    for (std::int64_t x = 0; x < d[lv]; ++x) {
      if (level == 0) {
        emit(cur);
      } else {
        self(self, level - 1, cur);
      }
      cur += step;
      if (cur >= nn) cur -= nn;
      step += step2;
      if (step >= nn) step -= nn;
      if (level > 0) {
        for (int j = 0; j < level; ++j) {
          auto js = static_cast<std::size_t>(j);
          linear[js] += l_num[lv][js];
          if (linear[js] >= nn) linear[js] -= nn;
        }
      }
    }
    if (level > 0) std::copy(saved.begin(), saved.end(), linear.begin());
  };
  if (k == 0) {
    emit(0);
  } else {
    dfs(dfs, k - 1, 0);
  }
  double norm = std::sqrt(to_double(n));
  return {re / norm, im / norm};
}

AnyonTheory deligne_product(const AnyonTheory& t1, const AnyonTheory& t2) {
  return deligne_product_with_embedding(t1, t2).theory;
}

DelignePair deligne_product_with_embedding(const AnyonTheory& t1, const AnyonTheory& t2) {
  const int k1 = t1.group().rank();
  const int k2 = t2.group().rank();
  const int k = k1 + k2;
  std::vector<Int> orders;
  orders.reserve(static_cast<std::size_t>(k));
  for (const Int& o : t1.group().orders()) orders.push_back(o);
  for (const Int& o : t2.group().orders()) orders.push_back(o);
  std::vector<RationalMod1> q(static_cast<std::size_t>(k));
  QzMat l(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) l(i, j) = RationalMod1();
  for (int i = 0; i < k1; ++i) {
    q[static_cast<std::size_t>(i)] = t1.q_gen()[static_cast<std::size_t>(i)];
    for (int j = 0; j < k1; ++j) l(i, j) = t1.l_gen()(i, j);
  }
  for (int i = 0; i < k2; ++i) {
    q[static_cast<std::size_t>(k1 + i)] = t2.q_gen()[static_cast<std::size_t>(i)];
    for (int j = 0; j < k2; ++j) l(k1 + i, k1 + j) = t2.l_gen()(i, j);
  }

  bool chain = true;
  for (int i = 0; i + 1 < k; ++i)
    if (!(orders[static_cast<std::size_t>(i + 1)] % orders[static_cast<std::size_t>(i)]).is_zero()) {
      chain = false;
      break;
    }
  if (chain) {
    return DelignePair{
        AnyonTheory::make(FinAbGroup::from_canonical(orders), std::move(q), std::move(l)),
        IntMat::Identity(k, k)};
  }

  // Re-express the blockwise data on canonical generators of the direct sum.
  IntMat rel = IntMat::Zero(k, k);
  for (int i = 0; i < k; ++i) rel(i, i) = orders[static_cast<std::size_t>(i)];
  Presentation p = normalize_presentation(k, rel);
  const int kq = p.group.rank();
  std::vector<RationalMod1> qq(static_cast<std::size_t>(kq));
  QzMat ll(kq, kq);
  auto lift_col = [&](int j) {
    std::vector<Int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = p.gen_lifts(i, j);
    return c;
  };
  auto q_block = [&](const std::vector<Int>& x) {
    RationalMod1 acc;
    for (int i = 0; i < k; ++i) {
      if (x[static_cast<std::size_t>(i)].is_zero()) continue;
      acc += (x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)]) * q[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        acc += (x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)]) * l(i, j);
    }
    return acc;
  };
  auto l_block = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
    RationalMod1 acc;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        acc += (x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) * l(i, j);
    return acc;
  };
  std::vector<std::vector<Int>> lifts;
  for (int j = 0; j < kq; ++j) lifts.push_back(lift_col(j));
  for (int a = 0; a < kq; ++a) {
    qq[static_cast<std::size_t>(a)] = q_block(lifts[static_cast<std::size_t>(a)]);
    for (int b = 0; b < kq; ++b)
      ll(a, b) = l_block(lifts[static_cast<std::size_t>(a)], lifts[static_cast<std::size_t>(b)]);
  }
  return DelignePair{AnyonTheory::make(p.group, std::move(qq), std::move(ll)), p.to_canonical};
}

AnyonTheory conjugate(const AnyonTheory& t) {
  const int k = t.group().rank();
  std::vector<RationalMod1> q(static_cast<std::size_t>(k));
  QzMat l(k, k);
  for (int i = 0; i < k; ++i) {
    q[static_cast<std::size_t>(i)] = -t.q_gen()[static_cast<std::size_t>(i)];
    for (int j = 0; j < k; ++j) l(i, j) = -t.l_gen()(i, j);
  }
  return AnyonTheory::make(t.group(), std::move(q), std::move(l));
}

namespace {

// phi extends to an automorphism-grade map iff the generated subgroup is
// everything; checked via the Smith form of [images | relations].
bool images_generate(const FinAbGroup& g, const std::vector<std::vector<Int>>& images) {
  const Eigen::Index k = g.rank();
  const auto m = static_cast<Eigen::Index>(images.size());
  IntMat combined = IntMat::Zero(k, m + k);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = 0; i < k; ++i)
      combined(i, j) = images[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i < k; ++i) combined(i, m + i) = g.orders()[static_cast<std::size_t>(i)];
  SnfResult r = snf(combined);
  if (r.rank() < k) return false;
  for (Eigen::Index i = 0; i < k; ++i)
    if (!(r.s(i, i) == Int(1))) return false;
  return true;
}

}  // namespace

std::optional<IntMat> equivalent_small(const AnyonTheory& t1, const AnyonTheory& t2,
                                       std::int64_t bound) {
  if (t1.group().order() > Int(bound) || t2.group().order() > Int(bound))
    fail(ErrorKind::ResourceLimit, "group exceeds bound for equivalence search");
  // Isomorphic groups have identical canonical chains.
  if (!(t1.group() == t2.group())) return std::nullopt;
  const int k = t1.group().rank();
  if (k == 0) return IntMat(0, 0);

  auto elems = enumerate_coeffs(t2.group(), bound);
  std::vector<RationalMod1> q2(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) q2[i] = q_eval_coeffs(t2, elems[i]);
  {
    // Spin multisets must agree.
    auto elems1 = enumerate_coeffs(t1.group(), bound);
    std::vector<RationalMod1> q1(elems1.size());
    for (std::size_t i = 0; i < elems1.size(); ++i) q1[i] = q_eval_coeffs(t1, elems1[i]);
    std::sort(q1.begin(), q1.end());
    auto q2s = q2;
    std::sort(q2s.begin(), q2s.end());
    if (q1 != q2s) return std::nullopt;
  }

  // Candidate images per generator: matching spin, order dividing the
  // generator's order.
  std::vector<std::vector<std::size_t>> candidates(static_cast<std::size_t>(k));
  for (int g = 0; g < k; ++g) {
    const Int& dg = t1.group().orders()[static_cast<std::size_t>(g)];
    for (std::size_t e = 0; e < elems.size(); ++e) {
      if (!(q2[e] == t1.q_gen()[static_cast<std::size_t>(g)])) continue;
      GroupElement el(t2.group(), elems[e]);
      if (!(dg % element_order(el)).is_zero()) continue;
      candidates[static_cast<std::size_t>(g)].push_back(e);
    }
    if (candidates[static_cast<std::size_t>(g)].empty()) return std::nullopt;
  }

  std::vector<std::vector<Int>> chosen(static_cast<std::size_t>(k));
  auto dfs = [&](auto&& self, int g) -> bool {
    if (g == k) return images_generate(t2.group(), chosen);
    for (std::size_t e : candidates[static_cast<std::size_t>(g)]) {
      bool ok = true;
      for (int h = 0; h < g && ok; ++h) {
        RationalMod1 want = t1.l_gen()(h, g);
        if (!(braiding_coeffs(t2, chosen[static_cast<std::size_t>(h)], elems[e]) == want)) ok = false;
      }
      if (!ok) continue;
      chosen[static_cast<std::size_t>(g)] = elems[e];
      if (self(self, g + 1)) return true;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  IntMat witness(k, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i) witness(i, j) = chosen[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return witness;
}

}  // namespace spinlink
