#include "spinlink/boundary.hpp"

namespace spinlink {

BordismBoundaryData::BordismBoundaryData(AnyonTheory bulk, Subgroup condensed_subgroup,
                                         GramLattice residual, IntMat identification,
                                         Polarization polarization)
    : bulk_(std::move(bulk)),
      a_(std::move(condensed_subgroup)),
      residual_(std::move(residual)),
      ident_(std::move(identification)),
      pol_(std::move(polarization)),
      cond_([&]() -> CondensationResult {
        if (!(a_.group() == bulk_.group()))
          fail(ErrorKind::Validation, "condensed subgroup does not live in the bulk theory");
        return condense(bulk_, a_);
      }()),
      disc_(discriminant_theory(residual_)) {
  if (!residual_.is_even())
    fail(ErrorKind::OddLattice, "residual lattice must be even");
  if (!(abs(det(residual_.gram())) == disc_.theory().group().order()) ||
      disc_.radical_basis().cols() != 0)
    fail(ErrorKind::DegenerateForm, "residual lattice must be nondegenerate");
  if (!(pol_.lattice() == residual_))
    fail(ErrorKind::Validation, "polarization does not live on the residual lattice");

  const AnyonTheory& cond = cond_.condensed();
  const AnyonTheory& res = disc_.theory();
  if (!(res.group().order() == cond.group().order()))
    fail(ErrorKind::Validation,
         "residual discriminant group size does not match the condensed phase");
  const int kr = res.group().rank();
  const int kc = cond.group().rank();
  if (ident_.rows() != kc || ident_.cols() != kr)
    fail(ErrorKind::Validation, "identification matrix has the wrong shape");

  GroupHom hom{res.group(), cond.group(), ident_};
  // Well-defined homomorphism: generator orders must be respected.
  for (int j = 0; j < kr; ++j) {
    std::vector<Int> gen(static_cast<std::size_t>(kr), Int(0));
    gen[static_cast<std::size_t>(j)] = Int(1);
    GroupElement img(cond.group(), hom.apply(gen));
    if (!(res.group().orders()[static_cast<std::size_t>(j)] % element_order(img)).is_zero())
      fail(ErrorKind::Validation, "identification is not a homomorphism");
    // Spins of generators must match.
    if (!(q_eval(cond, img) == res.q_gen()[static_cast<std::size_t>(j)]))
      fail(ErrorKind::Validation, "identification does not preserve spins");
    for (int i = 0; i <= j; ++i) {
      std::vector<Int> gen_i(static_cast<std::size_t>(kr), Int(0));
      gen_i[static_cast<std::size_t>(i)] = Int(1);
      GroupElement img_i(cond.group(), hom.apply(gen_i));
      if (!(braiding(cond, img_i, img) == res.l_gen()(i, j)))
        fail(ErrorKind::Validation, "identification does not preserve braidings");
    }
  }
  // Bijective: build the inverse table, watching for collisions.
  auto res_elems = enumerate_coeffs(res.group(), 1 << 16);
  inverse_table_.assign(res_elems.size(), {});
  std::vector<bool> hit(res_elems.size(), false);
  for (const auto& c : res_elems) {
    std::vector<Int> img = hom.apply(c);
    auto idx = static_cast<std::size_t>(element_index(cond.group(), img));
    if (hit[idx]) fail(ErrorKind::Validation, "identification is not injective");
    hit[idx] = true;
    inverse_table_[idx] = c;
  }
}

GroupElement BordismBoundaryData::identify(const GroupElement& residual_anyon) const {
  GroupHom hom{disc_.theory().group(), cond_.condensed().group(), ident_};
  return hom(residual_anyon);
}

GroupElement BordismBoundaryData::identify_inverse(const GroupElement& condensed_anyon) const {
  if (!(condensed_anyon.group() == cond_.condensed().group()))
    fail(ErrorKind::InvalidArgument, "anyon does not belong to the condensed phase");
  auto idx = static_cast<std::size_t>(
      element_index(cond_.condensed().group(), condensed_anyon.coeffs()));
  return GroupElement(disc_.theory().group(), inverse_table_[idx]);
}

PartitionValue composite_twisted_partition(const BordismBoundaryData& data,
                                           const GroupElement& bulk_anyon, const TauPoint& tau,
                                           const ThetaParams& params, Normalization norm) {
  if (!(bulk_anyon.group() == data.bulk().group()))
    fail(ErrorKind::InvalidArgument, "anyon does not belong to the bulk theory");
  if (!data.condensation().annihilator().contains(bulk_anyon.coeffs()))
    return PartitionValue{{0.0, 0.0}, 0.0};
  GroupElement cond_class = data.condensation().to_condensed(bulk_anyon);
  GroupElement residual_anyon = data.identify_inverse(cond_class);
  PartitionValue pv =
      twisted_partition(data.polarization(), data.residual_disc(), residual_anyon, tau, params);
  if (norm == Normalization::CosetWeighted) {
    double scale = to_double(data.condensed_subgroup().order());
    pv.value *= scale;
    pv.error_bound *= scale;
  }
  return pv;
}

DomainWall::DomainWall(AnyonTheory source, AnyonTheory target, BordismBoundaryData folded,
                       IntMat pair_embedding)
    : source_(std::move(source)),
      target_(std::move(target)),
      folded_(std::move(folded)),
      pair_embedding_(std::move(pair_embedding)) {}

GroupElement DomainWall::pair_anyon(const GroupElement& src, const GroupElement& tgt) const {
  if (!(src.group() == source_.group()) || !(tgt.group() == target_.group()))
    fail(ErrorKind::InvalidArgument, "pair does not belong to (source, target)");
  const int k1 = source_.group().rank();
  const int k2 = target_.group().rank();
  std::vector<Int> concat(static_cast<std::size_t>(k1 + k2));
  for (int i = 0; i < k1; ++i) concat[static_cast<std::size_t>(i)] = src.coeffs()[static_cast<std::size_t>(i)];
  for (int i = 0; i < k2; ++i) concat[static_cast<std::size_t>(k1 + i)] = tgt.coeffs()[static_cast<std::size_t>(i)];
  const FinAbGroup& pg = folded_.bulk().group();
  std::vector<Int> out(static_cast<std::size_t>(pg.rank()), Int(0));
  for (int i = 0; i < pg.rank(); ++i) {
    Int acc(0);
    for (Eigen::Index j = 0; j < pair_embedding_.cols(); ++j)
      acc += pair_embedding_(i, j) * concat[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return GroupElement(pg, std::move(out));
}

PartitionValue DomainWall::pair_partition(const GroupElement& src, const GroupElement& tgt,
                                          const TauPoint& tau, const ThetaParams& params,
                                          Normalization norm) const {
  return composite_twisted_partition(folded_, pair_anyon(src, tgt), tau, params, norm);
}

DomainWall fold(const AnyonTheory& source, const AnyonTheory& target,
                BordismBoundaryData boundary) {
  DelignePair product = deligne_product_with_embedding(source, conjugate(target));
  if (!(product.theory == boundary.bulk()))
    fail(ErrorKind::InvalidArgument,
         "boundary bulk must be the product of the source with the conjugate target");
  return DomainWall(source, target, std::move(boundary), std::move(product.embedding));
}

}  // namespace spinlink
