#include "fixcat/fixpoint.hpp"

namespace fixcat::fixpt {

ReflectOutcome reflect(const Coalgebra& c, int budget) {
  const cat::Category& K = *c.functor->base;
  require(K.caps().has_chain_colimits, errc::capability_missing,
          "reflection needs sequential colimits");
  require(c.functor->preserves_chain_colimits, errc::capability_missing,
          "reflection needs a functor flagged as preserving sequential colimits");
  Mor last;
  cat::LinkGen gen = [&](int stage, const Obj&) -> Mor {
    last = (stage == 0) ? c.coaction : c.functor->on_mor(last);
    return last;
  };
  ChainOutcome chain = cat::chain_colimit(K, c.carrier, gen, budget, true);
  ReflectOutcome out;
  if (!chain.stabilized) {
    out.report = chain.report;
    out.chain = std::move(chain);
    return out;
  }
  // Induced coaction: the mediating map into F(I) of the shifted cocone.
  Obj fi = c.functor->on_obj(chain.value);
  std::vector<Mor> cocone;
  cocone.push_back(K.compose(c.functor->on_mor(chain.legs[0]), c.coaction));
  for (std::size_t j = 0; j + 1 < chain.legs.size(); ++j)
    cocone.push_back(c.functor->on_mor(chain.legs[j]));
  std::optional<Mor> u = cat::colimit_mediate(K, chain, cocone, fi);
  out.unit = chain.legs[0];
  out.chain = std::move(chain);
  if (!u) {
    out.status = ReflectStatus::comparison_not_iso;
    out.report = "induced coaction failed to factor through the colimit";
    return out;
  }
  std::optional<Mor> inv = K.inverse(*u);
  if (!inv) {
    out.status = ReflectStatus::comparison_not_iso;
    out.report = "induced coaction is not invertible (" + K.iso_failure(*u) +
                 "); the colimit-preservation flag is dishonest";
    return out;
  }
  out.status = ReflectStatus::ok;
  out.fp = FixedPoint{out.chain.value, *u, *inv};
  return out;
}

ReflectOutcome coreflect(const Algebra& a, int budget) {
  const cat::Category& K = *a.functor->base;
  require(K.caps().has_chain_limits, errc::capability_missing,
          "coreflection needs sequential limits");
  require(a.functor->preserves_chain_limits, errc::capability_missing,
          "coreflection needs a functor flagged as preserving sequential limits");
  Mor last;
  cat::LinkGen gen = [&](int stage, const Obj&) -> Mor {
    last = (stage == 0) ? a.action : a.functor->on_mor(last);
    return last;
  };
  ChainOutcome chain = cat::chain_limit(K, a.carrier, gen, budget, true);
  ReflectOutcome out;
  if (!chain.stabilized) {
    out.report = chain.report;
    out.chain = std::move(chain);
    return out;
  }
  // Induced comparison F(T) -> T from the shifted cone.
  Obj ft = a.functor->on_obj(chain.value);
  std::vector<Mor> cone;
  cone.push_back(K.compose(a.action, a.functor->on_mor(chain.legs[0])));
  for (std::size_t j = 0; j + 1 < chain.legs.size(); ++j)
    cone.push_back(a.functor->on_mor(chain.legs[j]));
  std::optional<Mor> u = cat::limit_mediate(K, chain, cone, ft);
  out.unit = chain.legs[0];  // counit T -> A
  out.chain = std::move(chain);
  if (!u) {
    out.status = ReflectStatus::comparison_not_iso;
    out.report = "induced comparison failed to factor through the limit";
    return out;
  }
  std::optional<Mor> inv = K.inverse(*u);
  if (!inv) {
    out.status = ReflectStatus::comparison_not_iso;
    out.report = "induced comparison is not invertible (" + K.iso_failure(*u) +
                 "); the limit-preservation flag is dishonest";
    return out;
  }
  out.status = ReflectStatus::ok;
  out.fp = FixedPoint{out.chain.value, *inv, *u};
  return out;
}

namespace {

// The induced map between reflections, mediated by the stagewise images of
// phi through the target's cocone.
std::optional<Mor> reflected_map(const CoalgebraHom& phi, const ReflectOutcome& rc,
                                 const ReflectOutcome& rd) {
  const cat::Category& K = *phi.src.functor->base;
  std::vector<Mor> cocone;
  Mor fphi = phi.map;
  for (std::size_t j = 0; j < rc.chain.legs.size(); ++j) {
    if (j >= rd.chain.legs.size()) break;
    cocone.push_back(K.compose(rd.chain.legs[j], fphi));
    fphi = phi.src.functor->on_mor(fphi);
  }
  return cat::colimit_mediate(K, rc.chain, cocone, rd.fp.carrier);
}

}  // namespace

LocalityVerdict is_local(const CoalgebraHom& phi, int budget) {
  const cat::Category& K = *phi.src.functor->base;
  require(alg::is_coalgebra_hom(phi.map, phi.src, phi.dst), errc::ill_typed,
          "not a coalgebra homomorphism");
  ReflectOutcome rc = reflect(phi.src, budget);
  ReflectOutcome rd = reflect(phi.dst, budget);
  LocalityVerdict v;
  if (rc.status != ReflectStatus::ok || rd.status != ReflectStatus::ok) {
    v.verdict = Verdict::not_stabilized;
    v.witness = rc.status != ReflectStatus::ok ? rc.report : rd.report;
    return v;
  }
  std::optional<Mor> iphi = reflected_map(phi, rc, rd);
  require(iphi.has_value(), errc::ill_typed, "reflected map failed to factor through the colimit");
  v.reflected = *iphi;
  std::optional<Mor> inv = K.inverse(*iphi);
  if (!inv) {
    v.verdict = Verdict::not_local;
    v.witness = K.iso_failure(*iphi);
    return v;
  }
  // Equivalence of fixed points: the carrier iso must commute with the two
  // comparison isos.
  bool commutes = K.compose(rd.fp.to_image, *iphi) ==
                  K.compose(phi.src.functor->on_mor(*iphi), rc.fp.to_image);
  if (!commutes) {
    v.verdict = Verdict::not_local;
    v.witness = "carrier isomorphism does not commute with the comparisons";
    return v;
  }
  v.verdict = Verdict::local;
  v.inverse = *inv;
  return v;
}

LocalityVerdict local_via_section(const CoalgebraHom& phi, int budget, std::size_t hom_budget) {
  const cat::Category& K = *phi.src.functor->base;
  ReflectOutcome rc = reflect(phi.src, budget);
  ReflectOutcome rd = reflect(phi.dst, budget);
  LocalityVerdict v;
  if (rc.status != ReflectStatus::ok || rd.status != ReflectStatus::ok) {
    v.verdict = Verdict::not_stabilized;
    v.witness = rc.status != ReflectStatus::ok ? rc.report : rd.report;
    return v;
  }
  std::optional<Mor> iphi = reflected_map(phi, rc, rd);
  require(iphi.has_value(), errc::ill_typed, "reflected map failed to factor through the colimit");
  v.reflected = *iphi;
  Coalgebra ic = rc.as_coalgebra(phi.src.functor);
  // Search s among coalgebra homomorphisms (D, mu) -> (I_C, induced).
  for (const Mor& s : alg::coalgebra_homs(phi.dst, ic, hom_budget)) {
    if (K.compose(s, phi.map) == rc.unit && K.compose(*iphi, s) == rd.unit) {
      v.verdict = Verdict::local;
      v.section = s;
      return v;
    }
  }
  v.verdict = Verdict::not_local;
  v.witness = "no section through the reflection exists";
  return v;
}

LocalityVerdict local_via_lift(const CoalgebraHom& phi, std::size_t hom_budget) {
  const cat::Category& K = *phi.src.functor->base;
  LocalityVerdict v;
  Obj fc = phi.src.functor->on_obj(phi.src.carrier);
  for (const Mor& s : K.hom(phi.dst.carrier, fc, hom_budget)) {
    if (K.compose(s, phi.map) == phi.src.coaction &&
        K.compose(phi.src.functor->on_mor(phi.map), s) == phi.dst.coaction) {
      v.verdict = Verdict::local;
      v.section = s;
      return v;
    }
  }
  v.verdict = Verdict::inconclusive;
  v.witness = "no lift found; the criterion is one-way and decides nothing";
  return v;
}

LocalityVerdict colocal_via_lift(const AlgebraHom& phi, std::size_t hom_budget) {
  const cat::Category& K = *phi.src.functor->base;
  LocalityVerdict v;
  Obj fb = phi.src.functor->on_obj(phi.dst.carrier);
  for (const Mor& s : K.hom(fb, phi.src.carrier, hom_budget)) {
    if (K.compose(s, phi.src.functor->on_mor(phi.map)) == phi.src.action &&
        K.compose(phi.map, s) == phi.dst.action) {
      v.verdict = Verdict::local;
      v.section = s;
      return v;
    }
  }
  v.verdict = Verdict::inconclusive;
  v.witness = "no lift found; the criterion is one-way and decides nothing";
  return v;
}

cat::EndoPtr relative_endofunctor(const std::shared_ptr<const cat::UnderCat>& under,
                                  const Coalgebra& c) {
  cat::EndoPtr F = c.functor;
  Mor coaction = c.coaction;
  const cat::Category& base = under->base();
  auto on_obj = [F, coaction, &base](const Obj& x) -> Obj {
    const Mor& f = cat::UnderCat::structure(x);
    return cat::box(base.compose(F->on_mor(f), coaction));
  };
  auto on_mor = [F, coaction, under, &base](const Mor& m) -> Mor {
    const Mor& f = cat::UnderCat::structure(m.src);
    const Mor& g = cat::UnderCat::structure(m.tgt);
    Obj s = cat::box(base.compose(F->on_mor(f), coaction));
    Obj t = cat::box(base.compose(F->on_mor(g), coaction));
    return under->wrap(s, t, F->on_mor(m.leg()));
  };
  return cat::Endo::custom(under, on_obj, on_mor, F->preserves_chain_colimits,
                           F->preserves_chain_limits, F->name + "@under");
}

RelativeReport relative_initial_check(const Coalgebra& c, int budget, std::size_t hom_budget) {
  const cat::Category& K = *c.functor->base;
  RelativeReport rep;
  ReflectOutcome r = reflect(c, budget);
  rep.reflect_status = r.status;
  if (r.status != ReflectStatus::ok) {
    rep.report = "reflection failed: " + r.report;
    return rep;
  }
  auto under = std::make_shared<cat::UnderCat>(c.functor->base, c.carrier);
  cat::EndoPtr fc = relative_endofunctor(under, c);
  adamek::FreeAlgebraCertificate cert = adamek::initial_algebra(fc, budget);
  rep.under_status = cert.status;
  if (cert.status != adamek::Status::stabilized) {
    rep.report = "undercategory construction failed: " + cert.report;
    return rep;
  }
  const Mor& anchor = cat::UnderCat::structure(cert.result.carrier);
  rep.reflect_size = K.obj_size(r.fp.carrier);
  rep.under_size = K.obj_size(anchor.tgt);
  // Isomorphism under C: an invertible base map commuting with the anchors.
  for (const Mor& h : K.hom(anchor.tgt, r.fp.carrier, hom_budget)) {
    if (!K.is_iso(h)) continue;
    if (K.compose(h, anchor) == r.unit) {
      rep.iso = h;
      rep.ok = true;
      return rep;
    }
  }
  rep.report = "no isomorphism under the anchor between the two constructions";
  return rep;
}

}  // namespace fixcat::fixpt
