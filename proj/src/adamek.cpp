#include "fixcat/adamek.hpp"

namespace fixcat::adamek {

PropagationStep propagate(const LaxAlgebra& la) {
  const cat::Category& K = *la.functor->base;
  cat::Cospan po = K.pushout(la.resolution, la.action);
  // in[0] comes from F(B) (the resolution target), in[1] from B.
  const Mor& apex_coproj = po.in[0];
  const Mor& carrier_coproj = po.in[1];
  Obj fb = la.functor->on_obj(la.carrier);
  LaxAlgebra out{la.functor, fb, po.apex, la.functor->on_mor(carrier_coproj), apex_coproj};
  PropagationStep step;
  step.input = la;
  step.pushout_obj = po.apex;
  step.carrier_coproj = carrier_coproj;
  step.apex_coproj = apex_coproj;
  step.output = std::move(out);
  step.unit = LaxHom{la.resolution, carrier_coproj};
  return step;
}

std::pair<LaxAlgebra, LaxHom> LaxPropagationSystem::step(const LaxAlgebra& a) const {
  PropagationStep s = propagate(a);
  return {s.output, s.unit};
}

bool LaxPropagationSystem::unit_is_iso(const LaxAlgebra& a, const LaxHom& eta) const {
  const cat::Category& K = *a.functor->base;
  return K.is_iso(eta.apex_c) && K.is_iso(eta.carrier_c);
}

std::string LaxPropagationSystem::unit_failure(const LaxAlgebra& a, const LaxHom& eta) const {
  const cat::Category& K = *a.functor->base;
  if (!K.is_iso(eta.apex_c)) return "apex component: " + K.iso_failure(eta.apex_c);
  return "carrier component: " + K.iso_failure(eta.carrier_c);
}

std::optional<LaxAlgebra> LaxPropagationSystem::colimit(const std::vector<LaxAlgebra>& stages,
                                                        const std::vector<LaxHom>& links) const {
  alg::LaxChainResult r = alg::lax_chain_colimit(stages, links, false);
  if (!r.stabilized) return std::nullopt;
  return r.value;
}

std::size_t LaxPropagationSystem::size(const LaxAlgebra& a) const {
  const cat::Category& K = *a.functor->base;
  return K.obj_size(a.carrier);
}

namespace {

// Comparison map I -> F(I) for a stabilized bottom-up chain: induced by the
// cocone whose stage-0 leg is the unique map out of the initial object and
// whose stage-(j+1) leg is F applied to the colimit leg of stage j.
std::optional<Mor> initial_style_comparison(const cat::Category& K, const EndoPtr& F,
                                            const ChainOutcome& chain) {
  Obj fi = F->on_obj(chain.value);
  std::vector<Mor> cocone;
  cocone.push_back(K.from_initial(fi));
  for (std::size_t j = 0; j + 1 < chain.legs.size(); ++j)
    cocone.push_back(F->on_mor(chain.legs[j]));
  return cat::colimit_mediate(K, chain, cocone, fi);
}

FreeAlgebraCertificate finish_algebra(const cat::Category& K, const EndoPtr& F,
                                      ChainOutcome&& chain, std::optional<Mor> comparison,
                                      const Mor& action_of_inv) {
  (void)action_of_inv;
  FreeAlgebraCertificate cert;
  cert.chain = std::move(chain);
  if (!comparison) {
    cert.status = Status::comparison_not_iso;
    cert.report = "the canonical comparison cocone failed to factor through the colimit";
    return cert;
  }
  cert.comparison = *comparison;
  std::optional<Mor> inv = K.inverse(cert.comparison);
  if (!inv) {
    cert.status = Status::comparison_not_iso;
    cert.report = "comparison map is not invertible (" + K.iso_failure(cert.comparison) +
                  "); the functor does not preserve this chain colimit";
    return cert;
  }
  cert.comparison_inv = *inv;
  cert.status = Status::stabilized;
  return cert;
}

}  // namespace

FreeAlgebraCertificate initial_algebra(const EndoPtr& F, int budget) {
  const cat::Category& K = *F->base;
  require(K.caps().has_initial && K.caps().has_chain_colimits, errc::capability_missing,
          "initial-algebra chain needs an initial object and sequential colimits");
  Mor last;
  cat::LinkGen gen = [&](int stage, const Obj& cur) -> Mor {
    last = (stage == 0) ? K.from_initial(F->on_obj(cur)) : F->on_mor(last);
    return last;
  };
  ChainOutcome chain = cat::chain_colimit(K, K.initial(), gen, budget, true);
  if (!chain.stabilized) {
    FreeAlgebraCertificate cert;
    cert.report = chain.report;
    cert.chain = std::move(chain);
    return cert;
  }
  std::optional<Mor> cmp = initial_style_comparison(K, F, chain);
  FreeAlgebraCertificate cert = finish_algebra(K, F, std::move(chain), cmp, Mor{});
  if (cert.status == Status::stabilized)
    cert.result = Algebra{F, cert.chain.value, cert.comparison_inv};
  return cert;
}

FreeAlgebraCertificate free_algebra(const Obj& k, const EndoPtr& F, int budget) {
  const cat::Category& K = *F->base;
  require(K.caps().has_coproducts && K.caps().has_chain_colimits, errc::capability_missing,
          "free-algebra chain needs coproducts and sequential colimits");
  // Stage objects K, K+F(K), K+F(K+F(K)), ...; each link is id_K + F(prev).
  Mor last;
  cat::Cospan last_cospan;
  cat::LinkGen gen = [&](int stage, const Obj& cur) -> Mor {
    if (stage == 0) {
      last_cospan = K.coproduct({k, F->on_obj(cur)});
      last = last_cospan.in[0];
      return last;
    }
    cat::Cospan next = K.coproduct({k, F->on_obj(cur)});
    last = K.coproduct_map(last_cospan, next, {K.identity(k), F->on_mor(last)});
    last_cospan = next;
    return last;
  };
  ChainOutcome chain = cat::chain_colimit(K, k, gen, budget, true);
  if (!chain.stabilized) {
    FreeAlgebraCertificate cert;
    cert.report = chain.report;
    cert.chain = std::move(chain);
    return cert;
  }
  // Comparison K* -> K + F(K*).
  cat::Cospan value_cospan = K.coproduct({k, F->on_obj(chain.value)});
  std::vector<Mor> cocone;
  cocone.push_back(value_cospan.in[0]);
  {
    // Rebuild the stage cospans to transport each stage into K + F(K*).
    cat::Cospan stage_cospan = K.coproduct({k, F->on_obj(chain.stages[0])});
    for (std::size_t j = 0; j + 1 < chain.legs.size(); ++j) {
      cocone.push_back(
          K.coproduct_map(stage_cospan, value_cospan, {K.identity(k), F->on_mor(chain.legs[j])}));
      stage_cospan = K.coproduct({k, F->on_obj(chain.stages[j + 1])});
    }
  }
  std::optional<Mor> cmp = cat::colimit_mediate(K, chain, cocone, value_cospan.apex);
  FreeAlgebraCertificate cert = finish_algebra(K, F, std::move(chain), cmp, Mor{});
  if (cert.status == Status::stabilized) {
    // Action: include F(K*) into K + F(K*), then invert the comparison.
    Mor action = K.compose(cert.comparison_inv, value_cospan.in[1]);
    cert.result = Algebra{F, cert.chain.value, action};
  }
  return cert;
}

FreeAlgebraCertificate adamek_lax(const LaxAlgebra& la, int budget) {
  const cat::Category& K = *la.functor->base;
  require(K.caps().has_pushouts && K.caps().has_chain_colimits, errc::capability_missing,
          "propagation chain needs pushouts and sequential colimits");
  LaxPropagationSystem sys;
  auto run = free_fixed_point(sys, la, budget);
  using St = FreeFixedPointResult<LaxPropagationSystem>::St;

  FreeAlgebraCertificate cert;
  // Record the carrier column as the certificate chain.
  cert.chain.stages.clear();
  for (const LaxAlgebra& s : run.stages) cert.chain.stages.push_back(s.carrier);
  for (const LaxHom& h : run.links) cert.chain.links.push_back(h.carrier_c);
  cert.chain.sizes = run.sizes;

  if (run.status == St::not_stabilized) {
    cert.report = run.report;
    cert.chain.budget_exceeded = true;
    cert.chain.report = run.report;
    return cert;
  }
  const LaxAlgebra& fixed = run.value;
  cert.chain.stabilized = true;
  cert.chain.at = run.via_colimit ? static_cast<int>(run.stages.size()) : run.at;
  cert.chain.value = fixed.carrier;
  cert.comparison = fixed.resolution;
  if (run.status == St::unit_not_invertible) {
    cert.status = Status::comparison_not_iso;
    cert.report = run.report;
    return cert;
  }
  std::optional<Mor> inv = K.inverse(fixed.resolution);
  if (!inv) {
    cert.status = Status::comparison_not_iso;
    cert.report = "resolution of the fixed span is not invertible: " + K.iso_failure(fixed.resolution);
    return cert;
  }
  cert.comparison_inv = *inv;
  cert.status = Status::stabilized;
  cert.result = alg::lax_to_algebra(fixed);
  return cert;
}

TerminalCertificate terminal_coalgebra(const EndoPtr& F, int budget) {
  const cat::Category& K = *F->base;
  require(K.caps().has_terminal && K.caps().has_chain_limits, errc::capability_missing,
          "terminal-coalgebra chain needs a terminal object and sequential limits");
  Mor last;
  cat::LinkGen gen = [&](int stage, const Obj& cur) -> Mor {
    last = (stage == 0) ? K.to_terminal(F->on_obj(cur)) : F->on_mor(last);
    return last;
  };
  ChainOutcome chain = cat::chain_limit(K, K.terminal(), gen, budget, true);
  TerminalCertificate cert;
  if (!chain.stabilized) {
    cert.report = chain.report;
    cert.chain = std::move(chain);
    return cert;
  }
  // Comparison F(T) -> T, induced by the cone F(T) -> F(stage j) = stage j+1.
  Obj ft = F->on_obj(chain.value);
  std::vector<Mor> cone;
  cone.push_back(K.to_terminal(ft));
  for (std::size_t j = 0; j + 1 < chain.legs.size(); ++j) cone.push_back(F->on_mor(chain.legs[j]));
  std::optional<Mor> cmp = cat::limit_mediate(K, chain, cone, ft);
  cert.chain = std::move(chain);
  if (!cmp) {
    cert.status = Status::comparison_not_iso;
    cert.report = "the canonical comparison cone failed to factor through the limit";
    return cert;
  }
  cert.comparison = *cmp;
  std::optional<Mor> inv = K.inverse(cert.comparison);
  if (!inv) {
    cert.status = Status::comparison_not_iso;
    cert.report = "comparison map is not invertible (" + K.iso_failure(cert.comparison) +
                  "); the functor does not preserve this chain limit";
    return cert;
  }
  cert.comparison_inv = *inv;
  cert.status = Status::stabilized;
  cert.result = Coalgebra{F, cert.chain.value, cert.comparison_inv};
  return cert;
}

LambekReport lambek_verify(const Algebra& candidate, std::size_t probe_size, std::size_t budget) {
  const cat::Category& K = *candidate.functor->base;
  LambekReport rep;
  rep.action_iso = K.is_iso(candidate.action);
  if (!rep.action_iso) rep.action_witness = K.iso_failure(candidate.action);
  for (const Algebra& probe : alg::enumerate_algebras(candidate.functor, probe_size, budget)) {
    ++rep.probed;
    std::size_t n = alg::algebra_homs(candidate, probe, budget).size();
    if (n != 1)
      rep.hom_failures.push_back("expected exactly one homomorphism into carrier " +
                                 K.obj_label(probe.carrier) + ", found " + std::to_string(n));
  }
  return rep;
}

LambekReport terminal_verify(const Coalgebra& candidate, std::size_t probe_size,
                             std::size_t budget) {
  const cat::Category& K = *candidate.functor->base;
  LambekReport rep;
  rep.action_iso = K.is_iso(candidate.coaction);
  if (!rep.action_iso) rep.action_witness = K.iso_failure(candidate.coaction);
  for (const Coalgebra& probe : alg::enumerate_coalgebras(candidate.functor, probe_size, budget)) {
    ++rep.probed;
    std::size_t n = alg::coalgebra_homs(probe, candidate, budget).size();
    if (n != 1)
      rep.hom_failures.push_back("expected exactly one homomorphism from carrier " +
                                 K.obj_label(probe.carrier) + ", found " + std::to_string(n));
  }
  return rep;
}

std::vector<HomCountPair> certify_free_algebra(const Algebra& free_alg, const Obj& generator,
                                               std::size_t probe_size, std::size_t budget) {
  const cat::Category& K = *free_alg.functor->base;
  std::vector<HomCountPair> out;
  for (const Algebra& probe : alg::enumerate_algebras(free_alg.functor, probe_size, budget)) {
    HomCountPair pair;
    pair.probe = K.obj_label(probe.carrier) + "#" + std::to_string(out.size());
    pair.structured = alg::algebra_homs(free_alg, probe, budget).size();
    pair.plain = K.hom(generator, probe.carrier, budget).size();
    out.push_back(pair);
  }
  return out;
}

}  // namespace fixcat::adamek
