#include "fixcat/algebra.hpp"

namespace fixcat::alg {

Algebra make_algebra(EndoPtr F, Obj carrier, Mor action) {
  require(action.src == F->on_obj(carrier) && action.tgt == carrier, errc::ill_typed,
          "algebra action must map F(carrier) to carrier");
  return Algebra{std::move(F), std::move(carrier), std::move(action)};
}

Coalgebra make_coalgebra(EndoPtr F, Obj carrier, Mor coaction) {
  require(coaction.src == carrier && coaction.tgt == F->on_obj(carrier), errc::ill_typed,
          "coaction must map carrier to F(carrier)");
  return Coalgebra{std::move(F), std::move(carrier), std::move(coaction)};
}

LaxAlgebra make_lax(EndoPtr F, Obj apex, Obj carrier, Mor resolution, Mor action) {
  require(resolution.src == apex && action.src == apex, errc::ill_typed,
          "resolution and lax action must share the apex as source");
  require(resolution.tgt == F->on_obj(carrier), errc::ill_typed,
          "resolution must land in F(carrier)");
  require(action.tgt == carrier, errc::ill_typed, "lax action must land in the carrier");
  return LaxAlgebra{std::move(F), std::move(apex), std::move(carrier), std::move(resolution),
                    std::move(action)};
}

bool is_algebra_hom(const Mor& phi, const Algebra& src, const Algebra& dst) {
  require(src.functor == dst.functor || src.functor->name == dst.functor->name,
          errc::functor_mismatch, "algebras live over different functors");
  const cat::Category& K = *src.functor->base;
  if (!(phi.src == src.carrier && phi.tgt == dst.carrier)) return false;
  return K.compose(phi, src.action) == K.compose(dst.action, src.functor->on_mor(phi));
}

bool is_coalgebra_hom(const Mor& phi, const Coalgebra& src, const Coalgebra& dst) {
  require(src.functor == dst.functor || src.functor->name == dst.functor->name,
          errc::functor_mismatch, "coalgebras live over different functors");
  const cat::Category& K = *src.functor->base;
  if (!(phi.src == src.carrier && phi.tgt == dst.carrier)) return false;
  return K.compose(dst.coaction, phi) == K.compose(src.functor->on_mor(phi), src.coaction);
}

bool is_lax_hom(const LaxHom& h, const LaxAlgebra& src, const LaxAlgebra& dst) {
  const cat::Category& K = *src.functor->base;
  if (!(h.apex_c.src == src.apex && h.apex_c.tgt == dst.apex)) return false;
  if (!(h.carrier_c.src == src.carrier && h.carrier_c.tgt == dst.carrier)) return false;
  // r' . e = F(b) . r  and  a' . e = b . a.
  return K.compose(dst.resolution, h.apex_c) ==
             K.compose(src.functor->on_mor(h.carrier_c), src.resolution) &&
         K.compose(dst.action, h.apex_c) == K.compose(h.carrier_c, src.action);
}

std::vector<Mor> algebra_homs(const Algebra& src, const Algebra& dst, std::size_t budget) {
  const cat::Category& K = *src.functor->base;
  std::vector<Mor> out;
  for (const Mor& phi : K.hom(src.carrier, dst.carrier, budget))
    if (is_algebra_hom(phi, src, dst)) out.push_back(phi);
  return out;
}

std::vector<Mor> coalgebra_homs(const Coalgebra& src, const Coalgebra& dst, std::size_t budget) {
  const cat::Category& K = *src.functor->base;
  std::vector<Mor> out;
  for (const Mor& phi : K.hom(src.carrier, dst.carrier, budget))
    if (is_coalgebra_hom(phi, src, dst)) out.push_back(phi);
  return out;
}

std::vector<LaxHom> lax_homs(const LaxAlgebra& src, const LaxAlgebra& dst, std::size_t budget) {
  const cat::Category& K = *src.functor->base;
  std::vector<LaxHom> out;
  for (const Mor& b : K.hom(src.carrier, dst.carrier, budget))
    for (const Mor& e : K.hom(src.apex, dst.apex, budget)) {
      LaxHom h{e, b};
      if (is_lax_hom(h, src, dst)) out.push_back(h);
    }
  return out;
}

std::vector<Algebra> enumerate_algebras(const EndoPtr& F, std::size_t max_carrier,
                                        std::size_t budget) {
  const cat::Category& K = *F->base;
  std::vector<Algebra> out;
  for (std::size_t s = 0; s <= max_carrier; ++s) {
    Obj carrier{cat::FinSet::canonical(s)};
    for (const Mor& action : K.hom(F->on_obj(carrier), carrier, budget)) {
      out.push_back(Algebra{F, carrier, action});
      require(out.size() <= budget, errc::budget_exceeded, "too many algebras");
    }
  }
  return out;
}

std::vector<Coalgebra> enumerate_coalgebras(const EndoPtr& F, std::size_t max_carrier,
                                            std::size_t budget) {
  const cat::Category& K = *F->base;
  std::vector<Coalgebra> out;
  for (std::size_t s = 0; s <= max_carrier; ++s) {
    Obj carrier{cat::FinSet::canonical(s)};
    for (const Mor& coaction : K.hom(carrier, F->on_obj(carrier), budget)) {
      out.push_back(Coalgebra{F, carrier, coaction});
      require(out.size() <= budget, errc::budget_exceeded, "too many coalgebras");
    }
  }
  return out;
}

std::vector<LaxAlgebra> enumerate_lax_algebras(const EndoPtr& F, std::size_t max_carrier,
                                               std::size_t budget) {
  const cat::Category& K = *F->base;
  std::vector<LaxAlgebra> out;
  for (std::size_t es = 0; es <= max_carrier; ++es)
    for (std::size_t bs = 0; bs <= max_carrier; ++bs) {
      Obj apex{cat::FinSet::canonical(es, "p")};
      Obj carrier{cat::FinSet::canonical(bs)};
      for (const Mor& r : K.hom(apex, F->on_obj(carrier), budget))
        for (const Mor& a : K.hom(apex, carrier, budget)) {
          out.push_back(LaxAlgebra{F, apex, carrier, r, a});
          require(out.size() <= budget, errc::budget_exceeded, "too many lax algebras");
        }
    }
  return out;
}

LaxAlgebra embed_to_lax(const Algebra& a) {
  const cat::Category& K = *a.functor->base;
  Obj fa = a.functor->on_obj(a.carrier);
  return LaxAlgebra{a.functor, fa, a.carrier, K.identity(fa), a.action};
}

Algebra lax_to_algebra(const LaxAlgebra& l) {
  const cat::Category& K = *l.functor->base;
  std::optional<Mor> inv = K.inverse(l.resolution);
  if (!inv)
    fail(errc::resolution_not_invertible,
         "resolution is not invertible: " + K.iso_failure(l.resolution));
  return Algebra{l.functor, l.carrier, K.compose(l.action, *inv)};
}

LaxAlgebra free_lax_on_object(const EndoPtr& F, const Obj& k) {
  const cat::Category& K = *F->base;
  Obj empty = K.initial();
  return LaxAlgebra{F, empty, k, K.from_initial(F->on_obj(k)), K.from_initial(k)};
}

LaxChainResult lax_chain_colimit(const std::vector<LaxAlgebra>& stages,
                                 const std::vector<LaxHom>& links, bool functor_generated) {
  require(!stages.empty() && links.size() + 1 == stages.size(), errc::bad_input,
          "lax chain shape mismatch");
  const EndoPtr& F = stages.front().functor;
  const cat::Category& K = *F->base;

  std::vector<Obj> apexes, carriers;
  std::vector<Mor> apex_links, carrier_links;
  for (const LaxAlgebra& s : stages) {
    apexes.push_back(s.apex);
    carriers.push_back(s.carrier);
  }
  for (const LaxHom& h : links) {
    apex_links.push_back(h.apex_c);
    carrier_links.push_back(h.carrier_c);
  }

  LaxChainResult res;
  res.apex_chain = cat::chain_colimit_prefix(K, apexes, apex_links, functor_generated);
  res.carrier_chain = cat::chain_colimit_prefix(K, carriers, carrier_links, functor_generated);
  if (!res.apex_chain.stabilized || !res.carrier_chain.stabilized) {
    res.budget_exceeded = true;
    res.report = "underlying chain did not stabilize: apex " +
                 (res.apex_chain.stabilized ? std::string("ok") : res.apex_chain.report) +
                 "; carrier " +
                 (res.carrier_chain.stabilized ? std::string("ok") : res.carrier_chain.report);
    return res;
  }

  const Obj& apex_inf = res.apex_chain.value;
  const Obj& carrier_inf = res.carrier_chain.value;
  Obj f_carrier_inf = F->on_obj(carrier_inf);

  // Resolution: induced from the cocone E_j -> F(B_j) -> F(B_inf).
  std::vector<Mor> res_cocone, act_cocone;
  std::size_t n = stages.size();
  for (std::size_t j = 0; j < n; ++j) {
    res_cocone.push_back(K.compose(F->on_mor(res.carrier_chain.legs[j]), stages[j].resolution));
    act_cocone.push_back(K.compose(res.carrier_chain.legs[j], stages[j].action));
  }
  std::optional<Mor> r_inf = cat::colimit_mediate(K, res.apex_chain, res_cocone, f_carrier_inf);
  std::optional<Mor> a_inf = cat::colimit_mediate(K, res.apex_chain, act_cocone, carrier_inf);
  if (!r_inf || !a_inf) {
    res.report = "cocone failed to factor through the apex colimit";
    return res;
  }

  res.stabilized = true;
  res.value = LaxAlgebra{F, apex_inf, carrier_inf, *r_inf, *a_inf};
  for (std::size_t j = 0; j < n; ++j)
    res.legs.push_back(LaxHom{res.apex_chain.legs[j], res.carrier_chain.legs[j]});
  return res;
}

}  // namespace fixcat::alg
