#pragma once

#include "fixcat/chain.hpp"
#include "fixcat/functor.hpp"

namespace fixcat::alg {

using cat::CategoryPtr;
using cat::EndoPtr;
using cat::Mor;
using cat::Obj;

// (A, a) with a: F(A) -> A.
struct Algebra {
  EndoPtr functor;
  Obj carrier;
  Mor action;
};

// (C, v) with v: C -> F(C).
struct Coalgebra {
  EndoPtr functor;
  Obj carrier;
  Mor coaction;
};

// A span F(B) <-r- E -a-> B; ordinary algebras are the case of invertible r.
struct LaxAlgebra {
  EndoPtr functor;
  Obj apex;     // E
  Obj carrier;  // B
  Mor resolution;  // E -> F(B)
  Mor action;      // E -> B
};

// Morphism of spans: an apex component together with a carrier component;
// the F(B)-component is derived as F(carrier component).
struct LaxHom {
  Mor apex_c;
  Mor carrier_c;
};

Algebra make_algebra(EndoPtr F, Obj carrier, Mor action);
Coalgebra make_coalgebra(EndoPtr F, Obj carrier, Mor coaction);
LaxAlgebra make_lax(EndoPtr F, Obj apex, Obj carrier, Mor resolution, Mor action);

bool is_algebra_hom(const Mor& phi, const Algebra& src, const Algebra& dst);
bool is_coalgebra_hom(const Mor& phi, const Coalgebra& src, const Coalgebra& dst);
bool is_lax_hom(const LaxHom& h, const LaxAlgebra& src, const LaxAlgebra& dst);

std::vector<Mor> algebra_homs(const Algebra& src, const Algebra& dst, std::size_t budget);
std::vector<Mor> coalgebra_homs(const Coalgebra& src, const Coalgebra& dst, std::size_t budget);
std::vector<LaxHom> lax_homs(const LaxAlgebra& src, const LaxAlgebra& dst, std::size_t budget);

// Brute-force enumeration over canonical carriers of each size up to
// `max_carrier`; complete up to carrier identity (not isomorphism).  The
// substrate for initiality, terminality and freeness oracles.
std::vector<Algebra> enumerate_algebras(const EndoPtr& F, std::size_t max_carrier,
                                        std::size_t budget = 1000000);
std::vector<Coalgebra> enumerate_coalgebras(const EndoPtr& F, std::size_t max_carrier,
                                            std::size_t budget = 1000000);
std::vector<LaxAlgebra> enumerate_lax_algebras(const EndoPtr& F, std::size_t max_carrier,
                                               std::size_t budget = 1000000);

// (A, a)  ->  F(A) <-id- F(A) -a-> A.
LaxAlgebra embed_to_lax(const Algebra& a);

// Inverts the resolution; throws resolution_not_invertible with a witness.
Algebra lax_to_algebra(const LaxAlgebra& l);

// F(K) <- 0 -> K, the left adjoint to the carrier projection.
LaxAlgebra free_lax_on_object(const EndoPtr& F, const Obj& k);

// Colimit of a finite prefix of a chain of spans, computed columnwise on the
// apex and carrier chains; the resolution of the result is the map induced by
// the cocone E_j -> F(B_j) -> F(B_inf).
struct LaxChainResult {
  bool stabilized = false;
  bool budget_exceeded = false;
  LaxAlgebra value;
  std::vector<LaxHom> legs;
  cat::ChainOutcome apex_chain;
  cat::ChainOutcome carrier_chain;
  std::string report;
};

LaxChainResult lax_chain_colimit(const std::vector<LaxAlgebra>& stages,
                                 const std::vector<LaxHom>& links, bool functor_generated = false);

}  // namespace fixcat::alg
