#pragma once

#include "fixcat/algebra.hpp"

namespace fixcat::adamek {

using alg::Algebra;
using alg::Coalgebra;
using alg::LaxAlgebra;
using alg::LaxHom;
using cat::ChainOutcome;
using cat::EndoPtr;
using cat::Mor;
using cat::Obj;

// One application of the span-propagation endofunctor: push the resolution
// out along the lax action and reapply the functor.
struct PropagationStep {
  LaxAlgebra input;
  Obj pushout_obj;     // B u_E F(B)
  Mor carrier_coproj;  // i: B -> pushout
  Mor apex_coproj;     // F(B) -> pushout
  LaxAlgebra output;   // F(pushout) <- F(B) -> pushout
  LaxHom unit;         // (r, i): input -> output
};

PropagationStep propagate(const LaxAlgebra& la);

enum class Status { stabilized, not_stabilized, comparison_not_iso };

// Outcome of one of the chain constructions.  When stabilized, `result`
// carries the algebra with the inverted comparison as its action, plus the
// certificate data (the chain, the comparison map and its inverse witness).
struct FreeAlgebraCertificate {
  Status status = Status::not_stabilized;
  Algebra result;
  ChainOutcome chain;
  Mor comparison;
  Mor comparison_inv;
  std::string report;
};

struct TerminalCertificate {
  Status status = Status::not_stabilized;
  Coalgebra result;
  ChainOutcome chain;
  Mor comparison;      // F(T) -> T
  Mor comparison_inv;  // the coaction T -> F(T)
  std::string report;
};

// Colimit of 0 -> F(0) -> F^2(0) -> ...; on stabilization the canonical map
// I -> F(I) is checked invertible and its inverse installed as the action.
FreeAlgebraCertificate initial_algebra(const EndoPtr& F, int budget);

// Colimit of K -> K + F(K) -> K + F(K + F(K)) -> ...
FreeAlgebraCertificate free_algebra(const Obj& k, const EndoPtr& F, int budget);

// Iterated propagation from an arbitrary span, with the colimit taken
// columnwise; the comparison is the induced resolution of the colimit span.
FreeAlgebraCertificate adamek_lax(const LaxAlgebra& la, int budget);

// Limit of 1 <- F(1) <- F^2(1) <- ...
TerminalCertificate terminal_coalgebra(const EndoPtr& F, int budget);

// Initiality certificate: the action must be invertible, and exactly one
// algebra homomorphism must exist into every enumerated algebra with carrier
// at most `probe_size`.
struct LambekReport {
  bool action_iso = false;
  std::string action_witness;
  std::size_t probed = 0;
  std::vector<std::string> hom_failures;
  bool ok() const { return action_iso && hom_failures.empty(); }
};

LambekReport lambek_verify(const Algebra& candidate, std::size_t probe_size,
                           std::size_t budget = 1000000);
// Dual: unique homomorphism from every enumerated coalgebra.
LambekReport terminal_verify(const Coalgebra& candidate, std::size_t probe_size,
                             std::size_t budget = 1000000);

// Freeness certificate: |Hom_alg(Free(K), B)| must equal |Hom(K, carrier B)|
// for every enumerated algebra B.
struct HomCountPair {
  std::string probe;
  std::size_t structured = 0;
  std::size_t plain = 0;
  bool ok() const { return structured == plain; }
};

std::vector<HomCountPair> certify_free_algebra(const Algebra& free_alg, const Obj& generator,
                                               std::size_t probe_size, std::size_t budget = 1000000);

// --- generic unital-endofunctor driver ----------------------------------

// The chain L -> P(L) -> P^2(L) -> ... for an endofunctor P with unit eta,
// stopping as soon as a unit component is invertible, and otherwise passing
// to the colimit at the budget and testing the unit there.
template <typename Sys>
struct FreeFixedPointResult {
  enum class St { fixed, unit_not_invertible, not_stabilized };
  St status = St::not_stabilized;
  int at = -1;
  bool via_colimit = false;
  typename Sys::Object value{};
  std::vector<typename Sys::Object> stages;
  std::vector<typename Sys::Hom> links;
  std::vector<std::size_t> sizes;
  std::string report;
};

template <typename Sys>
FreeFixedPointResult<Sys> free_fixed_point(const Sys& sys, typename Sys::Object start, int budget) {
  FreeFixedPointResult<Sys> res;
  res.stages.push_back(std::move(start));
  res.sizes.push_back(sys.size(res.stages.back()));
  for (int k = 0; k < budget; ++k) {
    auto [next, eta] = sys.step(res.stages.back());
    if (sys.unit_is_iso(res.stages.back(), eta)) {
      res.status = FreeFixedPointResult<Sys>::St::fixed;
      res.at = k;
      res.value = res.stages.back();
      return res;
    }
    res.links.push_back(std::move(eta));
    res.stages.push_back(std::move(next));
    res.sizes.push_back(sys.size(res.stages.back()));
  }
  auto colim = sys.colimit(res.stages, res.links);
  if (!colim) {
    res.report = "no unit became invertible within " + std::to_string(budget) +
                 " stages and the chain colimit is unavailable; " +
                 cat::describe_growth(res.sizes);
    return res;
  }
  auto [_, eta_hat] = sys.step(*colim);
  if (sys.unit_is_iso(*colim, eta_hat)) {
    res.status = FreeFixedPointResult<Sys>::St::fixed;
    res.via_colimit = true;
    res.value = *colim;
    return res;
  }
  res.status = FreeFixedPointResult<Sys>::St::unit_not_invertible;
  res.value = *colim;
  res.report = "unit at the chain colimit is not invertible: " + sys.unit_failure(*colim, eta_hat);
  return res;
}

// Propagation as a unital endofunctor on spans.
struct LaxPropagationSystem {
  using Object = LaxAlgebra;
  using Hom = LaxHom;

  std::pair<Object, Hom> step(const Object& a) const;
  bool unit_is_iso(const Object& a, const Hom& eta) const;
  std::string unit_failure(const Object& a, const Hom& eta) const;
  std::optional<Object> colimit(const std::vector<Object>& stages,
                                const std::vector<Hom>& links) const;
  std::size_t size(const Object& a) const;
};

}  // namespace fixcat::adamek
