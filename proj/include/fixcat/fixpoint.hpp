#pragma once

#include "fixcat/adamek.hpp"
#include "fixcat/under.hpp"

namespace fixcat::fixpt {

using alg::Algebra;
using alg::Coalgebra;
using cat::ChainOutcome;
using cat::EndoPtr;
using cat::Mor;
using cat::Obj;

// An object with a chosen invertible comparison to its image, stored with
// the inverse witness so certificates are self-contained.
struct FixedPoint {
  Obj carrier;
  Mor to_image;    // u: X -> F(X)
  Mor from_image;  // u^{-1}
};

enum class ReflectStatus { ok, not_stabilized, comparison_not_iso };

struct ReflectOutcome {
  ReflectStatus status = ReflectStatus::not_stabilized;
  FixedPoint fp;
  Mor unit;  // C -> I_C (dually the counit T_A -> A)
  ChainOutcome chain;
  std::string report;

  Coalgebra as_coalgebra(const EndoPtr& F) const { return Coalgebra{F, fp.carrier, fp.to_image}; }
  Algebra as_algebra(const EndoPtr& F) const { return Algebra{F, fp.carrier, fp.from_image}; }
};

// Left adjoint to the inclusion of fixed points into coalgebras: the colimit
// of C -> F(C) -> F^2(C) -> ... with the induced coaction, which must be
// invertible when the functor's colimit-preservation flag is honest.
ReflectOutcome reflect(const Coalgebra& c, int budget);

// Right adjoint dual on algebras, via the limit of ... -> F^2(A) -> F(A) -> A.
ReflectOutcome coreflect(const Algebra& a, int budget);

struct CoalgebraHom {
  Coalgebra src, dst;
  Mor map;
};

struct AlgebraHom {
  Algebra src, dst;
  Mor map;
};

enum class Verdict { local, not_local, inconclusive, not_stabilized };

struct LocalityVerdict {
  Verdict verdict = Verdict::not_stabilized;
  Mor reflected;                 // the induced map between the reflections
  std::optional<Mor> inverse;    // iso witness when local
  std::optional<Mor> section;    // s: D -> I_C (or lift s: D -> F(C))
  std::string witness;
};

// Is the induced map between reflections an equivalence of fixed points
// (carrier isomorphism commuting with both comparisons)?
LocalityVerdict is_local(const CoalgebraHom& phi, int budget);

// Same verdict, decided instead by exhaustively searching a section
// s: D -> I_C with s . phi = unit_C and I_phi . s = unit_D.
LocalityVerdict local_via_section(const CoalgebraHom& phi, int budget,
                                  std::size_t hom_budget = 1000000);

// One-way criterion: a lift s: D -> F(C) with s . phi = coaction_C and
// F(phi) . s = coaction_D certifies locality; absence decides nothing.
LocalityVerdict local_via_lift(const CoalgebraHom& phi, std::size_t hom_budget = 1000000);

// Dual one-way criterion on algebra homomorphisms: s: F(B) -> A with
// s . F(phi) = action_A and phi . s = action_B.
LocalityVerdict colocal_via_lift(const AlgebraHom& phi, std::size_t hom_budget = 1000000);

// Cross-check of the reflection against the undercategory construction: the
// initial algebra of X |-> F(X) with structure maps re-anchored along the
// coaction, computed in K_{C/}, must have carrier isomorphic under C to I_C.
struct RelativeReport {
  bool ok = false;
  ReflectStatus reflect_status = ReflectStatus::not_stabilized;
  adamek::Status under_status = adamek::Status::not_stabilized;
  std::size_t reflect_size = 0, under_size = 0;
  std::optional<Mor> iso;  // base iso carrier -> I_C commuting with the anchors
  std::string report;
};

RelativeReport relative_initial_check(const Coalgebra& c, int budget,
                                      std::size_t hom_budget = 1000000);

// The endofunctor on K_{C/} induced by F and a coalgebra structure on C.
cat::EndoPtr relative_endofunctor(const std::shared_ptr<const cat::UnderCat>& under,
                                  const Coalgebra& c);

}  // namespace fixcat::fixpt
