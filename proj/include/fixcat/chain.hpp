#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fixcat/category.hpp"

namespace fixcat::cat {

// Outcome of a budgeted sequential (co)limit computation.
//
// For colimits, links[i]: stages[i] -> stages[i+1] and legs[i]: stages[i] ->
// value form a cocone.  For limits the chain runs backwards: links[i]:
// stages[i+1] -> stages[i], and legs[i]: value -> stages[i] form a cone.
//
// A chain is declared stabilized only on one of two sound certificates:
//   * two consecutive links are isomorphisms (the comparison from stage `at`
//     onward is invertible), or
//   * the chain is generated by applying a functor to the previous link and
//     two consecutive links repeat literally, in which case the whole tail is
//     that one endomorphism and the (co)limit is its absorbing quotient
//     (resp. stable part).
// Anything else is reported as NotStabilized with a growth trace.
struct ChainOutcome {
  std::vector<Obj> stages;
  std::vector<Mor> links;
  std::vector<std::size_t> sizes;

  bool stabilized = false;
  bool budget_exceeded = false;
  int at = -1;
  Obj value;
  std::vector<Mor> legs;
  std::string report;
};

// Produces the next connecting morphism given the stage index and the
// current stage object.  For colimits the result must have source `current`;
// for limits, target `current`.
using LinkGen = std::function<Mor(int stage, const Obj& current)>;

// `functor_generated` asserts that every later link arises by applying a
// fixed functor to the previous one; it licenses the repeated-link
// certificate.
ChainOutcome chain_colimit(const Category& K, const Obj& start, const LinkGen& next, int budget,
                           bool functor_generated);

ChainOutcome chain_limit(const Category& K, const Obj& start, const LinkGen& next, int budget,
                         bool functor_generated);

// Factors a compatible cocone (legs stages[i] -> target, at least through
// stage `at`) uniquely through the computed colimit; nullopt if the family
// is not a cocone over the identifications.
std::optional<Mor> colimit_mediate(const Category& K, const ChainOutcome& colim,
                                   const std::vector<Mor>& cocone, const Obj& target);

// Dual: factors a compatible cone (legs source -> stages[i]) through the
// computed limit.
std::optional<Mor> limit_mediate(const Category& K, const ChainOutcome& lim,
                                 const std::vector<Mor>& cone, const Obj& source);

// Convenience: colimit of an explicitly given finite prefix.  The prefix is
// treated with the same certificates (functor_generated applies as above).
ChainOutcome chain_colimit_prefix(const Category& K, const std::vector<Obj>& stages,
                                  const std::vector<Mor>& links, bool functor_generated);

std::string describe_growth(const std::vector<std::size_t>& sizes);

}  // namespace fixcat::cat
