#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fixcat/support.hpp"

namespace fixcat::rank {

// A finite-depth hom-skeleton: either the designated point, or a node with a
// finite object set and one subtree per ordered object pair.  The empty
// skeleton is a node with no objects.
struct HomTree;
using HomTreePtr = std::shared_ptr<const HomTree>;

struct HomTree {
  bool is_point = false;
  int objects = 0;
  std::vector<HomTreePtr> hom;  // row-major, objects x objects entries

  const HomTreePtr& at(int i, int j) const { return hom[i * objects + j]; }
};

HomTreePtr point();
HomTreePtr empty_skeleton();
HomTreePtr node(int objects, std::vector<HomTreePtr> hom);

// A finite-state hom-skeleton, possibly of infinite depth: each state has an
// object set and a hom-state per ordered pair.  The point is a flagged state
// whose single hom is itself.
struct RationalCat {
  struct State {
    bool is_point = false;
    int objects = 0;
    std::vector<int> hom;  // row-major state ids

    int at(int i, int j) const { return hom[i * objects + j]; }
  };
  std::vector<State> states;
  int root = 0;

  std::vector<std::string> validate() const;
};

// One state per reachable subtree.
RationalCat from_tree(const HomTreePtr& t);

enum class Mode { inductive, coinductive };

// Per-state triviality under the chosen closure: the least (inductive) or
// greatest (coinductive) fixed point of "flagged point, or nonempty with all
// homs trivial".
std::vector<char> contractible_states(const RationalCat& c, Mode mode);
bool contractible(const RationalCat& c, Mode mode);
bool contractible(const HomTreePtr& t, Mode mode);

struct RankValue {
  enum class Kind { contractible, finite, not_small };
  Kind kind = Kind::finite;
  int n = 0;  // valid when finite

  bool operator==(const RankValue&) const = default;
  std::string label() const;

  static RankValue contractible_value() { return RankValue{Kind::contractible, -1}; }
  static RankValue finite(int n) { return RankValue{Kind::finite, n}; }
  static RankValue not_small() { return RankValue{Kind::not_small, -1}; }
};

// Memoized recursion with on-stack cycle detection: a reachable cycle of
// non-contractible states makes the rank not small.
RankValue rank_of(const RationalCat& c);
RankValue rank_of(const HomTreePtr& t);

struct TowerStep {
  int state;
  int obj_a, obj_b;
};

// An eventually-periodic refutation: following the hom edges along the
// prefix and then around the cycle passes only states that are nonempty and
// not inductively contractible.
struct TowerWitness {
  std::vector<TowerStep> prefix;
  std::vector<TowerStep> cycle;
};

struct NoethResult {
  bool noetherian = true;
  std::optional<TowerWitness> witness;
};

// Independent graph-based decision: lasso search over the hom-edge graph
// restricted to reachable, nonempty, non-contractible states.
NoethResult is_noetherian(const RationalCat& c);

// Simulation oracle: unroll the witness for `steps` levels and confirm that
// every visited state is nonempty and not inductively contractible.
bool witness_refutes(const RationalCat& c, const TowerWitness& w, int steps);

HomTreePtr suspension(const HomTreePtr& x);
RationalCat suspension(const RationalCat& x);
HomTreePtr coproduct(const std::vector<HomTreePtr>& parts);
RationalCat coproduct(const std::vector<RationalCat>& parts);

// suspension^theta of the empty skeleton; rank is exactly theta.
HomTreePtr strictness_witness(int theta);

// All skeletons of height at most max_depth over at most max_objects
// objects per node; the point and the empty node have height 1.
std::vector<HomTreePtr> enumerate_skeletons(int max_objects, int max_depth,
                                            std::size_t budget = 2000000);
// Closed-form count for cross-checking the generator.
std::size_t skeleton_count(int max_objects, int max_depth);

struct NoethRankReport {
  bool consistent = false;
  bool noetherian = false;
  RankValue rank;
  std::optional<TowerWitness> witness;
};

// Both decision procedures on one input; consistent iff noetherian matches
// "rank is small".
NoethRankReport noeth_equiv_rank(const RationalCat& c);

// Index-addressable space of all machines with exactly `num_states` states
// and up to `max_objects` objects per state (flagged point shapes included);
// supports data-parallel sweeps.
class MachineSpace {
public:
  MachineSpace(int num_states, int max_objects);
  std::size_t total() const { return total_; }
  RationalCat build(std::size_t index) const;

private:
  int num_states_, max_objects_;
  // Per-state shape choices: (objects, point flag, hom targets).
  struct Shape {
    bool is_point = false;
    int objects = 0;
    std::vector<int> hom;
  };
  std::vector<Shape> shapes_;
  std::size_t per_state_ = 0, total_ = 0;
};

}  // namespace fixcat::rank
