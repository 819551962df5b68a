#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fixcat/support.hpp"

namespace fixcat::lat {

// A finite lattice: elements, full order matrix, join/meet tables, bottom and
// top.  Built from a Hasse edge list; the order is the reflexive-transitive
// closure of the edges.
class FiniteLattice {
public:
  static FiniteLattice from_hasse(std::vector<std::string> elements,
                                  const std::vector<std::pair<std::string, std::string>>& edges);
  // From a full order matrix (leq[a][b] = a <= b); validated.
  static FiniteLattice from_order(std::vector<std::string> elements,
                                  std::vector<std::vector<char>> leq);

  // Chain 0 < 1 < ... < n-1.
  static FiniteLattice chain(std::size_t n);
  // Powerset of named generators, ordered by inclusion.
  static FiniteLattice powerset(const std::vector<std::string>& generators);

  std::size_t size() const { return names_.size(); }
  const std::string& name(int e) const { return names_[e]; }
  int index_of(const std::string& n) const;
  bool leq(int a, int b) const { return leq_[a][b] != 0; }
  int join(int a, int b) const { return join_[a][b]; }
  int meet(int a, int b) const { return meet_[a][b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Validation report; empty when the order is a lattice with bounds.
  std::vector<std::string> validate() const;

private:
  std::vector<std::string> names_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<int>> join_, meet_;
  int bottom_ = -1, top_ = -1;

  void finish();  // computes join/meet/bounds from leq_; throws on failure
};

// A monotone endofunction given by a value table; monotonicity is checked at
// construction.
struct MonotoneMap {
  const FiniteLattice* lattice = nullptr;
  std::vector<int> table;

  MonotoneMap() = default;
  MonotoneMap(const FiniteLattice& l, std::vector<int> values);

  int operator()(int x) const { return table[x]; }
};

struct KleeneResult {
  int value = -1;
  std::vector<int> trace;  // the iteration chain, bottom (or top) first
};

// Least / greatest fixed point by bounded iteration from bottom / top.
KleeneResult lfp(const MonotoneMap& f);
KleeneResult gfp(const MonotoneMap& f);

// Independent oracle: every fixed point, by exhaustive scan, ascending.
std::vector<int> all_fixed_points(const MonotoneMap& f, std::size_t budget = 4096);

// All monotone endofunctions of a lattice (lexicographic table order).
std::vector<MonotoneMap> all_monotone_maps(const FiniteLattice& l, std::size_t cap);

// Every lattice on up to `max_size` elements, one representative per
// naturally-labeled partial order (element i below element j implies i < j).
std::vector<FiniteLattice> enumerate_lattices(std::size_t max_size);

// --- dataflow ------------------------------------------------------------

// A toy dataflow instance: a directed graph whose nodes carry monotone
// transfer functions over a common value lattice.  The solution assigns each
// node the least value consistent with
//   out(n) = transfer_n( join of out(p) over predecessors p )   [forward]
// (successors instead of predecessors for backward problems), i.e. the least
// fixed point on the product lattice.
struct DataflowProblem {
  const FiniteLattice* lattice = nullptr;
  std::vector<std::string> node_names;
  std::vector<MonotoneMap> transfer;              // per node
  std::vector<std::pair<int, int>> edges;         // (from, to)
  bool forward = true;
  std::vector<int> entry_values;                  // extra join-ins per node (defaults bottom)
};

struct DataflowSolution {
  std::vector<int> value;  // per node
  int sweeps = 0;
};

// Jacobi iteration: each sweep evaluates all node equations from the previous
// assignment; node evaluations within one sweep are independent and run under
// OpenMP when `parallel` is set.
DataflowSolution dataflow_solve(const DataflowProblem& p, bool parallel);

// Serial reference: round-robin (Gauss-Seidel) worklist iteration, evaluating
// nodes in order against the current assignment.  Kept as the test oracle.
DataflowSolution dataflow_solve_round_robin(const DataflowProblem& p);

}  // namespace fixcat::lat
