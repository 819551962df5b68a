#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fixcat/support.hpp"

namespace fixcat::sigma {

// A simplex-category morphism [m] -> [n]: a weakly increasing tuple of m+1
// values in {0,...,n}.
struct DeltaMap {
  int m = 0, n = 0;
  std::vector<int> values;

  bool operator==(const DeltaMap&) const = default;
  auto operator<=>(const DeltaMap&) const = default;

  bool well_typed() const;
  bool constant_zero() const;
  bool is_identity() const;
  // Subinterval inclusion: values[i] = values[0] + i.
  bool is_inert() const;

  static DeltaMap identity(int m);
  static DeltaMap constant(int m, int n, int value);
  static DeltaMap of(int m, int n, std::vector<int> values);
  static DeltaMap compose(const DeltaMap& g, const DeltaMap& f);  // g . f
  std::string label() const;
};

// All morphisms [m] -> [n]; the count is binom(m+n+1, m+1).
std::vector<DeltaMap> delta_homs(int m, int n, std::size_t cap = 1000000);

// An object of the levelwise-simplex index category: a finite tuple of
// positive entries (the normal form of an eventually-zero integer sequence).
struct SigmaObject {
  std::vector<int> entries;  // all > 0

  SigmaObject() = default;
  explicit SigmaObject(std::vector<int> e);

  int dim() const { return static_cast<int>(entries.size()); }
  int entry(int i) const { return i < dim() ? entries[i] : 0; }
  // [k,l]: appends l when l > 0, identity when l = 0.
  SigmaObject extended(int l) const;

  bool operator==(const SigmaObject&) const = default;
  auto operator<=>(const SigmaObject&) const = default;
  std::string label() const;
  static SigmaObject parse(const std::string& csv);
};

// A morphism, stored in normal form: the levelwise components up to and
// including the first constant-zero one; all later levels are implied.
struct SigmaMorphism {
  SigmaObject src, tgt;
  std::vector<DeltaMap> components;

  bool operator==(const SigmaMorphism&) const = default;
  auto operator<=>(const SigmaMorphism&) const = default;
  std::string label() const;

  // The canonical representative component at any level.
  DeltaMap at_level(int i) const;
};

// Normalizes a raw component list (levels beyond the list are implicitly
// constant-zero).  Components must be well-typed levelwise.
SigmaMorphism sigma_normalize(const SigmaObject& src, const SigmaObject& tgt,
                              const std::vector<DeltaMap>& raw);

SigmaMorphism sigma_identity(const SigmaObject& k);
SigmaMorphism sigma_compose(const SigmaMorphism& g, const SigmaMorphism& f);
std::vector<SigmaMorphism> sigma_homs(const SigmaObject& src, const SigmaObject& tgt,
                                      std::size_t cap = 1000000);

// The map extend(k,1) -> extend(k,l) induced by the edge (j, j+1), and the
// vertex map k -> extend(k,l) picking j; identities below the new level.
SigmaMorphism edge_map(const SigmaObject& k, int l, int j);
SigmaMorphism vertex_map(const SigmaObject& k, int l, int j);
// General extension functoriality: extend(k, d): extend(k,m) -> extend(k,n).
SigmaMorphism extend_map(const SigmaObject& k, const DeltaMap& d);

// --- bounded presheaves --------------------------------------------------

struct Bound {
  int max_dim = 2;
  int max_entry = 2;
  int max_level = 2;  // simplex level used for Segal/Kan checks
};

// All objects with dim <= max_dim and entries <= max_entry, in canonical
// order.
std::vector<SigmaObject> objects_within(const Bound& b);

// A Set-valued presheaf truncated to a bound: named cells per in-bound
// object plus restriction maps along every in-bound morphism.  Out-of-bound
// restriction requests are errors, never guesses.
class SigmaPresheaf {
public:
  Bound bound;
  std::vector<SigmaObject> objs;
  std::vector<std::vector<std::string>> cells;              // per object
  std::map<std::string, std::vector<int>> res;              // morphism label -> index map

  int obj_index(const SigmaObject& k) const;
  const std::vector<std::string>& cells_at(const SigmaObject& k) const;
  // Restriction along f: a -> b, mapping a cell index of b to one of a.
  int restrict_cell(const SigmaMorphism& f, int cell) const;

  // Contravariant functoriality within the bound, exhaustively.
  std::vector<std::string> check_functorial() const;
};

// The representable presheaf of n within the bound (cells are morphisms into
// n, restriction is precomposition).
SigmaPresheaf representable(const SigmaObject& n, const Bound& b);

struct CheckReport {
  std::vector<std::string> failures;
  std::size_t checked = 0;
  bool ok() const { return failures.empty(); }
};

// For every in-bound (k, l >= 2): the cell set at extend(k,l) must biject
// with the l-fold fiber product of the cells at extend(k,1) over the cells
// at k, via the edge and vertex restrictions.
CheckReport segal_check(const SigmaPresheaf& p);

// Antisymmetry of 1-cells in a representable: arrows f -> g and g -> f with
// matching endpoints force f = g.
CheckReport completeness_check_representable(const SigmaObject& n, const Bound& b);
// Same check on an arbitrary presheaf (used for constructed counterexamples).
CheckReport completeness_check(const SigmaPresheaf& p);

// --- truncated simplicial sets and extensions ----------------------------

struct TruncSimpSet {
  int max_level = 0;
  std::vector<std::vector<std::string>> cells;  // per level 0..max_level
  // Restriction along d: [m] -> [n], mapping a level-n cell index to level m.
  std::function<int(const DeltaMap&, int)> res;
};

// The codiscrete object on m+1 points: (m+1)^(n+1) cells at level n.
TruncSimpSet codiscrete(int m, int max_level);

// Value at `at` of the extension-along-[k,-] of X: the quotient of the pairs
// (map at -> extend(k,l), level-l cell of X) by the usual identifications.
std::vector<std::string> kan_extension_cell(const TruncSimpSet& x, const SigmaObject& k,
                                            const SigmaObject& at, std::size_t budget = 1000000);

}  // namespace fixcat::sigma
