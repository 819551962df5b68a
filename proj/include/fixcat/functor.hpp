#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fixcat/category.hpp"

namespace fixcat::cat {

class Endo;
using EndoPtr = std::shared_ptr<const Endo>;

// A described endofunctor of a concretely-presented category.  Descriptions
// are interpreted structurally; `check_functoriality` verifies the laws
// exhaustively on small object samples.
class Endo {
public:
  struct Constant {
    Obj value;
  };
  struct Identity {};
  struct PolyTerm {
    Obj coeff;  // A_i
    Obj exp;    // B_i
  };
  // X |-> sum_i A_i x X^{B_i}, finite-sets base only.
  struct Poly {
    std::vector<PolyTerm> terms;
  };
  struct Sum {
    std::vector<EndoPtr> parts;
  };
  struct Prod {
    std::vector<EndoPtr> parts;
  };
  struct Comp {
    std::vector<EndoPtr> parts;  // parts[0] applied last
  };
  // Value table over a thin lattice category; must be order-preserving.
  struct MonoTable {
    std::vector<int> table;
  };
  struct Custom {
    std::function<Obj(const Obj&)> on_obj;
    std::function<Mor(const Mor&)> on_mor;
  };

  CategoryPtr base;
  std::string name;
  std::variant<Constant, Identity, Poly, Sum, Prod, Comp, MonoTable, Custom> desc;
  bool preserves_chain_colimits = false;
  bool preserves_chain_limits = false;

  Obj on_obj(const Obj& x) const;
  Mor on_mor(const Mor& m) const;

  static EndoPtr constant(CategoryPtr base, Obj value, std::string name = "const");
  static EndoPtr identity(CategoryPtr base);
  static EndoPtr poly(CategoryPtr base, std::vector<PolyTerm> terms, std::string name = "poly");
  // Convenience: terms given as (coefficient size, exponent size) over the
  // canonical alphabets.
  static EndoPtr poly_sizes(CategoryPtr base, const std::vector<std::pair<int, int>>& sizes,
                            std::string name = "poly");
  static EndoPtr sum(std::vector<EndoPtr> parts, std::string name = "sum");
  static EndoPtr prod(std::vector<EndoPtr> parts, std::string name = "prod");
  static EndoPtr comp(std::vector<EndoPtr> parts, std::string name = "comp");
  static EndoPtr monotone(CategoryPtr lattice_base, std::vector<int> table,
                          std::string name = "monotone");
  static EndoPtr custom(CategoryPtr base, std::function<Obj(const Obj&)> on_obj,
                        std::function<Mor(const Mor&)> on_mor, bool pres_colim, bool pres_lim,
                        std::string name = "custom");
};

// Exhaustive functor-law check over the given objects: identities map to
// identities and composites of enumerable homs are preserved.
std::vector<std::string> check_functoriality(const Endo& F, const std::vector<Obj>& sample,
                                             std::size_t hom_budget = 100000);

}  // namespace fixcat::cat
