#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fixcat/finset.hpp"
#include "fixcat/support.hpp"

namespace fixcat::cat {

class Mor;

// A presheaf on a finite index category: one finite set per index object and
// one restriction map per index arrow (contravariant).
struct PresheafObj {
  std::vector<FinSet> at;    // indexed by index-object id
  std::vector<FinMap> res;   // indexed by index-arrow id u: j -> j', maps at[j'] -> at[j]
  bool operator==(const PresheafObj&) const = default;
};

struct PresheafNat {
  std::vector<FinMap> comp;  // one component per index object
  bool operator==(const PresheafNat&) const = default;
};

// Object of some concretely-presented category.  The payload depends on the
// category kind:
//   finite sets        -> FinSet
//   thin lattice       -> element index
//   finitely presented -> object index
//   presheaves         -> PresheafObj
//   undercategory      -> an arrow of the base category (boxed)
class Obj {
public:
  using Boxed = std::shared_ptr<const Mor>;
  std::variant<FinSet, int, PresheafObj, Boxed> v;

  Obj() : v(FinSet{}) {}
  explicit Obj(FinSet s) : v(std::move(s)) {}
  explicit Obj(int idx) : v(idx) {}
  explicit Obj(PresheafObj p) : v(std::move(p)) {}
  explicit Obj(Boxed m) : v(std::move(m)) {}

  const FinSet& set() const { return std::get<FinSet>(v); }
  int idx() const { return std::get<int>(v); }
  const PresheafObj& presheaf() const { return std::get<PresheafObj>(v); }
  const Mor& boxed() const { return *std::get<Boxed>(v); }

  bool operator==(const Obj& o) const;
};

// Morphism with explicit endpoints.  Payload per kind: dense index map,
// order witness (nothing to store), presented-arrow index, natural
// transformation, or the underlying base arrow of an undercategory triangle.
class Mor {
public:
  Obj src, tgt;
  std::variant<FinMap, std::monostate, int, PresheafNat, std::shared_ptr<const Mor>> data;

  Mor() = default;
  Mor(Obj s, Obj t, FinMap m) : src(std::move(s)), tgt(std::move(t)), data(std::move(m)) {}
  Mor(Obj s, Obj t, std::monostate) : src(std::move(s)), tgt(std::move(t)), data(std::monostate{}) {}
  Mor(Obj s, Obj t, int arrow) : src(std::move(s)), tgt(std::move(t)), data(arrow) {}
  Mor(Obj s, Obj t, PresheafNat n) : src(std::move(s)), tgt(std::move(t)), data(std::move(n)) {}
  Mor(Obj s, Obj t, std::shared_ptr<const Mor> leg)
      : src(std::move(s)), tgt(std::move(t)), data(std::move(leg)) {}

  const FinMap& map() const { return std::get<FinMap>(data); }
  int arrow() const { return std::get<int>(data); }
  const PresheafNat& nat() const { return std::get<PresheafNat>(data); }
  const Mor& leg() const { return *std::get<std::shared_ptr<const Mor>>(data); }

  bool operator==(const Mor& o) const;
};

inline Obj box(const Mor& m) { return Obj(std::make_shared<const Mor>(m)); }
inline Mor wrap_leg(Obj s, Obj t, const Mor& base) {
  return Mor(std::move(s), std::move(t), std::make_shared<const Mor>(base));
}

struct Caps {
  bool has_initial = false;
  bool has_terminal = false;
  bool has_coproducts = false;
  bool has_products = false;
  bool has_pushouts = false;
  bool has_pullbacks = false;
  bool hom_enumerable = false;
  bool has_chain_colimits = false;
  bool has_chain_limits = false;
};

struct Cospan {
  Obj apex;
  std::vector<Mor> in;  // injections / coprojections into apex
};

struct Span {
  Obj apex;
  std::vector<Mor> out;  // projections out of apex
};

// Quotient of X by the equivalence generated by x ~ c(x) for an endo c;
// q satisfies q = q . c and the induced endomorphism of the quotient is the
// identity.  Backs the repeated-link stabilization certificate.
struct EndoQuotient {
  Obj quotient;
  Mor q;  // X -> quotient
};

// The largest part of X on which an endo c restricts to an automorphism,
// i.e. the intersection of the forward images c^k(X); `incl` embeds it and
// `autom` is the restricted automorphism.  Dual of EndoQuotient.
struct EndoStablePart {
  Obj part;
  Mor incl;   // part -> X
  Mor autom;  // part -> part, the restriction of c
};

class Category : public std::enable_shared_from_this<Category> {
public:
  virtual ~Category() = default;

  virtual std::string kind() const = 0;
  virtual Caps caps() const = 0;

  virtual bool contains(const Obj&) const = 0;
  virtual std::size_t obj_size(const Obj&) const = 0;
  virtual std::string obj_label(const Obj&) const = 0;

  virtual Mor identity(const Obj&) const = 0;
  virtual Mor compose(const Mor& g, const Mor& f) const = 0;
  virtual bool mor_valid(const Mor&) const = 0;
  virtual std::optional<Mor> inverse(const Mor&) const = 0;
  bool is_iso(const Mor& m) const { return inverse(m).has_value(); }
  // Why a given morphism fails to be invertible, for error certificates.
  virtual std::string iso_failure(const Mor&) const;

  // Finite object universe, for exhaustive axiom checks.  Categories with an
  // unbounded object universe throw non_enumerable.
  virtual std::vector<Obj> objects() const;

  virtual Obj initial() const;
  virtual Mor from_initial(const Obj&) const;
  virtual Obj terminal() const;
  virtual Mor to_terminal(const Obj&) const;

  virtual Cospan coproduct(const std::vector<Obj>&) const;
  virtual Span product(const std::vector<Obj>&) const;
  // Functorial action on coproducts/products: given component maps fs[i]
  // between the legs of two (co)spans formed by this category.
  virtual Mor coproduct_map(const Cospan& src, const Cospan& tgt, const std::vector<Mor>& fs) const;
  virtual Mor product_map(const Span& src, const Span& tgt, const std::vector<Mor>& fs) const;

  // Pushout of X <-r- E -a-> Y; in[0]: X -> P, in[1]: Y -> P.
  virtual Cospan pushout(const Mor& r, const Mor& a) const;
  // Mediating map for a commuting cocone (u: X -> Z, v: Y -> Z).
  virtual std::optional<Mor> pushout_mediate(const Cospan& po, const Mor& u, const Mor& v) const;
  // Pullback of X -f-> B <-g- Y; out[0]: P -> X, out[1]: P -> Y.
  virtual Span pullback(const Mor& f, const Mor& g) const;

  virtual std::vector<Mor> hom(const Obj&, const Obj&, std::size_t budget) const;

  // Hooks for the chain engine.
  virtual std::optional<EndoQuotient> endo_quotient(const Mor& c) const;
  virtual std::optional<EndoStablePart> endo_stable_part(const Mor& c) const;
  // Factor f through q (find u with u . q = f), respectively corestrict f
  // through an inclusion (find u with incl . u = f).
  virtual std::optional<Mor> factor_through(const Mor& q, const Mor& f) const;
  virtual std::optional<Mor> corestrict_through(const Mor& incl, const Mor& f) const;

protected:
  [[noreturn]] void no_capability(const std::string& op) const {
    fail(errc::capability_missing, kind() + " category does not support " + op);
  }
};

using CategoryPtr = std::shared_ptr<const Category>;

// --- finite sets -------------------------------------------------------

class FinSetCat final : public Category {
public:
  FinSetCat() = default;
  // Restricting to sets of size <= max over the canonical alphabet gives a
  // finite universe for exhaustive axiom checks.
  explicit FinSetCat(std::size_t restrict_max_size) : restrict_(restrict_max_size) {}

  std::string kind() const override { return "finset"; }
  Caps caps() const override;
  bool contains(const Obj&) const override;
  std::size_t obj_size(const Obj&) const override;
  std::string obj_label(const Obj&) const override;
  Mor identity(const Obj&) const override;
  Mor compose(const Mor&, const Mor&) const override;
  bool mor_valid(const Mor&) const override;
  std::optional<Mor> inverse(const Mor&) const override;
  std::string iso_failure(const Mor&) const override;
  std::vector<Obj> objects() const override;
  Obj initial() const override;
  Mor from_initial(const Obj&) const override;
  Obj terminal() const override;
  Mor to_terminal(const Obj&) const override;
  Cospan coproduct(const std::vector<Obj>&) const override;
  Span product(const std::vector<Obj>&) const override;
  Mor coproduct_map(const Cospan&, const Cospan&, const std::vector<Mor>&) const override;
  Mor product_map(const Span&, const Span&, const std::vector<Mor>&) const override;
  Cospan pushout(const Mor& r, const Mor& a) const override;
  std::optional<Mor> pushout_mediate(const Cospan&, const Mor&, const Mor&) const override;
  Span pullback(const Mor& f, const Mor& g) const override;
  std::vector<Mor> hom(const Obj&, const Obj&, std::size_t budget) const override;
  std::optional<EndoQuotient> endo_quotient(const Mor& c) const override;
  std::optional<EndoStablePart> endo_stable_part(const Mor& c) const override;
  std::optional<Mor> factor_through(const Mor& q, const Mor& f) const override;
  std::optional<Mor> corestrict_through(const Mor& incl, const Mor& f) const override;

  // Function object by name table; convenience for tests and IO.
  static Mor fn(const Obj& src, const Obj& tgt,
                const std::vector<std::pair<std::string, std::string>>& table);

private:
  std::optional<std::size_t> restrict_;
};

// --- finitely presented ------------------------------------------------

// A finite category presented by object names, arrow names with endpoints,
// identity assignment, and a full composition table.  The table is taken as
// given; check_category_axioms validates it.
class PresentedCat final : public Category {
public:
  struct Arrow {
    std::string name;
    int src = 0, tgt = 0;
  };

  PresentedCat(std::vector<std::string> objects, std::vector<Arrow> arrows,
               std::vector<int> identity_of, std::vector<std::vector<int>> compose_table);

  std::string kind() const override { return "presented"; }
  Caps caps() const override;
  bool contains(const Obj&) const override;
  std::size_t obj_size(const Obj&) const override;
  std::string obj_label(const Obj&) const override;
  Mor identity(const Obj&) const override;
  Mor compose(const Mor&, const Mor&) const override;
  bool mor_valid(const Mor&) const override;
  std::optional<Mor> inverse(const Mor&) const override;
  std::vector<Obj> objects() const override;
  std::vector<Mor> hom(const Obj&, const Obj&, std::size_t budget) const override;

  std::size_t arrow_count() const { return arrows_.size(); }
  const Arrow& arrow_info(int id) const { return arrows_[id]; }
  const std::string& object_name(int id) const { return object_names_[id]; }
  int identity_arrow(int obj) const { return identity_of_[obj]; }
  // compose_table[g][f] = g . f, or -1 when not composable.
  int table(int g, int f) const { return compose_table_[g][f]; }

private:
  std::vector<std::string> object_names_;
  std::vector<Arrow> arrows_;
  std::vector<int> identity_of_;
  std::vector<std::vector<int>> compose_table_;
};

// --- axiom checking -----------------------------------------------------

struct AxiomReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustively checks unit and associativity laws over the category's object
// universe.  Requires a finite universe and enumerable homs.
AxiomReport check_category_axioms(const Category& K, std::size_t hom_budget = 1000000);

}  // namespace fixcat::cat
