#pragma once

#include <memory>

#include "fixcat/category.hpp"
#include "fixcat/kleene.hpp"

namespace fixcat::cat {

// A finite lattice viewed as a thin category: objects are elements, and there
// is exactly one morphism x -> y when x <= y.  Joins are coproducts and
// pushouts, meets are products and pullbacks, and chain (co)limits always
// stabilize within the lattice height.
class LatticeCat final : public Category {
public:
  explicit LatticeCat(std::shared_ptr<const lat::FiniteLattice> l) : l_(std::move(l)) {}

  const lat::FiniteLattice& lattice() const { return *l_; }

  std::string kind() const override { return "lattice"; }
  Caps caps() const override;
  bool contains(const Obj&) const override;
  std::size_t obj_size(const Obj&) const override;
  std::string obj_label(const Obj&) const override;
  Mor identity(const Obj&) const override;
  Mor compose(const Mor&, const Mor&) const override;
  bool mor_valid(const Mor&) const override;
  std::optional<Mor> inverse(const Mor&) const override;
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
  std::vector<Mor> hom(const Obj&, const Obj&, std::size_t) const override;
  std::optional<EndoQuotient> endo_quotient(const Mor& c) const override;
  std::optional<EndoStablePart> endo_stable_part(const Mor& c) const override;
  std::optional<Mor> factor_through(const Mor& q, const Mor& f) const override;
  std::optional<Mor> corestrict_through(const Mor& incl, const Mor& f) const override;

  Mor arrow(int lo, int hi) const;  // the unique morphism lo -> hi

private:
  std::shared_ptr<const lat::FiniteLattice> l_;
};

}  // namespace fixcat::cat
