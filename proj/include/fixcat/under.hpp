#pragma once

#include "fixcat/category.hpp"

namespace fixcat::cat {

// The undercategory K_{c/}: objects are arrows of K with source c, morphisms
// are commuting triangles.  The identity on c is the initial object, and
// sequential colimits are computed on the base category.
class UnderCat final : public Category {
public:
  UnderCat(CategoryPtr base, Obj anchor) : base_(std::move(base)), anchor_(std::move(anchor)) {}

  const Category& base() const { return *base_; }
  const Obj& anchor() const { return anchor_; }

  // The arrow of the base category carried by an undercategory object.
  static const Mor& structure(const Obj& x) { return x.boxed(); }

  std::string kind() const override { return "under"; }
  Caps caps() const override;
  bool contains(const Obj&) const override;
  std::size_t obj_size(const Obj&) const override;
  std::string obj_label(const Obj&) const override;
  Mor identity(const Obj&) const override;
  Mor compose(const Mor&, const Mor&) const override;
  bool mor_valid(const Mor&) const override;
  std::optional<Mor> inverse(const Mor&) const override;
  Obj initial() const override;
  Mor from_initial(const Obj&) const override;
  Cospan coproduct(const std::vector<Obj>&) const override;
  Cospan pushout(const Mor& r, const Mor& a) const override;
  std::optional<Mor> pushout_mediate(const Cospan&, const Mor&, const Mor&) const override;
  std::vector<Mor> hom(const Obj&, const Obj&, std::size_t) const override;
  std::optional<EndoQuotient> endo_quotient(const Mor& c) const override;
  std::optional<Mor> factor_through(const Mor& q, const Mor& f) const override;

  Mor wrap(const Obj& s, const Obj& t, const Mor& base_leg) const;

private:
  CategoryPtr base_;
  Obj anchor_;
};

}  // namespace fixcat::cat
