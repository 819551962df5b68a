#pragma once

#include <memory>

#include "fixcat/category.hpp"

namespace fixcat::cat {

// Set-valued presheaves on a finite index category, with natural
// transformations as morphisms.  (Co)products are pointwise; hom sets are
// enumerated by brute force with a naturality filter.
class PresheafCat final : public Category {
public:
  explicit PresheafCat(std::shared_ptr<const PresentedCat> index) : index_(std::move(index)) {}

  const PresentedCat& index() const { return *index_; }

  std::string kind() const override { return "presheaf"; }
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
  Obj terminal() const override;
  Mor to_terminal(const Obj&) const override;
  Cospan coproduct(const std::vector<Obj>&) const override;
  Span product(const std::vector<Obj>&) const override;
  std::vector<Mor> hom(const Obj&, const Obj&, std::size_t) const override;

  // Checks contravariant functoriality of a presheaf's restriction maps.
  std::vector<std::string> check_presheaf(const Obj&) const;

  // The presheaf represented by an index object (values are hom sets).
  Obj representable(int index_obj) const;

private:
  std::shared_ptr<const PresentedCat> index_;
};

}  // namespace fixcat::cat
