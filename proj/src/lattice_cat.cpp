#include "fixcat/lattice_cat.hpp"

namespace fixcat::cat {

Caps LatticeCat::caps() const {
  Caps c;
  c.has_initial = c.has_terminal = c.has_coproducts = c.has_products = true;
  c.has_pushouts = c.has_pullbacks = c.hom_enumerable = true;
  c.has_chain_colimits = c.has_chain_limits = true;
  return c;
}

bool LatticeCat::contains(const Obj& x) const {
  return std::holds_alternative<int>(x.v) && x.idx() >= 0 &&
         static_cast<std::size_t>(x.idx()) < l_->size();
}

std::size_t LatticeCat::obj_size(const Obj& x) const {
  // Number of elements below; monotone along ascending chains, which makes
  // growth traces informative.
  std::size_t count = 0;
  for (std::size_t e = 0; e < l_->size(); ++e)
    if (l_->leq(static_cast<int>(e), x.idx())) ++count;
  return count;
}

std::string LatticeCat::obj_label(const Obj& x) const { return l_->name(x.idx()); }

Mor LatticeCat::arrow(int lo, int hi) const {
  require(l_->leq(lo, hi), errc::ill_typed,
          "no morphism " + l_->name(lo) + " -> " + l_->name(hi) + " in a thin lattice category");
  return Mor(Obj(lo), Obj(hi), std::monostate{});
}

Mor LatticeCat::identity(const Obj& x) const { return Mor(x, x, std::monostate{}); }

Mor LatticeCat::compose(const Mor& g, const Mor& f) const {
  require(f.tgt == g.src, errc::ill_typed, "composition endpoints do not match");
  return Mor(f.src, g.tgt, std::monostate{});
}

bool LatticeCat::mor_valid(const Mor& m) const {
  return contains(m.src) && contains(m.tgt) && std::holds_alternative<std::monostate>(m.data) &&
         l_->leq(m.src.idx(), m.tgt.idx());
}

std::optional<Mor> LatticeCat::inverse(const Mor& m) const {
  if (!l_->leq(m.tgt.idx(), m.src.idx())) return std::nullopt;
  return Mor(m.tgt, m.src, std::monostate{});
}

std::vector<Obj> LatticeCat::objects() const {
  std::vector<Obj> out;
  for (std::size_t e = 0; e < l_->size(); ++e) out.push_back(Obj(static_cast<int>(e)));
  return out;
}

Obj LatticeCat::initial() const { return Obj(l_->bottom()); }
Mor LatticeCat::from_initial(const Obj& x) const { return arrow(l_->bottom(), x.idx()); }
Obj LatticeCat::terminal() const { return Obj(l_->top()); }
Mor LatticeCat::to_terminal(const Obj& x) const { return arrow(x.idx(), l_->top()); }

Cospan LatticeCat::coproduct(const std::vector<Obj>& parts) const {
  int acc = l_->bottom();
  for (const Obj& p : parts) acc = l_->join(acc, p.idx());
  Cospan out;
  out.apex = Obj(acc);
  for (const Obj& p : parts) out.in.push_back(arrow(p.idx(), acc));
  return out;
}

Span LatticeCat::product(const std::vector<Obj>& parts) const {
  int acc = l_->top();
  for (const Obj& p : parts) acc = l_->meet(acc, p.idx());
  Span out;
  out.apex = Obj(acc);
  for (const Obj& p : parts) out.out.push_back(arrow(acc, p.idx()));
  return out;
}

Mor LatticeCat::coproduct_map(const Cospan& src, const Cospan& tgt, const std::vector<Mor>&) const {
  return arrow(src.apex.idx(), tgt.apex.idx());
}

Mor LatticeCat::product_map(const Span& src, const Span& tgt, const std::vector<Mor>&) const {
  return arrow(src.apex.idx(), tgt.apex.idx());
}

Cospan LatticeCat::pushout(const Mor& r, const Mor& a) const {
  require(r.src == a.src, errc::ill_typed, "pushout legs must share their source");
  int apex = l_->join(r.tgt.idx(), a.tgt.idx());
  Cospan out;
  out.apex = Obj(apex);
  out.in.push_back(arrow(r.tgt.idx(), apex));
  out.in.push_back(arrow(a.tgt.idx(), apex));
  return out;
}

std::optional<Mor> LatticeCat::pushout_mediate(const Cospan& po, const Mor& u, const Mor& v) const {
  if (!(u.tgt == v.tgt) || !l_->leq(po.apex.idx(), u.tgt.idx())) return std::nullopt;
  return arrow(po.apex.idx(), u.tgt.idx());
}

Span LatticeCat::pullback(const Mor& f, const Mor& g) const {
  require(f.tgt == g.tgt, errc::ill_typed, "pullback legs must share their target");
  int apex = l_->meet(f.src.idx(), g.src.idx());
  Span out;
  out.apex = Obj(apex);
  out.out.push_back(arrow(apex, f.src.idx()));
  out.out.push_back(arrow(apex, g.src.idx()));
  return out;
}

std::vector<Mor> LatticeCat::hom(const Obj& x, const Obj& y, std::size_t) const {
  std::vector<Mor> out;
  if (l_->leq(x.idx(), y.idx())) out.push_back(Mor(x, y, std::monostate{}));
  return out;
}

std::optional<EndoQuotient> LatticeCat::endo_quotient(const Mor& c) const {
  if (!(c.src == c.tgt)) return std::nullopt;
  return EndoQuotient{c.src, identity(c.src)};
}

std::optional<EndoStablePart> LatticeCat::endo_stable_part(const Mor& c) const {
  if (!(c.src == c.tgt)) return std::nullopt;
  return EndoStablePart{c.src, identity(c.src), identity(c.src)};
}

std::optional<Mor> LatticeCat::factor_through(const Mor& q, const Mor& f) const {
  if (!l_->leq(q.tgt.idx(), f.tgt.idx())) return std::nullopt;
  return arrow(q.tgt.idx(), f.tgt.idx());
}

std::optional<Mor> LatticeCat::corestrict_through(const Mor& incl, const Mor& f) const {
  if (!l_->leq(f.src.idx(), incl.src.idx())) return std::nullopt;
  return arrow(f.src.idx(), incl.src.idx());
}

}  // namespace fixcat::cat
