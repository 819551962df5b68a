#include "fixcat/under.hpp"

namespace fixcat::cat {

Caps UnderCat::caps() const {
  Caps b = base_->caps();
  Caps c;
  c.has_initial = true;
  c.has_coproducts = b.has_pushouts;
  c.has_pushouts = b.has_pushouts;
  c.hom_enumerable = b.hom_enumerable;
  c.has_chain_colimits = b.has_chain_colimits;
  return c;
}

bool UnderCat::contains(const Obj& x) const {
  if (!std::holds_alternative<Obj::Boxed>(x.v)) return false;
  const Mor& f = structure(x);
  return base_->mor_valid(f) && f.src == anchor_;
}

std::size_t UnderCat::obj_size(const Obj& x) const { return base_->obj_size(structure(x).tgt); }

std::string UnderCat::obj_label(const Obj& x) const {
  return base_->obj_label(anchor_) + "/" + base_->obj_label(structure(x).tgt);
}

Mor UnderCat::wrap(const Obj& s, const Obj& t, const Mor& base_leg) const {
  return wrap_leg(s, t, base_leg);
}

Mor UnderCat::identity(const Obj& x) const {
  return wrap(x, x, base_->identity(structure(x).tgt));
}

Mor UnderCat::compose(const Mor& g, const Mor& f) const {
  require(f.tgt == g.src, errc::ill_typed, "composition endpoints do not match");
  return wrap(f.src, g.tgt, base_->compose(g.leg(), f.leg()));
}

bool UnderCat::mor_valid(const Mor& m) const {
  if (!contains(m.src) || !contains(m.tgt)) return false;
  if (!std::holds_alternative<std::shared_ptr<const Mor>>(m.data)) return false;
  const Mor& leg = m.leg();
  if (!base_->mor_valid(leg)) return false;
  // Commuting triangle over the anchor.
  return base_->compose(leg, structure(m.src)) == structure(m.tgt);
}

std::optional<Mor> UnderCat::inverse(const Mor& m) const {
  std::optional<Mor> inv = base_->inverse(m.leg());
  if (!inv) return std::nullopt;
  return wrap(m.tgt, m.src, *inv);
}

Obj UnderCat::initial() const { return box(base_->identity(anchor_)); }

Mor UnderCat::from_initial(const Obj& x) const {
  // The unique triangle out of id_c is the structure arrow itself.
  return wrap(initial(), x, structure(x));
}

Cospan UnderCat::coproduct(const std::vector<Obj>& parts) const {
  require(parts.size() == 2, errc::capability_missing,
          "undercategory coproducts are binary (computed as base pushouts over the anchor)");
  Cospan po = base_->pushout(structure(parts[0]), structure(parts[1]));
  Obj apex = box(base_->compose(po.in[0], structure(parts[0])));
  Cospan out;
  out.apex = apex;
  out.in.push_back(wrap(parts[0], apex, po.in[0]));
  out.in.push_back(wrap(parts[1], apex, po.in[1]));
  return out;
}

Cospan UnderCat::pushout(const Mor& r, const Mor& a) const {
  Cospan po = base_->pushout(r.leg(), a.leg());
  Obj apex = box(base_->compose(po.in[0], structure(r.tgt)));
  Cospan out;
  out.apex = apex;
  out.in.push_back(wrap(r.tgt, apex, po.in[0]));
  out.in.push_back(wrap(a.tgt, apex, po.in[1]));
  return out;
}

std::optional<Mor> UnderCat::pushout_mediate(const Cospan& po, const Mor& u, const Mor& v) const {
  Cospan base_po;
  base_po.apex = structure(po.apex).tgt;
  base_po.in.push_back(po.in[0].leg());
  base_po.in.push_back(po.in[1].leg());
  std::optional<Mor> m = base_->pushout_mediate(base_po, u.leg(), v.leg());
  if (!m) return std::nullopt;
  return wrap(po.apex, u.tgt, *m);
}

std::vector<Mor> UnderCat::hom(const Obj& x, const Obj& y, std::size_t budget) const {
  std::vector<Mor> out;
  for (const Mor& h : base_->hom(structure(x).tgt, structure(y).tgt, budget))
    if (base_->compose(h, structure(x)) == structure(y)) out.push_back(wrap(x, y, h));
  return out;
}

std::optional<EndoQuotient> UnderCat::endo_quotient(const Mor& c) const {
  std::optional<EndoQuotient> base_q = base_->endo_quotient(c.leg());
  if (!base_q) return std::nullopt;
  Obj quot = box(base_->compose(base_q->q, structure(c.src)));
  return EndoQuotient{quot, wrap(c.src, quot, base_q->q)};
}

std::optional<Mor> UnderCat::factor_through(const Mor& q, const Mor& f) const {
  std::optional<Mor> u = base_->factor_through(q.leg(), f.leg());
  if (!u) return std::nullopt;
  Mor wrapped = wrap(q.tgt, f.tgt, *u);
  if (!mor_valid(wrapped)) return std::nullopt;
  return wrapped;
}

}  // namespace fixcat::cat
