#include "fixcat/presheaf.hpp"

namespace fixcat::cat {

namespace {

FinSetCat pointwise;

}  // namespace

Caps PresheafCat::caps() const {
  Caps c;
  c.has_initial = c.has_terminal = c.has_coproducts = c.has_products = true;
  c.hom_enumerable = true;
  return c;
}

bool PresheafCat::contains(const Obj& x) const {
  if (!std::holds_alternative<PresheafObj>(x.v)) return false;
  const PresheafObj& p = x.presheaf();
  return p.at.size() == index_->objects().size() && p.res.size() == index_->arrow_count() &&
         check_presheaf(x).empty();
}

std::size_t PresheafCat::obj_size(const Obj& x) const {
  std::size_t total = 0;
  for (const FinSet& s : x.presheaf().at) total += s.size();
  return total;
}

std::string PresheafCat::obj_label(const Obj& x) const {
  std::vector<std::string> parts;
  const PresheafObj& p = x.presheaf();
  for (std::size_t j = 0; j < p.at.size(); ++j)
    parts.push_back(index_->object_name(static_cast<int>(j)) + ":" +
                    std::to_string(p.at[j].size()));
  return "[" + join(parts, " ") + "]";
}

Mor PresheafCat::identity(const Obj& x) const {
  PresheafNat n;
  for (const FinSet& s : x.presheaf().at) n.comp.push_back(FinMap::identity(s.size()));
  return Mor(x, x, std::move(n));
}

Mor PresheafCat::compose(const Mor& g, const Mor& f) const {
  require(f.tgt == g.src, errc::ill_typed, "composition endpoints do not match");
  PresheafNat n;
  for (std::size_t j = 0; j < f.nat().comp.size(); ++j)
    n.comp.push_back(FinMap::compose(g.nat().comp[j], f.nat().comp[j]));
  return Mor(f.src, g.tgt, std::move(n));
}

bool PresheafCat::mor_valid(const Mor& m) const {
  if (!std::holds_alternative<PresheafNat>(m.data)) return false;
  const PresheafObj& P = m.src.presheaf();
  const PresheafObj& Q = m.tgt.presheaf();
  const PresheafNat& n = m.nat();
  if (n.comp.size() != P.at.size()) return false;
  for (std::size_t j = 0; j < P.at.size(); ++j)
    if (n.comp[j].img.size() != P.at[j].size() || !n.comp[j].valid_into(Q.at[j].size()))
      return false;
  // Naturality: for u: j -> j', eta_j . P(u) == Q(u) . eta_j'.
  for (std::size_t u = 0; u < index_->arrow_count(); ++u) {
    const auto& arr = index_->arrow_info(static_cast<int>(u));
    FinMap lhs = FinMap::compose(n.comp[arr.src], P.res[u]);
    FinMap rhs = FinMap::compose(Q.res[u], n.comp[arr.tgt]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::optional<Mor> PresheafCat::inverse(const Mor& m) const {
  PresheafNat inv;
  for (std::size_t j = 0; j < m.nat().comp.size(); ++j) {
    auto c = m.nat().comp[j].inverse(m.tgt.presheaf().at[j].size());
    if (!c) return std::nullopt;
    inv.comp.push_back(std::move(*c));
  }
  return Mor(m.tgt, m.src, std::move(inv));
}

Obj PresheafCat::initial() const {
  PresheafObj p;
  p.at.assign(index_->objects().size(), FinSet{});
  p.res.assign(index_->arrow_count(), FinMap{});
  return Obj(std::move(p));
}

Mor PresheafCat::from_initial(const Obj& x) const {
  PresheafNat n;
  n.comp.assign(x.presheaf().at.size(), FinMap{});
  return Mor(initial(), x, std::move(n));
}

Obj PresheafCat::terminal() const {
  PresheafObj p;
  p.at.assign(index_->objects().size(), FinSet({std::vector<std::string>{"*"}}));
  p.res.assign(index_->arrow_count(), FinMap::identity(1));
  return Obj(std::move(p));
}

Mor PresheafCat::to_terminal(const Obj& x) const {
  PresheafNat n;
  for (const FinSet& s : x.presheaf().at) n.comp.push_back(FinMap::constant(s.size(), 0));
  return Mor(x, terminal(), std::move(n));
}

Cospan PresheafCat::coproduct(const std::vector<Obj>& parts) const {
  std::size_t nobj = index_->objects().size();
  std::vector<Cospan> ptwise(nobj);
  PresheafObj sum;
  for (std::size_t j = 0; j < nobj; ++j) {
    std::vector<Obj> sets;
    for (const Obj& p : parts) sets.push_back(Obj(p.presheaf().at[j]));
    ptwise[j] = pointwise.coproduct(sets);
    sum.at.push_back(ptwise[j].apex.set());
  }
  for (std::size_t u = 0; u < index_->arrow_count(); ++u) {
    const auto& arr = index_->arrow_info(static_cast<int>(u));
    std::vector<Mor> comps;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const PresheafObj& p = parts[i].presheaf();
      comps.push_back(Mor(Obj(p.at[arr.tgt]), Obj(p.at[arr.src]), p.res[u]));
    }
    sum.res.push_back(pointwise.coproduct_map(ptwise[arr.tgt], ptwise[arr.src], comps).map());
  }
  Cospan out;
  out.apex = Obj(sum);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    PresheafNat in;
    for (std::size_t j = 0; j < nobj; ++j) in.comp.push_back(ptwise[j].in[i].map());
    out.in.push_back(Mor(parts[i], out.apex, std::move(in)));
  }
  return out;
}

Span PresheafCat::product(const std::vector<Obj>& parts) const {
  std::size_t nobj = index_->objects().size();
  std::vector<Span> ptwise(nobj);
  PresheafObj prod;
  for (std::size_t j = 0; j < nobj; ++j) {
    std::vector<Obj> sets;
    for (const Obj& p : parts) sets.push_back(Obj(p.presheaf().at[j]));
    ptwise[j] = pointwise.product(sets);
    prod.at.push_back(ptwise[j].apex.set());
  }
  for (std::size_t u = 0; u < index_->arrow_count(); ++u) {
    const auto& arr = index_->arrow_info(static_cast<int>(u));
    std::vector<Mor> comps;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const PresheafObj& p = parts[i].presheaf();
      comps.push_back(Mor(Obj(p.at[arr.tgt]), Obj(p.at[arr.src]), p.res[u]));
    }
    prod.res.push_back(pointwise.product_map(ptwise[arr.tgt], ptwise[arr.src], comps).map());
  }
  Span out;
  out.apex = Obj(prod);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    PresheafNat pr;
    for (std::size_t j = 0; j < nobj; ++j) pr.comp.push_back(ptwise[j].out[i].map());
    out.out.push_back(Mor(out.apex, parts[i], std::move(pr)));
  }
  return out;
}

std::vector<Mor> PresheafCat::hom(const Obj& x, const Obj& y, std::size_t budget) const {
  const PresheafObj& P = x.presheaf();
  const PresheafObj& Q = y.presheaf();
  std::size_t nobj = P.at.size();
  // All component combinations, filtered by naturality.
  std::vector<std::vector<FinMap>> per_obj;
  double total = 1;
  for (std::size_t j = 0; j < nobj; ++j) {
    per_obj.push_back(all_maps(P.at[j].size(), Q.at[j].size(), budget));
    total *= static_cast<double>(std::max<std::size_t>(per_obj.back().size(), 1));
    if (per_obj.back().empty() && P.at[j].size() > 0) return {};
    require(total <= static_cast<double>(budget), errc::budget_exceeded,
            "presheaf hom enumeration exceeds budget");
  }
  std::vector<Mor> out;
  std::vector<std::size_t> pick(nobj, 0);
  while (true) {
    PresheafNat n;
    for (std::size_t j = 0; j < nobj; ++j)
      n.comp.push_back(per_obj[j].empty() ? FinMap{} : per_obj[j][pick[j]]);
    Mor cand(x, y, std::move(n));
    if (mor_valid(cand)) out.push_back(cand);
    std::size_t j = 0;
    for (; j < nobj; ++j) {
      if (!per_obj[j].empty() && pick[j] + 1 < per_obj[j].size()) {
        ++pick[j];
        std::fill(pick.begin(), pick.begin() + static_cast<long>(j), 0);
        break;
      }
      pick[j] = 0;
    }
    if (j == nobj) break;
  }
  return out;
}

std::vector<std::string> PresheafCat::check_presheaf(const Obj& x) const {
  std::vector<std::string> errs;
  const PresheafObj& p = x.presheaf();
  for (std::size_t u = 0; u < index_->arrow_count(); ++u) {
    const auto& arr = index_->arrow_info(static_cast<int>(u));
    if (p.res[u].img.size() != p.at[arr.tgt].size() || !p.res[u].valid_into(p.at[arr.src].size()))
      errs.push_back("restriction along '" + arr.name + "' is ill-typed");
  }
  if (!errs.empty()) return errs;
  for (const Obj& j : index_->objects()) {
    int id = index_->identity_arrow(j.idx());
    if (!(p.res[id] == FinMap::identity(p.at[j.idx()].size())))
      errs.push_back("identity of '" + index_->object_name(j.idx()) + "' does not act trivially");
  }
  // Contravariance: res(g . f) = res(f) . res(g).
  for (std::size_t g = 0; g < index_->arrow_count(); ++g)
    for (std::size_t f = 0; f < index_->arrow_count(); ++f) {
      const auto& ga = index_->arrow_info(static_cast<int>(g));
      const auto& fa = index_->arrow_info(static_cast<int>(f));
      if (fa.tgt != ga.src) continue;
      int gf = index_->table(static_cast<int>(g), static_cast<int>(f));
      if (gf < 0) continue;
      if (!(p.res[gf] == FinMap::compose(p.res[f], p.res[g])))
        errs.push_back("restriction not functorial on '" + ga.name + "' after '" + fa.name + "'");
    }
  return errs;
}

Obj PresheafCat::representable(int index_obj) const {
  PresheafObj p;
  std::vector<std::vector<Mor>> homs;
  for (const Obj& j : index_->objects()) {
    std::vector<Mor> h = index_->hom(j, Obj(index_obj), 1000000);
    std::vector<std::string> names;
    for (const Mor& m : h) names.push_back(index_->arrow_info(m.arrow()).name);
    p.at.push_back(FinSet(names));
    homs.push_back(std::move(h));
  }
  for (std::size_t u = 0; u < index_->arrow_count(); ++u) {
    const auto& arr = index_->arrow_info(static_cast<int>(u));
    FinMap res;
    res.img.resize(p.at[arr.tgt].size());
    for (const Mor& m : homs[arr.tgt]) {
      Mor pre = index_->compose(m, Mor(Obj(arr.src), Obj(arr.tgt), static_cast<int>(u)));
      int from = p.at[arr.tgt].index_of(index_->arrow_info(m.arrow()).name);
      res.img[from] = p.at[arr.src].index_of(index_->arrow_info(pre.arrow()).name);
    }
    p.res.push_back(std::move(res));
  }
  return Obj(std::move(p));
}

}  // namespace fixcat::cat
