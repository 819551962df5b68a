#include "fixcat/functor.hpp"

#include "fixcat/lattice_cat.hpp"

namespace fixcat::cat {

namespace {

std::string poly_elem(std::size_t term, const std::string& coeff_elem,
                      const std::vector<std::string>& tuple) {
  return std::to_string(term) + ":" + esc(coeff_elem) + ":(" +
         join_map(tuple.begin(), tuple.end(), ",",
                  [](const std::string& s) { return esc(s); }) +
         ")";
}

Obj poly_obj(const Endo::Poly& p, const Obj& x) {
  const FinSet& X = x.set();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    const FinSet& A = p.terms[i].coeff.set();
    const FinSet& B = p.terms[i].exp.set();
    std::vector<FinMap> tuples = all_maps(B.size(), X.size(), 1000000);
    for (const std::string& a : A.elems)
      for (const FinMap& t : tuples) {
        std::vector<std::string> parts;
        for (int v : t.img) parts.push_back(X.elems[v]);
        names.push_back(poly_elem(i, a, parts));
      }
  }
  return Obj(FinSet(std::move(names)));
}

Mor poly_mor(const Endo::Poly& p, const Mor& m) {
  Obj fx = poly_obj(p, m.src);
  Obj fy = poly_obj(p, m.tgt);
  const FinSet& X = m.src.set();
  const FinSet& Y = m.tgt.set();
  FinMap out = FinMap::constant(fx.set().size(), -1);
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    const FinSet& A = p.terms[i].coeff.set();
    const FinSet& B = p.terms[i].exp.set();
    std::vector<FinMap> tuples = all_maps(B.size(), X.size(), 1000000);
    for (const std::string& a : A.elems)
      for (const FinMap& t : tuples) {
        std::vector<std::string> src_parts, tgt_parts;
        for (int v : t.img) {
          src_parts.push_back(X.elems[v]);
          tgt_parts.push_back(Y.elems[m.map().img[v]]);
        }
        int from = fx.set().index_of(poly_elem(i, a, src_parts));
        int to = fy.set().index_of(poly_elem(i, a, tgt_parts));
        out.img[from] = to;
      }
  }
  return Mor(fx, fy, std::move(out));
}

}  // namespace

Obj Endo::on_obj(const Obj& x) const {
  require(base->contains(x), errc::ill_typed, "object does not live in the functor's base category");
  if (const auto* c = std::get_if<Constant>(&desc)) return c->value;
  if (std::get_if<Identity>(&desc)) return x;
  if (const auto* p = std::get_if<Poly>(&desc)) return poly_obj(*p, x);
  if (const auto* s = std::get_if<Sum>(&desc)) {
    std::vector<Obj> parts;
    for (const EndoPtr& f : s->parts) parts.push_back(f->on_obj(x));
    return base->coproduct(parts).apex;
  }
  if (const auto* s = std::get_if<Prod>(&desc)) {
    std::vector<Obj> parts;
    for (const EndoPtr& f : s->parts) parts.push_back(f->on_obj(x));
    return base->product(parts).apex;
  }
  if (const auto* c = std::get_if<Comp>(&desc)) {
    Obj acc = x;
    for (auto it = c->parts.rbegin(); it != c->parts.rend(); ++it) acc = (*it)->on_obj(acc);
    return acc;
  }
  if (const auto* t = std::get_if<MonoTable>(&desc)) return Obj(t->table[x.idx()]);
  return std::get<Custom>(desc).on_obj(x);
}

Mor Endo::on_mor(const Mor& m) const {
  if (const auto* c = std::get_if<Constant>(&desc)) return base->identity(c->value);
  if (std::get_if<Identity>(&desc)) return m;
  if (const auto* p = std::get_if<Poly>(&desc)) return poly_mor(*p, m);
  if (const auto* s = std::get_if<Sum>(&desc)) {
    std::vector<Obj> src_parts, tgt_parts;
    std::vector<Mor> comps;
    for (const EndoPtr& f : s->parts) {
      src_parts.push_back(f->on_obj(m.src));
      tgt_parts.push_back(f->on_obj(m.tgt));
      comps.push_back(f->on_mor(m));
    }
    return base->coproduct_map(base->coproduct(src_parts), base->coproduct(tgt_parts), comps);
  }
  if (const auto* s = std::get_if<Prod>(&desc)) {
    std::vector<Obj> src_parts, tgt_parts;
    std::vector<Mor> comps;
    for (const EndoPtr& f : s->parts) {
      src_parts.push_back(f->on_obj(m.src));
      tgt_parts.push_back(f->on_obj(m.tgt));
      comps.push_back(f->on_mor(m));
    }
    return base->product_map(base->product(src_parts), base->product(tgt_parts), comps);
  }
  if (const auto* c = std::get_if<Comp>(&desc)) {
    Mor acc = m;
    for (auto it = c->parts.rbegin(); it != c->parts.rend(); ++it) acc = (*it)->on_mor(acc);
    return acc;
  }
  if (const auto* t = std::get_if<MonoTable>(&desc)) {
    const auto& L = dynamic_cast<const LatticeCat&>(*base);
    return L.arrow(t->table[m.src.idx()], t->table[m.tgt.idx()]);
  }
  return std::get<Custom>(desc).on_mor(m);
}

EndoPtr Endo::constant(CategoryPtr base, Obj value, std::string name) {
  auto f = std::make_shared<Endo>();
  f->base = std::move(base);
  f->name = std::move(name);
  f->desc = Constant{std::move(value)};
  f->preserves_chain_colimits = f->preserves_chain_limits = true;
  return f;
}

EndoPtr Endo::identity(CategoryPtr base) {
  auto f = std::make_shared<Endo>();
  f->base = std::move(base);
  f->name = "identity";
  f->desc = Identity{};
  f->preserves_chain_colimits = f->preserves_chain_limits = true;
  return f;
}

EndoPtr Endo::poly(CategoryPtr base, std::vector<PolyTerm> terms, std::string name) {
  auto f = std::make_shared<Endo>();
  f->base = std::move(base);
  f->name = std::move(name);
  f->desc = Poly{std::move(terms)};
  // Polynomial actions commute with the sequential (co)limits built here:
  // chains generated by functor application keep coproduct tags fixed.
  f->preserves_chain_colimits = f->preserves_chain_limits = true;
  return f;
}

EndoPtr Endo::poly_sizes(CategoryPtr base, const std::vector<std::pair<int, int>>& sizes,
                         std::string name) {
  std::vector<PolyTerm> terms;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    terms.push_back(PolyTerm{Obj(FinSet::canonical(sizes[i].first, "a" + std::to_string(i) + "_")),
                             Obj(FinSet::canonical(sizes[i].second, "b" + std::to_string(i) + "_"))});
  return poly(std::move(base), std::move(terms), std::move(name));
}

EndoPtr Endo::sum(std::vector<EndoPtr> parts, std::string name) {
  require(!parts.empty(), errc::bad_input, "sum of no functors");
  auto f = std::make_shared<Endo>();
  f->base = parts.front()->base;
  f->name = std::move(name);
  f->preserves_chain_colimits = f->preserves_chain_limits = true;
  for (const EndoPtr& p : parts) {
    f->preserves_chain_colimits &= p->preserves_chain_colimits;
    f->preserves_chain_limits &= p->preserves_chain_limits;
  }
  f->desc = Sum{std::move(parts)};
  return f;
}

EndoPtr Endo::prod(std::vector<EndoPtr> parts, std::string name) {
  require(!parts.empty(), errc::bad_input, "product of no functors");
  auto f = std::make_shared<Endo>();
  f->base = parts.front()->base;
  f->name = std::move(name);
  f->preserves_chain_colimits = f->preserves_chain_limits = true;
  for (const EndoPtr& p : parts) {
    f->preserves_chain_colimits &= p->preserves_chain_colimits;
    f->preserves_chain_limits &= p->preserves_chain_limits;
  }
  f->desc = Prod{std::move(parts)};
  return f;
}

EndoPtr Endo::comp(std::vector<EndoPtr> parts, std::string name) {
  require(!parts.empty(), errc::bad_input, "composite of no functors");
  auto f = std::make_shared<Endo>();
  f->base = parts.front()->base;
  f->name = std::move(name);
  f->preserves_chain_colimits = f->preserves_chain_limits = true;
  for (const EndoPtr& p : parts) {
    f->preserves_chain_colimits &= p->preserves_chain_colimits;
    f->preserves_chain_limits &= p->preserves_chain_limits;
  }
  f->desc = Comp{std::move(parts)};
  return f;
}

EndoPtr Endo::monotone(CategoryPtr lattice_base, std::vector<int> table, std::string name) {
  const auto& L = dynamic_cast<const LatticeCat&>(*lattice_base);
  const lat::FiniteLattice& l = L.lattice();
  require(table.size() == l.size(), errc::bad_input, "monotone table size mismatch");
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (l.leq(static_cast<int>(a), static_cast<int>(b)) && !l.leq(table[a], table[b]))
        fail(errc::non_monotone,
             "table is not order-preserving on " + l.name(static_cast<int>(a)) + " <= " +
                 l.name(static_cast<int>(b)));
  auto f = std::make_shared<Endo>();
  f->base = std::move(lattice_base);
  f->name = std::move(name);
  f->desc = MonoTable{std::move(table)};
  f->preserves_chain_colimits = f->preserves_chain_limits = true;
  return f;
}

EndoPtr Endo::custom(CategoryPtr base, std::function<Obj(const Obj&)> on_obj,
                     std::function<Mor(const Mor&)> on_mor, bool pres_colim, bool pres_lim,
                     std::string name) {
  auto f = std::make_shared<Endo>();
  f->base = std::move(base);
  f->name = std::move(name);
  f->desc = Custom{std::move(on_obj), std::move(on_mor)};
  f->preserves_chain_colimits = pres_colim;
  f->preserves_chain_limits = pres_lim;
  return f;
}

std::vector<std::string> check_functoriality(const Endo& F, const std::vector<Obj>& sample,
                                             std::size_t hom_budget) {
  std::vector<std::string> errs;
  const Category& K = *F.base;
  for (const Obj& x : sample) {
    Mor fid = F.on_mor(K.identity(x));
    if (!(fid == K.identity(F.on_obj(x))))
      errs.push_back("identity of " + K.obj_label(x) + " is not preserved");
  }
  for (const Obj& x : sample)
    for (const Obj& y : sample)
      for (const Obj& z : sample)
        for (const Mor& f : K.hom(x, y, hom_budget))
          for (const Mor& g : K.hom(y, z, hom_budget)) {
            if (!(F.on_mor(K.compose(g, f)) == K.compose(F.on_mor(g), F.on_mor(f)))) {
              errs.push_back("composition not preserved on a pair " + K.obj_label(x) + "->" +
                             K.obj_label(y) + "->" + K.obj_label(z));
              if (errs.size() > 5) return errs;
            }
          }
  return errs;
}

}  // namespace fixcat::cat
