#include "fixcat/category.hpp"

#include <algorithm>
#include <map>

namespace fixcat::cat {

namespace {

std::string tag(std::size_t part, const std::string& name) {
  return std::to_string(part) + ":" + esc(name);
}

std::string tuple_name(const std::vector<std::string>& parts) {
  return "(" + join_map(parts.begin(), parts.end(), ",", [](const std::string& s) { return esc(s); }) +
         ")";
}

}  // namespace

bool Obj::operator==(const Obj& o) const {
  if (v.index() != o.v.index()) return false;
  if (std::holds_alternative<Boxed>(v)) return boxed() == o.boxed();
  if (std::holds_alternative<FinSet>(v)) return set() == o.set();
  if (std::holds_alternative<int>(v)) return idx() == o.idx();
  return presheaf() == o.presheaf();
}

bool Mor::operator==(const Mor& o) const {
  if (!(src == o.src) || !(tgt == o.tgt)) return false;
  if (data.index() != o.data.index()) return false;
  if (std::holds_alternative<std::shared_ptr<const Mor>>(data)) return leg() == o.leg();
  if (std::holds_alternative<FinMap>(data)) return map() == o.map();
  if (std::holds_alternative<int>(data)) return arrow() == o.arrow();
  if (std::holds_alternative<PresheafNat>(data)) return nat() == o.nat();
  return true;  // monostate
}

std::vector<FinMap> all_maps(std::size_t src_size, std::size_t tgt_size, std::size_t cap) {
  std::vector<FinMap> out;
  if (src_size == 0) {
    out.push_back(FinMap{});
    return out;
  }
  if (tgt_size == 0) return out;  // no total maps from nonempty to empty
  double count = 1;
  for (std::size_t i = 0; i < src_size; ++i) {
    count *= static_cast<double>(tgt_size);
    if (count > static_cast<double>(cap))
      fail(errc::budget_exceeded, "hom enumeration exceeds budget");
  }
  FinMap cur = FinMap::constant(src_size, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    for (; i < src_size; ++i) {
      if (cur.img[i] + 1 < static_cast<int>(tgt_size)) {
        ++cur.img[i];
        std::fill(cur.img.begin(), cur.img.begin() + static_cast<long>(i), 0);
        break;
      }
    }
    if (i == src_size) break;
  }
  return out;
}

// --- Category defaults --------------------------------------------------

std::string Category::iso_failure(const Mor&) const { return "morphism is not invertible"; }

std::vector<Obj> Category::objects() const {
  fail(errc::non_enumerable, kind() + " category has no finite object universe");
}

Obj Category::initial() const { no_capability("an initial object"); }
Mor Category::from_initial(const Obj&) const { no_capability("an initial object"); }
Obj Category::terminal() const { no_capability("a terminal object"); }
Mor Category::to_terminal(const Obj&) const { no_capability("a terminal object"); }
Cospan Category::coproduct(const std::vector<Obj>&) const { no_capability("coproducts"); }
Span Category::product(const std::vector<Obj>&) const { no_capability("products"); }
Mor Category::coproduct_map(const Cospan&, const Cospan&, const std::vector<Mor>&) const {
  no_capability("coproducts");
}
Mor Category::product_map(const Span&, const Span&, const std::vector<Mor>&) const {
  no_capability("products");
}
Cospan Category::pushout(const Mor&, const Mor&) const { no_capability("pushouts"); }
Span Category::pullback(const Mor&, const Mor&) const { no_capability("pullbacks"); }

std::optional<Mor> Category::pushout_mediate(const Cospan& po, const Mor& u, const Mor& v) const {
  // Generic fallback: search the hom set for the unique cocone factorization.
  for (const Mor& m : hom(po.apex, u.tgt, 1000000))
    if (compose(m, po.in[0]) == u && compose(m, po.in[1]) == v) return m;
  return std::nullopt;
}

std::vector<Mor> Category::hom(const Obj&, const Obj&, std::size_t) const {
  no_capability("hom enumeration");
}

std::optional<EndoQuotient> Category::endo_quotient(const Mor&) const { return std::nullopt; }
std::optional<EndoStablePart> Category::endo_stable_part(const Mor&) const { return std::nullopt; }

std::optional<Mor> Category::factor_through(const Mor& q, const Mor& f) const {
  for (const Mor& u : hom(q.tgt, f.tgt, 1000000))
    if (compose(u, q) == f) return u;
  return std::nullopt;
}

std::optional<Mor> Category::corestrict_through(const Mor& incl, const Mor& f) const {
  for (const Mor& u : hom(f.src, incl.src, 1000000))
    if (compose(incl, u) == f) return u;
  return std::nullopt;
}

// --- finite sets --------------------------------------------------------

Caps FinSetCat::caps() const {
  Caps c;
  c.has_initial = c.has_terminal = c.has_coproducts = c.has_products = true;
  c.has_pushouts = c.has_pullbacks = c.hom_enumerable = true;
  c.has_chain_colimits = c.has_chain_limits = true;
  return c;
}

bool FinSetCat::contains(const Obj& x) const { return std::holds_alternative<FinSet>(x.v); }

std::size_t FinSetCat::obj_size(const Obj& x) const { return x.set().size(); }

std::string FinSetCat::obj_label(const Obj& x) const {
  return "{" + join(x.set().elems, ",") + "}";
}

Mor FinSetCat::identity(const Obj& x) const {
  return Mor(x, x, FinMap::identity(x.set().size()));
}

Mor FinSetCat::compose(const Mor& g, const Mor& f) const {
  require(f.tgt == g.src, errc::ill_typed, "composition endpoints do not match");
  return Mor(f.src, g.tgt, FinMap::compose(g.map(), f.map()));
}

bool FinSetCat::mor_valid(const Mor& m) const {
  if (!contains(m.src) || !contains(m.tgt)) return false;
  if (!std::holds_alternative<FinMap>(m.data)) return false;
  return m.map().img.size() == m.src.set().size() && m.map().valid_into(m.tgt.set().size());
}

std::optional<Mor> FinSetCat::inverse(const Mor& m) const {
  auto inv = m.map().inverse(m.tgt.set().size());
  if (!inv) return std::nullopt;
  return Mor(m.tgt, m.src, *inv);
}

std::string FinSetCat::iso_failure(const Mor& m) const {
  return m.map().iso_failure(m.src.set(), m.tgt.set());
}

std::vector<Obj> FinSetCat::objects() const {
  if (!restrict_) fail(errc::non_enumerable, "unrestricted finset category");
  std::vector<Obj> out;
  for (std::size_t n = 0; n <= *restrict_; ++n) out.push_back(Obj(FinSet::canonical(n)));
  return out;
}

Obj FinSetCat::initial() const { return Obj(FinSet{}); }

Mor FinSetCat::from_initial(const Obj& x) const { return Mor(initial(), x, FinMap{}); }

Obj FinSetCat::terminal() const { return Obj(FinSet({std::vector<std::string>{"*"}})); }

Mor FinSetCat::to_terminal(const Obj& x) const {
  return Mor(x, terminal(), FinMap::constant(x.set().size(), 0));
}

Cospan FinSetCat::coproduct(const std::vector<Obj>& parts) const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const std::string& e : parts[i].set().elems) names.push_back(tag(i, e));
  Obj sum{FinSet(std::move(names))};
  Cospan out;
  out.apex = sum;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    FinMap in;
    for (const std::string& e : parts[i].set().elems)
      in.img.push_back(sum.set().index_of(tag(i, e)));
    out.in.push_back(Mor(parts[i], sum, std::move(in)));
  }
  return out;
}

Span FinSetCat::product(const std::vector<Obj>& parts) const {
  std::vector<std::vector<std::string>> tuples{{}};
  for (const Obj& p : parts) {
    std::vector<std::vector<std::string>> next;
    for (const auto& t : tuples)
      for (const std::string& e : p.set().elems) {
        auto u = t;
        u.push_back(e);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }
  std::vector<std::string> names;
  names.reserve(tuples.size());
  for (const auto& t : tuples) names.push_back(tuple_name(t));
  Obj prod{FinSet(names)};
  Span out;
  out.apex = prod;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    FinMap pr;
    pr.img.resize(prod.set().size());
    for (const auto& t : tuples)
      pr.img[prod.set().index_of(tuple_name(t))] = parts[i].set().index_of(t[i]);
    out.out.push_back(Mor(prod, parts[i], std::move(pr)));
  }
  return out;
}

Mor FinSetCat::coproduct_map(const Cospan& src, const Cospan& tgt, const std::vector<Mor>& fs) const {
  require(fs.size() == src.in.size() && fs.size() == tgt.in.size(), errc::ill_typed,
          "coproduct component count mismatch");
  FinMap out = FinMap::constant(src.apex.set().size(), 0);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const Mor through = Category::compose(tgt.in[i], fs[i]);
    const Mor& in = src.in[i];
    for (std::size_t e = 0; e < in.map().img.size(); ++e)
      out.img[in.map().img[e]] = through.map().img[e];
  }
  return Mor(src.apex, tgt.apex, std::move(out));
}

Mor FinSetCat::product_map(const Span& src, const Span& tgt, const std::vector<Mor>& fs) const {
  require(fs.size() == src.out.size() && fs.size() == tgt.out.size(), errc::ill_typed,
          "product component count mismatch");
  // Recover each tuple of the target from the component images.
  FinMap out;
  out.img.resize(src.apex.set().size());
  for (std::size_t p = 0; p < src.apex.set().size(); ++p) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      int xi = src.out[i].map().img[p];
      int yi = fs[i].map().img[xi];
      parts.push_back(fs[i].tgt.set().elems[yi]);
    }
    out.img[p] = tgt.apex.set().index_of(tuple_name(parts));
  }
  return Mor(src.apex, tgt.apex, std::move(out));
}

Cospan FinSetCat::pushout(const Mor& r, const Mor& a) const {
  require(r.src == a.src, errc::ill_typed, "pushout legs must share their source");
  const FinSet& E = r.src.set();
  const FinSet& X = r.tgt.set();
  const FinSet& Y = a.tgt.set();
  UnionFind uf(X.size() + Y.size());
  for (std::size_t e = 0; e < E.size(); ++e)
    uf.unite(r.map().img[e], static_cast<int>(X.size()) + a.map().img[e]);
  int count = 0;
  std::vector<int> cls = uf.classes(count);
  // Name each class by its least tagged member; injective across classes.
  std::vector<std::string> names(count);
  auto member_name = [&](std::size_t slot) {
    return slot < X.size() ? tag(0, X.elems[slot]) : tag(1, Y.elems[slot - X.size()]);
  };
  for (std::size_t s = 0; s < cls.size(); ++s) {
    const std::string n = member_name(s);
    if (names[cls[s]].empty() || n < names[cls[s]]) names[cls[s]] = n;
  }
  Obj apex{FinSet(names)};
  FinMap inl, inr;
  for (std::size_t x = 0; x < X.size(); ++x) inl.img.push_back(apex.set().index_of(names[cls[x]]));
  for (std::size_t y = 0; y < Y.size(); ++y)
    inr.img.push_back(apex.set().index_of(names[cls[X.size() + y]]));
  Cospan out;
  out.apex = apex;
  out.in.push_back(Mor(r.tgt, apex, std::move(inl)));
  out.in.push_back(Mor(a.tgt, apex, std::move(inr)));
  return out;
}

std::optional<Mor> FinSetCat::pushout_mediate(const Cospan& po, const Mor& u, const Mor& v) const {
  // The coprojections are jointly surjective, so the mediating map is read
  // off from any preimage; inconsistent preimages mean the cocone does not
  // commute with the identifications.
  FinMap m = FinMap::constant(po.apex.set().size(), -1);
  auto assign = [&](const Mor& in, const Mor& f) {
    for (std::size_t e = 0; e < in.map().img.size(); ++e) {
      int slot = in.map().img[e];
      if (m.img[slot] < 0)
        m.img[slot] = f.map().img[e];
      else if (m.img[slot] != f.map().img[e])
        return false;
    }
    return true;
  };
  if (!assign(po.in[0], u) || !assign(po.in[1], v)) return std::nullopt;
  for (int x : m.img)
    if (x < 0) return std::nullopt;
  return Mor(po.apex, u.tgt, std::move(m));
}

Span FinSetCat::pullback(const Mor& f, const Mor& g) const {
  require(f.tgt == g.tgt, errc::ill_typed, "pullback legs must share their target");
  const FinSet& X = f.src.set();
  const FinSet& Y = g.src.set();
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t x = 0; x < X.size(); ++x)
    for (std::size_t y = 0; y < Y.size(); ++y)
      if (f.map().img[x] == g.map().img[y]) {
        names.push_back(tuple_name({X.elems[x], Y.elems[y]}));
        pairs.emplace_back(static_cast<int>(x), static_cast<int>(y));
      }
  Obj apex{FinSet(names)};
  FinMap p0, p1;
  p0.img.resize(apex.set().size());
  p1.img.resize(apex.set().size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    int slot = apex.set().index_of(names[i]);
    p0.img[slot] = pairs[i].first;
    p1.img[slot] = pairs[i].second;
  }
  Span out;
  out.apex = apex;
  out.out.push_back(Mor(apex, f.src, std::move(p0)));
  out.out.push_back(Mor(apex, g.src, std::move(p1)));
  return out;
}

std::vector<Mor> FinSetCat::hom(const Obj& x, const Obj& y, std::size_t budget) const {
  std::vector<Mor> out;
  for (FinMap& m : all_maps(x.set().size(), y.set().size(), budget))
    out.push_back(Mor(x, y, std::move(m)));
  return out;
}

std::optional<EndoQuotient> FinSetCat::endo_quotient(const Mor& c) const {
  if (!(c.src == c.tgt)) return std::nullopt;
  const FinSet& X = c.src.set();
  UnionFind uf(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) uf.unite(static_cast<int>(i), c.map().img[i]);
  int count = 0;
  std::vector<int> cls = uf.classes(count);
  std::vector<std::string> names(count);
  for (std::size_t i = 0; i < X.size(); ++i)
    if (names[cls[i]].empty() || X.elems[i] < names[cls[i]]) names[cls[i]] = X.elems[i];
  Obj quot{FinSet(names)};
  FinMap q;
  for (std::size_t i = 0; i < X.size(); ++i) q.img.push_back(quot.set().index_of(names[cls[i]]));
  return EndoQuotient{quot, Mor(c.src, quot, std::move(q))};
}

std::optional<EndoStablePart> FinSetCat::endo_stable_part(const Mor& c) const {
  if (!(c.src == c.tgt)) return std::nullopt;
  const FinSet& X = c.src.set();
  // Intersect forward images until they stop shrinking.
  std::vector<char> inpart(X.size(), 1);
  while (true) {
    std::vector<char> next(X.size(), 0);
    for (std::size_t i = 0; i < X.size(); ++i)
      if (inpart[i]) next[c.map().img[i]] = 1;
    if (next == inpart) break;
    inpart = std::move(next);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < X.size(); ++i)
    if (inpart[i]) names.push_back(X.elems[i]);
  Obj part{FinSet(names)};
  FinMap incl, autom;
  for (const std::string& e : part.set().elems) incl.img.push_back(X.index_of(e));
  for (const std::string& e : part.set().elems) {
    int image = c.map().img[X.index_of(e)];
    autom.img.push_back(part.set().index_of(X.elems[image]));
  }
  return EndoStablePart{part, Mor(part, c.src, std::move(incl)), Mor(part, part, std::move(autom))};
}

std::optional<Mor> FinSetCat::factor_through(const Mor& q, const Mor& f) const {
  FinMap u = FinMap::constant(q.tgt.set().size(), -1);
  for (std::size_t i = 0; i < q.map().img.size(); ++i) {
    int slot = q.map().img[i];
    if (u.img[slot] < 0)
      u.img[slot] = f.map().img[i];
    else if (u.img[slot] != f.map().img[i])
      return std::nullopt;
  }
  for (int x : u.img)
    if (x < 0) return std::nullopt;
  return Mor(q.tgt, f.tgt, std::move(u));
}

std::optional<Mor> FinSetCat::corestrict_through(const Mor& incl, const Mor& f) const {
  // incl is injective; f corestricts iff its image lies inside the part.
  std::vector<int> back(incl.tgt.set().size(), -1);
  for (std::size_t i = 0; i < incl.map().img.size(); ++i) back[incl.map().img[i]] = static_cast<int>(i);
  FinMap u;
  for (int y : f.map().img) {
    if (back[y] < 0) return std::nullopt;
    u.img.push_back(back[y]);
  }
  return Mor(f.src, incl.src, std::move(u));
}

Mor FinSetCat::fn(const Obj& src, const Obj& tgt,
                  const std::vector<std::pair<std::string, std::string>>& table) {
  FinMap m = FinMap::constant(src.set().size(), -1);
  for (const auto& [from, to] : table) {
    int i = src.set().index_of(from);
    int j = tgt.set().index_of(to);
    require(i >= 0 && j >= 0, errc::bad_input, "unknown element in function table");
    m.img[i] = j;
  }
  for (int v : m.img)
    require(v >= 0, errc::bad_input, "function table is not total");
  return Mor(src, tgt, std::move(m));
}

// --- finitely presented -------------------------------------------------

PresentedCat::PresentedCat(std::vector<std::string> objects, std::vector<Arrow> arrows,
                           std::vector<int> identity_of, std::vector<std::vector<int>> compose_table)
    : object_names_(std::move(objects)),
      arrows_(std::move(arrows)),
      identity_of_(std::move(identity_of)),
      compose_table_(std::move(compose_table)) {
  require(identity_of_.size() == object_names_.size(), errc::bad_input,
          "identity assignment must cover every object");
  require(compose_table_.size() == arrows_.size(), errc::bad_input,
          "composition table must cover every arrow");
}

Caps PresentedCat::caps() const {
  Caps c;
  c.hom_enumerable = true;
  return c;
}

bool PresentedCat::contains(const Obj& x) const {
  return std::holds_alternative<int>(x.v) && x.idx() >= 0 &&
         static_cast<std::size_t>(x.idx()) < object_names_.size();
}

std::size_t PresentedCat::obj_size(const Obj&) const { return 1; }

std::string PresentedCat::obj_label(const Obj& x) const { return object_names_[x.idx()]; }

Mor PresentedCat::identity(const Obj& x) const { return Mor(x, x, identity_of_[x.idx()]); }

Mor PresentedCat::compose(const Mor& g, const Mor& f) const {
  require(f.tgt == g.src, errc::ill_typed, "composition endpoints do not match");
  int id = compose_table_[g.arrow()][f.arrow()];
  require(id >= 0 && static_cast<std::size_t>(id) < arrows_.size(), errc::ill_typed,
          "composition table has no entry for '" + arrows_[g.arrow()].name + "' after '" +
              arrows_[f.arrow()].name + "'");
  return Mor(f.src, g.tgt, id);
}

bool PresentedCat::mor_valid(const Mor& m) const {
  if (!contains(m.src) || !contains(m.tgt) || !std::holds_alternative<int>(m.data)) return false;
  int id = m.arrow();
  if (id < 0 || static_cast<std::size_t>(id) >= arrows_.size()) return false;
  return arrows_[id].src == m.src.idx() && arrows_[id].tgt == m.tgt.idx();
}

std::optional<Mor> PresentedCat::inverse(const Mor& m) const {
  for (std::size_t g = 0; g < arrows_.size(); ++g) {
    if (arrows_[g].src != m.tgt.idx() || arrows_[g].tgt != m.src.idx()) continue;
    if (compose_table_[g][m.arrow()] == identity_of_[m.src.idx()] &&
        compose_table_[m.arrow()][static_cast<int>(g)] == identity_of_[m.tgt.idx()])
      return Mor(m.tgt, m.src, static_cast<int>(g));
  }
  return std::nullopt;
}

std::vector<Obj> PresentedCat::objects() const {
  std::vector<Obj> out;
  for (std::size_t i = 0; i < object_names_.size(); ++i) out.push_back(Obj(static_cast<int>(i)));
  return out;
}

std::vector<Mor> PresentedCat::hom(const Obj& x, const Obj& y, std::size_t) const {
  std::vector<Mor> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].src == x.idx() && arrows_[a].tgt == y.idx())
      out.push_back(Mor(x, y, static_cast<int>(a)));
  return out;
}

// --- axiom checking -----------------------------------------------------

AxiomReport check_category_axioms(const Category& K, std::size_t hom_budget) {
  AxiomReport report;
  std::vector<Obj> objs = K.objects();
  auto label = [&](const Mor& m) {
    return K.obj_label(m.src) + "->" + K.obj_label(m.tgt);
  };

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Mor>> homs;
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j) homs[{i, j}] = K.hom(objs[i], objs[j], hom_budget);

  for (std::size_t i = 0; i < objs.size(); ++i) {
    Mor id = K.identity(objs[i]);
    if (!K.mor_valid(id))
      report.violations.push_back("identity of " + K.obj_label(objs[i]) + " is not a valid morphism");
  }

  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j)
      for (const Mor& f : homs[{i, j}]) {
        try {
          if (!(K.compose(f, K.identity(objs[i])) == f))
            report.violations.push_back("right unit law fails on " + label(f));
          if (!(K.compose(K.identity(objs[j]), f) == f))
            report.violations.push_back("left unit law fails on " + label(f));
        } catch (const failure& e) {
          report.violations.push_back("unit composition fails on " + label(f) + ": " + e.what());
        }
      }

  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j)
      for (std::size_t k = 0; k < objs.size(); ++k)
        for (std::size_t l = 0; l < objs.size(); ++l)
          for (const Mor& f : homs[{i, j}])
            for (const Mor& g : homs[{j, k}])
              for (const Mor& h : homs[{k, l}]) {
                try {
                  if (!(K.compose(K.compose(h, g), f) == K.compose(h, K.compose(g, f))))
                    report.violations.push_back("associativity fails on triple " + label(f) + ", " +
                                                label(g) + ", " + label(h));
                } catch (const failure& e) {
                  report.violations.push_back("composition fails on triple " + label(f) + ", " +
                                              label(g) + ", " + label(h) + ": " + e.what());
                }
              }
  return report;
}

}  // namespace fixcat::cat
