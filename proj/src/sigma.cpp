#include "fixcat/sigma.hpp"

#include "fixcat/finset.hpp"

#include <algorithm>
#include <sstream>

namespace fixcat::sigma {

bool DeltaMap::well_typed() const {
  if (static_cast<int>(values.size()) != m + 1) return false;
  int prev = 0;
  for (int v : values) {
    if (v < prev || v < 0 || v > n) return false;
    prev = v;
  }
  return true;
}

bool DeltaMap::constant_zero() const {
  for (int v : values)
    if (v != 0) return false;
  return true;
}

bool DeltaMap::is_identity() const {
  if (m != n) return false;
  for (int i = 0; i <= m; ++i)
    if (values[i] != i) return false;
  return true;
}

bool DeltaMap::is_inert() const {
  for (int i = 0; i <= m; ++i)
    if (values[i] != values[0] + i) return false;
  return true;
}

DeltaMap DeltaMap::identity(int m) {
  DeltaMap d;
  d.m = d.n = m;
  for (int i = 0; i <= m; ++i) d.values.push_back(i);
  return d;
}

DeltaMap DeltaMap::constant(int m, int n, int value) {
  DeltaMap d;
  d.m = m;
  d.n = n;
  d.values.assign(m + 1, value);
  return d;
}

DeltaMap DeltaMap::of(int m, int n, std::vector<int> values) {
  DeltaMap d;
  d.m = m;
  d.n = n;
  d.values = std::move(values);
  require(d.well_typed(), errc::ill_typed, "not a weakly increasing map " + d.label());
  return d;
}

DeltaMap DeltaMap::compose(const DeltaMap& g, const DeltaMap& f) {
  require(f.n == g.m, errc::ill_typed, "simplex maps not composable");
  DeltaMap d;
  d.m = f.m;
  d.n = g.n;
  for (int v : f.values) d.values.push_back(g.values[v]);
  return d;
}

std::string DeltaMap::label() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << " ";
    os << values[i];
  }
  os << "]";
  return os.str();
}

std::vector<DeltaMap> delta_homs(int m, int n, std::size_t cap) {
  require(m >= 0 && n >= 0, errc::bad_input, "negative simplex level");
  std::vector<DeltaMap> out;
  DeltaMap cur = DeltaMap::constant(m, n, 0);
  while (true) {
    out.push_back(cur);
    require(out.size() <= cap, errc::budget_exceeded, "simplex hom enumeration exceeds budget");
    // Next weakly increasing tuple.
    int i = m;
    while (i >= 0 && cur.values[i] == n) --i;
    if (i < 0) break;
    int v = cur.values[i] + 1;
    for (int j = i; j <= m; ++j) cur.values[j] = v;
  }
  return out;
}

SigmaObject::SigmaObject(std::vector<int> e) : entries(std::move(e)) {
  for (int k : entries)
    require(k > 0, errc::bad_input, "object entries must be positive");
}

SigmaObject SigmaObject::extended(int l) const {
  require(l >= 0, errc::bad_input, "negative extension");
  if (l == 0) return *this;
  SigmaObject out = *this;
  out.entries.push_back(l);
  return out;
}

std::string SigmaObject::label() const {
  if (entries.empty()) return "()";
  return "(" + join_map(entries.begin(), entries.end(), ",",
                        [](int k) { return std::to_string(k); }) +
         ")";
}

SigmaObject SigmaObject::parse(const std::string& csv) {
  std::vector<int> entries;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) {
      entries.push_back(std::stoi(cur));
      cur.clear();
    }
  };
  for (char c : csv) {
    if (c == ',' || c == ' ' || c == '(' || c == ')') {
      flush();
    } else {
      require(c >= '0' && c <= '9', errc::bad_input, "bad object syntax: " + csv);
      cur.push_back(c);
    }
  }
  flush();
  return SigmaObject(std::move(entries));
}

DeltaMap SigmaMorphism::at_level(int i) const {
  if (i < static_cast<int>(components.size())) return components[i];
  return DeltaMap::constant(src.entry(i), tgt.entry(i), 0);
}

std::string SigmaMorphism::label() const {
  std::ostringstream os;
  os << src.label() << "->" << tgt.label() << ":";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) os << "|";
    os << components[i].label();
  }
  return os.str();
}

SigmaMorphism sigma_normalize(const SigmaObject& src, const SigmaObject& tgt,
                              const std::vector<DeltaMap>& raw) {
  SigmaMorphism out;
  out.src = src;
  out.tgt = tgt;
  int horizon = std::max(src.dim(), tgt.dim()) + 1;
  for (int level = 0; level < horizon + static_cast<int>(raw.size()); ++level) {
    DeltaMap comp = level < static_cast<int>(raw.size())
                        ? raw[level]
                        : DeltaMap::constant(src.entry(level), tgt.entry(level), 0);
    require(comp.m == src.entry(level) && comp.n == tgt.entry(level) && comp.well_typed(),
            errc::ill_typed, "component at level " + std::to_string(level) + " is ill-typed");
    out.components.push_back(comp);
    if (comp.constant_zero()) return out;
  }
  fail(errc::ill_typed, "component list does not reach a constant-zero level");
}

SigmaMorphism sigma_identity(const SigmaObject& k) {
  std::vector<DeltaMap> raw;
  for (int i = 0; i < k.dim(); ++i) raw.push_back(DeltaMap::identity(k.entries[i]));
  return sigma_normalize(k, k, raw);
}

SigmaMorphism sigma_compose(const SigmaMorphism& g, const SigmaMorphism& f) {
  require(f.tgt == g.src, errc::ill_typed, "levelwise maps not composable");
  std::vector<DeltaMap> raw;
  int horizon = static_cast<int>(std::max(f.components.size(), g.components.size()));
  for (int i = 0; i < horizon; ++i) raw.push_back(DeltaMap::compose(g.at_level(i), f.at_level(i)));
  return sigma_normalize(f.src, g.tgt, raw);
}

std::vector<SigmaMorphism> sigma_homs(const SigmaObject& src, const SigmaObject& tgt,
                                      std::size_t cap) {
  std::vector<SigmaMorphism> out;
  std::vector<DeltaMap> prefix;
  int horizon = std::max(src.dim(), tgt.dim()) + 1;
  auto rec = [&](auto&& self, int level) -> void {
    require(level <= horizon, errc::budget_exceeded, "levelwise enumeration ran away");
    for (const DeltaMap& d : delta_homs(src.entry(level), tgt.entry(level), cap)) {
      prefix.push_back(d);
      if (d.constant_zero()) {
        SigmaMorphism m;
        m.src = src;
        m.tgt = tgt;
        m.components = prefix;
        out.push_back(std::move(m));
        require(out.size() <= cap, errc::budget_exceeded, "hom enumeration exceeds budget");
      } else {
        self(self, level + 1);
      }
      prefix.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

SigmaMorphism edge_map(const SigmaObject& k, int l, int j) {
  require(l >= 1 && j >= 0 && j + 1 <= l, errc::bad_input, "edge out of range");
  std::vector<DeltaMap> raw;
  for (int i = 0; i < k.dim(); ++i) raw.push_back(DeltaMap::identity(k.entries[i]));
  raw.push_back(DeltaMap::of(1, l, {j, j + 1}));
  return sigma_normalize(k.extended(1), k.extended(l), raw);
}

SigmaMorphism vertex_map(const SigmaObject& k, int l, int j) {
  require(l >= 1 && j >= 0 && j <= l, errc::bad_input, "vertex out of range");
  std::vector<DeltaMap> raw;
  for (int i = 0; i < k.dim(); ++i) raw.push_back(DeltaMap::identity(k.entries[i]));
  raw.push_back(DeltaMap::of(0, l, {j}));
  return sigma_normalize(k, k.extended(l), raw);
}

SigmaMorphism extend_map(const SigmaObject& k, const DeltaMap& d) {
  std::vector<DeltaMap> raw;
  for (int i = 0; i < k.dim(); ++i) raw.push_back(DeltaMap::identity(k.entries[i]));
  raw.push_back(d);
  return sigma_normalize(k.extended(d.m), k.extended(d.n), raw);
}

std::vector<SigmaObject> objects_within(const Bound& b) {
  std::vector<SigmaObject> out;
  out.push_back(SigmaObject{});
  std::size_t level_start = 0;
  for (int d = 1; d <= b.max_dim; ++d) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i)
      for (int e = 1; e <= b.max_entry; ++e) out.push_back(out[i].extended(e));
    level_start = level_end;
  }
  return out;
}

int SigmaPresheaf::obj_index(const SigmaObject& k) const {
  for (std::size_t i = 0; i < objs.size(); ++i)
    if (objs[i] == k) return static_cast<int>(i);
  return -1;
}

const std::vector<std::string>& SigmaPresheaf::cells_at(const SigmaObject& k) const {
  int i = obj_index(k);
  require(i >= 0, errc::bad_input, "object " + k.label() + " is out of bound");
  return cells[i];
}

int SigmaPresheaf::restrict_cell(const SigmaMorphism& f, int cell) const {
  auto it = res.find(f.label());
  require(it != res.end(), errc::bad_input, "restriction along " + f.label() + " is out of bound");
  return it->second[cell];
}

std::vector<std::string> SigmaPresheaf::check_functorial() const {
  std::vector<std::string> errs;
  for (std::size_t a = 0; a < objs.size(); ++a) {
    SigmaMorphism id = sigma_identity(objs[a]);
    auto it = res.find(id.label());
    if (it == res.end()) {
      errs.push_back("missing identity restriction at " + objs[a].label());
      continue;
    }
    for (std::size_t c = 0; c < it->second.size(); ++c)
      if (it->second[c] != static_cast<int>(c))
        errs.push_back("identity does not act trivially at " + objs[a].label());
  }
  for (const SigmaObject& a : objs)
    for (const SigmaObject& b : objs)
      for (const SigmaObject& c : objs) {
        for (const SigmaMorphism& f : sigma_homs(a, b))
          for (const SigmaMorphism& g : sigma_homs(b, c)) {
            SigmaMorphism gf = sigma_compose(g, f);
            for (std::size_t cell = 0; cell < cells_at(c).size(); ++cell) {
              int direct = restrict_cell(gf, static_cast<int>(cell));
              int stepped = restrict_cell(f, restrict_cell(g, static_cast<int>(cell)));
              if (direct != stepped) {
                errs.push_back("restriction not functorial along " + gf.label());
                break;
              }
            }
          }
      }
  return errs;
}

SigmaPresheaf representable(const SigmaObject& n, const Bound& b) {
  SigmaPresheaf p;
  p.bound = b;
  p.objs = objects_within(b);
  std::vector<std::vector<SigmaMorphism>> homs;
  for (const SigmaObject& a : p.objs) {
    std::vector<SigmaMorphism> h = sigma_homs(a, n);
    std::vector<std::string> names;
    for (const SigmaMorphism& m : h) names.push_back(m.label());
    p.cells.push_back(std::move(names));
    homs.push_back(std::move(h));
  }
  for (std::size_t ai = 0; ai < p.objs.size(); ++ai)
    for (std::size_t bi = 0; bi < p.objs.size(); ++bi)
      for (const SigmaMorphism& f : sigma_homs(p.objs[ai], p.objs[bi])) {
        std::vector<int> table(homs[bi].size());
        for (std::size_t c = 0; c < homs[bi].size(); ++c) {
          SigmaMorphism pre = sigma_compose(homs[bi][c], f);
          auto pos = std::find(p.cells[ai].begin(), p.cells[ai].end(), pre.label());
          require(pos != p.cells[ai].end(), errc::bad_input, "precomposition left the hom set");
          table[c] = static_cast<int>(pos - p.cells[ai].begin());
        }
        p.res[f.label()] = std::move(table);
      }
  return p;
}

CheckReport segal_check(const SigmaPresheaf& p) {
  CheckReport rep;
  int lmax = std::min(p.bound.max_entry, p.bound.max_level);
  for (const SigmaObject& k : p.objs) {
    if (k.dim() + 1 > p.bound.max_dim) continue;
    for (int l = 2; l <= lmax; ++l) {
      const auto& top = p.cells_at(k.extended(l));
      const auto& edges = p.cells_at(k.extended(1));
      ++rep.checked;
      // Endpoint maps of a 1-cell.
      SigmaMorphism v0 = vertex_map(k, 1, 0), v1 = vertex_map(k, 1, 1);
      auto start = [&](int c) { return p.restrict_cell(v0, c); };
      auto end = [&](int c) { return p.restrict_cell(v1, c); };
      // All fiber-product tuples.
      std::vector<std::vector<int>> tuples;
      std::vector<int> cur;
      auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == l) {
          tuples.push_back(cur);
          return;
        }
        for (std::size_t c = 0; c < edges.size(); ++c) {
          if (!cur.empty() && end(cur.back()) != start(static_cast<int>(c))) continue;
          cur.push_back(static_cast<int>(c));
          self(self);
          cur.pop_back();
        }
      };
      rec(rec);
      // Images of the comparison map.
      std::vector<std::vector<int>> images;
      for (std::size_t x = 0; x < top.size(); ++x) {
        std::vector<int> img;
        for (int j = 0; j < l; ++j) img.push_back(p.restrict_cell(edge_map(k, l, j), static_cast<int>(x)));
        images.push_back(std::move(img));
      }
      std::vector<std::vector<int>> sorted_images = images;
      std::sort(sorted_images.begin(), sorted_images.end());
      if (std::adjacent_find(sorted_images.begin(), sorted_images.end()) != sorted_images.end()) {
        rep.failures.push_back("comparison not injective at (" + k.label() + ", " +
                               std::to_string(l) + ")");
        continue;
      }
      std::sort(tuples.begin(), tuples.end());
      if (sorted_images != tuples)
        rep.failures.push_back("cells at (" + k.label() + ", " + std::to_string(l) + "): " +
                               std::to_string(top.size()) + " do not match the fiber product of size " +
                               std::to_string(tuples.size()));
    }
  }
  return rep;
}

CheckReport completeness_check(const SigmaPresheaf& p) {
  CheckReport rep;
  for (const SigmaObject& k : p.objs) {
    if (k.dim() + 1 > p.bound.max_dim || p.bound.max_entry < 1) continue;
    ++rep.checked;
    const auto& pts = p.cells_at(k);
    const auto& arrows = p.cells_at(k.extended(1));
    SigmaMorphism v0 = vertex_map(k, 1, 0), v1 = vertex_map(k, 1, 1);
    std::vector<std::vector<char>> connected(pts.size(), std::vector<char>(pts.size(), 0));
    for (std::size_t h = 0; h < arrows.size(); ++h)
      connected[p.restrict_cell(v0, static_cast<int>(h))]
               [p.restrict_cell(v1, static_cast<int>(h))] = 1;
    for (std::size_t f = 0; f < pts.size(); ++f)
      for (std::size_t g = f + 1; g < pts.size(); ++g)
        if (connected[f][g] && connected[g][f])
          rep.failures.push_back("antisymmetry fails at " + k.label() + " between '" + pts[f] +
                                 "' and '" + pts[g] + "'");
  }
  return rep;
}

CheckReport completeness_check_representable(const SigmaObject& n, const Bound& b) {
  return completeness_check(representable(n, b));
}

TruncSimpSet codiscrete(int m, int max_level) {
  TruncSimpSet x;
  x.max_level = max_level;
  int base = m + 1;
  for (int level = 0; level <= max_level; ++level) {
    std::size_t count = 1;
    for (int i = 0; i <= level; ++i) count *= static_cast<std::size_t>(base);
    std::vector<std::string> names;
    for (std::size_t c = 0; c < count; ++c) {
      std::vector<std::string> digits;
      std::size_t v = c;
      for (int i = 0; i <= level; ++i) {
        digits.push_back(std::to_string(v % base));
        v /= base;
      }
      names.push_back(join(digits, ","));
    }
    x.cells.push_back(std::move(names));
  }
  x.res = [base](const DeltaMap& d, int cell) -> int {
    // Decode in base m+1, reindex through the map, encode.
    std::vector<int> digits(d.n + 1);
    std::size_t v = static_cast<std::size_t>(cell);
    for (int i = 0; i <= d.n; ++i) {
      digits[i] = static_cast<int>(v % base);
      v /= base;
    }
    std::size_t out = 0, pow = 1;
    for (int i = 0; i <= d.m; ++i) {
      out += static_cast<std::size_t>(digits[d.values[i]]) * pow;
      pow *= static_cast<std::size_t>(base);
    }
    return static_cast<int>(out);
  };
  return x;
}

std::vector<std::string> kan_extension_cell(const TruncSimpSet& x, const SigmaObject& k,
                                            const SigmaObject& at, std::size_t budget) {
  // Nodes: (level l, map at -> extend(k,l), level-l cell).  The relation
  // identifies (e(d) . psi, c') with (psi, X(d)(c')) for d: [l] -> [l'].
  struct Node {
    int level;
    std::size_t map_idx;
    int cell;
  };
  std::vector<std::vector<SigmaMorphism>> maps(x.max_level + 1);
  std::vector<Node> nodes;
  std::vector<std::size_t> first(x.max_level + 2, 0);
  for (int l = 0; l <= x.max_level; ++l) {
    maps[l] = sigma_homs(at, k.extended(l));
    first[l] = nodes.size();
    for (std::size_t m = 0; m < maps[l].size(); ++m)
      for (std::size_t c = 0; c < x.cells[l].size(); ++c)
        nodes.push_back(Node{l, m, static_cast<int>(c)});
    require(nodes.size() <= budget, errc::budget_exceeded, "extension colimit exceeds budget");
  }
  first[x.max_level + 1] = nodes.size();
  auto node_id = [&](int l, std::size_t m, int c) {
    return first[l] + m * x.cells[l].size() + static_cast<std::size_t>(c);
  };
  cat::UnionFind uf(nodes.size());
  for (int l = 0; l <= x.max_level; ++l)
    for (int lp = 0; lp <= x.max_level; ++lp)
      for (const DeltaMap& d : delta_homs(l, lp))
        for (std::size_t m = 0; m < maps[l].size(); ++m) {
          SigmaMorphism through = sigma_compose(extend_map(k, d), maps[l][m]);
          std::size_t mp = 0;
          for (; mp < maps[lp].size(); ++mp)
            if (maps[lp][mp] == through) break;
          require(mp < maps[lp].size(), errc::bad_input, "composite left the enumerated hom set");
          for (std::size_t cp = 0; cp < x.cells[lp].size(); ++cp)
            uf.unite(static_cast<int>(node_id(lp, mp, static_cast<int>(cp))),
                     static_cast<int>(node_id(l, m, x.res(d, static_cast<int>(cp)))));
        }
  int count = 0;
  std::vector<int> cls = uf.classes(count);
  std::vector<std::string> names(count);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::string label = "l" + std::to_string(nodes[i].level) + ":" +
                        maps[nodes[i].level][nodes[i].map_idx].label() + ":" +
                        x.cells[nodes[i].level][nodes[i].cell];
    if (names[cls[i]].empty() || label < names[cls[i]]) names[cls[i]] = label;
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace fixcat::sigma
