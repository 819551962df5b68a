#include "fixcat/io.hpp"

#include <filesystem>
#include <fstream>

namespace fixcat::io {

void check_format(const json& j) {
  require(j.is_object(), errc::bad_input, "expected a JSON object");
  if (j.contains("format"))
    require(j["format"] == kFormatTag, errc::bad_input,
            "unsupported format tag; expected " + std::string(kFormatTag));
}

cat::CategoryPtr load_category(const json& j) {
  require(j.is_object() && j.contains("kind"), errc::bad_input, "category needs a kind");
  std::string kind = j["kind"];
  if (kind == "finset") {
    if (j.contains("max_size")) return std::make_shared<cat::FinSetCat>(j["max_size"].get<std::size_t>());
    return std::make_shared<cat::FinSetCat>();
  }
  if (kind == "lattice") {
    return std::make_shared<cat::LatticeCat>(load_lattice(j));
  }
  if (kind == "presented") {
    std::vector<std::string> objects = j.at("objects").get<std::vector<std::string>>();
    std::vector<cat::PresentedCat::Arrow> arrows;
    for (const json& a : j.at("arrows"))
      arrows.push_back(cat::PresentedCat::Arrow{a.at("name"), a.at("src"), a.at("tgt")});
    std::vector<int> identity_of = j.at("identities").get<std::vector<int>>();
    std::vector<std::vector<int>> table = j.at("compose").get<std::vector<std::vector<int>>>();
    return std::make_shared<cat::PresentedCat>(std::move(objects), std::move(arrows),
                                               std::move(identity_of), std::move(table));
  }
  fail(errc::bad_input, "unknown category kind '" + kind + "'");
}

cat::Obj load_finset(const json& j) {
  if (j.is_number_unsigned()) return cat::Obj(cat::FinSet::canonical(j.get<std::size_t>()));
  require(j.is_array(), errc::bad_input, "finite set must be a list of names or a size");
  return cat::Obj(cat::FinSet(j.get<std::vector<std::string>>()));
}

cat::Mor load_finmap(const json& j, const cat::Obj& src, const cat::Obj& tgt) {
  require(j.is_object(), errc::bad_input, "function table must be an object");
  std::vector<std::pair<std::string, std::string>> table;
  for (auto it = j.begin(); it != j.end(); ++it) table.emplace_back(it.key(), it.value());
  return cat::FinSetCat::fn(src, tgt, table);
}

json save_finset(const cat::Obj& x) { return json(x.set().elems); }

json save_finmap(const cat::Mor& m) {
  json out = json::object();
  for (std::size_t i = 0; i < m.map().img.size(); ++i)
    out[m.src.set().elems[i]] = m.tgt.set().elems[m.map().img[i]];
  return out;
}

cat::EndoPtr load_functor(const json& j, const cat::CategoryPtr& base,
                          const FunctorRegistry& registry) {
  if (j.is_string()) {
    auto it = registry.find(j.get<std::string>());
    require(it != registry.end(), errc::bad_input,
            "unknown functor name '" + j.get<std::string>() + "'");
    return it->second;
  }
  require(j.is_object(), errc::bad_input, "functor must be an object or a registry name");
  std::string name = j.value("name", "");
  cat::EndoPtr out;
  if (j.contains("identity")) {
    out = cat::Endo::identity(base);
  } else if (j.contains("const")) {
    out = cat::Endo::constant(base, load_finset(j["const"]), name.empty() ? "const" : name);
  } else if (j.contains("poly")) {
    std::vector<cat::Endo::PolyTerm> terms;
    int idx = 0;
    for (const json& t : j["poly"]) {
      cat::Obj coeff = t.contains("coeff") ? load_finset(t["coeff"])
                                           : cat::Obj(cat::FinSet::canonical(1, "a"));
      cat::Obj exp = t.contains("exp") ? load_finset(t["exp"]) : cat::Obj(cat::FinSet::canonical(1, "b"));
      if (t.contains("coeff") && t["coeff"].is_number_unsigned())
        coeff = cat::Obj(cat::FinSet::canonical(t["coeff"].get<std::size_t>(),
                                                "a" + std::to_string(idx) + "_"));
      if (t.contains("exp") && t["exp"].is_number_unsigned())
        exp = cat::Obj(cat::FinSet::canonical(t["exp"].get<std::size_t>(),
                                              "b" + std::to_string(idx) + "_"));
      terms.push_back(cat::Endo::PolyTerm{coeff, exp});
      ++idx;
    }
    out = cat::Endo::poly(base, std::move(terms), name.empty() ? "poly" : name);
  } else if (j.contains("sum")) {
    std::vector<cat::EndoPtr> parts;
    for (const json& p : j["sum"]) parts.push_back(load_functor(p, base, registry));
    out = cat::Endo::sum(std::move(parts), name.empty() ? "sum" : name);
  } else if (j.contains("product")) {
    std::vector<cat::EndoPtr> parts;
    for (const json& p : j["product"]) parts.push_back(load_functor(p, base, registry));
    out = cat::Endo::prod(std::move(parts), name.empty() ? "product" : name);
  } else if (j.contains("composite")) {
    std::vector<cat::EndoPtr> parts;
    for (const json& p : j["composite"]) parts.push_back(load_functor(p, base, registry));
    out = cat::Endo::comp(std::move(parts), name.empty() ? "composite" : name);
  } else if (j.contains("table")) {
    const auto& L = dynamic_cast<const cat::LatticeCat&>(*base);
    std::vector<int> table(L.lattice().size());
    for (auto it = j["table"].begin(); it != j["table"].end(); ++it) {
      int from = L.lattice().index_of(it.key());
      int to = L.lattice().index_of(it.value());
      require(from >= 0 && to >= 0, errc::bad_input, "unknown lattice element in table");
      table[from] = to;
    }
    out = cat::Endo::monotone(base, std::move(table), name.empty() ? "monotone" : name);
  } else {
    fail(errc::bad_input, "functor description not recognized");
  }
  if (!name.empty()) std::const_pointer_cast<cat::Endo>(out)->name = name;
  if (j.contains("preserves")) {
    auto mutable_out = std::const_pointer_cast<cat::Endo>(out);
    mutable_out->preserves_chain_colimits = j["preserves"].value("colimits", out->preserves_chain_colimits);
    mutable_out->preserves_chain_limits = j["preserves"].value("limits", out->preserves_chain_limits);
  }
  return out;
}

FunctorFile load_functor_file(const json& j, const FunctorRegistry& registry) {
  check_format(j);
  FunctorFile out;
  out.category = j.contains("category") ? load_category(j["category"])
                                        : std::make_shared<cat::FinSetCat>();
  out.functor = load_functor(j.at("functor"), out.category, registry);
  return out;
}

namespace {

struct Structured {
  cat::CategoryPtr category;
  cat::EndoPtr functor;
  cat::Obj carrier;
};

Structured load_structured(const json& j, const FunctorRegistry& registry) {
  check_format(j);
  Structured s;
  s.category = j.contains("category") ? load_category(j["category"])
                                      : std::make_shared<cat::FinSetCat>();
  s.functor = load_functor(j.at("functor"), s.category, registry);
  s.carrier = load_finset(j.at("carrier"));
  return s;
}

}  // namespace

alg::Algebra load_algebra(const json& j, const FunctorRegistry& registry) {
  Structured s = load_structured(j, registry);
  cat::Mor action = load_finmap(j.at("action"), s.functor->on_obj(s.carrier), s.carrier);
  return alg::make_algebra(s.functor, s.carrier, action);
}

alg::Coalgebra load_coalgebra(const json& j, const FunctorRegistry& registry) {
  Structured s = load_structured(j, registry);
  cat::Mor coaction = load_finmap(j.at("coaction"), s.carrier, s.functor->on_obj(s.carrier));
  return alg::make_coalgebra(s.functor, s.carrier, coaction);
}

alg::LaxAlgebra load_lax(const json& j, const FunctorRegistry& registry) {
  check_format(j);
  cat::CategoryPtr base = j.contains("category") ? load_category(j["category"])
                                                 : std::make_shared<cat::FinSetCat>();
  cat::EndoPtr F = load_functor(j.at("functor"), base, registry);
  cat::Obj apex = load_finset(j.at("apex"));
  cat::Obj carrier = load_finset(j.at("carrier"));
  cat::Mor r = load_finmap(j.at("resolution"), apex, F->on_obj(carrier));
  cat::Mor a = load_finmap(j.at("action"), apex, carrier);
  return alg::make_lax(F, apex, carrier, r, a);
}

fixpt::CoalgebraHom load_coalgebra_hom(const json& j, const FunctorRegistry& registry) {
  check_format(j);
  cat::CategoryPtr base = j.contains("category") ? load_category(j["category"])
                                                 : std::make_shared<cat::FinSetCat>();
  cat::EndoPtr F = load_functor(j.at("functor"), base, registry);
  cat::Obj src_carrier = load_finset(j.at("src").at("carrier"));
  cat::Obj dst_carrier = load_finset(j.at("dst").at("carrier"));
  alg::Coalgebra src = alg::make_coalgebra(
      F, src_carrier, load_finmap(j.at("src").at("coaction"), src_carrier, F->on_obj(src_carrier)));
  alg::Coalgebra dst = alg::make_coalgebra(
      F, dst_carrier, load_finmap(j.at("dst").at("coaction"), dst_carrier, F->on_obj(dst_carrier)));
  cat::Mor map = load_finmap(j.at("map"), src_carrier, dst_carrier);
  require(alg::is_coalgebra_hom(map, src, dst), errc::bad_input,
          "the map does not commute with the coactions");
  return fixpt::CoalgebraHom{std::move(src), std::move(dst), std::move(map)};
}

json save_algebra(const alg::Algebra& a, const json& functor_desc) {
  json out;
  out["format"] = kFormatTag;
  out["functor"] = functor_desc;
  out["carrier"] = save_finset(a.carrier);
  out["action"] = save_finmap(a.action);
  return out;
}

json save_coalgebra(const alg::Coalgebra& c, const json& functor_desc) {
  json out;
  out["format"] = kFormatTag;
  out["functor"] = functor_desc;
  out["carrier"] = save_finset(c.carrier);
  out["coaction"] = save_finmap(c.coaction);
  return out;
}

std::shared_ptr<lat::FiniteLattice> load_lattice(const json& j) {
  require(j.contains("elements"), errc::bad_input, "lattice needs an element list");
  std::vector<std::string> elements = j["elements"].get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("hasse"))
    for (const json& e : j["hasse"]) edges.emplace_back(e.at(0), e.at(1));
  return std::make_shared<lat::FiniteLattice>(lat::FiniteLattice::from_hasse(elements, edges));
}

lat::MonotoneMap load_monotone(const json& j, const lat::FiniteLattice& l) {
  check_format(j);
  const json& values = j.contains("values") ? j["values"] : j;
  std::vector<int> table(l.size(), -1);
  for (auto it = values.begin(); it != values.end(); ++it) {
    int from = l.index_of(it.key());
    int to = l.index_of(it.value());
    require(from >= 0 && to >= 0, errc::bad_input, "unknown lattice element '" + it.key() + "'");
    table[from] = to;
  }
  for (int v : table) require(v >= 0, errc::bad_input, "map table is not total");
  return lat::MonotoneMap(l, std::move(table));
}

json save_lattice(const lat::FiniteLattice& l) {
  json out;
  out["format"] = kFormatTag;
  std::vector<std::string> elements;
  for (std::size_t e = 0; e < l.size(); ++e) elements.push_back(l.name(static_cast<int>(e)));
  out["elements"] = elements;
  // Hasse edges: covering pairs of the order.
  json hasse = json::array();
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (a == b || !l.leq(static_cast<int>(a), static_cast<int>(b))) continue;
      bool covering = true;
      for (std::size_t c = 0; c < l.size() && covering; ++c)
        if (c != a && c != b && l.leq(static_cast<int>(a), static_cast<int>(c)) &&
            l.leq(static_cast<int>(c), static_cast<int>(b)))
          covering = false;
      if (covering) hasse.push_back(json::array({l.name(static_cast<int>(a)), l.name(static_cast<int>(b))}));
    }
  out["hasse"] = hasse;
  return out;
}

json save_monotone(const lat::MonotoneMap& m) {
  json out;
  out["format"] = kFormatTag;
  json values = json::object();
  for (std::size_t x = 0; x < m.lattice->size(); ++x)
    values[m.lattice->name(static_cast<int>(x))] = m.lattice->name(m.table[x]);
  out["values"] = values;
  return out;
}

DataflowFile load_dataflow(const json& j) {
  check_format(j);
  DataflowFile out;
  out.lattice = load_lattice(j.at("lattice"));
  out.problem.lattice = out.lattice.get();
  out.problem.forward = j.value("direction", "forward") == std::string("forward");
  std::map<std::string, int> node_idx;
  for (const json& n : j.at("nodes")) {
    std::string id = n.at("id");
    node_idx[id] = static_cast<int>(out.problem.node_names.size());
    out.problem.node_names.push_back(id);
    if (n.contains("transfer") && !(n["transfer"].is_string() && n["transfer"] == "identity")) {
      out.problem.transfer.push_back(load_monotone(n["transfer"], *out.lattice));
    } else {
      std::vector<int> id_table(out.lattice->size());
      for (std::size_t x = 0; x < out.lattice->size(); ++x) id_table[x] = static_cast<int>(x);
      out.problem.transfer.push_back(lat::MonotoneMap(*out.lattice, std::move(id_table)));
    }
  }
  for (const json& e : j.at("edges")) {
    require(node_idx.count(e.at(0)) && node_idx.count(e.at(1)), errc::bad_input,
            "edge references an unknown node");
    out.problem.edges.emplace_back(node_idx[e.at(0)], node_idx[e.at(1)]);
  }
  out.problem.entry_values.assign(out.problem.node_names.size(), out.lattice->bottom());
  if (j.contains("entry"))
    for (auto it = j["entry"].begin(); it != j["entry"].end(); ++it) {
      int v = out.lattice->index_of(it.value());
      require(node_idx.count(it.key()) && v >= 0, errc::bad_input, "bad entry assignment");
      out.problem.entry_values[node_idx[it.key()]] = v;
    }
  return out;
}

rank::HomTreePtr load_tree(const json& j) {
  if (j.is_object() && j.value("point", false)) return rank::point();
  require(j.is_object() && j.contains("objects"), errc::bad_input,
          "tree node needs an object list");
  std::vector<std::string> objects = j["objects"].get<std::vector<std::string>>();
  int n = static_cast<int>(objects.size());
  std::vector<rank::HomTreePtr> hom(static_cast<std::size_t>(n) * n, rank::empty_skeleton());
  if (j.contains("hom"))
    for (auto it = j["hom"].begin(); it != j["hom"].end(); ++it) {
      std::string key = it.key();
      auto comma = key.find(',');
      require(comma != std::string::npos, errc::bad_input, "hom key must be 'a,b'");
      auto find = [&](const std::string& name) {
        for (int i = 0; i < n; ++i)
          if (objects[i] == name) return i;
        fail(errc::bad_input, "unknown object '" + name + "'");
      };
      int a = find(key.substr(0, comma));
      int b = find(key.substr(comma + 1));
      hom[static_cast<std::size_t>(a) * n + b] = load_tree(it.value());
    }
  return rank::node(n, std::move(hom));
}

rank::RationalCat load_rational(const json& j) {
  rank::RationalCat c;
  std::map<std::string, int> ids;
  const json& states = j.at("states");
  for (const json& s : states) ids[s.at("id")] = static_cast<int>(ids.size());
  for (const json& s : states) {
    rank::RationalCat::State st;
    st.is_point = s.value("point", false);
    std::vector<std::string> objects = s.value("objects", std::vector<std::string>{});
    st.objects = static_cast<int>(objects.size());
    st.hom.assign(static_cast<std::size_t>(st.objects) * st.objects, 0);
    if (st.is_point) {
      require(st.objects == 1, errc::bad_input, "a point state has exactly one object");
      st.hom = {ids.at(s.at("id"))};
    } else if (s.contains("hom")) {
      for (auto it = s["hom"].begin(); it != s["hom"].end(); ++it) {
        std::string key = it.key();
        auto comma = key.find(',');
        require(comma != std::string::npos, errc::bad_input, "hom key must be 'a,b'");
        auto find = [&](const std::string& name) {
          for (int i = 0; i < st.objects; ++i)
            if (objects[i] == name) return i;
          fail(errc::bad_input, "unknown object '" + name + "'");
        };
        int a = find(key.substr(0, comma));
        int b = find(key.substr(comma + 1));
        require(ids.count(it.value()), errc::bad_input, "unknown state id");
        st.hom[static_cast<std::size_t>(a) * st.objects + b] = ids.at(it.value());
      }
    } else {
      require(st.objects == 0, errc::bad_input, "nonempty state needs a hom table");
    }
    c.states.push_back(std::move(st));
  }
  c.root = ids.at(j.value("root", states.at(0).at("id").get<std::string>()));
  auto errs = c.validate();
  require(errs.empty(), errc::bad_input, errs.empty() ? "" : errs.front());
  return c;
}

rank::RationalCat load_skeleton(const json& j) {
  check_format(j);
  std::string kind = j.value("kind", "tree");
  if (kind == "tree") return rank::from_tree(load_tree(j.at("tree")));
  if (kind == "rational") return load_rational(j);
  fail(errc::bad_input, "unknown skeleton kind '" + kind + "'");
}

json save_tree(const rank::HomTreePtr& t) {
  if (t->is_point) return json{{"point", true}};
  json out;
  std::vector<std::string> objects;
  for (int i = 0; i < t->objects; ++i) objects.push_back("x" + std::to_string(i));
  out["objects"] = objects;
  json hom = json::object();
  for (int i = 0; i < t->objects; ++i)
    for (int j2 = 0; j2 < t->objects; ++j2)
      hom[objects[i] + "," + objects[j2]] = save_tree(t->at(i, j2));
  out["hom"] = hom;
  return out;
}

json save_rational(const rank::RationalCat& c) {
  json out;
  out["format"] = kFormatTag;
  out["kind"] = "rational";
  json states = json::array();
  for (std::size_t s = 0; s < c.states.size(); ++s) {
    json st;
    st["id"] = "s" + std::to_string(s);
    std::vector<std::string> objects;
    for (int i = 0; i < c.states[s].objects; ++i) objects.push_back("x" + std::to_string(i));
    st["objects"] = objects;
    if (c.states[s].is_point) {
      st["point"] = true;
    } else {
      json hom = json::object();
      for (int i = 0; i < c.states[s].objects; ++i)
        for (int j2 = 0; j2 < c.states[s].objects; ++j2)
          hom[objects[i] + "," + objects[j2]] = "s" + std::to_string(c.states[s].at(i, j2));
      st["hom"] = hom;
    }
    states.push_back(std::move(st));
  }
  out["states"] = states;
  out["root"] = "s" + std::to_string(c.root);
  return out;
}

json save_witness(const rank::TowerWitness& w) {
  auto steps = [](const std::vector<rank::TowerStep>& v) {
    json arr = json::array();
    for (const rank::TowerStep& s : v)
      arr.push_back(json{{"state", s.state}, {"pair", json::array({s.obj_a, s.obj_b})}});
    return arr;
  };
  return json{{"prefix", steps(w.prefix)}, {"cycle", steps(w.cycle)}};
}

sigma::SigmaPresheaf load_presheaf(const json& j) {
  check_format(j);
  sigma::SigmaPresheaf p;
  const json& b = j.at("bound");
  p.bound = sigma::Bound{b.at(0), b.at(1), b.at(2)};
  p.objs = sigma::objects_within(p.bound);
  p.cells.assign(p.objs.size(), {});
  for (const json& o : j.at("objects")) {
    sigma::SigmaObject k = sigma::SigmaObject::parse(o.at("at"));
    int idx = p.obj_index(k);
    require(idx >= 0, errc::bad_input, "object " + k.label() + " is out of bound");
    p.cells[idx] = o.at("cells").get<std::vector<std::string>>();
  }
  for (const json& r : j.at("restrictions")) {
    sigma::SigmaObject src = sigma::SigmaObject::parse(r.at("src"));
    sigma::SigmaObject tgt = sigma::SigmaObject::parse(r.at("tgt"));
    std::vector<sigma::DeltaMap> comps;
    int level = 0;
    for (const json& c : r.at("components")) {
      comps.push_back(sigma::DeltaMap::of(src.entry(level), tgt.entry(level),
                                          c.get<std::vector<int>>()));
      ++level;
    }
    sigma::SigmaMorphism f = sigma::sigma_normalize(src, tgt, comps);
    std::vector<int> table;
    const auto& tgt_cells = p.cells_at(tgt);
    const auto& src_cells = p.cells_at(src);
    for (const json& cell : r.at("map")) {
      auto pos = std::find(src_cells.begin(), src_cells.end(), cell.get<std::string>());
      require(pos != src_cells.end(), errc::bad_input, "restriction maps to an unknown cell");
      table.push_back(static_cast<int>(pos - src_cells.begin()));
    }
    require(table.size() == tgt_cells.size(), errc::bad_input,
            "restriction table arity mismatch for " + f.label());
    p.res[f.label()] = std::move(table);
  }
  return p;
}

json save_presheaf(const sigma::SigmaPresheaf& p) {
  json out;
  out["format"] = kFormatTag;
  out["bound"] = json::array({p.bound.max_dim, p.bound.max_entry, p.bound.max_level});
  json objects = json::array();
  for (std::size_t i = 0; i < p.objs.size(); ++i) {
    json o;
    o["at"] = p.objs[i].label();
    o["cells"] = p.cells[i];
    objects.push_back(std::move(o));
  }
  out["objects"] = objects;
  json restrictions = json::array();
  for (const sigma::SigmaObject& a : p.objs)
    for (const sigma::SigmaObject& b : p.objs)
      for (const sigma::SigmaMorphism& f : sigma::sigma_homs(a, b)) {
        auto it = p.res.find(f.label());
        if (it == p.res.end()) continue;
        json r;
        r["src"] = a.label();
        r["tgt"] = b.label();
        json comps = json::array();
        for (const sigma::DeltaMap& d : f.components) comps.push_back(d.values);
        r["components"] = comps;
        json map = json::array();
        const auto& src_cells = p.cells_at(a);
        for (int cell : it->second) map.push_back(src_cells[cell]);
        r["map"] = map;
        restrictions.push_back(std::move(r));
      }
  out["restrictions"] = restrictions;
  return out;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::bad_input, "cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

void save_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  require(out.good(), errc::bad_input, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

FunctorRegistry load_registry(const std::string& dir) {
  FunctorRegistry reg;
  if (!std::filesystem::is_directory(dir)) return reg;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    json j;
    try {
      j = load_file(entry.path().string());
    } catch (...) {
      continue;
    }
    if (!j.is_object() || !j.contains("functor")) continue;
    try {
      FunctorFile f = load_functor_file(j);
      reg[f.functor->name.empty() ? entry.path().stem().string() : f.functor->name] = f.functor;
    } catch (...) {
      continue;
    }
  }
  return reg;
}

}  // namespace fixcat::io
