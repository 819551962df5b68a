#include "fixcat/rank.hpp"

#include <algorithm>
#include <map>

namespace fixcat::rank {

HomTreePtr point() {
  auto t = std::make_shared<HomTree>();
  t->is_point = true;
  t->objects = 1;
  t->hom = {nullptr};  // self, by convention; never dereferenced
  return t;
}

HomTreePtr empty_skeleton() { return std::make_shared<HomTree>(); }

HomTreePtr node(int objects, std::vector<HomTreePtr> hom) {
  require(static_cast<int>(hom.size()) == objects * objects, errc::bad_input,
          "hom table must cover every ordered object pair");
  auto t = std::make_shared<HomTree>();
  t->objects = objects;
  t->hom = std::move(hom);
  return t;
}

std::vector<std::string> RationalCat::validate() const {
  std::vector<std::string> errs;
  if (root < 0 || root >= static_cast<int>(states.size())) errs.push_back("root out of range");
  for (std::size_t s = 0; s < states.size(); ++s) {
    const State& st = states[s];
    if (static_cast<int>(st.hom.size()) != st.objects * st.objects)
      errs.push_back("state " + std::to_string(s) + " hom table has wrong arity");
    for (int t : st.hom)
      if (t < 0 || t >= static_cast<int>(states.size()))
        errs.push_back("state " + std::to_string(s) + " has an unknown hom target");
    if (st.is_point && !(st.objects == 1 && st.hom.size() == 1 && st.hom[0] == static_cast<int>(s)))
      errs.push_back("state " + std::to_string(s) + " has an inconsistent point flag");
  }
  return errs;
}

RationalCat from_tree(const HomTreePtr& t) {
  RationalCat c;
  std::map<const HomTree*, int> seen;
  auto rec = [&](auto&& self, const HomTreePtr& cur) -> int {
    auto it = seen.find(cur.get());
    if (it != seen.end()) return it->second;
    int id = static_cast<int>(c.states.size());
    seen[cur.get()] = id;
    c.states.push_back({});
    if (cur->is_point) {
      c.states[id].is_point = true;
      c.states[id].objects = 1;
      c.states[id].hom = {id};
      return id;
    }
    c.states[id].objects = cur->objects;
    c.states[id].hom.assign(static_cast<std::size_t>(cur->objects) * cur->objects, 0);
    for (int i = 0; i < cur->objects; ++i)
      for (int j = 0; j < cur->objects; ++j) {
        int child = self(self, cur->at(i, j));
        c.states[id].hom[static_cast<std::size_t>(i) * cur->objects + j] = child;
      }
    return id;
  };
  c.root = rec(rec, t);
  return c;
}

std::vector<char> contractible_states(const RationalCat& c, Mode mode) {
  std::size_t n = c.states.size();
  std::vector<char> triv(n, mode == Mode::coinductive ? 1 : 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < n; ++s) {
      const auto& st = c.states[s];
      char val;
      if (st.is_point) {
        val = 1;
      } else if (st.objects == 0) {
        val = 0;
      } else {
        val = 1;
        for (int t : st.hom)
          if (!triv[t]) {
            val = 0;
            break;
          }
      }
      if (val != triv[s]) {
        triv[s] = val;
        changed = true;
      }
    }
  }
  return triv;
}

bool contractible(const RationalCat& c, Mode mode) {
  return contractible_states(c, mode)[c.root] != 0;
}

bool contractible(const HomTreePtr& t, Mode mode) { return contractible(from_tree(t), mode); }

std::string RankValue::label() const {
  switch (kind) {
    case Kind::contractible:
      return "contractible";
    case Kind::finite:
      return "finite(" + std::to_string(n) + ")";
    default:
      return "not-small";
  }
}

RankValue rank_of(const RationalCat& c) {
  std::vector<char> triv = contractible_states(c, Mode::inductive);
  // -2 = unvisited, -3 = on stack; >= -1 = finished rank (with -1 meaning
  // contractible).  A back edge to the stack is a cycle of non-contractible
  // states, hence not-small.
  std::vector<int> memo(c.states.size(), -2);
  bool not_small = false;
  auto rec = [&](auto&& self, int s) -> int {
    if (triv[s]) return -1;
    if (memo[s] == -3) {
      not_small = true;
      return 0;
    }
    if (memo[s] >= -1) return memo[s];
    memo[s] = -3;
    int best = -1;
    for (int t : c.states[s].hom) best = std::max(best, self(self, t));
    memo[s] = best + 1;
    return memo[s];
  };
  int r = rec(rec, c.root);
  if (not_small) return RankValue::not_small();
  if (triv[c.root]) return RankValue::contractible_value();
  return RankValue::finite(r);
}

RankValue rank_of(const HomTreePtr& t) {
  // Structural recursion with pointer memoization; enumeration shares
  // subtrees aggressively, which makes sweeps near-linear.
  std::map<const HomTree*, int> memo;
  auto rec = [&](auto&& self, const HomTreePtr& cur) -> int {
    if (cur->is_point) return -1;
    auto it = memo.find(cur.get());
    if (it != memo.end()) return it->second;
    int best = -1;
    for (int i = 0; i < cur->objects; ++i)
      for (int j = 0; j < cur->objects; ++j) best = std::max(best, self(self, cur->at(i, j)));
    // A node is contractible exactly when nonempty with all homs
    // contractible; encode contractible as -1.
    int val = (cur->objects > 0 && best == -1) ? -1 : best + 1;
    memo[cur.get()] = val;
    return val;
  };
  int r = rec(rec, t);
  return r < 0 ? RankValue::contractible_value() : RankValue::finite(r);
}

NoethResult is_noetherian(const RationalCat& c) {
  std::vector<char> triv = contractible_states(c, Mode::inductive);
  std::size_t n = c.states.size();
  // Restricted graph: nonempty, non-contractible states.
  auto in_graph = [&](int s) { return !triv[s] && c.states[s].objects > 0; };

  // DFS with an explicit path to reconstruct the lasso.
  std::vector<int> color(n, 0);  // 0 white, 1 on path, 2 done
  std::vector<TowerStep> path;
  NoethResult res;

  auto dfs = [&](auto&& self, int s) -> bool {
    color[s] = 1;
    for (int i = 0; i < c.states[s].objects; ++i)
      for (int j = 0; j < c.states[s].objects; ++j) {
        int t = c.states[s].at(i, j);
        if (!in_graph(t)) continue;
        if (color[t] == 1) {
          // Close the lasso: everything from t's position on the path is the
          // cycle; the rest is the prefix.
          path.push_back(TowerStep{s, i, j});
          TowerWitness w;
          std::size_t split = 0;
          while (split < path.size() && path[split].state != t) ++split;
          w.prefix.assign(path.begin(), path.begin() + static_cast<long>(split));
          w.cycle.assign(path.begin() + static_cast<long>(split), path.end());
          res.noetherian = false;
          res.witness = std::move(w);
          path.pop_back();
          return true;
        }
        if (color[t] == 0) {
          path.push_back(TowerStep{s, i, j});
          if (self(self, t)) {
            path.pop_back();
            return true;
          }
          path.pop_back();
        }
      }
    color[s] = 2;
    return false;
  };

  // Towers start at the root when it has a pair to offer; the root itself
  // need not be in the restricted graph.
  if (c.states[c.root].objects == 0) return res;
  if (in_graph(c.root)) {
    if (dfs(dfs, c.root)) return res;
  } else {
    for (int i = 0; i < c.states[c.root].objects && res.noetherian; ++i)
      for (int j = 0; j < c.states[c.root].objects && res.noetherian; ++j) {
        int t = c.states[c.root].at(i, j);
        if (!in_graph(t) || color[t] != 0) continue;
        path.push_back(TowerStep{c.root, i, j});
        dfs(dfs, t);
        if (!res.noetherian) return res;
        path.pop_back();
      }
  }
  return res;
}

bool witness_refutes(const RationalCat& c, const TowerWitness& w, int steps) {
  if (w.cycle.empty()) return false;
  std::vector<char> triv = contractible_states(c, Mode::inductive);
  std::vector<TowerStep> all = w.prefix;
  all.insert(all.end(), w.cycle.begin(), w.cycle.end());
  int cur = all.front().state;
  for (int step = 0; step < steps; ++step) {
    const TowerStep& ts =
        step < static_cast<int>(all.size())
            ? all[step]
            : w.cycle[(step - w.prefix.size()) % w.cycle.size()];
    if (ts.state != cur) return false;
    const auto& st = c.states[cur];
    if (st.objects == 0) return false;
    if (step > 0 && triv[cur]) return false;  // the tower hit a trivial hom
    if (ts.obj_a >= st.objects || ts.obj_b >= st.objects) return false;
    cur = st.at(ts.obj_a, ts.obj_b);
  }
  return true;
}

HomTreePtr suspension(const HomTreePtr& x) {
  return node(2, {point(), x, empty_skeleton(), point()});
}

RationalCat suspension(const RationalCat& x) {
  RationalCat c;
  // 0 = new root, then x's states shifted by 1, then point and empty.
  int shift = 1;
  int pt = static_cast<int>(x.states.size()) + 1;
  int empty = pt + 1;
  RationalCat::State root;
  root.objects = 2;
  root.hom = {pt, x.root + shift, empty, pt};  // (b,b) (b,t) (t,b) (t,t)
  c.states.push_back(root);
  for (const auto& st : x.states) {
    RationalCat::State copy = st;
    for (int& t : copy.hom) t += shift;
    if (copy.is_point) copy.hom = {static_cast<int>(c.states.size())};
    c.states.push_back(copy);
  }
  RationalCat::State p;
  p.is_point = true;
  p.objects = 1;
  p.hom = {pt};
  c.states.push_back(p);
  c.states.push_back(RationalCat::State{});
  c.root = 0;
  return c;
}

HomTreePtr coproduct(const std::vector<HomTreePtr>& parts) {
  int total = 0;
  for (const auto& p : parts) total += p->objects;
  std::vector<HomTreePtr> hom(static_cast<std::size_t>(total) * total, empty_skeleton());
  int off_i = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p->objects; ++i)
      for (int j = 0; j < p->objects; ++j) {
        HomTreePtr h = p->is_point ? point() : p->at(i, j);
        hom[static_cast<std::size_t>(off_i + i) * total + (off_i + j)] = h;
      }
    off_i += p->objects;
  }
  return node(total, std::move(hom));
}

RationalCat coproduct(const std::vector<RationalCat>& parts) {
  RationalCat c;
  RationalCat::State root;
  std::vector<int> part_root, part_shift;
  int next = 1;
  for (const auto& p : parts) {
    part_shift.push_back(next);
    part_root.push_back(p.root + next);
    next += static_cast<int>(p.states.size());
  }
  int empty = next;
  int total = 0;
  for (const auto& p : parts) total += p.states[p.root].objects;
  root.objects = total;
  root.hom.assign(static_cast<std::size_t>(total) * total, empty);
  int off_i = 0;
  for (std::size_t pi = 0; pi < parts.size(); ++pi) {
    const auto& rs = parts[pi].states[parts[pi].root];
    for (int i = 0; i < rs.objects; ++i)
      for (int j = 0; j < rs.objects; ++j)
        root.hom[static_cast<std::size_t>(off_i + i) * total + (off_i + j)] =
            rs.at(i, j) + part_shift[pi];
    off_i += rs.objects;
  }
  c.states.push_back(root);
  for (std::size_t pi = 0; pi < parts.size(); ++pi)
    for (const auto& st : parts[pi].states) {
      RationalCat::State copy = st;
      for (int& t : copy.hom) t += part_shift[pi];
      c.states.push_back(copy);
    }
  c.states.push_back(RationalCat::State{});
  c.root = 0;
  return c;
}

HomTreePtr strictness_witness(int theta) {
  HomTreePtr t = empty_skeleton();
  for (int i = 0; i < theta; ++i) t = suspension(t);
  return t;
}

std::vector<HomTreePtr> enumerate_skeletons(int max_objects, int max_depth, std::size_t budget) {
  require(max_objects >= 0 && max_depth >= 1, errc::bad_input, "bad enumeration parameters");
  std::vector<HomTreePtr> level = {point(), empty_skeleton()};
  require(skeleton_count(max_objects, max_depth) <= budget, errc::budget_exceeded,
          "skeleton enumeration exceeds budget");
  for (int d = 2; d <= max_depth; ++d) {
    std::vector<HomTreePtr> next = {point(), empty_skeleton()};
    for (int k = 1; k <= max_objects; ++k) {
      std::vector<std::size_t> pick(static_cast<std::size_t>(k) * k, 0);
      while (true) {
        std::vector<HomTreePtr> hom;
        hom.reserve(pick.size());
        for (std::size_t p : pick) hom.push_back(level[p]);
        next.push_back(node(k, std::move(hom)));
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
          if (pick[i] + 1 < level.size()) {
            ++pick[i];
            std::fill(pick.begin(), pick.begin() + static_cast<long>(i), 0);
            break;
          }
          pick[i] = 0;
        }
        if (i == pick.size()) break;
      }
    }
    level = std::move(next);
  }
  return level;
}

std::size_t skeleton_count(int max_objects, int max_depth) {
  std::size_t count = 2;
  for (int d = 2; d <= max_depth; ++d) {
    std::size_t next = 2;
    for (int k = 1; k <= max_objects; ++k) {
      std::size_t pow = 1;
      for (int p = 0; p < k * k; ++p) {
        require(pow <= (std::size_t{1} << 40) / std::max<std::size_t>(count, 1), errc::budget_exceeded,
                "skeleton count overflows the budget");
        pow *= count;
      }
      next += pow;
    }
    count = next;
  }
  return count;
}

NoethRankReport noeth_equiv_rank(const RationalCat& c) {
  NoethRankReport rep;
  NoethResult nr = is_noetherian(c);
  rep.noetherian = nr.noetherian;
  rep.witness = nr.witness;
  rep.rank = rank_of(c);
  rep.consistent = (rep.noetherian == (rep.rank.kind != RankValue::Kind::not_small));
  return rep;
}

MachineSpace::MachineSpace(int num_states, int max_objects)
    : num_states_(num_states), max_objects_(max_objects) {
  require(num_states >= 1 && max_objects >= 0, errc::bad_input, "bad machine space parameters");
  // Shapes are templates: hom targets are encoded later per index; here we
  // enumerate (objects, flag, hom target tuple) with targets in
  // [0, num_states).
  for (int k = 0; k <= max_objects; ++k) {
    std::vector<int> hom(static_cast<std::size_t>(k) * k, 0);
    while (true) {
      shapes_.push_back(Shape{false, k, hom});
      std::size_t i = 0;
      for (; i < hom.size(); ++i) {
        if (hom[i] + 1 < num_states_) {
          ++hom[i];
          std::fill(hom.begin(), hom.begin() + static_cast<long>(i), 0);
          break;
        }
        hom[i] = 0;
      }
      if (i == hom.size()) break;
    }
    if (k == 1) shapes_.push_back(Shape{true, 1, {-1}});  // point; hom fixed to self
  }
  per_state_ = shapes_.size();
  total_ = 1;
  for (int s = 0; s < num_states_; ++s) {
    require(total_ <= (std::size_t{1} << 62) / per_state_, errc::budget_exceeded,
            "machine space too large");
    total_ *= per_state_;
  }
  total_ *= static_cast<std::size_t>(num_states_);  // root choice
}

RationalCat MachineSpace::build(std::size_t index) const {
  require(index < total_, errc::bad_input, "machine index out of range");
  RationalCat c;
  c.root = static_cast<int>(index % static_cast<std::size_t>(num_states_));
  index /= static_cast<std::size_t>(num_states_);
  for (int s = 0; s < num_states_; ++s) {
    const Shape& sh = shapes_[index % per_state_];
    index /= per_state_;
    RationalCat::State st;
    st.is_point = sh.is_point;
    st.objects = sh.objects;
    st.hom = sh.is_point ? std::vector<int>{s} : sh.hom;
    c.states.push_back(std::move(st));
  }
  return c;
}

}  // namespace fixcat::rank
