#include "fixcat/kleene.hpp"

#include <algorithm>
#include <numeric>

#include "fixcat/parallel.hpp"

namespace fixcat::lat {

int FiniteLattice::index_of(const std::string& n) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == n) return static_cast<int>(i);
  return -1;
}

FiniteLattice FiniteLattice::from_hasse(std::vector<std::string> elements,
                                        const std::vector<std::pair<std::string, std::string>>& edges) {
  FiniteLattice l;
  l.names_ = std::move(elements);
  std::size_t n = l.names_.size();
  l.leq_.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) l.leq_[i][i] = 1;
  for (const auto& [lo, hi] : edges) {
    int a = l.index_of(lo), b = l.index_of(hi);
    require(a >= 0 && b >= 0, errc::bad_input, "hasse edge references unknown element");
    l.leq_[a][b] = 1;
  }
  // Transitive closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (l.leq_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (l.leq_[k][j]) l.leq_[i][j] = 1;
  l.finish();
  return l;
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> elements,
                                        std::vector<std::vector<char>> leq) {
  FiniteLattice l;
  l.names_ = std::move(elements);
  l.leq_ = std::move(leq);
  l.finish();
  return l;
}

FiniteLattice FiniteLattice::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(names[i], names[i + 1]);
  return from_hasse(std::move(names), edges);
}

FiniteLattice FiniteLattice::powerset(const std::vector<std::string>& generators) {
  std::size_t n = generators.size();
  require(n <= 16, errc::budget_exceeded, "powerset lattice too large");
  std::vector<std::string> names(1u << n);
  for (std::size_t mask = 0; mask < names.size(); ++mask) {
    std::vector<std::string> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) members.push_back(generators[i]);
    names[mask] = "{" + fixcat::join(members, ",") + "}";
  }
  FiniteLattice l;
  l.names_ = names;
  l.leq_.assign(names.size(), std::vector<char>(names.size(), 0));
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = 0; b < names.size(); ++b) l.leq_[a][b] = ((a & ~b) == 0) ? 1 : 0;
  l.finish();
  return l;
}

void FiniteLattice::finish() {
  std::size_t n = names_.size();
  require(n > 0, errc::bad_input, "lattice must be nonempty");
  join_.assign(n, std::vector<int>(n, -1));
  meet_.assign(n, std::vector<int>(n, -1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int lub = -1, glb = -1;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq_[a][c] && leq_[b][c] && (lub < 0 || leq_[c][lub])) lub = static_cast<int>(c);
        if (leq_[c][a] && leq_[c][b] && (glb < 0 || leq_[glb][c])) glb = static_cast<int>(c);
      }
      join_[a][b] = lub;
      meet_[a][b] = glb;
    }
  bottom_ = top_ = -1;
  for (std::size_t c = 0; c < n; ++c) {
    bool is_bot = true, is_top = true;
    for (std::size_t x = 0; x < n; ++x) {
      if (!leq_[c][x]) is_bot = false;
      if (!leq_[x][c]) is_top = false;
    }
    if (is_bot) bottom_ = static_cast<int>(c);
    if (is_top) top_ = static_cast<int>(c);
  }
  auto report = validate();
  require(report.empty(), errc::bad_input,
          report.empty() ? "" : "not a lattice: " + report.front());
}

std::vector<std::string> FiniteLattice::validate() const {
  std::vector<std::string> errs;
  std::size_t n = names_.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) errs.push_back("order not reflexive at " + names_[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a])
        errs.push_back("order not antisymmetric on " + names_[a] + "," + names_[b]);
      for (std::size_t c = 0; c < n; ++c)
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c])
          errs.push_back("order not transitive via " + names_[b]);
    }
  }
  for (std::size_t a = 0; a < n && errs.empty(); ++a)
    for (std::size_t b = 0; b < n && errs.empty(); ++b) {
      int lub = join_[a][b], glb = meet_[a][b];
      if (lub < 0) {
        errs.push_back("no join for " + names_[a] + "," + names_[b]);
        continue;
      }
      if (glb < 0) {
        errs.push_back("no meet for " + names_[a] + "," + names_[b]);
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (leq_[a][c] && leq_[b][c] && !leq_[lub][c])
          errs.push_back("join of " + names_[a] + "," + names_[b] + " is not least");
        if (leq_[c][a] && leq_[c][b] && !leq_[c][glb])
          errs.push_back("meet of " + names_[a] + "," + names_[b] + " is not greatest");
      }
    }
  if (bottom_ < 0) errs.push_back("no bottom element");
  if (top_ < 0) errs.push_back("no top element");
  return errs;
}

MonotoneMap::MonotoneMap(const FiniteLattice& l, std::vector<int> values)
    : lattice(&l), table(std::move(values)) {
  require(table.size() == l.size(), errc::bad_input, "monotone map table size mismatch");
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (l.leq(static_cast<int>(a), static_cast<int>(b)) && !l.leq(table[a], table[b]))
        fail(errc::non_monotone, "map is not monotone on " + l.name(static_cast<int>(a)) + " <= " +
                                     l.name(static_cast<int>(b)));
}

KleeneResult lfp(const MonotoneMap& f) {
  KleeneResult r;
  int x = f.lattice->bottom();
  r.trace.push_back(x);
  for (std::size_t i = 0; i <= f.lattice->size(); ++i) {
    int next = f(x);
    if (next == x) break;
    x = next;
    r.trace.push_back(x);
  }
  r.value = x;
  return r;
}

KleeneResult gfp(const MonotoneMap& f) {
  KleeneResult r;
  int x = f.lattice->top();
  r.trace.push_back(x);
  for (std::size_t i = 0; i <= f.lattice->size(); ++i) {
    int next = f(x);
    if (next == x) break;
    x = next;
    r.trace.push_back(x);
  }
  r.value = x;
  return r;
}

std::vector<int> all_fixed_points(const MonotoneMap& f, std::size_t budget) {
  require(f.lattice->size() <= budget, errc::budget_exceeded, "lattice too large for exhaustive scan");
  std::vector<int> out;
  for (std::size_t x = 0; x < f.lattice->size(); ++x)
    if (f(static_cast<int>(x)) == static_cast<int>(x)) out.push_back(static_cast<int>(x));
  return out;
}

std::vector<MonotoneMap> all_monotone_maps(const FiniteLattice& l, std::size_t cap) {
  std::size_t n = l.size();
  std::vector<MonotoneMap> out;
  std::vector<int> table(n, 0);
  while (true) {
    bool monotone = true;
    for (std::size_t a = 0; a < n && monotone; ++a)
      for (std::size_t b = 0; b < n && monotone; ++b)
        if (l.leq(static_cast<int>(a), static_cast<int>(b)) && !l.leq(table[a], table[b]))
          monotone = false;
    if (monotone) {
      require(out.size() < cap, errc::budget_exceeded, "too many monotone maps");
      MonotoneMap m;
      m.lattice = &l;
      m.table = table;
      out.push_back(std::move(m));
    }
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (table[i] + 1 < static_cast<int>(n)) {
        ++table[i];
        std::fill(table.begin(), table.begin() + static_cast<long>(i), 0);
        break;
      }
    }
    if (i == n) break;
  }
  return out;
}

std::vector<FiniteLattice> enumerate_lattices(std::size_t max_size) {
  std::vector<FiniteLattice> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    // Candidate strict relations live on the upper triangle (i < j), so every
    // candidate is automatically antisymmetric and acyclic; closure then
    // enforces transitivity, and duplicates are skipped by keeping only
    // transitively closed edge sets.
    std::size_t pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slot;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slot.emplace_back(static_cast<int>(i), static_cast<int>(j));
    for (std::size_t mask = 0; mask < (1ull << pairs); ++mask) {
      std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
      for (std::size_t i = 0; i < n; ++i) leq[i][i] = 1;
      for (std::size_t p = 0; p < pairs; ++p)
        if (mask & (1ull << p)) leq[slot[p].first][slot[p].second] = 1;
      // Close transitively; only accept masks that were already closed, so
      // each order is produced exactly once.
      auto closed = leq;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
          if (closed[i][k])
            for (std::size_t j = 0; j < n; ++j)
              if (closed[k][j]) closed[i][j] = 1;
      if (closed != leq) continue;
      // Lattice check before constructing.
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a)
        for (std::size_t b = 0; b < n && ok; ++b) {
          int lub = -1, glb = -1;
          for (std::size_t c = 0; c < n; ++c) {
            if (leq[a][c] && leq[b][c] && (lub < 0 || leq[c][lub])) lub = static_cast<int>(c);
            if (leq[c][a] && leq[c][b] && (glb < 0 || leq[glb][c])) glb = static_cast<int>(c);
          }
          if (lub < 0 || glb < 0) {
            ok = false;
            break;
          }
          for (std::size_t c = 0; c < n; ++c) {
            if (leq[a][c] && leq[b][c] && !leq[lub][c]) ok = false;
            if (leq[c][a] && leq[c][b] && !leq[c][glb]) ok = false;
          }
        }
      if (!ok) continue;
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
      out.push_back(FiniteLattice::from_order(std::move(names), std::move(leq)));
    }
  }
  return out;
}

namespace {

std::vector<std::vector<int>> neighbor_table(const DataflowProblem& p) {
  // For a forward problem a node joins over its predecessors.
  std::vector<std::vector<int>> in(p.node_names.size());
  for (const auto& [from, to] : p.edges) {
    if (p.forward)
      in[to].push_back(from);
    else
      in[from].push_back(to);
  }
  return in;
}

int evaluate_node(const DataflowProblem& p, const std::vector<std::vector<int>>& in,
                  const std::vector<int>& cur, std::size_t node) {
  const FiniteLattice& l = *p.lattice;
  int acc = p.entry_values.empty() ? l.bottom() : p.entry_values[node];
  for (int nb : in[node]) acc = l.join(acc, cur[nb]);
  return p.transfer[node](acc);
}

}  // namespace

DataflowSolution dataflow_solve(const DataflowProblem& p, bool parallel) {
  const FiniteLattice& l = *p.lattice;
  std::size_t n = p.node_names.size();
  auto in = neighbor_table(p);
  DataflowSolution s;
  s.value.assign(n, l.bottom());
  std::vector<int> next(n);
  // Jacobi sweeps on the product lattice; the per-sweep operator is monotone,
  // so iteration from bottom reaches the least fixed point within
  // n * |L| sweeps.
  for (std::size_t sweep = 0; sweep <= n * l.size() + 1; ++sweep) {
    parallel_for(n, parallel, [&](std::size_t i) { next[i] = evaluate_node(p, in, s.value, i); });
    ++s.sweeps;
    if (next == s.value) return s;
    s.value = next;
  }
  fail(errc::budget_exceeded, "dataflow iteration failed to converge");
}

DataflowSolution dataflow_solve_round_robin(const DataflowProblem& p) {
  const FiniteLattice& l = *p.lattice;
  std::size_t n = p.node_names.size();
  auto in = neighbor_table(p);
  DataflowSolution s;
  s.value.assign(n, l.bottom());
  bool changed = true;
  while (changed) {
    changed = false;
    ++s.sweeps;
    for (std::size_t i = 0; i < n; ++i) {
      int v = evaluate_node(p, in, s.value, i);
      if (v != s.value[i]) {
        s.value[i] = v;
        changed = true;
      }
    }
  }
  return s;
}

}  // namespace fixcat::lat
