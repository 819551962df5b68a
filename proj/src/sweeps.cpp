#include "fixcat/sweeps.hpp"

#include <atomic>
#include <random>

#include "fixcat/lattice_cat.hpp"
#include "fixcat/parallel.hpp"

namespace fixcat::sweeps {

namespace {

// Runs `describe(i)` over the index space, collecting at most a handful of
// failure descriptions deterministically (by index order).
template <typename Fn>
SweepResult run_sweep(std::size_t n, bool parallel, Fn&& describe) {
  std::vector<char> bad(n, 0);
  parallel_for(n, parallel, [&](std::size_t i) { bad[i] = describe(i).has_value() ? 1 : 0; });
  SweepResult res;
  res.checked = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!bad[i]) continue;
    ++res.failed;
    if (res.examples.size() < 10) res.examples.push_back(*describe(i));
  }
  return res;
}

}  // namespace

SweepResult lattice_kleene_sweep(std::size_t max_size, bool parallel) {
  std::vector<lat::FiniteLattice> lattices = lat::enumerate_lattices(max_size);
  auto describe = [&](std::size_t li) -> std::optional<std::string> {
    const lat::FiniteLattice& l = lattices[li];
    auto lcat = std::make_shared<cat::LatticeCat>(
        std::shared_ptr<const lat::FiniteLattice>(&l, [](const lat::FiniteLattice*) {}));
    for (const lat::MonotoneMap& f : lat::all_monotone_maps(l, 1u << 22)) {
      lat::KleeneResult lo = lat::lfp(f);
      lat::KleeneResult hi = lat::gfp(f);
      std::vector<int> fixed = lat::all_fixed_points(f);
      if (fixed.empty()) return "no fixed point on a finite lattice (impossible)";
      if (lo.value != fixed.front())
        return "iterated least fixed point disagrees with the exhaustive minimum on " +
               std::to_string(l.size()) + " elements";
      if (hi.value != fixed.back())
        return "iterated greatest fixed point disagrees with the exhaustive maximum";
      // Chain drivers on the thin category must agree element-for-element.
      cat::EndoPtr F = cat::Endo::monotone(lcat, f.table);
      adamek::FreeAlgebraCertificate ia =
          adamek::initial_algebra(F, static_cast<int>(l.size()) + 4);
      if (ia.status != adamek::Status::stabilized || ia.result.carrier.idx() != lo.value)
        return "initial-algebra driver disagrees with iteration on a lattice of size " +
               std::to_string(l.size());
      adamek::TerminalCertificate tc =
          adamek::terminal_coalgebra(F, static_cast<int>(l.size()) + 4);
      if (tc.status != adamek::Status::stabilized || tc.result.carrier.idx() != hi.value)
        return "terminal-coalgebra driver disagrees with iteration";
      // The law that the least fixed point is genuinely fixed.
      if (f(lo.value) != lo.value || f(hi.value) != hi.value)
        return "iteration returned a non-fixed point";
    }
    return std::nullopt;
  };
  return run_sweep(lattices.size(), parallel, describe);
}

SweepResult propagation_sweep(const std::vector<cat::EndoPtr>& functors, std::size_t max_carrier,
                              bool parallel) {
  // Materialize the instance space up front so the kernel is a flat loop.
  std::vector<alg::LaxAlgebra> instances;
  for (const cat::EndoPtr& F : functors)
    for (alg::LaxAlgebra& la : alg::enumerate_lax_algebras(F, max_carrier))
      instances.push_back(std::move(la));
  auto describe = [&](std::size_t i) -> std::optional<std::string> {
    const alg::LaxAlgebra& la = instances[i];
    const cat::Category& K = *la.functor->base;
    adamek::PropagationStep step = adamek::propagate(la);
    bool unit_iso = K.is_iso(step.unit.apex_c) && K.is_iso(step.unit.carrier_c);
    bool r_iso = K.is_iso(la.resolution);
    if (unit_iso != r_iso)
      return "unit/resolution disagreement over functor " + la.functor->name + " at |E|=" +
             std::to_string(K.obj_size(la.apex)) + " |B|=" + std::to_string(K.obj_size(la.carrier));
    if (!alg::is_lax_hom(step.unit, la, step.output)) return "propagation unit is not a span morphism";
    cat::Obj fb = la.functor->on_obj(la.carrier);
    if (!(step.output.apex == fb) ||
        !(step.output.resolution == la.functor->on_mor(step.carrier_coproj)))
      return "propagation output is not the expected span";
    return std::nullopt;
  };
  return run_sweep(instances.size(), parallel, describe);
}

SweepResult machine_sweep(int num_states, int max_objects, bool parallel) {
  rank::MachineSpace space(num_states, max_objects);
  auto describe = [&](std::size_t i) -> std::optional<std::string> {
    rank::RationalCat c = space.build(i);
    rank::NoethRankReport rep = rank::noeth_equiv_rank(c);
    if (!rep.consistent)
      return "tower and rank deciders disagree on machine " + std::to_string(i) + " (" +
             (rep.noetherian ? "noetherian" : "not noetherian") + " vs " + rep.rank.label() + ")";
    if (!rep.noetherian) {
      if (!rep.witness) return "non-noetherian verdict without a tower witness";
      if (!rank::witness_refutes(c, *rep.witness, 2 * num_states + 2))
        return "tower witness fails the unrolling oracle on machine " + std::to_string(i);
    }
    return std::nullopt;
  };
  return run_sweep(space.total(), parallel, describe);
}

SweepResult skeleton_rank_sweep(int max_objects, int max_depth, bool parallel) {
  std::vector<rank::HomTreePtr> all = rank::enumerate_skeletons(max_objects, max_depth);
  std::vector<rank::HomTreePtr> partners = {rank::point(), rank::strictness_witness(1),
                                            rank::strictness_witness(2)};
  auto rank_int = [](const rank::RankValue& v) {
    return v.kind == rank::RankValue::Kind::contractible ? -1 : v.n;
  };
  auto describe = [&](std::size_t i) -> std::optional<std::string> {
    const rank::HomTreePtr& x = all[i];
    rank::RankValue rx = rank::rank_of(x);
    rank::RankValue rs = rank::rank_of(rank::suspension(x));
    // The reverse hom of a suspension is empty (rank 0), so suspending a
    // contractible skeleton yields rank 1, and otherwise adds exactly one.
    int expect_s = std::max(rank_int(rx), 0) + 1;
    if (rs.kind != rank::RankValue::Kind::finite || rs.n != expect_s)
      return "suspension law fails at skeleton " + std::to_string(i) + ": " + rx.label() +
             " then " + rs.label();
    if (x->objects > 0) {
      for (const rank::HomTreePtr& y : partners) {
        rank::RankValue ry = rank::rank_of(y);
        rank::RankValue rc = rank::rank_of(rank::coproduct({x, y}));
        int expect = std::max({rank_int(rx), rank_int(ry), 1});
        if (rc.kind != rank::RankValue::Kind::finite || rc.n != expect)
          return "coproduct law fails at skeleton " + std::to_string(i);
      }
    }
    if (!(rank::rank_of(rank::coproduct({x, rank::empty_skeleton()})) == rx))
      return "coproduct with the empty skeleton changed the rank at " + std::to_string(i);
    return std::nullopt;
  };
  return run_sweep(all.size(), parallel, describe);
}

std::vector<fixpt::CoalgebraHom> locality_corpus(unsigned seed, std::size_t count) {
  auto finset = std::make_shared<cat::FinSetCat>();
  std::vector<cat::EndoPtr> functors = {
      cat::Endo::identity(finset),
      cat::Endo::constant(finset, cat::Obj(cat::FinSet::canonical(1, "k")), "const-1"),
      cat::Endo::constant(finset, cat::Obj(cat::FinSet::canonical(2, "k")), "const-2"),
  };
  std::mt19937 rng(seed);
  auto random_map = [&](const cat::Obj& src, const cat::Obj& tgt) {
    cat::FinMap m;
    for (std::size_t i = 0; i < src.set().size(); ++i)
      m.img.push_back(static_cast<int>(rng() % std::max<std::size_t>(tgt.set().size(), 1)));
    return cat::Mor(src, tgt, std::move(m));
  };
  std::vector<fixpt::CoalgebraHom> out;
  while (out.size() < count) {
    const cat::EndoPtr& F = functors[rng() % functors.size()];
    cat::Obj c{cat::FinSet::canonical(1 + rng() % 3)};
    cat::Obj d{cat::FinSet::canonical(1 + rng() % 3)};
    alg::Coalgebra src = alg::make_coalgebra(F, c, random_map(c, F->on_obj(c)));
    alg::Coalgebra dst = alg::make_coalgebra(F, d, random_map(d, F->on_obj(d)));
    // Guaranteed instance: the coaction as a homomorphism into the image
    // coalgebra, then random candidates filtered for the homomorphism law.
    alg::Coalgebra img = alg::make_coalgebra(F, F->on_obj(src.carrier),
                                             F->on_mor(src.coaction));
    out.push_back(fixpt::CoalgebraHom{src, img, src.coaction});
    if (out.size() >= count) break;
    for (int tries = 0; tries < 8 && out.size() < count; ++tries) {
      cat::Mor cand = random_map(c, d);
      if (alg::is_coalgebra_hom(cand, src, dst))
        out.push_back(fixpt::CoalgebraHom{src, dst, cand});
    }
  }
  return out;
}

SweepResult locality_sweep(unsigned seed, std::size_t count, int budget, bool parallel) {
  std::vector<fixpt::CoalgebraHom> corpus = locality_corpus(seed, count);
  auto describe = [&](std::size_t i) -> std::optional<std::string> {
    const fixpt::CoalgebraHom& phi = corpus[i];
    fixpt::LocalityVerdict direct = fixpt::is_local(phi, budget);
    fixpt::LocalityVerdict via_section = fixpt::local_via_section(phi, budget);
    if (direct.verdict == fixpt::Verdict::not_stabilized ||
        via_section.verdict == fixpt::Verdict::not_stabilized)
      return "reflection did not stabilize on corpus instance " + std::to_string(i);
    if (direct.verdict != via_section.verdict)
      return "section criterion disagrees with the direct test on instance " + std::to_string(i);
    fixpt::LocalityVerdict via_lift = fixpt::local_via_lift(phi);
    if (via_lift.verdict == fixpt::Verdict::local && direct.verdict != fixpt::Verdict::local)
      return "a lift certified a non-local homomorphism on instance " + std::to_string(i);
    return std::nullopt;
  };
  return run_sweep(corpus.size(), parallel, describe);
}

}  // namespace fixcat::sweeps
