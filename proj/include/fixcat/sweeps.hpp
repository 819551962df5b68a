#pragma once

#include "fixcat/adamek.hpp"
#include "fixcat/fixpoint.hpp"
#include "fixcat/kleene.hpp"
#include "fixcat/rank.hpp"

namespace fixcat::sweeps {

// Exhaustive verification kernels.  Each sweep is data-parallel over its
// instance space: `parallel` switches between the OpenMP path and the plain
// serial loop, which produce identical results (tests compare them, the
// benchmark times them).
struct SweepResult {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> examples;  // first few failure descriptions

  bool ok() const { return failed == 0; }
};

// Least/greatest fixed points of every monotone endofunction on every
// lattice with at most `max_size` elements, each computed three ways: by
// iteration, by exhaustive fixed-point scan, and through the thin-category
// chain drivers.
SweepResult lattice_kleene_sweep(std::size_t max_size, bool parallel);

// Over every span on canonical carriers up to `max_carrier`: the propagation
// unit is a componentwise isomorphism exactly when the resolution is.
SweepResult propagation_sweep(const std::vector<cat::EndoPtr>& functors, std::size_t max_carrier,
                              bool parallel);

// Over the full machine space: the tower-based and rank-based decision
// procedures agree.
SweepResult machine_sweep(int num_states, int max_objects, bool parallel);

// Over the full skeleton enumeration: the suspension adds exactly one to the
// rank (with contractible read as -1), and binary coproducts of nonempty
// skeletons have rank max(r1, r2, 1).
SweepResult skeleton_rank_sweep(int max_objects, int max_depth, bool parallel);

// A seeded corpus of at least `count` coalgebra homomorphisms with
// stabilizing reflections: the section criterion must agree with the direct
// locality test on every instance, and a found lift must never contradict it.
SweepResult locality_sweep(unsigned seed, std::size_t count, int budget, bool parallel);

// Generator shared with the acceptance suite.
std::vector<fixpt::CoalgebraHom> locality_corpus(unsigned seed, std::size_t count);

}  // namespace fixcat::sweeps
