#include "fixcat/chain.hpp"

#include <sstream>

namespace fixcat::cat {

namespace {

// Composite links[from] .. links[to-1] as a map stages[from] -> stages[to].
Mor forward_composite(const Category& K, const std::vector<Obj>& stages,
                      const std::vector<Mor>& links, std::size_t from, std::size_t to) {
  Mor acc = K.identity(stages[from]);
  for (std::size_t i = from; i < to; ++i) acc = K.compose(links[i], acc);
  return acc;
}

// Composite links[to-1] .. links[from] as a map stages[to] -> stages[from]
// for a backwards chain (links[i]: stages[i+1] -> stages[i]).
Mor backward_composite(const Category& K, const std::vector<Obj>& stages,
                       const std::vector<Mor>& links, std::size_t from, std::size_t to) {
  Mor acc = K.identity(stages[to]);
  for (std::size_t i = to; i > from; --i) acc = K.compose(links[i - 1], acc);
  return acc;
}

struct Detection {
  int at = -1;
  Obj value;
  std::vector<Mor> legs;
};

// Tries both stabilization certificates on the current prefix, ending at
// link index `i` (so stages 0..i+1 exist).
std::optional<Detection> detect_colimit(const Category& K, const std::vector<Obj>& stages,
                                        const std::vector<Mor>& links, std::size_t i,
                                        bool functor_generated) {
  if (i < 1) return std::nullopt;
  if (K.is_iso(links[i - 1]) && K.is_iso(links[i])) {
    // Every remaining link in the window must stay invertible, otherwise the
    // chain demonstrably keeps moving and this position is not stable.
    Detection d;
    d.at = static_cast<int>(i) - 1;
    d.value = stages[i - 1];
    std::vector<Mor> back;  // back[k]: stages[i-1+k+1] -> stages[i-1], composed inverses
    Mor acc = K.identity(stages[i - 1]);
    for (std::size_t k = i - 1; k + 1 < stages.size(); ++k) {
      std::optional<Mor> inv = K.inverse(links[k]);
      if (!inv) return std::nullopt;
      acc = K.compose(acc, *inv);
      back.push_back(acc);
    }
    for (std::size_t j = 0; j < stages.size(); ++j) {
      if (j <= i - 1)
        d.legs.push_back(forward_composite(K, stages, links, j, i - 1));
      else
        d.legs.push_back(back[j - i]);
    }
    return d;
  }
  if (functor_generated && stages[i - 1] == stages[i] && links[i - 1] == links[i]) {
    // The whole window must repeat the same endomorphism.
    for (std::size_t k = i; k < links.size(); ++k)
      if (!(stages[k] == stages[i - 1] && links[k] == links[i - 1])) return std::nullopt;
    std::optional<EndoQuotient> eq = K.endo_quotient(links[i]);
    if (eq) {
      Detection d;
      d.at = static_cast<int>(i) - 1;
      d.value = eq->quotient;
      for (std::size_t j = 0; j < stages.size(); ++j) {
        if (j >= i - 1)
          d.legs.push_back(eq->q);  // q absorbs the repeated link
        else
          d.legs.push_back(K.compose(eq->q, forward_composite(K, stages, links, j, i - 1)));
      }
      return d;
    }
  }
  return std::nullopt;
}

std::optional<Detection> detect_limit(const Category& K, const std::vector<Obj>& stages,
                                      const std::vector<Mor>& links, std::size_t i,
                                      bool functor_generated) {
  if (i < 1) return std::nullopt;
  if (K.is_iso(links[i - 1]) && K.is_iso(links[i])) {
    Detection d;
    d.at = static_cast<int>(i) - 1;
    d.value = stages[i - 1];
    std::vector<Mor> back;  // back[k]: stages[i-1] -> stages[i-1+k+1], composed inverses
    Mor acc = K.identity(stages[i - 1]);
    for (std::size_t k = i - 1; k + 1 < stages.size(); ++k) {
      std::optional<Mor> inv = K.inverse(links[k]);
      if (!inv) return std::nullopt;
      acc = K.compose(*inv, acc);
      back.push_back(acc);
    }
    for (std::size_t j = 0; j < stages.size(); ++j) {
      if (j <= i - 1)
        d.legs.push_back(backward_composite(K, stages, links, j, i - 1));
      else
        d.legs.push_back(back[j - i]);
    }
    return d;
  }
  if (functor_generated && stages[i - 1] == stages[i] && links[i - 1] == links[i]) {
    for (std::size_t k = i; k < links.size(); ++k)
      if (!(stages[k] == stages[i - 1] && links[k] == links[i - 1])) return std::nullopt;
    std::optional<EndoStablePart> sp = K.endo_stable_part(links[i]);
    if (sp) {
      std::optional<Mor> auto_inv = K.inverse(sp->autom);
      if (!auto_inv) return std::nullopt;
      Detection d;
      d.at = static_cast<int>(i) - 1;
      d.value = sp->part;
      // Leg to the repeat stage is the inclusion; each later stage unwinds
      // the automorphism once more, each earlier stage composes with links.
      for (std::size_t j = 0; j < stages.size(); ++j) {
        if (j >= i - 1) {
          Mor acc = K.identity(sp->part);
          for (std::size_t k = i - 1; k < j; ++k) acc = K.compose(*auto_inv, acc);
          d.legs.push_back(K.compose(sp->incl, acc));
        } else {
          d.legs.push_back(K.compose(backward_composite(K, stages, links, j, i - 1), sp->incl));
        }
      }
      return d;
    }
  }
  return std::nullopt;
}

std::string not_stabilized_report(const std::vector<std::size_t>& sizes, int budget) {
  std::ostringstream os;
  os << "not stabilized within " << budget << " stages; " << describe_growth(sizes);
  return os.str();
}

}  // namespace

std::string describe_growth(const std::vector<std::size_t>& sizes) {
  bool strictly = true, weakly = true, constant = true;
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) strictly = false;
    if (sizes[i] < sizes[i - 1]) weakly = false;
    if (sizes[i] != sizes[i - 1]) constant = false;
  }
  std::ostringstream os;
  os << "stage sizes";
  for (std::size_t s : sizes) os << " " << s;
  if (constant)
    os << " (constant)";
  else if (strictly)
    os << " (strictly increasing)";
  else if (weakly)
    os << " (non-decreasing)";
  else
    os << " (fluctuating)";
  return os.str();
}

ChainOutcome chain_colimit(const Category& K, const Obj& start, const LinkGen& next, int budget,
                           bool functor_generated) {
  ChainOutcome out;
  out.stages.push_back(start);
  out.sizes.push_back(K.obj_size(start));
  for (int i = 0; static_cast<int>(out.stages.size()) < budget; ++i) {
    Mor link = next(i, out.stages.back());
    require(link.src == out.stages.back(), errc::ill_typed,
            "chain link source does not match the current stage");
    out.links.push_back(link);
    out.stages.push_back(link.tgt);
    out.sizes.push_back(K.obj_size(link.tgt));
    if (auto d = detect_colimit(K, out.stages, out.links, out.links.size() - 1, functor_generated)) {
      out.stabilized = true;
      out.at = d->at;
      out.value = d->value;
      out.legs = d->legs;
      return out;
    }
  }
  out.budget_exceeded = true;
  out.report = not_stabilized_report(out.sizes, budget);
  return out;
}

ChainOutcome chain_limit(const Category& K, const Obj& start, const LinkGen& next, int budget,
                         bool functor_generated) {
  ChainOutcome out;
  out.stages.push_back(start);
  out.sizes.push_back(K.obj_size(start));
  for (int i = 0; static_cast<int>(out.stages.size()) < budget; ++i) {
    Mor link = next(i, out.stages.back());
    require(link.tgt == out.stages.back(), errc::ill_typed,
            "chain link target does not match the current stage");
    out.links.push_back(link);
    out.stages.push_back(link.src);
    out.sizes.push_back(K.obj_size(link.src));
    if (auto d = detect_limit(K, out.stages, out.links, out.links.size() - 1, functor_generated)) {
      out.stabilized = true;
      out.at = d->at;
      out.value = d->value;
      out.legs = d->legs;
      return out;
    }
  }
  out.budget_exceeded = true;
  out.report = not_stabilized_report(out.sizes, budget);
  return out;
}

ChainOutcome chain_colimit_prefix(const Category& K, const std::vector<Obj>& stages,
                                  const std::vector<Mor>& links, bool functor_generated) {
  require(!stages.empty() && links.size() + 1 == stages.size(), errc::bad_input,
          "chain prefix shape mismatch");
  ChainOutcome out;
  out.stages = stages;
  out.links = links;
  for (const Obj& s : stages) out.sizes.push_back(K.obj_size(s));
  // Detect at the earliest certificate position, but keep legs for the whole
  // prefix so cocones over every provided stage can be mediated.
  for (std::size_t i = 1; i < links.size(); ++i) {
    if (auto d = detect_colimit(K, out.stages, out.links, i, functor_generated)) {
      out.stabilized = true;
      out.at = d->at;
      out.value = d->value;
      out.legs = d->legs;
      return out;
    }
  }
  out.budget_exceeded = true;
  out.report = not_stabilized_report(out.sizes, static_cast<int>(stages.size()));
  return out;
}

std::optional<Mor> colimit_mediate(const Category& K, const ChainOutcome& colim,
                                   const std::vector<Mor>& cocone, const Obj& target) {
  if (!colim.stabilized) return std::nullopt;
  std::size_t n = std::min(cocone.size(), colim.legs.size());
  if (n <= static_cast<std::size_t>(colim.at)) return std::nullopt;
  std::optional<Mor> u = K.factor_through(colim.legs[colim.at], cocone[colim.at]);
  if (!u) return std::nullopt;
  for (std::size_t j = 0; j < n; ++j)
    if (!(K.compose(*u, colim.legs[j]) == cocone[j])) return std::nullopt;
  (void)target;
  return u;
}

std::optional<Mor> limit_mediate(const Category& K, const ChainOutcome& lim,
                                 const std::vector<Mor>& cone, const Obj& source) {
  if (!lim.stabilized) return std::nullopt;
  std::size_t n = std::min(cone.size(), lim.legs.size());
  if (n <= static_cast<std::size_t>(lim.at)) return std::nullopt;
  std::optional<Mor> u = K.corestrict_through(lim.legs[lim.at], cone[lim.at]);
  if (!u) return std::nullopt;
  for (std::size_t j = 0; j < n; ++j)
    if (!(K.compose(lim.legs[j], *u) == cone[j])) return std::nullopt;
  (void)source;
  return u;
}

}  // namespace fixcat::cat
