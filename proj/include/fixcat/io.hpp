#pragma once

#include <map>
#include <memory>
#include <string>

#include <json.hpp>

#include "fixcat/algebra.hpp"
#include "fixcat/fixpoint.hpp"
#include "fixcat/kleene.hpp"
#include "fixcat/lattice_cat.hpp"
#include "fixcat/rank.hpp"
#include "fixcat/sigma.hpp"

namespace fixcat::io {

using json = nlohmann::json;

inline constexpr const char* kFormatTag = "fixcat/1";

// Named functor specs resolved when an artifact references its functor by
// name rather than inline.
using FunctorRegistry = std::map<std::string, cat::EndoPtr>;

void check_format(const json& j);

// {"kind": "finset"} | {"kind": "lattice", "elements": [...], "hasse": [...]}
// | {"kind": "presented", ...}
cat::CategoryPtr load_category(const json& j);

// Functor description over a base category; either inline or a registry name.
cat::EndoPtr load_functor(const json& j, const cat::CategoryPtr& base,
                          const FunctorRegistry& registry = {});

struct FunctorFile {
  cat::CategoryPtr category;
  cat::EndoPtr functor;
};
FunctorFile load_functor_file(const json& j, const FunctorRegistry& registry = {});

cat::Obj load_finset(const json& j);                 // ["a","b"] or a size
cat::Mor load_finmap(const json& j, const cat::Obj& src, const cat::Obj& tgt);
json save_finset(const cat::Obj& x);
json save_finmap(const cat::Mor& m);

alg::Algebra load_algebra(const json& j, const FunctorRegistry& registry = {});
alg::Coalgebra load_coalgebra(const json& j, const FunctorRegistry& registry = {});
alg::LaxAlgebra load_lax(const json& j, const FunctorRegistry& registry = {});
fixpt::CoalgebraHom load_coalgebra_hom(const json& j, const FunctorRegistry& registry = {});

json save_algebra(const alg::Algebra& a, const json& functor_desc);
json save_coalgebra(const alg::Coalgebra& c, const json& functor_desc);

std::shared_ptr<lat::FiniteLattice> load_lattice(const json& j);
lat::MonotoneMap load_monotone(const json& j, const lat::FiniteLattice& l);
json save_lattice(const lat::FiniteLattice& l);
json save_monotone(const lat::MonotoneMap& m);

struct DataflowFile {
  std::shared_ptr<lat::FiniteLattice> lattice;
  lat::DataflowProblem problem;
};
DataflowFile load_dataflow(const json& j);

rank::HomTreePtr load_tree(const json& j);
rank::RationalCat load_rational(const json& j);
// Either encoding: {"kind": "tree", ...} or {"kind": "rational", ...}.
rank::RationalCat load_skeleton(const json& j);
json save_tree(const rank::HomTreePtr& t);
json save_rational(const rank::RationalCat& c);
json save_witness(const rank::TowerWitness& w);

sigma::SigmaPresheaf load_presheaf(const json& j);
json save_presheaf(const sigma::SigmaPresheaf& p);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

// Loads every *.json functor file in a directory into a registry keyed by
// functor name.
FunctorRegistry load_registry(const std::string& dir);

}  // namespace fixcat::io
