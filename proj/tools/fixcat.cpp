#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fixcat/io.hpp"
#include "fixcat/sweeps.hpp"

using namespace fixcat;
using io::json;

namespace {

// Exit codes: 0 success/pass, 1 verdict failure, 2 input error, 3 budget
// exhausted / not stabilized.
constexpr int kOk = 0, kVerdictFail = 1, kInputError = 2, kBudget = 3;

struct Options {
  int budget = 64;
  std::size_t hom_cap = 1000000;
  std::string format = "text";
  bool trace = false;
  unsigned seed = 20240901;
  std::string corpus;
};

void emit(const Options& opt, const json& out, const std::string& text) {
  if (opt.format == "json")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text;
}

std::string chain_dot(const cat::ChainOutcome& chain, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < chain.sizes.size(); ++i)
    os << "  s" << i << " [label=\"stage " << i << " (" << chain.sizes[i] << ")\"];\n";
  for (std::size_t i = 0; i + 1 < chain.sizes.size(); ++i)
    os << "  s" << i << " -> s" << i + 1 << ";\n";
  if (chain.stabilized) {
    os << "  colim [label=\"colimit (" << chain.at << ")\"];\n";
    os << "  s" << chain.at << " -> colim;\n";
  }
  os << "}\n";
  return os.str();
}

json chain_json(const cat::ChainOutcome& chain) {
  json out;
  out["sizes"] = chain.sizes;
  out["stabilized"] = chain.stabilized;
  if (chain.stabilized) out["at"] = chain.at;
  if (!chain.report.empty()) out["report"] = chain.report;
  return out;
}

void trace_chain(const Options& opt, const cat::Category& K, const cat::ChainOutcome& chain) {
  if (!opt.trace) return;
  for (std::size_t i = 0; i < chain.stages.size(); ++i)
    std::cerr << "stage " << i << ": " << K.obj_label(chain.stages[i]) << "\n";
}

int finish_algebra_cert(const Options& opt, const std::string& op,
                        const adamek::FreeAlgebraCertificate& cert, const cat::Category& K) {
  json out;
  out["format"] = io::kFormatTag;
  out["op"] = op;
  out["chain"] = chain_json(cert.chain);
  std::ostringstream text;
  if (opt.format == "dot") {
    std::cout << chain_dot(cert.chain, "chain");
    return cert.status == adamek::Status::stabilized ? kOk : kBudget;
  }
  trace_chain(opt, K, cert.chain);
  switch (cert.status) {
    case adamek::Status::stabilized:
      out["status"] = "stabilized";
      out["carrier"] = io::save_finset(cert.result.carrier).is_array() && K.kind() == "finset"
                           ? io::save_finset(cert.result.carrier)
                           : json(K.obj_label(cert.result.carrier));
      if (K.kind() == "finset") out["action"] = io::save_finmap(cert.result.action);
      text << op << ": stabilized at stage " << cert.chain.at << ", carrier "
           << K.obj_label(cert.result.carrier) << "\n";
      emit(opt, out, text.str());
      return kOk;
    case adamek::Status::comparison_not_iso:
      out["status"] = "comparison-not-invertible";
      out["report"] = cert.report;
      text << op << ": comparison not invertible: " << cert.report << "\n";
      emit(opt, out, text.str());
      return kVerdictFail;
    default:
      out["status"] = "not-stabilized";
      out["report"] = cert.report;
      text << op << ": " << cert.report << "\n";
      emit(opt, out, text.str());
      return kBudget;
  }
}

json functor_echo(const json& file_json) {
  return file_json.contains("functor") ? file_json["functor"] : json(nullptr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixcat: chain constructions for algebras of endofunctors on finite categories"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--budget", opt.budget, "maximum chain stages");
  app.add_option("--hom-cap", opt.hom_cap, "hom enumeration cap");
  app.add_option("--format", opt.format, "output format: text|json|dot");
  app.add_flag("--trace", opt.trace, "emit per-stage traces to stderr");
  app.add_option("--seed", opt.seed, "seed for randomized sweeps");
  app.add_option("--corpus", opt.corpus, "directory of named functor specs");

  std::string functor_path, on_path, lax_path, coalgebra_path, algebra_path, hom_path;
  std::string lattice_path, map_path, cfg_path, direction = "forward", spec_path, presheaf_path;
  std::string sigma_src, sigma_tgt, sigma_obj, bound_csv = "2,2,2";
  bool want_witness = false, count_only = false;
  int max_objects = 2, max_depth = 3, probe = 3, sweep_states = 3, sweep_objects = 2;
  std::size_t corpus_count = 50;

  CLI::App* initial = app.add_subcommand("initial-algebra", "run the bottom-up chain");
  initial->add_option("--functor", functor_path, "functor spec file")->required();

  CLI::App* terminal = app.add_subcommand("terminal-coalgebra", "run the top-down chain");
  terminal->add_option("--functor", functor_path, "functor spec file")->required();

  CLI::App* freealg = app.add_subcommand("free-algebra", "free algebra on an object");
  freealg->add_option("--functor", functor_path, "functor spec file")->required();
  freealg->add_option("--on", on_path, "generator object file (finite set)")->required();

  CLI::App* freelax = app.add_subcommand("free-lax", "iterated propagation from a span");
  freelax->add_option("--lax", lax_path, "span file")->required();

  CLI::App* reflect_cmd = app.add_subcommand("reflect", "fixed point of a coalgebra");
  reflect_cmd->add_option("--coalgebra", coalgebra_path, "coalgebra file")->required();

  CLI::App* coreflect_cmd = app.add_subcommand("coreflect", "fixed point of an algebra");
  coreflect_cmd->add_option("--algebra", algebra_path, "algebra file")->required();

  CLI::App* islocal = app.add_subcommand("is-local", "locality of a coalgebra homomorphism");
  islocal->add_option("--hom", hom_path, "homomorphism file")->required();

  CLI::App* lfp_cmd = app.add_subcommand("lfp", "least fixed point of a monotone map");
  lfp_cmd->add_option("--lattice", lattice_path, "lattice file")->required();
  lfp_cmd->add_option("--map", map_path, "monotone map file")->required();

  CLI::App* gfp_cmd = app.add_subcommand("gfp", "greatest fixed point of a monotone map");
  gfp_cmd->add_option("--lattice", lattice_path, "lattice file")->required();
  gfp_cmd->add_option("--map", map_path, "monotone map file")->required();

  CLI::App* dataflow_cmd = app.add_subcommand("dataflow", "least solution of a dataflow instance");
  dataflow_cmd->add_option("--cfg", cfg_path, "graph file")->required();
  dataflow_cmd->add_option("--direction", direction, "forward|backward");

  CLI::App* sigma_cmd = app.add_subcommand("sigma", "levelwise simplex-category combinatorics");
  CLI::App* sigma_hom = sigma_cmd->add_subcommand("hom", "enumerate a hom set");
  sigma_hom->add_option("--src", sigma_src, "source entries, e.g. 1,1")->required();
  sigma_hom->add_option("--tgt", sigma_tgt, "target entries")->required();
  CLI::App* sigma_segal = sigma_cmd->add_subcommand("segal-check", "fiber-product decomposition");
  sigma_segal->add_option("--presheaf", presheaf_path, "presheaf file");
  sigma_segal->add_option("--obj", sigma_obj, "representable to check instead of a file");
  sigma_segal->add_option("--bound", bound_csv, "dim,entry,level bound");
  CLI::App* sigma_complete = sigma_cmd->add_subcommand("complete-check", "antisymmetry of 1-cells");
  sigma_complete->add_option("--obj", sigma_obj, "representable object entries")->required();
  sigma_complete->add_option("--bound", bound_csv, "dim,entry,level bound");

  CLI::App* rank_cmd = app.add_subcommand("rank", "hom-depth measure of a skeleton");
  rank_cmd->add_option("--spec", spec_path, "skeleton file")->required();

  CLI::App* noeth_cmd = app.add_subcommand("noetherian", "tower-based finiteness of a skeleton");
  noeth_cmd->add_option("--spec", spec_path, "skeleton file")->required();
  noeth_cmd->add_flag("--witness", want_witness, "emit the refuting tower if any");

  CLI::App* skel_cmd = app.add_subcommand("skeletons", "enumerate bounded skeletons");
  skel_cmd->add_option("--max-objects", max_objects, "objects per node");
  skel_cmd->add_option("--max-depth", max_depth, "height bound");
  skel_cmd->add_flag("--count", count_only, "print only the count");

  CLI::App* verify = app.add_subcommand("verify", "verification sweeps");
  CLI::App* v_lambek = verify->add_subcommand("lambek", "initiality certificate for a functor");
  v_lambek->add_option("--functor", functor_path, "functor spec file")->required();
  v_lambek->add_option("--probe", probe, "max probe carrier size");
  CLI::App* v_pfp = verify->add_subcommand("pfp", "propagation unit vs resolution sweep");
  v_pfp->add_option("--max-carrier", sweep_objects, "max span carrier size");
  CLI::App* v_llift = verify->add_subcommand("llift", "locality criteria agreement sweep");
  v_llift->add_option("--count", corpus_count, "corpus size");
  CLI::App* v_noeth = verify->add_subcommand("noeth-rank", "tower vs rank agreement sweep");
  v_noeth->add_option("--states", sweep_states, "machine states");
  v_noeth->add_option("--objects", sweep_objects, "objects per state");

  CLI11_PARSE(app, argc, argv);

  try {
    io::FunctorRegistry registry;
    if (!opt.corpus.empty()) registry = io::load_registry(opt.corpus);

    if (initial->parsed() || terminal->parsed() || freealg->parsed() || v_lambek->parsed()) {
      json j = io::load_file(functor_path);
      io::FunctorFile f = io::load_functor_file(j, registry);
      if (initial->parsed())
        return finish_algebra_cert(opt, "initial-algebra",
                                   adamek::initial_algebra(f.functor, opt.budget), *f.category);
      if (freealg->parsed()) {
        cat::Obj k = io::load_finset(io::load_file(on_path).at("elements"));
        return finish_algebra_cert(opt, "free-algebra",
                                   adamek::free_algebra(k, f.functor, opt.budget), *f.category);
      }
      if (terminal->parsed()) {
        adamek::TerminalCertificate cert = adamek::terminal_coalgebra(f.functor, opt.budget);
        json out;
        out["format"] = io::kFormatTag;
        out["op"] = "terminal-coalgebra";
        out["chain"] = chain_json(cert.chain);
        if (opt.format == "dot") {
          std::cout << chain_dot(cert.chain, "chain");
          return cert.status == adamek::Status::stabilized ? kOk : kBudget;
        }
        trace_chain(opt, *f.category, cert.chain);
        if (cert.status == adamek::Status::stabilized) {
          out["status"] = "stabilized";
          out["carrier"] = json(f.category->obj_label(cert.result.carrier));
          emit(opt, out,
               "terminal-coalgebra: stabilized at stage " + std::to_string(cert.chain.at) +
                   ", carrier " + f.category->obj_label(cert.result.carrier) + "\n");
          return kOk;
        }
        out["status"] = cert.status == adamek::Status::comparison_not_iso
                            ? "comparison-not-invertible"
                            : "not-stabilized";
        out["report"] = cert.report;
        emit(opt, out, "terminal-coalgebra: " + cert.report + "\n");
        return cert.status == adamek::Status::comparison_not_iso ? kVerdictFail : kBudget;
      }
      // verify lambek
      adamek::FreeAlgebraCertificate cert = adamek::initial_algebra(f.functor, opt.budget);
      if (cert.status != adamek::Status::stabilized) {
        emit(opt, json{{"status", "not-stabilized"}, {"report", cert.report}},
             "verify lambek: chain did not stabilize: " + cert.report + "\n");
        return kBudget;
      }
      adamek::LambekReport rep =
          adamek::lambek_verify(cert.result, static_cast<std::size_t>(probe), opt.hom_cap);
      json out{{"format", io::kFormatTag},
               {"op", "verify-lambek"},
               {"action_invertible", rep.action_iso},
               {"probed", rep.probed},
               {"failures", rep.hom_failures}};
      std::ostringstream text;
      text << (rep.ok() ? "PASS" : "FAIL") << " lambek: action "
           << (rep.action_iso ? "invertible" : "not invertible") << ", " << rep.probed
           << " probes, " << rep.hom_failures.size() << " failures\n";
      emit(opt, out, text.str());
      return rep.ok() ? kOk : kVerdictFail;
    }

    if (freelax->parsed()) {
      json j = io::load_file(lax_path);
      alg::LaxAlgebra la = io::load_lax(j, registry);
      return finish_algebra_cert(opt, "free-lax", adamek::adamek_lax(la, opt.budget),
                                 *la.functor->base);
    }

    if (reflect_cmd->parsed()) {
      json j = io::load_file(coalgebra_path);
      alg::Coalgebra c = io::load_coalgebra(j, registry);
      fixpt::ReflectOutcome r = fixpt::reflect(c, opt.budget);
      json out{{"format", io::kFormatTag}, {"op", "reflect"}, {"chain", chain_json(r.chain)}};
      trace_chain(opt, *c.functor->base, r.chain);
      if (r.status == fixpt::ReflectStatus::ok) {
        out["status"] = "ok";
        out["fixed_point"] = io::save_coalgebra(r.as_coalgebra(c.functor), functor_echo(j));
        out["unit"] = io::save_finmap(r.unit);
        emit(opt, out,
             "reflect: fixed point with carrier " +
                 c.functor->base->obj_label(r.fp.carrier) + " at stage " +
                 std::to_string(r.chain.at) + "\n");
        return kOk;
      }
      out["status"] = r.status == fixpt::ReflectStatus::comparison_not_iso
                          ? "coaction-not-invertible"
                          : "not-stabilized";
      out["report"] = r.report;
      emit(opt, out, "reflect: " + r.report + "\n");
      return r.status == fixpt::ReflectStatus::comparison_not_iso ? kVerdictFail : kBudget;
    }

    if (coreflect_cmd->parsed()) {
      json j = io::load_file(algebra_path);
      alg::Algebra a = io::load_algebra(j, registry);
      fixpt::ReflectOutcome r = fixpt::coreflect(a, opt.budget);
      json out{{"format", io::kFormatTag}, {"op", "coreflect"}, {"chain", chain_json(r.chain)}};
      if (r.status == fixpt::ReflectStatus::ok) {
        out["status"] = "ok";
        out["fixed_point"] = io::save_algebra(r.as_algebra(a.functor), functor_echo(j));
        out["counit"] = io::save_finmap(r.unit);
        emit(opt, out,
             "coreflect: fixed point with carrier " +
                 a.functor->base->obj_label(r.fp.carrier) + "\n");
        return kOk;
      }
      out["status"] = r.status == fixpt::ReflectStatus::comparison_not_iso
                          ? "comparison-not-invertible"
                          : "not-stabilized";
      out["report"] = r.report;
      emit(opt, out, "coreflect: " + r.report + "\n");
      return r.status == fixpt::ReflectStatus::comparison_not_iso ? kVerdictFail : kBudget;
    }

    if (islocal->parsed()) {
      fixpt::CoalgebraHom phi = io::load_coalgebra_hom(io::load_file(hom_path), registry);
      fixpt::LocalityVerdict v = fixpt::is_local(phi, opt.budget);
      fixpt::LocalityVerdict s = fixpt::local_via_section(phi, opt.budget, opt.hom_cap);
      json out{{"format", io::kFormatTag}, {"op", "is-local"}};
      auto name = [](fixpt::Verdict w) {
        switch (w) {
          case fixpt::Verdict::local:
            return "local";
          case fixpt::Verdict::not_local:
            return "not-local";
          case fixpt::Verdict::inconclusive:
            return "inconclusive";
          default:
            return "not-stabilized";
        }
      };
      out["verdict"] = name(v.verdict);
      out["section_criterion"] = name(s.verdict);
      if (!v.witness.empty()) out["witness"] = v.witness;
      emit(opt, out, std::string("is-local: ") + name(v.verdict) + "\n");
      if (v.verdict == fixpt::Verdict::local) return kOk;
      return v.verdict == fixpt::Verdict::not_local ? kVerdictFail : kBudget;
    }

    if (lfp_cmd->parsed() || gfp_cmd->parsed()) {
      auto l = io::load_lattice(io::load_file(lattice_path));
      lat::MonotoneMap f = io::load_monotone(io::load_file(map_path), *l);
      lat::KleeneResult r = lfp_cmd->parsed() ? lat::lfp(f) : lat::gfp(f);
      json out{{"format", io::kFormatTag},
               {"op", lfp_cmd->parsed() ? "lfp" : "gfp"},
               {"value", l->name(r.value)}};
      json trace = json::array();
      for (int x : r.trace) trace.push_back(l->name(x));
      out["trace"] = trace;
      std::ostringstream text;
      text << (lfp_cmd->parsed() ? "lfp" : "gfp") << ": " << l->name(r.value) << " (chain:";
      for (int x : r.trace) text << " " << l->name(x);
      text << ")\n";
      emit(opt, out, text.str());
      return kOk;
    }

    if (dataflow_cmd->parsed()) {
      io::DataflowFile file = io::load_dataflow(io::load_file(cfg_path));
      file.problem.forward = direction == "forward";
      lat::DataflowSolution sol = lat::dataflow_solve(file.problem, true);
      lat::DataflowSolution ref = lat::dataflow_solve_round_robin(file.problem);
      require(sol.value == ref.value, errc::bad_input,
              "parallel and reference solvers disagree (please report)");
      json table = json::object();
      std::ostringstream text;
      text << "dataflow solution (" << direction << ", " << sol.sweeps << " sweeps):\n";
      for (std::size_t i = 0; i < file.problem.node_names.size(); ++i) {
        table[file.problem.node_names[i]] = file.lattice->name(sol.value[i]);
        text << "  " << file.problem.node_names[i] << " : " << file.lattice->name(sol.value[i])
             << "\n";
      }
      emit(opt, json{{"format", io::kFormatTag}, {"op", "dataflow"}, {"solution", table}},
           text.str());
      return kOk;
    }

    if (sigma_hom->parsed()) {
      sigma::SigmaObject src = sigma::SigmaObject::parse(sigma_src);
      sigma::SigmaObject tgt = sigma::SigmaObject::parse(sigma_tgt);
      std::vector<sigma::SigmaMorphism> homs = sigma::sigma_homs(src, tgt, opt.hom_cap);
      json list = json::array();
      for (const auto& m : homs) list.push_back(m.label());
      emit(opt,
           json{{"format", io::kFormatTag},
                {"op", "sigma-hom"},
                {"count", homs.size()},
                {"morphisms", list}},
           "hom " + src.label() + " -> " + tgt.label() + ": " + std::to_string(homs.size()) +
               " morphisms\n");
      return kOk;
    }

    if (sigma_segal->parsed() || sigma_complete->parsed()) {
      sigma::Bound b;
      {
        sigma::SigmaObject parsed = sigma::SigmaObject::parse(bound_csv);
        require(parsed.dim() == 3, errc::bad_input, "bound must be dim,entry,level");
        b = sigma::Bound{parsed.entries[0], parsed.entries[1], parsed.entries[2]};
      }
      sigma::CheckReport rep;
      std::string opname;
      if (sigma_segal->parsed()) {
        opname = "segal-check";
        sigma::SigmaPresheaf p = presheaf_path.empty()
                                     ? sigma::representable(sigma::SigmaObject::parse(sigma_obj), b)
                                     : io::load_presheaf(io::load_file(presheaf_path));
        rep = sigma::segal_check(p);
      } else {
        opname = "complete-check";
        rep = sigma::completeness_check_representable(sigma::SigmaObject::parse(sigma_obj), b);
      }
      json out{{"format", io::kFormatTag},
               {"op", opname},
               {"checked", rep.checked},
               {"failures", rep.failures}};
      emit(opt, out,
           opname + ": " + (rep.ok() ? "pass" : "FAIL") + " (" + std::to_string(rep.checked) +
               " cells checked, " + std::to_string(rep.failures.size()) + " failures)\n");
      return rep.ok() ? kOk : kVerdictFail;
    }

    if (rank_cmd->parsed() || noeth_cmd->parsed()) {
      rank::RationalCat c = io::load_skeleton(io::load_file(spec_path));
      if (rank_cmd->parsed()) {
        rank::RankValue v = rank::rank_of(c);
        json out{{"format", io::kFormatTag}, {"op", "rank"}, {"rank", v.label()}};
        out["inductively_contractible"] = rank::contractible(c, rank::Mode::inductive);
        out["coinductively_contractible"] = rank::contractible(c, rank::Mode::coinductive);
        emit(opt, out, "rank: " + v.label() + "\n");
        return kOk;
      }
      rank::NoethResult r = rank::is_noetherian(c);
      json out{{"format", io::kFormatTag}, {"op", "noetherian"}, {"noetherian", r.noetherian}};
      if (want_witness && r.witness) out["witness"] = io::save_witness(*r.witness);
      emit(opt, out, std::string("noetherian: ") + (r.noetherian ? "yes" : "no") + "\n");
      return kOk;
    }

    if (skel_cmd->parsed()) {
      std::size_t count = rank::skeleton_count(max_objects, max_depth);
      json out{{"format", io::kFormatTag},
               {"op", "skeletons"},
               {"max_objects", max_objects},
               {"max_depth", max_depth},
               {"count", count}};
      if (!count_only && count <= 64) {
        std::vector<rank::HomTreePtr> all = rank::enumerate_skeletons(max_objects, max_depth);
        json list = json::array();
        for (const auto& t : all) list.push_back(io::save_tree(t));
        out["skeletons"] = list;
      }
      emit(opt, out, "skeletons(" + std::to_string(max_objects) + "," +
                         std::to_string(max_depth) + "): " + std::to_string(count) + "\n");
      return kOk;
    }

    auto finish_sweep = [&](const std::string& name, const sweeps::SweepResult& res) {
      json out{{"format", io::kFormatTag},
               {"op", name},
               {"checked", res.checked},
               {"failed", res.failed},
               {"examples", res.examples}};
      std::ostringstream text;
      text << (res.ok() ? "PASS" : "FAIL") << " " << name << ": " << res.checked
           << " instances, " << res.failed << " failures\n";
      for (const std::string& e : res.examples) text << "  " << e << "\n";
      emit(opt, out, text.str());
      return res.ok() ? kOk : kVerdictFail;
    };

    if (v_pfp->parsed()) {
      auto finset = std::make_shared<cat::FinSetCat>();
      std::vector<cat::EndoPtr> fs = {
          cat::Endo::identity(finset),
          cat::Endo::constant(finset, cat::Obj(cat::FinSet::canonical(1, "k")), "const-1"),
          cat::Endo::constant(finset, cat::Obj(cat::FinSet::canonical(2, "k")), "const-2"),
          cat::Endo::poly_sizes(finset, {{1, 1}, {1, 0}}, "x-plus-1"),
      };
      return finish_sweep("verify-pfp",
                          sweeps::propagation_sweep(fs, static_cast<std::size_t>(sweep_objects), true));
    }
    if (v_llift->parsed())
      return finish_sweep("verify-llift",
                          sweeps::locality_sweep(opt.seed, corpus_count, opt.budget, true));
    if (v_noeth->parsed())
      return finish_sweep("verify-noeth-rank",
                          sweeps::machine_sweep(sweep_states, sweep_objects, true));

    std::cerr << "no subcommand handled\n";
    return kInputError;
  } catch (const failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == errc::budget_exceeded) return kBudget;
    std::cerr << "schemas: see the schemas/ directory of the distribution\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
