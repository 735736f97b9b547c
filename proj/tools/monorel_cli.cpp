// monorel: classify linear monotone subspaces and double-cones, evaluate
// their Fitzpatrick and Penot functions, and run the brute-force oracles.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "monorel/doublecone.hpp"
#include "monorel/gossez.hpp"
#include "monorel/linsub.hpp"
#include "monorel/oracle.hpp"
#include "monorel/problem_io.hpp"
#include "monorel/report_io.hpp"

using namespace monorel;
using nlohmann::json;

namespace {

constexpr int kInputError = 1;
constexpr int kInternalError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  std::string grid_radius = "4";
  bool json = false;

  ProbeConfig probe() const {
    ProbeConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.grid_radius = parse_scalar(grid_radius);
    if (cfg.grid_radius <= 0) throw InputError("--grid-radius must be positive");
    if (samples == 0) throw InputError("--samples must be positive");
    return cfg;
  }
};

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json) std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

int cmd_classify(const Options& opt, const std::string& path) {
  const Problem p = read_problem_file(path);
  ClassificationReport r;
  if (const auto* s = std::get_if<SubspaceProblem>(&p)) {
    r = classify(s->subspace());
  } else if (const auto* c = std::get_if<ConeProblem>(&p)) {
    r = dc_classify(c->cone(), opt.probe());
  } else {
    throw InputError("classify needs a subspace or doublecone file");
  }
  if (!r.consistent()) throw std::logic_error("classification report violates its own implications");
  emit(opt, report_json(r, kind_name(p)), report_text(r, kind_name(p)));
  return 0;
}

int cmd_eval(const Options& opt, const std::string& path, const std::string& point, const std::string& which) {
  const Problem p = read_problem_file(path);
  json j{{"which", which}};
  std::ostringstream os;
  std::string value;

  if (const auto* s = std::get_if<SubspaceProblem>(&p)) {
    const Subspace l = s->subspace();
    const Point z = parse_point(point, l.n());
    const bool monotone = is_monotone(l).monotone;
    if (which == "fitz") {
      value = to_string(fitz_eval(l, z));
      if (!monotone) j["note"] = "not monotone: phi is identically +inf";
    } else if (which == "sigma") {
      const FitzValue phi = fitz_eval(l, z);
      value = phi.is_finite() ? to_string(Scalar(4 * phi.value())) : "inf";
    } else {
      value = to_string(penot_eval(l, z));
    }
    j["in_set"] = l.contains(z);
    if (monotone) {
      const FitzpatrickForm form(l);
      j["in_fitz_domain"] = form.in_domain(z);
      j["in_plus"] = form.in_plus(z);
    }
  } else if (const auto* c = std::get_if<ConeProblem>(&p)) {
    const DoubleCone d = c->cone();
    const Point z = parse_point(point, d.n());
    if (which == "fitz") {
      value = to_string(dc_fitz_eval(d, z));
    } else if (which == "sigma") {
      value = to_string(dc_sigma_sq(d, z));
    } else if (d.is_subspace_shaped()) {
      value = to_string(penot_eval(dc_lin_hull(d), z));
    } else {
      if (!dc_is_monotone(d).monotone) throw NotMonotone("Penot function of a non-monotone cone is improper");
      try {
        const PenotEstimate e = oracle_penot_cone(d, z, opt.probe());
        std::ostringstream v;
        v.precision(17);
        v << e.value;
        value = v.str();
        j["approximate"] = true;
        j["residual"] = e.residual;
      } catch (const Infeasible&) {
        value = "inf";
      }
    }
    j["in_set"] = d.contains(z);
    j["in_fitz_domain"] = dc_fitz_eval(d, z).is_finite();
    j["in_plus"] = dc_in_plus(d, z);
  } else {
    throw InputError("eval needs a subspace or doublecone file");
  }

  j["value"] = value;
  os << which << " " << value << '\n';
  for (const char* key : {"in_set", "in_fitz_domain", "in_plus"}) {
    if (j.contains(key)) os << key << " " << yes_no(j[key].get<bool>()) << '\n';
  }
  if (j.contains("approximate")) os << "approximate (floating point)\n";
  if (j.contains("note")) os << "note " << j["note"].get<std::string>() << '\n';
  emit(opt, j, os.str());
  return 0;
}

int cmd_extend(const Options& opt, const std::string& path) {
  const Problem p = read_problem_file(path);
  const auto* s = std::get_if<SubspaceProblem>(&p);
  if (!s) throw InputError("extend needs a subspace file");
  const Subspace l = s->subspace();
  const Subspace m = extend_maximal(l);
  const ClassificationReport check = classify(m);
  const bool contains = m.contains(l);
  json j{{"input", subspace_json(l)}, {"extension", subspace_json(m)}, {"contains_input", contains},
         {"verification", report_json(check, "subspace")}};
  std::string text = subspace_text(m) + "contains_input " + yes_no(contains) + "\nverified maximal " +
                     yes_no(check.maximal.value) + '\n';
  if (!contains || !check.maximal.value) throw std::logic_error("extension failed its own verification");
  emit(opt, j, text);
  return 0;
}

int cmd_mrt(const Options& opt, const std::string& path, const std::string& point) {
  const Problem p = read_problem_file(path);
  bool related;
  if (const auto* s = std::get_if<SubspaceProblem>(&p)) {
    const Subspace l = s->subspace();
    related = in_plus(l, parse_point(point, l.n()));
  } else if (const auto* c = std::get_if<ConeProblem>(&p)) {
    const DoubleCone d = c->cone();
    related = dc_in_plus(d, parse_point(point, d.n()));
  } else {
    throw InputError("mrt needs a subspace or doublecone file");
  }
  emit(opt, json{{"in_plus", related}}, "in_plus " + yes_no(related) + '\n');
  return 0;
}

int cmd_sum(const Options& opt, const std::string& path) {
  const Problem p = read_problem_file(path);
  const auto* s = std::get_if<SumProblem>(&p);
  if (!s) throw InputError("sum needs a sum file");
  const Subspace r = s->result();
  const ClassificationReport rep = classify(r);
  emit(opt, json{{"result", subspace_json(r)}, {"classification", report_json(rep, "subspace")}},
       subspace_text(r) + report_text(rep, "subspace"));
  return 0;
}

int cmd_gossez_apply(const Options& opt, const std::string& seq) {
  const FinSeq x = parse_sequence(seq);
  const EvConstSeq y = gossez_apply(x);
  emit(opt, sequence_json(y), sequence_text(y));
  return 0;
}

int cmd_gossez_identities(const Options& opt, const FinSeq& x, const FinSeq& v) {
  const GossezReport r = check_identities(x, v);
  emit(opt, gossez_json(r), gossez_text(r));
  return r.all_passed() ? 0 : kInternalError;
}

int cmd_oracle(const Options& opt, const std::string& path, const std::string& point) {
  const Problem p = read_problem_file(path);
  const ProbeConfig cfg = opt.probe();
  json j;
  std::ostringstream os;
  os.precision(17);

  if (const auto* s = std::get_if<SubspaceProblem>(&p)) {
    const Subspace l = s->subspace();
    if (!is_monotone(l).monotone) throw NotMonotone("the oracle probes need a monotone subspace");
    const MaximalProbe mp = oracle_maximal_probe(l, cfg);
    j["maximal_probe"] = {{"passed", mp.passed}, {"probes", mp.probes}};
    os << "maximal_probe " << (mp.passed ? "passed" : "extension found") << " after " << mp.probes << " probes\n";
    if (mp.witness) {
      j["maximal_probe"]["witness"] = point_json(*mp.witness);
      os << "witness " << format_point(*mp.witness) << '\n';
    }
    if (!point.empty()) {
      const Point z = parse_point(point, l.n());
      const SupEstimate e = oracle_fitz_sup(l, z, cfg);
      j["fitz_sup"] = {{"value", e.diverged ? json("inf") : json(e.value)}, {"diverged", e.diverged},
                       {"evaluations", e.evaluations}, {"exact", to_string(fitz_eval(l, z))}};
      os << "fitz_sup ";
      if (e.diverged) os << "inf";
      else os << e.value;
      os << " (exact "
         << to_string(fitz_eval(l, z)) << ")\n";
    }
  } else if (const auto* c = std::get_if<ConeProblem>(&p)) {
    const DoubleCone d = c->cone();
    const PointSource source = [&d, &cfg](Rng& rng) -> std::optional<Point> {
      const auto& gens = d.generators();
      const std::size_t lines = gens.size() + (d.skew().dim() > 0 ? 1 : 0);
      if (lines == 0) return Point::zero(d.n());
      const auto pick = std::uniform_int_distribution<std::size_t>(0, lines - 1)(rng);
      if (pick < gens.size()) return gens[pick].z.scaled(grid_scalar(rng, cfg.grid_radius));
      return d.skew().point(grid_vector(rng, d.skew().dim(), cfg.grid_radius));
    };
    const ProbeOutcome mo = oracle_monotone_pairs(source, cfg);
    j["monotone_pairs"] = {{"passed", mo.passed}, {"probes", mo.probes}};
    os << "monotone_pairs " << (mo.passed ? "passed" : "violated") << " after " << mo.probes << " probes\n";
    if (mo.witness) {
      j["monotone_pairs"]["witness"] = json::array({point_json(mo.witness->first), point_json(mo.witness->second)});
      os << "witness " << format_point(mo.witness->first) << " " << format_point(mo.witness->second) << '\n';
    }
    if (!point.empty()) {
      const Point z = parse_point(point, d.n());
      try {
        const PenotEstimate e = oracle_penot_cone(d, z, cfg);
        j["penot"] = {{"value", e.value}, {"residual", e.residual}};
        os << "penot " << e.value << " (residual " << e.residual << ")\n";
      } catch (const Infeasible&) {
        j["penot"] = {{"value", "inf"}};
        os << "penot inf\n";
      }
    }
  } else {
    throw InputError("oracle needs a subspace or doublecone file");
  }
  emit(opt, j, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of linear monotone subspaces and double-cones"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--seed", opt.seed, "Probe seed")->capture_default_str();
  app.add_option("--samples", opt.samples, "Probe sample count")->capture_default_str();
  app.add_option("--grid-radius", opt.grid_radius, "Probe grid radius, p/q")->capture_default_str();
  app.add_flag("--json", opt.json, "Structured output");
  app.fallthrough();

  std::string file, point, which = "fitz", seq, xs, vs;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a subspace or double-cone");
  classify_cmd->add_option("file", file, "Problem file")->required();

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate phi, psi or sigma^2 at a point");
  eval_cmd->add_option("file", file, "Problem file")->required();
  eval_cmd->add_option("--point", point, "2n rationals, e.g. \"1,3\"")->required();
  eval_cmd->add_option("--which", which, "fitz | penot | sigma")->check(CLI::IsMember({"fitz", "penot", "sigma"}));

  auto* extend_cmd = app.add_subcommand("extend", "Maximal monotone extension of a subspace");
  extend_cmd->add_option("file", file, "Problem file")->required();

  auto* mrt_cmd = app.add_subcommand("mrt", "Is the point monotonically related to the set");
  mrt_cmd->add_option("file", file, "Problem file")->required();
  mrt_cmd->add_option("--point", point, "2n rationals")->required();

  auto* sum_cmd = app.add_subcommand("sum", "M + A^T N A for a sum file");
  sum_cmd->add_option("file", file, "Problem file")->required();

  auto* gossez_cmd = app.add_subcommand("gossez", "Identities of the Gossez operator on finite sequences");
  gossez_cmd->require_subcommand(1);
  auto* g_apply = gossez_cmd->add_subcommand("apply", "T x for x given as \"i:v,...\"");
  g_apply->add_option("x", seq, "Sequence")->required();
  auto* g_ident = gossez_cmd->add_subcommand("identities", "Check every identity for x and v");
  g_ident->add_option("x", xs, "Sequence x")->required();
  g_ident->add_option("v", vs, "Sequence v")->required();
  auto* g_check = gossez_cmd->add_subcommand("check", "Check the identities for a gossez file");
  g_check->add_option("file", file, "Problem file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Run the brute-force probes");
  oracle_cmd->add_option("file", file, "Problem file")->required();
  oracle_cmd->add_option("--point", point, "Also estimate phi (subspace) or psi (double-cone) here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*classify_cmd) return cmd_classify(opt, file);
    if (*eval_cmd) return cmd_eval(opt, file, point, which);
    if (*extend_cmd) return cmd_extend(opt, file);
    if (*mrt_cmd) return cmd_mrt(opt, file, point);
    if (*sum_cmd) return cmd_sum(opt, file);
    if (*g_apply) return cmd_gossez_apply(opt, seq);
    if (*g_ident) return cmd_gossez_identities(opt, parse_sequence(xs), parse_sequence(vs));
    if (*g_check) {
      const Problem p = read_problem_file(file);
      const auto* g = std::get_if<GossezProblem>(&p);
      if (!g) throw InputError("gossez check needs a gossez file");
      return cmd_gossez_identities(opt, g->x, g->v);
    }
    if (*oracle_cmd) return cmd_oracle(opt, file, point);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const EmptyPositivePart& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NotMonotone& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}
