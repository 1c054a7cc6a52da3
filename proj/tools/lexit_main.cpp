// lexit: generate, label and search downward lattice graphs; build subset-sum
// instances from regressively regular bi-arrays.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lexit/biarray.hpp"
#include "lexit/committee.hpp"
#include "lexit/generate.hpp"
#include "lexit/graph.hpp"
#include "lexit/json_io.hpp"
#include "lexit/labelers.hpp"
#include "lexit/regularity.hpp"

namespace {

using namespace lexit;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitBudget = 2;

struct CommonOpts {
  int k = 2;
  int p = 3;
  Coord bound = 8;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::string labeler = "t_hat";
  std::string selection;  // inline JSON
  std::string rho = "min";
  std::string out;
  std::string in;
  std::string labels_path;
  std::uint64_t budget = 100000;
  int jobs = 1;
  bool oracle = false;
  int p_max = 0;
  std::vector<Value> E;
};

std::uint64_t effective_budget(std::uint64_t flag_value) {
  if (const char* env = std::getenv("LEL_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (...) {
      raise(Errc::bad_config, "LEL_BUDGET is not a number");
    }
  }
  return flag_value;
}

SelectionFunction make_selection(const CommonOpts& o) {
  if (o.selection.empty()) return total_min_selection();
  return selection_from_json(Json::parse(o.selection));
}

RhoFunction make_rho(const CommonOpts& o) {
  if (o.rho == "min") return RhoFunction::min();
  if (o.rho == "sum") return RhoFunction::sum();
  raise(Errc::bad_config, "unknown rho '" + o.rho + "'");
}

Labeler make_labeler(const CommonOpts& o) {
  if (o.labeler == "p") return [](const LatticeDigraph& g) { return p_total(g); };
  if (o.labeler == "p_hat") return [](const LatticeDigraph& g) { return p_hat(g); };
  if (o.labeler == "t_hat") {
    if (o.oracle) {
      std::uint64_t paths = effective_budget(o.budget);
      return Labeler([paths](const LatticeDigraph& g) { return t_hat_oracle(g, paths); });
    }
    return [](const LatticeDigraph& g) { return t_hat(g); };
  }
  if (o.labeler == "s_hat") {
    SelectionFunction F = make_selection(o);
    return [F](const LatticeDigraph& g) { return s_hat(g, F); };
  }
  if (o.labeler == "h_rho") {
    SelectionFunction F = make_selection(o);
    RhoFunction rho = make_rho(o);
    return [F, rho](const LatticeDigraph& g) { return h_rho(g, F, rho); };
  }
  raise(Errc::bad_config, "unknown labeler '" + o.labeler + "'");
}

void emit(const Json& j, const std::string& out) {
  if (out.empty())
    std::cout << dumps(j);
  else
    dump_file(j, out);
}

int cmd_gen(const CommonOpts& o) {
  LatticeDigraph g = random_downward(o.k, o.bound, o.density, o.seed);
  emit(graph_to_json(g), o.out);
  return kExitOk;
}

int cmd_label(const CommonOpts& o) {
  LatticeDigraph g = graph_from_json(load_file(o.in));
  LabelMap f = make_labeler(o)(g);
  Significant sig = significant(f);
  std::cout << "labeler=" << o.labeler << (o.oracle ? " (oracle)" : "")
            << " vertices=" << g.size() << " significant=" << sig.vertices.size()
            << " labels={";
  bool first = true;
  for (Value v : sig.labels) {
    if (!first) std::cout << ",";
    std::cout << v;
    first = false;
  }
  std::cout << "}\n";
  if (!o.out.empty()) dump_file(labels_to_json(f), o.out);
  return kExitOk;
}

int cmd_search(const CommonOpts& o) {
  FamilySpec family =
      o.labels_path.empty()
          ? FamilySpec::from_rule(o.k, EdgeRule::seeded_random(o.density, 0, o.seed),
                                  make_labeler(o))
          : FamilySpec::fixed(o.k, labels_from_json(load_file(o.labels_path)));
  SearchOutcome res =
      search_regular_E(family, o.p, o.bound, effective_budget(o.budget), o.jobs);
  switch (res.status) {
    case SearchStatus::found: {
      std::cout << "regular E found after " << res.cubes_examined << " cubes: {";
      for (std::size_t i = 0; i < res.E->size(); ++i)
        std::cout << (i ? "," : "") << (*res.E)[i];
      std::cout << "}\n";
      if (!o.out.empty()) dump_file(report_to_json(*res.report), o.out);
      return kExitOk;
    }
    case SearchStatus::range_exhausted:
      std::cout << "range exhausted after " << res.cubes_examined
                << " cubes; no regular E\n";
      return kExitOk;
    case SearchStatus::budget_exhausted:
      std::cout << "budget exhausted after " << res.cubes_examined << " cubes\n";
      return kExitBudget;
  }
  return kExitValidation;
}

int one_subsetsum(const CommonOpts& o, int p, const std::string& out_path) {
  std::optional<PipelineRun> run;
  if (!o.labels_path.empty()) {
    if (o.E.empty()) raise(Errc::bad_config, "--labels needs --E");
    CappedBiArray B = biarray_from_labels(labels_from_json(load_file(o.labels_path)), o.E, o.k);
    PipelineRun r;
    r.report = is_regressively_regular(B.labels, B.E, o.k);
    if (!r.report.regular) raise(Errc::not_regular, "injected labels are not regular");
    r.E = B.E;
    r.instance = build_instance(B);
    r.first_column_solvable = verify_first_column(B);
    r.biarray = std::move(B);
    r.solved = solve_subset_sum(r.instance, r.instance.items.size() <= 24
                                                ? SolveMode::count
                                                : SolveMode::decide);
    run = std::move(r);
  } else {
    PipelineConfig cfg;
    cfg.k = o.k;
    cfg.p = p;
    cfg.coord_bound = o.bound;
    cfg.density = o.density;
    cfg.seed = o.seed + static_cast<std::uint64_t>(p);
    cfg.budget = effective_budget(o.budget);
    run = run_pipeline(cfg);
    if (!run) {
      std::cout << "p=" << p << " no regular bi-array within budget\n";
      return kExitBudget;
    }
  }
  std::cout << "p=" << p << " E={";
  for (std::size_t i = 0; i < run->E.size(); ++i) std::cout << (i ? "," : "") << run->E[i];
  std::cout << "} target=" << run->instance.target
            << " solvable=" << (run->solved.solvable ? "true" : "false");
  if (run->solved.count) std::cout << " count=" << *run->solved.count;
  std::cout << " first_column=" << (run->first_column_solvable ? "true" : "false") << "\n";
  if (run->solved.solvable != run->first_column_solvable)
    raise(Errc::precondition_failed, "solver disagrees with first-column check");
  if (!out_path.empty()) dump_file(instance_to_json(run->instance), out_path);
  return kExitOk;
}

int cmd_subsetsum(const CommonOpts& o) {
  int hi = o.p_max > 0 ? o.p_max : o.p;
  if (hi < o.p) raise(Errc::bad_config, "--p-max below --p");
  int rc = kExitOk;
  for (int p = o.p; p <= hi; ++p) {
    std::string out = o.out;
    if (!out.empty() && o.p != hi) {
      std::string suffix = "_p" + std::to_string(p);
      auto dot = out.rfind('.');
      out = dot == std::string::npos ? out + suffix
                                     : out.substr(0, dot) + suffix + out.substr(dot);
    }
    int r = one_subsetsum(o, p, out);
    if (r != kExitOk) rc = r;
  }
  return rc;
}

int cmd_dot(const CommonOpts& o) {
  LatticeDigraph g = graph_from_json(load_file(o.in));
  LabelMap f = make_labeler(o)(g);
  Significant sig = significant(f);
  std::string s = "digraph lattice {\n  rankdir=TB;\n";
  for (const Vertex& v : g.vertices()) {
    bool is_sig = std::binary_search(sig.vertices.begin(), sig.vertices.end(), v);
    s += "  \"" + v.str() + "\" [label=\"" + v.str() + "\\n" +
         std::to_string(f.value(v)) + "\"" +
         (is_sig ? ", style=filled, fillcolor=lightblue" : "") + "];\n";
  }
  for (const Edge& e : g.edges())
    s += "  \"" + e.first.str() + "\" -> \"" + e.second.str() + "\";\n";
  s += "}\n";
  if (o.out.empty()) {
    std::cout << s;
  } else {
    std::ofstream fout(o.out, std::ios::binary);
    if (!fout) raise(Errc::io_error, "cannot open " + o.out);
    fout << s;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice exit labelers and subset-sum construction"};
  app.require_subcommand(1);
  CommonOpts o;

  auto add_common = [&o](CLI::App* c) {
    c->add_option("--k", o.k, "arity of the lattice");
    c->add_option("--bound", o.bound, "coordinate bound (exclusive)");
    c->add_option("--density", o.density, "edge probability");
    c->add_option("--seed", o.seed, "RNG seed");
    c->add_option("--out", o.out, "output path (stdout when omitted)");
    c->add_option("--budget", o.budget, "work budget (overridden by LEL_BUDGET)");
  };
  auto add_labeler = [&o](CLI::App* c) {
    c->add_option("--labeler", o.labeler, "p|p_hat|t_hat|s_hat|h_rho");
    c->add_option("--selection", o.selection, "selection config JSON");
    c->add_option("--rho", o.rho, "min|sum");
  };

  CLI::App* gen = app.add_subcommand("gen", "seeded random downward graph");
  add_common(gen);

  CLI::App* label = app.add_subcommand("label", "label a graph file");
  add_common(label);
  add_labeler(label);
  label->add_option("--in", o.in, "graph JSON")->required();
  label->add_flag("--oracle", o.oracle, "path-enumeration route for t_hat");

  CLI::App* search = app.add_subcommand("search", "search for a regressively regular E");
  add_common(search);
  add_labeler(search);
  search->add_option("--p", o.p, "size of E");
  search->add_option("--jobs", o.jobs, "parallel candidate evaluation");
  search->add_option("--labels", o.labels_path, "fixed label map JSON instead of a rule");

  CLI::App* subsetsum = app.add_subcommand("subsetsum", "end-to-end instance construction");
  add_common(subsetsum);
  add_labeler(subsetsum);
  subsetsum->add_option("--p", o.p, "size of E (range start)");
  subsetsum->add_option("--p-max", o.p_max, "range end (inclusive)");
  subsetsum->add_option("--labels", o.labels_path, "fixed label map JSON instead of a rule");
  subsetsum->add_option("--E", o.E, "E for the fixed label map");

  CLI::App* dot = app.add_subcommand("dot", "DOT export with labels");
  add_common(dot);
  add_labeler(dot);
  dot->add_option("--in", o.in, "graph JSON")->required();
  dot->add_flag("--oracle", o.oracle, "path-enumeration route for t_hat");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(o);
    if (label->parsed()) return cmd_label(o);
    if (search->parsed()) return cmd_search(o);
    if (subsetsum->parsed()) return cmd_subsetsum(o);
    if (dot->parsed()) return cmd_dot(o);
  } catch (const lexit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == lexit::Errc::budget_exceeded || e.code() == lexit::Errc::too_large
               ? kExitBudget
               : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
