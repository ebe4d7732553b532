#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "difacet/harness.hpp"

namespace {

using namespace difacet;

struct GlobalConfig {
  std::string field_text = "q";
  std::uint64_t perm_budget = 2'000'000;
  std::size_t gb_cap = 10'000;
  int workers = 1;
  std::uint64_t seed = 1;
  std::string json_path;
};

FieldSpec parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return FieldSpec::rationals();
  if (text.rfind("p=", 0) == 0) return FieldSpec::prime(std::stoul(text.substr(2)));
  throw CLI::ValidationError("--field", "expected 'q' or 'p=<prime>'");
}

HarnessOptions to_options(const GlobalConfig& cfg) {
  HarnessOptions opts;
  opts.field = parse_field(cfg.field_text);
  opts.perm_budget = cfg.perm_budget;
  opts.gb_cap = cfg.gb_cap;
  opts.workers = cfg.workers;
  opts.seed = cfg.seed;
  return opts;
}

void emit_json(const GlobalConfig& cfg, const nlohmann::json& j) {
  if (cfg.json_path.empty()) return;
  std::ofstream out(cfg.json_path);
  if (!out) throw std::runtime_error("cannot write JSON to " + cfg.json_path);
  out << j.dump(2) << "\n";
}

// The input is a complex file when its first payload line has two numbers.
bool looks_like_complex(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int a, b;
    if (ls >> a) return static_cast<bool>(ls >> b);
  }
  return false;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json classify_complex(const SimplicialComplex& dc, const HarnessOptions& opts,
                                const IntervalRep* rep) {
  nlohmann::json j;
  j["n"] = dc.n();
  j["d"] = dc.dim();
  j["facets"] = dc.facet_count();
  if (dc.facet_count() == 0) j["degenerate"] = "no facets: labelled predicates hold vacuously";
  nlohmann::json lab;
  for (ComplexClass cls :
       {ComplexClass::Closed, ComplexClass::UnitInterval, ComplexClass::PoorClosed,
        ComplexClass::GlobalInterval, ComplexClass::ProperInterval})
    lab[class_name(cls) + "_lab"] = evaluate_class(dc, cls);
  j["labelled"] = lab;
  nlohmann::json ex;
  for (ComplexClass cls :
       {ComplexClass::Closed, ComplexClass::UnitInterval, ComplexClass::PoorClosed,
        ComplexClass::GlobalInterval, ComplexClass::ProperInterval}) {
    SearchOutcome s = exists_labelling(dc, cls, opts.perm_budget, opts.seed);
    nlohmann::json je;
    je["outcome"] = s.kind_name();
    je["examined"] = s.examined;
    if (s.labelling) je["labelling"] = s.labelling->to_string();
    ex[class_name(cls)] = je;
  }
  j["existence"] = ex;
  if (rep) j["strong_with_supplied_rep"] = is_strong_interval_with_rep(dc, *rep);
  if (dc.n() <= 7) {
    SearchOutcome s = search_strong_rep(dc, opts.perm_budget);
    nlohmann::json js;
    js["outcome"] = s.kind_name();
    if (s.rep) js["rep"] = s.rep->to_string();
    j["strong_rep_search_ordered"] = js;
  }
  return j;
}

void print_classification(const nlohmann::json& j, std::ostream& out) {
  out << "n=" << j["n"] << " d=" << j["d"] << " facets=" << j["facets"] << "\n";
  if (j.contains("degenerate")) out << "  (" << j["degenerate"].get<std::string>() << ")\n";
  out << "labelled predicates:\n";
  for (auto& [k, v] : j["labelled"].items()) out << "  " << k << ": " << v << "\n";
  out << "existence searches:\n";
  for (auto& [k, v] : j["existence"].items()) {
    out << "  " << k << ": " << v["outcome"].get<std::string>();
    if (v.contains("labelling")) out << " " << v["labelling"].get<std::string>();
    out << "\n";
  }
  if (j.contains("strong_with_supplied_rep"))
    out << "strong interval with supplied rep: " << j["strong_with_supplied_rep"] << "\n";
  if (j.contains("strong_rep_search_ordered"))
    out << "ordered strong-rep search: "
        << j["strong_rep_search_ordered"]["outcome"].get<std::string>() << "\n";
}

int cmd_classify(const GlobalConfig& cfg, const std::string& path, const std::vector<int>& dlist,
                 const std::string& rep_path) {
  HarnessOptions opts = to_options(cfg);
  std::string text = slurp(path);
  nlohmann::json out;
  out["file"] = path;
  if (looks_like_complex(text)) {
    std::istringstream in(text);
    SimplicialComplex dc = read_complex(in);
    std::optional<IntervalRep> rep;
    if (!rep_path.empty()) {
      std::ifstream rin(rep_path);
      if (!rin) throw std::runtime_error("cannot open " + rep_path);
      rep = read_interval_rep(rin, dc.n());
    }
    out["kind"] = "complex";
    out["classification"] = classify_complex(dc, opts, rep ? &*rep : nullptr);
    print_classification(out["classification"], std::cout);
  } else {
    std::istringstream in(text);
    Graph g = read_graph(in);
    std::optional<IntervalRep> rep;
    if (!rep_path.empty()) {
      std::ifstream rin(rep_path);
      if (!rin) throw std::runtime_error("cannot open " + rep_path);
      rep = read_interval_rep(rin, g.n());
    }
    out["kind"] = "graph";
    out["n"] = g.n();
    out["per_d"] = nlohmann::json::array();
    for (int d : dlist) {
      SimplicialComplex dc = delta_d(g, d);
      nlohmann::json jd;
      jd["d"] = d;
      jd["classification"] = classify_complex(dc, opts, rep ? &*rep : nullptr);
      std::cout << "=== delta_" << d << " ===\n";
      print_classification(jd["classification"], std::cout);
      out["per_d"].push_back(jd);
    }
  }
  emit_json(cfg, out);
  return 0;
}

int cmd_gb_check(const GlobalConfig& cfg, const std::string& path, int d_for_graph, bool complete) {
  HarnessOptions opts = to_options(cfg);
  std::string text = slurp(path);
  std::istringstream in(text);
  SimplicialComplex dc = looks_like_complex(text) ? read_complex(in)
                                                  : delta_d(read_graph(in), d_for_graph);
  Basis b = determinantal_facet_ideal(dc, opts.field);
  nlohmann::json j;
  j["file"] = path;
  j["generators"] = b.size();
  if (b.polys.empty()) {
    j["is_gb"] = true;
    j["reduced"] = true;
    j["note"] = "empty generating set";
    std::cout << "GB: true (empty generating set)\n";
  } else {
    GBReport rep = is_groebner(b);
    j["is_gb"] = rep.is_gb;
    j["reduced"] = rep.reduced;
    j["pairs_checked"] = rep.pairs_checked;
    j["pairs_skipped_coprime"] = rep.pairs_skipped_coprime;
    std::cout << "GB: " << (rep.is_gb ? "true" : "false") << "  reduced: "
              << (rep.reduced ? "true" : "false") << "\n";
    if (rep.failing_pair) {
      nlohmann::json fp;
      fp["i"] = rep.failing_pair->i + 1;
      fp["j"] = rep.failing_pair->j + 1;
      fp["remainder"] = rep.failing_pair->remainder.to_string();
      j["failing_pair"] = fp;
      std::cout << "failing S-pair (" << rep.failing_pair->i + 1 << "," << rep.failing_pair->j + 1
                << ") with remainder " << rep.failing_pair->remainder.to_string() << "\n";
    }
    if (complete) {
      try {
        Basis done = reduce_basis(buchberger(b, opts.gb_cap));
        j["completion"] = {{"status", "completed"}, {"reduced_basis_size", done.size()}};
        std::cout << "completion: reduced Groebner basis with " << done.size() << " elements\n";
        nlohmann::json elems = nlohmann::json::array();
        for (const Polynomial& p : done.polys) elems.push_back(p.to_string());
        j["completion"]["basis"] = elems;
      } catch (const CompletionCapExceeded& e) {
        j["completion"] = {{"status", "cap_exceeded"},
                           {"cap", opts.gb_cap},
                           {"partial_size", e.partial_basis.size()}};
        std::cout << "completion: element cap " << opts.gb_cap << " exceeded, partial basis has "
                  << e.partial_basis.size() << " elements\n";
      }
    }
  }
  if (opts.field.kind == FieldKind::Prime)
    std::cout << "note: computed over " << opts.field.to_string() << " (mod p evidence)\n";
  emit_json(cfg, j);
  return 0;
}

JobParams parse_job_params(const std::string& sizes_text, int nmax, const std::vector<int>& dlist,
                           int count, int t_max, const std::string& kind) {
  JobParams params;
  if (!sizes_text.empty()) {
    std::vector<std::pair<int, int>> sizes;
    std::istringstream ss(sizes_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t x = item.find('x');
      if (x == std::string::npos)
        throw CLI::ValidationError("--sizes", "expected comma-separated mxn items like 2x3,3x4");
      sizes.push_back({std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1))});
    }
    params.sizes = std::move(sizes);
  }
  if (nmax > 0) params.nmax = nmax;
  if (!dlist.empty()) params.dset = dlist;
  if (count >= 0) params.count = count;
  if (t_max > 0) params.t_max = t_max;
  if (!kind.empty()) params.kind = kind;
  return params;
}

int cmd_verify(const GlobalConfig& cfg, const std::string& id, const JobParams& params) {
  HarnessOptions opts = to_options(cfg);
  VerificationReport rep = run_theorem(id, opts, params);
  std::cout << rep.theorem << ": " << (rep.passed() ? "PASS" : "FAIL") << "  checked=" << rep.checked
            << " failures=" << rep.failures.size() << " millis=" << rep.millis << "\n";
  for (const Failure& f : rep.failures) {
    std::cout << "  FAIL " << f.instance;
    if (!f.labelling.empty()) std::cout << " [" << f.labelling << "]";
    std::cout << ": " << f.witness << "\n";
  }
  for (const std::string& note : rep.notes) std::cout << "  note: " << note << "\n";
  if (opts.field.kind == FieldKind::Prime)
    std::cout << "  note: GB conclusions are mod p evidence (" << opts.field.to_string() << ")\n";
  emit_json(cfg, nlohmann::json::parse(rep.to_json()));
  if (rep.passed()) return 0;
  bool all_inconclusive = true;
  for (const Failure& f : rep.failures)
    if (f.witness.find("inconclusive") == std::string::npos) all_inconclusive = false;
  return all_inconclusive ? 3 : 2;
}

int cmd_enumerate(const GlobalConfig& cfg, int n, const std::string& mode_text,
                  const std::string& out_dir) {
  EnumMode mode = mode_text == "canonical" ? EnumMode::Canonical : EnumMode::Labelled;
  std::vector<Graph> gs = enumerate_graphs(n, mode);
  std::filesystem::create_directories(out_dir);
  int idx = 0;
  for (const Graph& g : gs) {
    std::ostringstream name;
    name << out_dir << "/graph_n" << n << "_" << mode_text << "_" << idx++ << ".graph";
    std::ofstream out(name.str());
    write_graph(out, g);
  }
  std::cout << "wrote " << gs.size() << " graphs to " << out_dir << "\n";
  nlohmann::json j;
  j["n"] = n;
  j["mode"] = mode_text;
  j["count"] = gs.size();
  j["dir"] = out_dir;
  emit_json(cfg, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"determinantal facet ideals, Groebner verification, and interval-complex classification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalConfig cfg;
  app.add_option("--field", cfg.field_text, "coefficient field: q or p=<prime>");
  app.add_option("--perm-budget", cfg.perm_budget, "labelling search budget");
  app.add_option("--gb-cap", cfg.gb_cap, "Buchberger completion element cap");
  app.add_option("--workers", cfg.workers, "worker threads for harness jobs");
  app.add_option("--seed", cfg.seed, "seed for all randomized searches");
  app.add_option("--json", cfg.json_path, "write a JSON report to this path");

  std::string classify_path, rep_path;
  std::vector<int> dlist{1};
  CLI::App* classify = app.add_subcommand("classify", "classify a graph or complex file");
  classify->add_option("path", classify_path, "input file")->required();
  classify->add_option("--d", dlist, "dimensions d for graph inputs");
  classify->add_option("--rep", rep_path, "interval representation file to verify");

  std::string gb_path;
  int gb_d = 1;
  bool gb_complete = false;
  CLI::App* gb = app.add_subcommand("gb-check", "Groebner check of the determinantal facet ideal");
  gb->add_option("path", gb_path, "complex (or graph) file")->required();
  gb->add_option("--d", gb_d, "dimension d when the input is a graph");
  gb->add_flag("--complete", gb_complete, "also run capped Buchberger completion");

  std::string verify_id;
  std::string verify_sizes, verify_kind;
  int verify_nmax = 0, verify_count = -1, verify_t = 0;
  std::vector<int> verify_dlist;
  CLI::App* verify = app.add_subcommand("verify", "run a theorem verification job");
  std::string ids_help = "theorem id, one of:";
  for (const std::string& id : difacet::known_theorem_ids()) ids_help += " " + id;
  verify->add_option("theorem", verify_id, ids_help)->required();
  verify->add_option("--sizes", verify_sizes, "matrix shapes like 2x3,2x4,3x4 (THM-GB-1)");
  verify->add_option("--n", verify_nmax, "exhaustive vertex range cap");
  verify->add_option("--d", verify_dlist, "dimensions d to sweep");
  verify->add_option("--count", verify_count, "random instance count");
  verify->add_option("--t", verify_t, "maximum t for the determinant identity sweep");
  verify->add_option("--kind", verify_kind, "cycle, forest or both (COR-CYCLEFOREST)");

  int enum_n = 4;
  std::string enum_mode = "canonical", enum_dir = "enumerated";
  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate small graphs to files");
  enumerate->add_option("n", enum_n, "vertex count")->required();
  enumerate->add_option("--mode", enum_mode, "labelled or canonical");
  enumerate->add_option("--out", enum_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(cfg, classify_path, dlist, rep_path);
    if (gb->parsed()) return cmd_gb_check(cfg, gb_path, gb_d, gb_complete);
    if (verify->parsed())
      return cmd_verify(cfg, verify_id,
                        parse_job_params(verify_sizes, verify_nmax, verify_dlist, verify_count,
                                         verify_t, verify_kind));
    if (enumerate->parsed()) return cmd_enumerate(cfg, enum_n, enum_mode, enum_dir);
  } catch (const difacet::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
