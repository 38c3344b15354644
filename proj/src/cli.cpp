#include "pmindex/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pmindex/colouring.hpp"
#include "pmindex/cycle.hpp"
#include "pmindex/errors.hpp"
#include "pmindex/graph.hpp"
#include "pmindex/index.hpp"
#include "pmindex/matching.hpp"
#include "pmindex/oracle.hpp"
#include "pmindex/weighted.hpp"

namespace pmindex {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::string join_edges(std::span<const Edge> edges, char sep) {
  if (edges.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += sep;
    out += to_string(edges[i]);
  }
  return out;
}

std::string graph_extension(const std::string& path) {
  return fs::path(path).extension().string();
}

// Any of the three formats, for commands that only need the graph.
Graph load_any_graph(const std::string& path) {
  std::string text = read_file(path);
  std::string ext = graph_extension(path);
  if (ext == ".ecg") return parse_coloured_graph(text).graph;
  if (ext == ".wcg") return parse_weighted_graph(text).graph;
  return parse_graph(text);
}

int cmd_index(const std::string& path, std::ostream& out) {
  Graph g = load_any_graph(path);
  MatchingIndexReport r = matching_index(g);
  out << result_line(r) << '\n';
  if (!r.mcg_edges_removed.empty()) {
    out << "# mcg removed " << join_edges(r.mcg_edges_removed, ' ') << '\n';
  }
  if (r.colouring) {
    for (const auto& [e, c] : r.colouring->entries()) {
      out << "# colour " << to_string(e) << ' ' << c << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& path, std::uint64_t limit, std::ostream& out) {
  ColouredGraph cg = parse_coloured_graph(read_file(path));
  PmValidity v = verify_pm_valid(cg.graph, cg.colouring, limit);
  if (v.valid) {
    out << "RESULT verify valid=true mu=" << *v.mu_of_colouring << '\n';
    return kExitOk;
  }
  out << "RESULT verify valid=false violation=";
  if (v.violating_matching) {
    auto edges = v.violating_matching->edges();
    out << "non-monochromatic-pm:" << join_edges(edges, '.') << '\n';
  } else {
    out << "empty-colour:" << *v.empty_colour << '\n';
  }
  return kExitNegative;
}

int cmd_check_h(const std::string& path, const std::string& cycle_text, std::ostream& out) {
  Graph g = load_any_graph(path);
  CycleLabelling c = parse_cycle(cycle_text);
  PropertyReport r = check_h_properties(g, c);
  if (r.all_pass()) {
    out << "RESULT check-h p1=pass p2=pass p3=pass\n";
    return kExitOk;
  }
  const std::pair<const char*, const PropertyCheck*> checks[] = {
      {"p1", &r.p1}, {"p2", &r.p2}, {"p3", &r.p3}};
  bool first = true;
  for (auto [name, check] : checks) {
    if (check->pass) continue;
    out << (first ? "RESULT check-h " : "# ") << name << "=fail witness=" << check->witness
        << '\n';
    first = false;
  }
  return kExitNegative;
}

int cmd_mcg(const std::string& path, const std::string& out_path, std::ostream& out) {
  Graph g = load_any_graph(path);
  MatchingCoveredSubgraph mcg = matching_covered_subgraph(g);
  if (!out_path.empty()) write_file(out_path, serialize_graph(mcg.graph));
  out << "RESULT mcg n=" << mcg.graph.vertex_count() << " m=" << mcg.graph.edge_count()
      << " removed=" << join_edges(mcg.removed, '.') << '\n';
  return kExitOk;
}

int cmd_pms(const std::string& path, std::uint64_t limit, std::ostream& out) {
  Graph g = load_any_graph(path);
  auto pms = enumerate_perfect_matchings(g, limit);
  out << "RESULT pms count=" << pms.size() << '\n';
  for (const Matching& m : pms) {
    auto edges = m.edges();
    out << "pm " << join_edges(edges, ' ') << '\n';
  }
  return kExitOk;
}

int cmd_gen_h(int half_order, int drums, std::uint64_t seed, const std::string& out_path,
              std::ostream& out) {
  HGraph h = generate_h_graph(half_order, drums, seed);
  std::string text = "# cycle " + h.cycle.to_string() + "\n" + serialize_graph(h.graph);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
    std::string dashed = h.cycle.to_string();
    std::replace(dashed.begin(), dashed.end(), ',', '-');
    out << "RESULT gen-h n=" << h.graph.vertex_count() << " m=" << h.graph.edge_count()
        << " cycle=" << dashed << '\n';
  }
  return kExitOk;
}

int cmd_wverify(const std::string& path, bool float_check, std::uint64_t limit,
                std::ostream& out) {
  WeightedColouredGraph w = parse_weighted_graph(read_file(path));
  WeightedValidityReport r = verify_k_valid(w, limit);
  if (r.is_valid) {
    out << "RESULT wverify valid=true k=" << *r.k << '\n';
  } else {
    out << "RESULT wverify valid=false violation=" << to_string(r.violating_vc->first) << ':'
        << r.violating_vc->second.to_string() << '\n';
  }
  for (const auto& [c, weight] : r.monochromatic_weights) {
    out << "# monochromatic " << c << " weight " << weight.to_string() << '\n';
  }
  if (float_check) {
    std::vector<std::complex<double>> weight;
    for (const ComplexRational& x : w.weight) weight.emplace_back(x.re().get_d(), x.im().get_d());
    auto f = verify_k_valid_numeric(w.graph, w.colouring, weight);
    bool agree = f.is_valid == r.is_valid && f.k == r.k;
    out << "# float-check valid=" << (f.is_valid ? "true" : "false")
        << " agree=" << (agree ? "true" : "false") << '\n';
  }
  return r.is_valid ? kExitOk : kExitNegative;
}

int cmd_bounds(const std::string& path, std::ostream& out) {
  Graph g = load_any_graph(path);
  MuBarBounds b = mu_bar_bounds(g);
  out << "RESULT bounds mu=" << b.mu << " lower=" << b.lower << " upper=" << b.upper
      << " exact=" << (b.exact ? std::to_string(*b.exact) : "none") << '\n';
  out << "# min-degree-mcg " << b.min_degree << '\n';
  if (b.gadget) {
    out << "# gadget " << b.gadget->a << '-' << b.gadget->b << '-' << b.gadget->c << '-'
        << b.gadget->d << '\n';
  }
  return kExitOk;
}

int cmd_oracle(const std::string& path, int budget_edges, bool no_cap, std::uint64_t limit,
               std::ostream& out) {
  Graph g = load_any_graph(path);
  OracleBudget budget;
  budget.max_edges = budget_edges;
  budget.max_pm = limit;
  out << "RESULT oracle-index mu=" << brute_force_matching_index(g, budget, no_cap) << '\n';
  return kExitOk;
}

int cmd_dot(const std::string& path, std::ostream& out) {
  std::string text = read_file(path);
  std::string ext = graph_extension(path);
  if (ext == ".ecg") {
    ColouredGraph cg = parse_coloured_graph(text);
    out << export_dot(cg.graph, cg.colouring);
  } else if (ext == ".wcg") {
    WeightedColouredGraph w = parse_weighted_graph(text);
    out << export_dot(w.graph, w.colouring);
  } else {
    out << export_dot(parse_graph(text));
  }
  return kExitOk;
}

BatchRow process_file(const fs::path& file, const BatchOptions& opts) {
  BatchRow row;
  row.file = file.filename().string();
  std::string ext = file.extension().string();
  row.command = ext == ".ecg" ? "verify" : ext == ".wcg" ? "wverify" : "index";
  auto start = std::chrono::steady_clock::now();
  try {
    std::string text = read_file(file.string());
    if (ext == ".eg") {
      MatchingIndexReport r = matching_index(parse_graph(text));
      row.value = std::to_string(r.mu);
      row.tag = std::string(witness_tag(r.witness));
    } else if (ext == ".ecg") {
      ColouredGraph cg = parse_coloured_graph(text);
      PmValidity v = verify_pm_valid(cg.graph, cg.colouring, opts.pm_limit);
      row.value = v.valid ? std::to_string(*v.mu_of_colouring) : "invalid";
      row.tag = v.valid ? "valid" : "invalid";
    } else {
      WeightedValidityReport r = verify_k_valid(parse_weighted_graph(text), opts.pm_limit);
      row.value = r.is_valid ? std::to_string(*r.k) : "invalid";
      row.tag = r.is_valid ? "valid" : "invalid";
    }
  } catch (const std::exception&) {
    row.value = "-";
    row.tag = "error";
  }
  row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return row;
}

}  // namespace

std::vector<BatchRow> batch_rows(const fs::path& dir, const BatchOptions& opts) {
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::string ext = entry.path().extension().string();
    if (ext == ".eg" || ext == ".ecg" || ext == ".wcg") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  std::vector<BatchRow> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      rows[i] = process_file(files[i], opts);
    }
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, files.size() ? files.size() : 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string format_batch(const std::vector<BatchRow>& rows, bool timing) {
  std::string out;
  std::map<int, int, std::greater<>> mu_counts;
  std::map<int, int, std::greater<>> k_counts;
  int valid = 0;
  int invalid = 0;
  int errors = 0;
  for (const BatchRow& r : rows) {
    out += r.file + "," + r.command + "," + r.value + "," + r.tag + "," +
           (timing ? std::to_string(r.millis) : std::string("-")) + "\n";
    if (r.tag == "error") {
      ++errors;
    } else if (r.command == "index") {
      ++mu_counts[std::stoi(r.value)];
    } else if (r.value == "invalid") {
      ++invalid;
    } else {
      ++valid;
      if (r.command == "wverify") ++k_counts[std::stoi(r.value)];
    }
  }
  std::string footer = "summary";
  for (auto [mu, count] : mu_counts) {
    footer += " mu" + std::to_string(mu) + ":" + std::to_string(count);
  }
  for (auto [k, count] : k_counts) {
    footer += " k" + std::to_string(k) + ":" + std::to_string(count);
  }
  if (valid) footer += " valid:" + std::to_string(valid);
  if (invalid) footer += " invalid:" + std::to_string(invalid);
  if (errors) footer += " error:" + std::to_string(errors);
  return out + footer + "\n";
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching index and PMValid colourings of simple graphs"};
  app.name("pmindex");
  app.require_subcommand(1);

  std::string file;
  std::string cycle;
  std::string out_path;
  std::uint64_t limit = kDefaultPerfectMatchingLimit;
  int budget_edges = OracleBudget{}.max_edges;
  bool no_cap = false;
  bool float_check = false;
  bool no_timing = false;
  unsigned jobs = 1;
  int half_order = 0;
  int drums = 0;
  std::uint64_t seed = 0;

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "input graph")->required();
    return sub;
  };
  auto* index = with_file(app.add_subcommand("index", "decide mu(G)"));
  auto* verify = with_file(app.add_subcommand("verify", "check a .ecg colouring is PMValid"));
  verify->add_option("--limit-pm", limit, "perfect matching enumeration cap");
  auto* check_h = with_file(app.add_subcommand("check-h", "properties 1-3 along a cycle"));
  check_h->add_option("--cycle", cycle, "v0,v1,... clockwise")->required();
  auto* mcg = with_file(app.add_subcommand("mcg", "maximum matching-covered subgraph"));
  mcg->add_option("--out", out_path, "write mcg as .eg");
  auto* pms = with_file(app.add_subcommand("pms", "list perfect matchings"));
  pms->add_option("--limit-pm", limit, "perfect matching enumeration cap");
  auto* gen_h = app.add_subcommand("gen-h", "generate a graph with drums along a cycle");
  gen_h->add_option("half_order", half_order, "n, for 2n vertices")->required();
  gen_h->add_option("drums", drums, "number of drums")->required();
  gen_h->add_option("--seed", seed, "random seed");
  gen_h->add_option("--out", out_path, "write .eg here instead of stdout");
  auto* wverify = with_file(app.add_subcommand("wverify", "k-validity of a .wcg instance"));
  wverify->add_flag("--float-check", float_check, "cross-check in double precision");
  wverify->add_option("--limit-pm", limit, "perfect matching enumeration cap");
  auto* bounds = with_file(app.add_subcommand("bounds", "bounds on the weighted dimension"));
  auto* oracle = with_file(app.add_subcommand("oracle-index", "mu(G) by exhaustive search"));
  oracle->add_option("--budget-edges", budget_edges, "cap on colouring units");
  oracle->add_flag("--no-cap", no_cap, "search k beyond 3");
  oracle->add_option("--limit-pm", limit, "perfect matching enumeration cap");
  auto* batch = app.add_subcommand("batch", "process every .eg/.ecg/.wcg in a directory");
  batch->add_option("dir", file, "directory")->required();
  batch->add_option("--jobs", jobs, "worker threads");
  batch->add_flag("--no-timing", no_timing, "print '-' instead of milliseconds");
  batch->add_option("--limit-pm", limit, "perfect matching enumeration cap");
  auto* dot = with_file(app.add_subcommand("dot", "Graphviz export"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (*index) return cmd_index(file, out);
    if (*verify) return cmd_verify(file, limit, out);
    if (*check_h) return cmd_check_h(file, cycle, out);
    if (*mcg) return cmd_mcg(file, out_path, out);
    if (*pms) return cmd_pms(file, limit, out);
    if (*gen_h) return cmd_gen_h(half_order, drums, seed, out_path, out);
    if (*wverify) return cmd_wverify(file, float_check, limit, out);
    if (*bounds) return cmd_bounds(file, out);
    if (*oracle) return cmd_oracle(file, budget_edges, no_cap, limit, out);
    if (*dot) return cmd_dot(file, out);
    if (*batch) {
      BatchOptions opts{jobs, !no_timing, limit};
      out << format_batch(batch_rows(file, opts), opts.timing);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace pmindex
