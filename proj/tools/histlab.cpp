// histlab command-line tool. Payloads go to stdout, diagnostics to stderr.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "histlab/construct.hpp"
#include "histlab/cyclic.hpp"
#include "histlab/graph_io.hpp"
#include "histlab/hist.hpp"
#include "histlab/profile.hpp"
#include "histlab/topology.hpp"
#include "report.hpp"

#ifndef HISTLAB_VERSION
#define HISTLAB_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using namespace histlab;

namespace {

enum ExitCode : int {
  kHasHist = 0,
  kOk = 0,
  kInvalid = 1,
  kInputError = 2,
  kNoHist = 3,
  kBudgetExceeded = 4,
  kTheoremViolation = 5,
};

int exit_code(hist::Verdict v) {
  switch (v) {
    case hist::Verdict::HasHist: return kHasHist;
    case hist::Verdict::NoHist: return kNoHist;
    case hist::Verdict::BudgetExceeded: return kBudgetExceeded;
  }
  return kInvalid;
}

/// Raised for bad command-line input; reported on stderr with exit 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  Graph graph;
  std::optional<topology::RotationSystem> rotation;
  report::InputInfo info;
};

std::string detect_format(const fs::path& p) {
  const auto ext = p.extension().string();
  if (ext == ".g6" || ext == ".graph6") return "graph6";
  if (ext == ".emb") return "embedded";
  return "edgelist";
}

std::vector<Loaded> load_all(const std::string& source, std::string format) {
  if (!fs::exists(source)) {
    try {
      auto c = construct::catalog(source);
      return {{std::move(c.graph), std::move(c.rotation), {source, "catalog", c.provenance, std::nullopt}}};
    } catch (const construct::ConstructError& err) {
      if (err.kind() != construct::ConstructErrorKind::UnknownName) throw;
      throw InputError("input " + source + " is neither a file nor a catalog name");
    }
  }
  if (format.empty() || format == "auto") format = detect_format(source);
  std::ifstream in(source);
  if (!in) throw InputError("cannot open " + source);
  std::vector<Loaded> out;
  if (format == "graph6") {
    auto graphs = read_graph6_stream(in);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      out.push_back({std::move(graphs[i]), std::nullopt, {source, format, std::nullopt, static_cast<int>(i)}});
    }
  } else if (format == "edgelist") {
    out.push_back({read_edge_list(in), std::nullopt, {source, format, std::nullopt, std::nullopt}});
  } else if (format == "embedded") {
    auto emb = topology::read_embedding(in);
    out.push_back({std::move(emb.graph), std::move(emb.rotation), {source, format, std::nullopt, std::nullopt}});
  } else {
    throw InputError("unknown format " + format);
  }
  return out;
}

Loaded load_one(const std::string& source, const std::string& format) {
  auto all = load_all(source, format);
  if (all.size() != 1) {
    throw InputError(source + " holds " + std::to_string(all.size()) + " graphs; use batch");
  }
  return std::move(all.front());
}

unsigned worker_count() {
  if (const char* env = std::getenv("HISTLAB_THREADS"); env && *env) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    throw InputError("HISTLAB_THREADS must be a positive integer");
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

report::RunReport base_report(const Loaded& in) {
  report::RunReport r;
  r.version = HISTLAB_VERSION;
  r.input = in.info;
  r.profile = classify(in.graph);
  if (in.rotation) {
    report::EmbeddingInfo e;
    const auto faces = topology::trace_faces(in.graph, *in.rotation);
    e.faceLengths = faces.lengthHistogram;
    if (r.profile->isConnected) {
      e.genus = topology::euler_genus(in.graph, *in.rotation);
      e.fullerene = topology::is_fullerene(in.graph, *in.rotation).isFullerene;
      e.hexangulation = topology::is_hexangulation(in.graph, *in.rotation).isHexangulation;
    }
    r.embedding = e;
  }
  return r;
}

void emit(const report::RunReport& r, bool json) {
  if (json) std::cout << report::to_json(r).dump() << '\n';
}

struct SolveArgs {
  std::string input;
  std::string format = "auto";
  std::string mode = "decide";
  std::uint64_t budget = hist::kDefaultNodeBudget;
  bool useEmbedding = false;
  bool noMod4 = false;
  bool json = false;
  std::string certOut;
  std::string dot;
};

hist::SolveMode mode_from_flag(const std::string& s) {
  if (s == "decide") return hist::SolveMode::Decide;
  if (s == "first") return hist::SolveMode::First;
  if (s == "count") return hist::SolveMode::Count;
  if (s == "all") return hist::SolveMode::EnumerateAll;
  throw InputError("unknown mode " + s);
}

/// Shared by solve and batch; appends solve results to r.
hist::SolveReport run_solve(const Loaded& in, const SolveArgs& a, unsigned workers, report::RunReport& r) {
  const auto mode = mode_from_flag(a.mode);
  hist::SolveReport result;
  std::string solver;
  if (a.useEmbedding) {
    if (!in.rotation) throw InputError("--use-embedding needs an embedded input");
    result = topology::planar_hist_solve(in.graph, *in.rotation, {mode, a.budget});
    solver = "facial-cycles";
  } else {
    hist::SolveOptions opts;
    opts.mode = mode;
    opts.nodeBudget = a.budget;
    opts.useMod4Filter = !a.noMod4;
    opts.workers = workers;
    result = hist::solve(in.graph, opts);
    solver = "edge-branching";
  }
  r.solve = report::summarize(in.graph, result, mode, solver);
  return result;
}

int cmd_solve(const SolveArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const Loaded in = load_one(a.input, a.format);
  auto r = base_report(in);
  const auto result = run_solve(in, a, worker_count(), r);
  r.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!a.certOut.empty()) {
    if (result.certificates.empty()) {
      std::cerr << "no certificate to write\n";
    } else {
      std::ofstream out(a.certOut);
      hist::write_certificate(out, in.graph, result.certificates.front());
    }
  }
  if (!a.dot.empty()) {
    std::ofstream out(a.dot);
    DotStyle style;
    if (!result.certificates.empty()) style.treeEdges = result.certificates.front().treeEdges;
    write_dot(out, in.graph, style);
  }
  if (a.json) {
    emit(r, true);
  } else {
    std::cout << "verdict " << to_string(result.verdict) << '\n';
    if (result.count) std::cout << "count " << *result.count << '\n';
  }
  std::cerr << in.info.source << ": " << to_string(result.verdict) << " after " << result.nodesExplored
            << " nodes\n";
  return exit_code(result.verdict);
}

int cmd_check(const std::string& input, const std::string& format, bool json) {
  const auto start = std::chrono::steady_clock::now();
  const Loaded in = load_one(input, format);
  auto r = base_report(in);
  r.mod4 = hist::mod4_filter(in.graph);
  if (in.rotation && r.embedding && r.embedding->genus == 0 && r.profile->isConnected) {
    r.facial = topology::facial_filter(in.graph, *in.rotation);
  }
  r.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool noHist = r.mod4 == hist::FilterVerdict::NoHist || r.facial == hist::FilterVerdict::NoHist;
  if (json) {
    emit(r, true);
  } else {
    std::cout << "mod4 " << to_string(*r.mod4) << '\n';
    if (r.facial) std::cout << "facial " << to_string(*r.facial) << '\n';
  }
  return noHist ? kNoHist : kOk;
}

void write_graph(std::ostream& out, const Graph& g, const std::optional<topology::RotationSystem>& rot,
                 const std::string& format) {
  std::string f = format;
  if (f.empty() || f == "auto") f = rot ? "embedded" : "graph6";
  if (f == "graph6") {
    out << write_graph6(g) << '\n';
  } else if (f == "edgelist") {
    write_edge_list(out, g);
  } else if (f == "embedded") {
    if (!rot) throw InputError("graph has no embedding; choose graph6 or edgelist");
    topology::write_embedding(out, g, *rot);
  } else {
    throw InputError("unknown output format " + f);
  }
}

struct GenOutput {
  std::string outFile;
  std::string format = "auto";
  bool json = false;
};

int finish_gen(const Graph& g, const std::optional<topology::RotationSystem>& rot,
               const construct::Provenance& prov, const GenOutput& o) {
  std::string format = o.format;
  if ((format.empty() || format == "auto") && !o.outFile.empty() && fs::path(o.outFile).has_extension()) {
    format = detect_format(o.outFile);
  }
  if (o.outFile.empty()) {
    write_graph(std::cout, g, rot, format);
  } else {
    std::ofstream out(o.outFile);
    if (!out) throw InputError("cannot write " + o.outFile);
    write_graph(out, g, rot, format);
  }
  if (o.json) std::cerr << report::to_json(prov).dump() << '\n';
  return kOk;
}

std::vector<Vertex> parse_cycle(const std::string& text) {
  std::vector<Vertex> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      c.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError("bad cycle vertex '" + item + "'");
    }
  }
  return c;
}

/// Reads g as an inflation of h laid out the way gen inflate numbers it: the
/// vertices of C_x form a consecutive block of deg(x) ids, in base order.
construct::InflationResult recover_inflation(const construct::BaseGraph& h, const Graph& g) {
  construct::InflationResult r;
  r.inflated = g;
  for (Vertex x = 0; x < h.graph.vertex_count(); ++x) {
    for (int p = 0; p < h.graph.degree(x); ++p) r.vertexMap.push_back({x, p});
  }
  if (static_cast<int>(r.vertexMap.size()) != g.vertex_count()) {
    throw InputError("vertex count does not match an inflation of the base graph");
  }
  EdgeSet inside(g);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (r.vertexMap[g.edge(e).u].base == r.vertexMap[g.edge(e).v].base) inside.insert(e);
  }
  try {
    r.factor = hist::TwoRegularSubgraph::from_edges(g, inside);
  } catch (const hist::HistError&) {
    throw InputError("vertex blocks do not induce cycles; input is not laid out as an inflation");
  }
  return r;
}

int cmd_cec(const std::string& input, const std::string& format, std::optional<int> maxLen,
            const std::string& baseInput, bool json) {
  const auto start = std::chrono::steady_clock::now();
  const Loaded in = load_one(input, format);
  auto r = base_report(in);
  int code = kOk;
  if (!baseInput.empty()) {
    const Loaded base = load_one(baseInput, "auto");
    const auto h = construct::BaseGraph::from(base.graph);
    const auto t = cyclic::check_inflation_theorem(h, recover_inflation(h, in.graph));
    r.cec = report::summarize(in.graph, t.cec);
    r.theorem = report::summarize(t);
    if (t.status == cyclic::TheoremStatus::Violation) code = kTheoremViolation;
  } else {
    cyclic::CecOptions opts;
    opts.maxCycleLength = maxLen;
    r.cec = report::summarize(in.graph, cyclic::cyclic_edge_connectivity(in.graph, opts));
  }
  r.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (json) {
    emit(r, true);
  } else {
    if (r.cec->kind == cyclic::CutKind::Finite) std::cout << "cec " << r.cec->value << '\n';
    else std::cout << "cec Undefined\n";
    if (r.theorem) std::cout << "theorem " << to_string(r.theorem->status) << " k* " << r.theorem->kStar << '\n';
  }
  return code;
}

int cmd_batch(const std::vector<std::string>& inputs, const std::string& dir, const std::string& embeddingDir,
              const SolveArgs& a) {
  std::vector<std::string> files = inputs;
  auto add_dir = [&](const std::string& d, bool embedded) {
    if (!fs::is_directory(d)) throw InputError(d + " is not a directory");
    std::vector<std::string> found;
    for (const auto& entry : fs::directory_iterator(d)) {
      if (!entry.is_regular_file()) continue;
      const auto f = detect_format(entry.path());
      if ((embedded && f == "embedded") || (!embedded && f == "graph6")) found.push_back(entry.path().string());
    }
    std::sort(found.begin(), found.end());
    files.insert(files.end(), found.begin(), found.end());
  };
  if (!dir.empty()) add_dir(dir, false);
  if (!embeddingDir.empty()) add_dir(embeddingDir, true);

  struct Job {
    std::optional<Loaded> graph;
    report::RunReport report;
  };
  std::vector<Job> jobs;
  for (const auto& f : files) {
    try {
      for (auto& l : load_all(f, a.format)) {
        Job j;
        j.report.version = HISTLAB_VERSION;
        j.report.input = l.info;
        j.graph = std::move(l);
        jobs.push_back(std::move(j));
      }
    } catch (const std::exception& err) {
      Job j;
      j.report.version = HISTLAB_VERSION;
      j.report.input = {f, a.format, std::nullopt, std::nullopt};
      j.report.error = err.what();
      jobs.push_back(std::move(j));
    }
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      Job& j = jobs[i];
      if (!j.graph) continue;
      const auto start = std::chrono::steady_clock::now();
      try {
        SolveArgs local = a;
        local.useEmbedding = a.useEmbedding || (j.graph->rotation && j.graph->info.format == "embedded");
        auto info = j.report.input;
        j.report = base_report(*j.graph);
        j.report.input = info;
        if (is_cubic(j.graph->graph)) j.report.mod4 = hist::mod4_filter(j.graph->graph);
        run_solve(*j.graph, local, 1, j.report);
      } catch (const std::exception& err) {
        j.report.error = err.what();
      }
      j.report.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::map<std::string, int> tally{{"HasHist", 0}, {"NoHist", 0}, {"BudgetExceeded", 0}, {"errors", 0}};
  for (const auto& j : jobs) {
    std::cout << report::to_json(j.report).dump() << '\n';
    if (j.report.error) ++tally["errors"];
    else if (j.report.solve) ++tally[std::string(to_string(j.report.solve->verdict))];
  }
  nlohmann::json summary = {{"graphs", jobs.size()}};
  for (const auto& [k, v] : tally) summary[k] = v;
  std::cout << nlohmann::json{{"summary", summary}}.dump() << '\n';
  return kOk;
}

int cmd_verify(const std::string& input, const std::string& format, const std::string& cert) {
  const Loaded in = load_one(input, format);
  std::ifstream f(cert);
  if (!f) throw InputError("cannot open " + cert);
  const EdgeSet t = hist::read_certificate(f, in.graph);
  try {
    const auto c = hist::verify_hist(in.graph, t);
    std::cout << "valid t1 " << c.leafCount << " t3 " << c.branchCount << '\n';
    return kOk;
  } catch (const hist::HistError& err) {
    if (err.kind() == hist::HistErrorKind::NotCubic || err.kind() == hist::HistErrorKind::HostMismatch) throw;
    std::cout << "invalid " << to_string(err.kind()) << '\n';
    std::cerr << err.what() << '\n';
    return kInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hist search and cubic graph constructions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", HISTLAB_VERSION);

  SolveArgs solveArgs;
  auto* solve = app.add_subcommand("solve", "Decide, find, count or enumerate Hists");
  solve->add_option("-i,--input", solveArgs.input, "Graph file or catalog name")->required();
  solve->add_option("-f,--format", solveArgs.format, "graph6|edgelist|embedded|auto");
  solve->add_option("-m,--mode", solveArgs.mode, "decide|first|count|all")
      ->check(CLI::IsMember({"decide", "first", "count", "all"}));
  solve->add_option("--budget", solveArgs.budget, "Search node limit");
  solve->add_flag("--use-embedding", solveArgs.useEmbedding, "Search facial cycles of the plane embedding");
  solve->add_flag("--no-mod4", solveArgs.noMod4, "Skip the bipartite mod-4 shortcut");
  solve->add_flag("--json", solveArgs.json, "Print a JSON run report");
  solve->add_option("--cert-out", solveArgs.certOut, "Write the first certificate here");
  solve->add_option("--dot", solveArgs.dot, "Write a DOT drawing with tree/cycle edge classes");

  std::string checkInput, checkFormat = "auto";
  bool checkJson = false;
  auto* check = app.add_subcommand("check", "Run the cheap non-existence filters");
  check->add_option("-i,--input", checkInput, "Graph file or catalog name")->required();
  check->add_option("-f,--format", checkFormat, "graph6|edgelist|embedded|auto");
  check->add_flag("--json", checkJson, "Print a JSON run report");

  GenOutput genOut;
  auto* gen = app.add_subcommand("gen", "Generate graphs");
  gen->require_subcommand(1);
  gen->fallthrough();
  gen->add_option("-o,--out", genOut.outFile, "Output file (default stdout)");
  gen->add_option("-f,--format", genOut.format, "graph6|edgelist|embedded|auto");
  gen->add_flag("--json", genOut.json, "Print provenance JSON on stderr");

  std::string catName;
  auto* genCatalog = gen->add_subcommand("catalog", "Named graph");
  genCatalog->add_option("name", catName)->required();

  int hcM = 0, hcN = 0;
  auto* genHoney = gen->add_subcommand("honeycomb", "Honeycomb torus hexangulation");
  genHoney->add_option("m", hcM)->required();
  genHoney->add_option("n", hcN)->required();

  std::string inflFile;
  std::optional<int> inflK;
  std::optional<std::uint64_t> inflSeed;
  auto* genInfl = gen->add_subcommand("inflate", "Inflation of a base graph");
  genInfl->add_option("base", inflFile, "Base graph file or catalog name")->required();
  genInfl->add_option("--bipartite", inflK, "Bipartite inflation of a 2k-regular base");
  genInfl->add_option("--seed", inflSeed, "Shuffle the cycle order around each base vertex");

  int rrN = 0, rrD = 0;
  std::uint64_t rrSeed = 0;
  auto* genRr = gen->add_subcommand("random-regular", "Random regular graph (pairing model)");
  genRr->add_option("n", rrN)->required();
  genRr->add_option("d", rrD)->required();
  genRr->add_option("seed", rrSeed)->required();

  std::string ringFile, ringCycle;
  auto* genRing = gen->add_subcommand("insert-ring", "Insert a hexagonal ring along a 6-cycle");
  genRing->add_option("file", ringFile, "Embedded cubic hexangulation")->required();
  genRing->add_option("cycle", ringCycle, "Comma-separated 6-cycle, or 'auto'")->required();

  std::string cecInput, cecFormat = "auto", cecBase;
  std::optional<int> cecMaxLen;
  bool cecJson = false;
  auto* cec = app.add_subcommand("cec", "Cyclic edge-connectivity");
  cec->add_option("-i,--input", cecInput, "Graph file or catalog name")->required();
  cec->add_option("-f,--format", cecFormat, "graph6|edgelist|embedded|auto");
  cec->add_option("--max-cycle-length", cecMaxLen, "Limit chordless cycle length (upper bound only)");
  cec->add_option("--verify-inflation", cecBase, "Base graph whose inflation the input is");
  cec->add_flag("--json", cecJson, "Print a JSON run report");

  std::vector<std::string> batchInputs;
  std::string batchDir, batchEmbDir;
  SolveArgs batchArgs;
  auto* batch = app.add_subcommand("batch", "Solve every graph of a corpus, one JSON line each");
  batch->add_option("inputs", batchInputs, "graph6 files");
  batch->add_option("--dir", batchDir, "Directory of .g6 files");
  batch->add_option("--embedding-dir", batchEmbDir, "Directory of .emb files (facial solver)");
  batch->add_option("-m,--mode", batchArgs.mode, "decide|first|count|all")
      ->check(CLI::IsMember({"decide", "first", "count", "all"}));
  batch->add_option("--budget", batchArgs.budget, "Search node limit per graph");
  batch->add_flag("--use-embedding", batchArgs.useEmbedding, "Use facial search for embedded inputs");

  std::string verInput, verFormat = "auto", verCert;
  auto* verify = app.add_subcommand("verify", "Check a certificate file");
  verify->add_option("-i,--input", verInput, "Graph file or catalog name")->required();
  verify->add_option("-f,--format", verFormat, "graph6|edgelist|embedded|auto");
  verify->add_option("-c,--cert", verCert, "Certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*solve) return cmd_solve(solveArgs);
    if (*check) return cmd_check(checkInput, checkFormat, checkJson);
    if (*cec) return cmd_cec(cecInput, cecFormat, cecMaxLen, cecBase, cecJson);
    if (*batch) {
      if (batchInputs.empty() && batchDir.empty() && batchEmbDir.empty()) {
        throw InputError("batch needs input files, --dir or --embedding-dir");
      }
      return cmd_batch(batchInputs, batchDir, batchEmbDir, batchArgs);
    }
    if (*verify) return cmd_verify(verInput, verFormat, verCert);
    if (*genCatalog) {
      auto c = construct::catalog(catName);
      return finish_gen(c.graph, c.rotation, c.provenance, genOut);
    }
    if (*genHoney) {
      auto e = construct::honeycomb_torus(hcM, hcN);
      return finish_gen(e.graph, e.rotation, e.provenance, genOut);
    }
    if (*genInfl) {
      const Loaded base = load_one(inflFile, "auto");
      const auto h = construct::BaseGraph::from(base.graph);
      const auto r = inflK ? construct::bipartite_inflate(h, *inflK)
                           : construct::inflate(h, inflSeed ? construct::RotationChoice::seeded(*inflSeed)
                                                            : construct::RotationChoice::deterministic());
      construct::Provenance prov{inflK ? "bipartite_inflate" : "inflate", {{"base", inflFile}}};
      if (inflK) prov.params["k"] = *inflK;
      if (inflSeed) prov.params["seed"] = static_cast<long long>(*inflSeed);
      return finish_gen(r.inflated, std::nullopt, prov, genOut);
    }
    if (*genRr) {
      const Graph g = construct::random_regular(rrN, rrD, rrSeed);
      construct::Provenance prov{"random_regular",
                                 {{"n", rrN}, {"d", rrD}, {"seed", static_cast<long long>(rrSeed)}}};
      return finish_gen(g, std::nullopt, prov, genOut);
    }
    if (*genRing) {
      const Loaded in = load_one(ringFile, "auto");
      if (!in.rotation) throw InputError(ringFile + " has no embedding");
      construct::EmbeddedGraph e{in.graph, *in.rotation, {in.info.source, {}}};
      if (in.info.generator) e.provenance = *in.info.generator;
      std::vector<Vertex> cycle;
      if (ringCycle == "auto") {
        const auto candidates = construct::ring_cycles(e);
        if (candidates.empty()) throw InputError("no 6-cycle with a well-defined cut");
        cycle = candidates.front();
      } else {
        cycle = parse_cycle(ringCycle);
      }
      auto out = construct::insert_ring(e, cycle);
      return finish_gen(out.graph, out.rotation, out.provenance, genOut);
    }
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return kInvalid;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
