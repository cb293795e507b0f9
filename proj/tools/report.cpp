#include "report.hpp"

#include <array>
#include <stdexcept>

namespace histlab::report {

using nlohmann::json;

namespace {

template <class Enum, std::size_t N>
Enum parse_enum(const std::string& s, const std::array<Enum, N>& values, const char* what) {
  for (Enum v : values) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument(std::string("unknown ") + what + ": " + s);
}

json edges_json(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const auto& e : edges) a.push_back({e.u, e.v});
  return a;
}

std::vector<Edge> edges_from(const json& j) {
  std::vector<Edge> out;
  for (const auto& p : j) out.push_back({p.at(0).get<Vertex>(), p.at(1).get<Vertex>()});
  return out;
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json profile_json(const GraphProfile& p) {
  return {{"n", p.n},
          {"m", p.m},
          {"cubic", p.isCubic},
          {"connected", p.isConnected},
          {"bipartite", p.isBipartite},
          {"bipartition", opt(p.bipartition)},
          {"girth", opt(p.girth)}};
}

GraphProfile profile_from(const json& j) {
  GraphProfile p;
  p.n = j.at("n").get<int>();
  p.m = j.at("m").get<int>();
  p.isCubic = j.at("cubic").get<bool>();
  p.isConnected = j.at("connected").get<bool>();
  p.isBipartite = j.at("bipartite").get<bool>();
  p.bipartition = opt_from<std::vector<int>>(j, "bipartition");
  p.girth = opt_from<int>(j, "girth");
  return p;
}

json solve_json(const SolveInfo& s) {
  json certs = json::array();
  for (const auto& c : s.certificates) {
    certs.push_back({{"tree_edges", edges_json(c.treeEdges)},
                     {"leaf_count", c.leafCount},
                     {"branch_count", c.branchCount}});
  }
  return {{"mode", to_string(s.mode)},
          {"verdict", to_string(s.verdict)},
          {"count", opt(s.count)},
          {"nodes_explored", s.nodesExplored},
          {"filter_used", to_string(s.filterUsed)},
          {"solver", s.solver},
          {"certificates", certs}};
}

SolveInfo solve_from(const json& j) {
  SolveInfo s;
  s.mode = parse_mode(j.at("mode").get<std::string>());
  s.verdict = parse_verdict(j.at("verdict").get<std::string>());
  s.count = opt_from<std::uint64_t>(j, "count");
  s.nodesExplored = j.at("nodes_explored").get<std::uint64_t>();
  s.filterUsed = parse_filter_used(j.at("filter_used").get<std::string>());
  s.solver = j.at("solver").get<std::string>();
  for (const auto& c : j.at("certificates")) {
    s.certificates.push_back({edges_from(c.at("tree_edges")), c.at("leaf_count").get<int>(),
                              c.at("branch_count").get<int>()});
  }
  return s;
}

json cut_json(const CutInfo& c) {
  return {{"cec", c.kind == cyclic::CutKind::Finite ? json(c.value) : json("Undefined")},
          {"witness_cut", c.witnessCut ? edges_json(*c.witnessCut) : json(nullptr)},
          {"witness_cycles", c.witnessCycles},
          {"method", c.method},
          {"capped", c.capped}};
}

CutInfo cut_from(const json& j) {
  CutInfo c;
  const auto& v = j.at("cec");
  if (v.is_string()) {
    if (v.get<std::string>() != "Undefined") throw std::invalid_argument("bad cec value");
    c.kind = cyclic::CutKind::Undefined;
  } else {
    c.kind = cyclic::CutKind::Finite;
    c.value = v.get<int>();
  }
  if (!j.at("witness_cut").is_null()) c.witnessCut = edges_from(j.at("witness_cut"));
  c.witnessCycles = j.at("witness_cycles").get<std::vector<std::vector<Vertex>>>();
  c.method = j.at("method").get<std::string>();
  c.capped = j.at("capped").get<bool>();
  return c;
}

json embedding_json(const EmbeddingInfo& e) {
  json faces = json::object();
  for (auto [len, count] : e.faceLengths) faces[std::to_string(len)] = count;
  return {{"genus", e.genus}, {"face_lengths", faces}, {"fullerene", e.fullerene}, {"hexangulation", e.hexangulation}};
}

EmbeddingInfo embedding_from(const json& j) {
  EmbeddingInfo e;
  e.genus = j.at("genus").get<int>();
  for (const auto& [len, count] : j.at("face_lengths").items()) e.faceLengths[std::stoi(len)] = count.get<int>();
  e.fullerene = j.at("fullerene").get<bool>();
  e.hexangulation = j.at("hexangulation").get<bool>();
  return e;
}

}  // namespace

json to_json(const construct::Provenance& p) {
  json params = json::object();
  for (const auto& [key, value] : p.params) {
    std::visit([&](const auto& v) { params[key] = v; }, value);
  }
  return {{"generator", p.generator}, {"params", params}};
}

construct::Provenance provenance_from_json(const json& j) {
  construct::Provenance p;
  p.generator = j.at("generator").get<std::string>();
  for (const auto& [key, value] : j.at("params").items()) {
    if (value.is_string()) p.params[key] = value.get<std::string>();
    else if (value.is_array()) p.params[key] = value.get<std::vector<long long>>();
    else p.params[key] = value.get<long long>();
  }
  return p;
}

hist::SolveMode parse_mode(const std::string& s) {
  using M = hist::SolveMode;
  return parse_enum(s, std::array{M::Decide, M::First, M::Count, M::EnumerateAll}, "mode");
}

hist::Verdict parse_verdict(const std::string& s) {
  using V = hist::Verdict;
  return parse_enum(s, std::array{V::HasHist, V::NoHist, V::BudgetExceeded}, "verdict");
}

hist::FilterUsed parse_filter_used(const std::string& s) {
  using F = hist::FilterUsed;
  return parse_enum(s, std::array{F::None, F::Mod4, F::Facial}, "filter");
}

hist::FilterVerdict parse_filter_verdict(const std::string& s) {
  using F = hist::FilterVerdict;
  return parse_enum(s, std::array{F::NoHist, F::Inconclusive}, "filter verdict");
}

cyclic::TheoremStatus parse_theorem_status(const std::string& s) {
  using T = cyclic::TheoremStatus;
  return parse_enum(s, std::array{T::Pass, T::Violation, T::PremiseNotMet}, "theorem status");
}

SolveInfo summarize(const Graph& g, const hist::SolveReport& r, hist::SolveMode mode, std::string solver) {
  SolveInfo s;
  s.mode = mode;
  s.verdict = r.verdict;
  s.count = r.count;
  s.nodesExplored = r.nodesExplored;
  s.filterUsed = r.filterUsed;
  s.solver = std::move(solver);
  for (const auto& c : r.certificates) s.certificates.push_back({c.treeEdges.pairs(g), c.leafCount, c.branchCount});
  return s;
}

CutInfo summarize(const Graph& g, const cyclic::CutReport& r) {
  CutInfo c;
  c.kind = r.kind;
  c.value = r.value;
  if (r.witnessCut) c.witnessCut = r.witnessCut->pairs(g);
  c.witnessCycles = r.witnessCycles;
  c.method = r.method;
  c.capped = r.capped;
  return c;
}

TheoremInfo summarize(const cyclic::InflationTheoremReport& r) {
  return {r.status, r.baseConnectivity, r.baseGirth, r.kStar};
}

json to_json(const RunReport& r) {
  json input = {{"source", r.input.source},
                {"format", r.input.format},
                {"generator", r.input.generator ? to_json(*r.input.generator) : json(nullptr)},
                {"index", opt(r.input.index)}};
  json j = {{"tool", r.tool}, {"version", r.version}, {"input", input}};
  j["profile"] = r.profile ? profile_json(*r.profile) : json(nullptr);
  j["filters"] = {{"mod4", r.mod4 ? json(to_string(*r.mod4)) : json(nullptr)},
                  {"facial", r.facial ? json(to_string(*r.facial)) : json(nullptr)}};
  j["solve"] = r.solve ? solve_json(*r.solve) : json(nullptr);
  j["cec"] = r.cec ? cut_json(*r.cec) : json(nullptr);
  j["theorem"] = r.theorem ? json{{"status", to_string(r.theorem->status)},
                                  {"base_connectivity", r.theorem->baseConnectivity},
                                  {"base_girth", opt(r.theorem->baseGirth)},
                                  {"k_star", r.theorem->kStar}}
                           : json(nullptr);
  j["embedding"] = r.embedding ? embedding_json(*r.embedding) : json(nullptr);
  j["wall_time_s"] = r.wallSeconds;
  j["error"] = opt(r.error);
  return j;
}

RunReport from_json(const json& j) {
  RunReport r;
  r.tool = j.at("tool").get<std::string>();
  r.version = j.at("version").get<std::string>();
  const auto& in = j.at("input");
  r.input.source = in.at("source").get<std::string>();
  r.input.format = in.at("format").get<std::string>();
  if (!in.at("generator").is_null()) r.input.generator = provenance_from_json(in.at("generator"));
  r.input.index = opt_from<int>(in, "index");
  if (!j.at("profile").is_null()) r.profile = profile_from(j.at("profile"));
  const auto& f = j.at("filters");
  if (!f.at("mod4").is_null()) r.mod4 = parse_filter_verdict(f.at("mod4").get<std::string>());
  if (!f.at("facial").is_null()) r.facial = parse_filter_verdict(f.at("facial").get<std::string>());
  if (!j.at("solve").is_null()) r.solve = solve_from(j.at("solve"));
  if (!j.at("cec").is_null()) r.cec = cut_from(j.at("cec"));
  if (const auto& t = j.at("theorem"); !t.is_null()) {
    r.theorem = TheoremInfo{parse_theorem_status(t.at("status").get<std::string>()),
                            t.at("base_connectivity").get<int>(), opt_from<int>(t, "base_girth"),
                            t.at("k_star").get<int>()};
  }
  if (!j.at("embedding").is_null()) r.embedding = embedding_from(j.at("embedding"));
  r.wallSeconds = j.at("wall_time_s").get<double>();
  r.error = opt_from<std::string>(j, "error");
  return r;
}

}  // namespace histlab::report
