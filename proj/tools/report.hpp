#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "histlab/construct.hpp"
#include "histlab/cyclic.hpp"
#include "histlab/hist.hpp"
#include "histlab/profile.hpp"

/// Machine-readable run reports printed by the histlab tool. Every field is
/// plain data so a report parses back and re-serializes to the same JSON.
namespace histlab::report {

struct InputInfo {
  std::string source;  // path or catalog name
  std::string format;  // graph6 | edgelist | embedded | catalog | generator
  std::optional<construct::Provenance> generator;
  std::optional<int> index;  // position inside a multi-graph file

  bool operator==(const InputInfo&) const = default;
};

struct CertificateInfo {
  std::vector<Edge> treeEdges;
  int leafCount = 0;
  int branchCount = 0;

  bool operator==(const CertificateInfo&) const = default;
};

struct SolveInfo {
  hist::SolveMode mode = hist::SolveMode::Decide;
  hist::Verdict verdict = hist::Verdict::NoHist;
  std::optional<std::uint64_t> count;
  std::uint64_t nodesExplored = 0;
  hist::FilterUsed filterUsed = hist::FilterUsed::None;
  std::string solver;  // "edge-branching" or "facial-cycles"
  std::vector<CertificateInfo> certificates;

  bool operator==(const SolveInfo&) const = default;
};

struct CutInfo {
  cyclic::CutKind kind = cyclic::CutKind::Undefined;
  int value = 0;
  std::optional<std::vector<Edge>> witnessCut;
  std::vector<std::vector<Vertex>> witnessCycles;
  std::string method;
  bool capped = false;

  bool operator==(const CutInfo&) const = default;
};

struct TheoremInfo {
  cyclic::TheoremStatus status = cyclic::TheoremStatus::PremiseNotMet;
  int baseConnectivity = 0;
  std::optional<int> baseGirth;
  int kStar = 0;

  bool operator==(const TheoremInfo&) const = default;
};

struct EmbeddingInfo {
  int genus = 0;
  std::map<int, int> faceLengths;
  bool fullerene = false;
  bool hexangulation = false;

  bool operator==(const EmbeddingInfo&) const = default;
};

struct RunReport {
  std::string tool = "histlab";
  std::string version;
  InputInfo input;
  std::optional<GraphProfile> profile;
  std::optional<hist::FilterVerdict> mod4;
  std::optional<hist::FilterVerdict> facial;
  std::optional<SolveInfo> solve;
  std::optional<CutInfo> cec;
  std::optional<TheoremInfo> theorem;
  std::optional<EmbeddingInfo> embedding;
  double wallSeconds = 0.0;
  std::optional<std::string> error;

  bool operator==(const RunReport&) const = default;
};


SolveInfo summarize(const Graph& g, const hist::SolveReport& r, hist::SolveMode mode, std::string solver);
CutInfo summarize(const Graph& g, const cyclic::CutReport& r);
TheoremInfo summarize(const cyclic::InflationTheoremReport& r);

nlohmann::json to_json(const RunReport& r);
RunReport from_json(const nlohmann::json& j);

nlohmann::json to_json(const construct::Provenance& p);
construct::Provenance provenance_from_json(const nlohmann::json& j);

hist::SolveMode parse_mode(const std::string& s);
hist::Verdict parse_verdict(const std::string& s);
hist::FilterUsed parse_filter_used(const std::string& s);
hist::FilterVerdict parse_filter_verdict(const std::string& s);
cyclic::TheoremStatus parse_theorem_status(const std::string& s);

}  // namespace histlab::report
