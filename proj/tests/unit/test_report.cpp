#include <doctest.h>

#include "histlab/construct.hpp"
#include "histlab/cyclic.hpp"
#include "histlab/hist.hpp"
#include "histlab/profile.hpp"
#include "histlab/topology.hpp"
#include "report.hpp"

using namespace histlab;

namespace {

void check_round_trip(const report::RunReport& r) {
  const auto j = report::to_json(r);
  const auto back = report::from_json(j);
  CHECK(back == r);
  CHECK(report::to_json(back).dump() == j.dump());
  CHECK(report::to_json(report::from_json(nlohmann::json::parse(j.dump()))).dump() == j.dump());
}

}  // namespace

TEST_CASE("run reports round-trip through JSON") {
  const auto pet = construct::catalog("petersen");
  report::RunReport r;
  r.version = "test";
  r.input = {"petersen", "catalog", pet.provenance, std::nullopt};
  r.profile = classify(pet.graph);
  r.mod4 = hist::mod4_filter(pet.graph);
  hist::SolveOptions o;
  o.mode = hist::SolveMode::EnumerateAll;
  r.solve = report::summarize(pet.graph, hist::solve(pet.graph, o), o.mode, "edge-branching");
  r.cec = report::summarize(pet.graph, cyclic::cyclic_edge_connectivity(pet.graph));
  r.wallSeconds = 0.125;
  check_round_trip(r);

  const auto json = report::to_json(r);
  CHECK(json.at("solve").at("verdict") == "HasHist");
  CHECK(json.at("solve").at("mode") == "all");
  CHECK(json.at("cec").at("cec") == 5);
  CHECK(json.at("filters").at("mod4") == "Inconclusive");
  CHECK(json.at("profile").at("girth") == 5);
}

TEST_CASE("every optional section survives a round trip") {
  const auto k33 = construct::catalog("k33").graph;
  report::RunReport empty;
  empty.version = "0";
  empty.input = {"x.g6", "graph6", std::nullopt, 3};
  empty.error = "broken";
  check_round_trip(empty);

  report::RunReport cut;
  cut.version = "0";
  cut.profile = classify(k33);
  cut.cec = report::summarize(k33, cyclic::cyclic_edge_connectivity(k33));
  CHECK(report::to_json(cut).at("cec").at("cec") == "Undefined");
  check_round_trip(cut);

  const auto k4 = construct::BaseGraph::from(construct::catalog("k4").graph);
  const auto t = cyclic::check_inflation_theorem(k4, construct::inflate(k4));
  cut.theorem = report::summarize(t);
  const auto h = construct::honeycomb_torus(3, 3);
  report::EmbeddingInfo e;
  e.genus = 1;
  e.faceLengths = topology::trace_faces(h.graph, h.rotation).lengthHistogram;
  e.hexangulation = true;
  cut.embedding = e;
  cut.facial = hist::FilterVerdict::NoHist;
  cut.input.generator = h.provenance;
  construct::Provenance listed{"insert_ring", {{"cycle", std::vector<long long>{0, 1, 2, 3, 4, 5}}, {"base", "h.emb"}}};
  cut.input.generator = listed;
  check_round_trip(cut);
}

TEST_CASE("enum names parse back") {
  for (auto m : {hist::SolveMode::Decide, hist::SolveMode::First, hist::SolveMode::Count, hist::SolveMode::EnumerateAll}) {
    CHECK(report::parse_mode(std::string(to_string(m))) == m);
  }
  for (auto v : {hist::Verdict::HasHist, hist::Verdict::NoHist, hist::Verdict::BudgetExceeded}) {
    CHECK(report::parse_verdict(std::string(to_string(v))) == v);
  }
  CHECK_THROWS(report::parse_verdict("Maybe"));
}

TEST_CASE("provenance JSON shape") {
  const auto h = construct::honeycomb_torus(3, 3);
  const auto j = report::to_json(h.provenance);
  CHECK(j.dump() == R"({"generator":"honeycomb_torus","params":{"m":3,"n":3}})");
  CHECK(report::provenance_from_json(j) == h.provenance);
}
