#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>
#include <string>

#include "histlab/construct.hpp"

#ifndef HISTLAB_DEFAULT_DATA_DIR
#define HISTLAB_DEFAULT_DATA_DIR "data"
#endif

namespace histlab::construct {
namespace {

using Coordinates = std::vector<std::pair<double, double>>;

Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::set<Edge> edges;
  for (auto [a, b] : pairs) edges.insert({std::min(a, b), std::max(a, b)});
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph lcf(int n, const std::vector<int>& shifts) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    pairs.emplace_back(i, (i + 1) % n);
    const int s = shifts[static_cast<std::size_t>(i) % shifts.size()];
    pairs.emplace_back(i, ((i + s) % n + n) % n);
  }
  return from_pairs(n, pairs);
}

/// Outer cycle 0..k-1, spokes i -> k+i, inner (k+i) -> (k + (i+s) mod k).
Graph generalized_petersen(int k, int s) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    pairs.emplace_back(i, (i + 1) % k);
    pairs.emplace_back(i, k + i);
    pairs.emplace_back(k + i, k + (i + s) % k);
  }
  return from_pairs(2 * k, pairs);
}

std::pair<double, double> polar(double r, double turns) {
  const double a = 2 * std::numbers::pi * turns;
  return {r * std::cos(a), r * std::sin(a)};
}

CatalogGraph plain(Graph g, std::string name) {
  return {std::move(g), std::nullopt, {std::move(name), {}}};
}

CatalogGraph drawn(Graph g, const Coordinates& xy, std::string name) {
  auto rot = rotation_from_coordinates(g, xy);
  return {std::move(g), std::move(rot), {std::move(name), {}}};
}

CatalogGraph k4() {
  Graph g = from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  return drawn(std::move(g), {{0, 0}, polar(1, 0.25), polar(1, 0.25 + 1.0 / 3), polar(1, 0.25 + 2.0 / 3)}, "k4");
}

CatalogGraph prism(int k) {
  if (k < 3) throw ConstructError(ConstructErrorKind::InvalidParameter, "prism needs k >= 3");
  Coordinates xy;
  for (int i = 0; i < k; ++i) xy.push_back(polar(2, double(i) / k));
  for (int i = 0; i < k; ++i) xy.push_back(polar(1, double(i) / k));
  auto c = drawn(generalized_petersen(k, 1), xy, "prism");
  c.provenance.params["k"] = k;
  return c;
}

CatalogGraph cube() {
  auto c = prism(4);
  c.provenance = {"cube", {}};
  return c;
}

/// Outer pentagon a_i = i, middle decagon b_j = 5 + j, inner pentagon c_i = 15 + i.
CatalogGraph dodecahedron() {
  std::vector<std::pair<int, int>> pairs;
  Coordinates xy;
  for (int i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(i, 5 + 2 * i);
    pairs.emplace_back(5 + 2 * i + 1, 15 + i);
    pairs.emplace_back(15 + i, 15 + (i + 1) % 5);
  }
  for (int j = 0; j < 10; ++j) pairs.emplace_back(5 + j, 5 + (j + 1) % 10);
  for (int i = 0; i < 5; ++i) xy.push_back(polar(3, i / 5.0));
  for (int j = 0; j < 10; ++j) xy.push_back(polar(2, j / 10.0));
  for (int i = 0; i < 5; ++i) xy.push_back(polar(1, (2 * i + 1) / 10.0));
  return drawn(from_pairs(20, pairs), xy, "dodecahedron");
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return from_pairs(n, pairs);
}

CatalogGraph from_data_file(const std::string& name) {
  const std::string path = data_directory() + "/" + name + ".emb";
  std::ifstream in(path);
  if (!in) {
    throw ConstructError(ConstructErrorKind::MissingDataFile, "data file " + path + " not found");
  }
  auto emb = topology::read_embedding(in);
  return {std::move(emb.graph), std::move(emb.rotation), {name, {{"file", path}}}};
}

/// Parses "name(k)"; returns -1 when name does not match.
int parameter_of(std::string_view text, std::string_view name) {
  if (text.size() < name.size() + 3 || text.substr(0, name.size()) != name || text[name.size()] != '(' ||
      text.back() != ')') {
    return -1;
  }
  const auto digits = text.substr(name.size() + 1, text.size() - name.size() - 2);
  if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ConstructError(ConstructErrorKind::InvalidParameter, "bad parameter in " + std::string(text));
  }
  return std::stoi(std::string(digits));
}

}  // namespace

std::optional<EmbeddedGraph> CatalogGraph::embedded() const {
  if (!rotation) return std::nullopt;
  return EmbeddedGraph{graph, *rotation, provenance};
}

std::string data_directory() {
  if (const char* env = std::getenv("HISTLAB_DATA_DIR"); env && *env) return env;
  return HISTLAB_DEFAULT_DATA_DIR;
}

std::vector<std::string> cubic_catalog_names() {
  return {"k4",      "k33",        "cube",    "petersen", "dodecahedron", "heawood", "moebius_kantor",
          "pappus",  "desargues",  "prism(3)", "prism(5)", "prism(6)"};
}

CatalogGraph catalog(std::string_view name) {
  if (name == "k4") return k4();
  if (name == "k33") {
    return plain(from_pairs(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}), "k33");
  }
  if (name == "cube") return cube();
  if (name == "petersen") {
    auto c = plain(generalized_petersen(5, 2), "petersen");
    return c;
  }
  if (name == "dodecahedron") return dodecahedron();
  if (name == "heawood") return plain(lcf(14, {5, -5}), "heawood");
  if (name == "moebius_kantor") return plain(generalized_petersen(8, 3), "moebius_kantor");
  if (name == "pappus") return plain(lcf(18, {5, 7, -7, 7, -7, -5}), "pappus");
  if (name == "desargues") return plain(generalized_petersen(10, 3), "desargues");
  if (name == "buckminster" || name == "grinberg") return from_data_file(std::string(name));
  if (int k = parameter_of(name, "prism"); k >= 0) return prism(k);

  if (name == "k5") return catalog("complete(5)");
  if (name == "k7") return catalog("complete(7)");
  if (int k = parameter_of(name, "complete"); k >= 0) {
    if (k < 1) throw ConstructError(ConstructErrorKind::InvalidParameter, "complete graph needs n >= 1");
    auto c = plain(complete(k), "complete");
    c.provenance.params["n"] = k;
    return c;
  }
  if (name == "octahedron") {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < 6; ++u) {
      for (int v = u + 1; v < 6; ++v) {
        if (v != u + 3) pairs.emplace_back(u, v);
      }
    }
    return plain(from_pairs(6, pairs), "octahedron");
  }
  if (int k = parameter_of(name, "cycle"); k >= 0) {
    if (k < 3) throw ConstructError(ConstructErrorKind::InvalidParameter, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) pairs.emplace_back(i, (i + 1) % k);
    auto c = plain(from_pairs(k, pairs), "cycle");
    c.provenance.params["n"] = k;
    return c;
  }
  throw ConstructError(ConstructErrorKind::UnknownName, "unknown catalog graph: " + std::string(name));
}

}  // namespace histlab::construct
