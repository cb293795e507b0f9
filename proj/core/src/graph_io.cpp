#include "histlab/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace histlab {
namespace {

constexpr int kMinByte = 63;
constexpr int kMaxByte = 126;

int checked_byte(char c, std::size_t pos) {
  const int b = static_cast<unsigned char>(c);
  if (b < kMinByte || b > kMaxByte) {
    throw GraphError(GraphErrorKind::InvalidByte,
                     "graph6 byte " + std::to_string(b) + " at offset " + std::to_string(pos) +
                         " is outside 63..126");
  }
  return b - kMinByte;
}

std::string_view trim_line(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim_line(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw GraphError(GraphErrorKind::MalformedHeader, "empty graph6 line");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = checked_byte(text[0], 0);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      throw GraphError(GraphErrorKind::TooManyVertices,
                       "8-byte graph6 header (n > 258047) is not supported");
    }
    if (text.size() < 4) {
      throw GraphError(GraphErrorKind::MalformedHeader, "graph6 long header needs 3 size bytes");
    }
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | checked_byte(text[i], i);
    pos = 4;
  }

  const long bits = n * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  const long available = static_cast<long>(text.size() - pos);
  if (available < bytes) {
    throw GraphError(GraphErrorKind::TruncatedPayload,
                     "graph6 payload has " + std::to_string(available) + " bytes, expected " +
                         std::to_string(bytes));
  }
  if (available > bytes) {
    throw GraphError(GraphErrorKind::TrailingData, "unexpected bytes after graph6 payload");
  }

  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      const int chunk = checked_byte(text[at], at);
      if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (std::size_t i = pos + static_cast<std::size_t>(k / 6); i < text.size(); ++i) {
    checked_byte(text[i], i);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
  const long n = g.vertex_count();
  if (n > kGraph6MaxVertices) {
    throw GraphError(GraphErrorKind::TooManyVertices,
                     "graph6 writer supports at most 258047 vertices");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kMinByte));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kMinByte));
    }
  }
  int chunk = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(chunk + kMinByte));
        chunk = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((chunk << (6 - used)) + kMinByte));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim_line(line).empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

EdgeListData parse_edge_list_block(std::istream& in) {
  std::string line;
  auto next_tokens = [&](std::istringstream& tokens) {
    while (std::getline(in, line)) {
      auto body = strip_comment(line);
      if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
      tokens = std::istringstream(body);
      return true;
    }
    return false;
  };

  std::istringstream tokens;
  if (!next_tokens(tokens)) throw GraphError(GraphErrorKind::ParseError, "missing \"n m\" header");
  EdgeListData data;
  int m = 0;
  if (!(tokens >> data.n >> m) || data.n < 0 || m < 0) {
    throw GraphError(GraphErrorKind::ParseError, "malformed \"n m\" header: " + line);
  }
  data.edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (!next_tokens(tokens)) {
      throw GraphError(GraphErrorKind::ParseError, "expected " + std::to_string(m) +
                                                       " edges, found " + std::to_string(i));
    }
    Edge e;
    if (!(tokens >> e.u >> e.v)) {
      throw GraphError(GraphErrorKind::ParseError, "malformed edge line: " + line);
    }
    data.edges.push_back(e);
  }
  return data;
}

Graph read_edge_list(std::istream& in) {
  auto data = parse_edge_list_block(in);
  return Graph(data.n, std::move(data.edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_dot(std::ostream& out, const Graph& g, const DotStyle& style) {
  if (style.treeEdges && !style.treeEdges->compatible_with(g)) {
    throw GraphError(GraphErrorKind::HostMismatch, "tree edge set belongs to a different graph");
  }
  out << "graph " << style.name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << " [label=\"" << v << "\"];\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    out << "  " << ed.u << " -- " << ed.v;
    if (style.treeEdges) {
      if (style.treeEdges->contains(e)) {
        out << " [class=tree, penwidth=3, color=\"black\"]";
      } else {
        out << " [class=cycle, style=dashed, color=\"red\"]";
      }
    }
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace histlab
