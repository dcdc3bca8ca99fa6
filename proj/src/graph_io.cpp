#include "lightsout/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace lightsout {

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char c : text) {
    if (c < kBias || c > 126) throw ParseError("graph6 byte out of range: '" + std::string(1, c) + "'");
  }
  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw ParseError("unsupported graph6 order encoding");
    n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw CapacityError("graph6 order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  }
  const std::size_t bits = static_cast<std::size_t>(pair_count(n));
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                     std::to_string(expected));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  for (; k < expected * 6; ++k) {
    const int byte = text[pos + k / 6] - kBias;
    if ((byte >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding bits");
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + ";";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out += first ? " " : ",";
    out += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  text = trim(text);
  if (!text.starts_with("n=")) throw ParseError("edge list must start with 'n='");
  text.remove_prefix(2);
  const auto semi = text.find(';');
  const int n = parse_int(text.substr(0, semi), "vertex count");
  if (n < 0) throw ParseError("negative vertex count");
  if (n > kMaxVertices) throw CapacityError("edge list order " + std::to_string(n) + " exceeds 64");
  Graph g(n);
  if (semi == std::string_view::npos) return g;
  std::string_view rest = trim(text.substr(semi + 1));
  if (rest.empty()) return g;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) throw ParseError("edge '" + std::string(item) + "' is not of the form u-v");
    const int u = parse_int(item.substr(0, dash), "vertex");
    const int v = parse_int(item.substr(dash + 1), "vertex");
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError("edge '" + std::string(item) + "' references a vertex outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw ParseError("self-loop '" + std::string(item) + "'");
    if (g.has_edge(u, v)) throw ParseError("duplicate edge '" + std::string(item) + "'");
    g.add_edge(u, v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return g;
}

Graph parse_graph(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.starts_with("n=")) return parse_edge_list(t);
  return from_graph6(t);
}

}  // namespace lightsout
