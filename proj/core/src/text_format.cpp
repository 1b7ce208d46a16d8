#include "holecert/text_format.hpp"

#include <fstream>
#include <sstream>

#include "holecert/error.hpp"

namespace holecert {

namespace {

VertexId vertex_token(std::string_view token, std::size_t line) {
  if (!VertexId::valid_token(token)) {
    throw ParseError(line, "invalid vertex id '" + std::string(token) + "'");
  }
  return VertexId(std::string(token));
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    fn(tokens, line_no);
  }
}

}  // namespace

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for_each_line(text, [&](const std::vector<std::string_view>& t, std::size_t line) {
    if (t[0] == "v" && t.size() == 2) {
      vertices.push_back(vertex_token(t[1], line));
    } else if (t[0] == "e" && t.size() == 3) {
      auto a = vertex_token(t[1], line);
      auto b = vertex_token(t[2], line);
      if (a == b) throw ParseError(line, "self-loop edge on " + a.str());
      edges.emplace_back(std::move(a), std::move(b));
    } else {
      throw ParseError(line, "malformed graph line");
    }
  });
  return Graph(std::move(vertices), edges);
}

Digraph parse_digraph(std::string_view text) {
  std::vector<VertexId> vertices;
  std::vector<Arc> arcs;
  for_each_line(text, [&](const std::vector<std::string_view>& t, std::size_t line) {
    if (t[0] == "v" && t.size() == 2) {
      vertices.push_back(vertex_token(t[1], line));
    } else if (t[0] == "a" && t.size() == 4 && t[2] == ">") {
      auto from = vertex_token(t[1], line);
      auto to = vertex_token(t[3], line);
      if (from == to) throw ParseError(line, "loop arc on " + from.str());
      arcs.push_back({std::move(from), std::move(to)});
    } else {
      throw ParseError(line, "malformed digraph line");
    }
  });
  return Digraph(std::move(vertices), arcs);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.degree(i) == 0) out << "v " << g.id(i) << '\n';
  }
  for (const auto& e : g.edges()) out << "e " << e.first() << ' ' << e.second() << '\n';
  return out.str();
}

std::string serialize_digraph(const Digraph& d) {
  std::ostringstream out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.out_neighbors(i).empty() && d.in_neighbors(i).empty()) {
      out << "v " << d.id(i) << '\n';
    }
  }
  for (const auto& a : d.arcs()) out << "a " << a.from << " > " << a.to << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace holecert
