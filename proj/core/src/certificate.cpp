#include "holecert/certificate.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "holecert/error.hpp"
#include "holecert/text_format.hpp"

namespace holecert {

namespace {

constexpr std::array<std::pair<DerivationKind, std::string_view>, 5> kKinds{{
    {DerivationKind::Chordal, "chordal"},
    {DerivationKind::EdgeSplit, "edge_split"},
    {DerivationKind::CutSplit, "cut_split"},
    {DerivationKind::ExactFallback, "exact_fallback"},
    {DerivationKind::Compose, "compose"},
}};

std::string join(const std::vector<VertexId>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += vs[i].str();
  }
  return out;
}

void write_node(std::ostringstream& out, const DerivationNode& node, std::size_t depth) {
  out << std::string(2 * depth, ' ') << kind_name(node.kind) << " k=" << node.k
      << " n=" << node.vertices << " m=" << node.edges;
  if (node.edge) out << " edge=" << node.edge->first() << ',' << node.edge->second();
  if (!node.hole.empty()) out << " hole=" << join(node.hole);
  if (node.j) out << " j=" << *node.j;
  if (node.shared_len) out << " shared_len=" << *node.shared_len;
  if (node.ear) out << " ear=" << *node.ear;
  if (!node.cut.empty()) out << " cut=" << join(node.cut);
  if (!node.component.empty()) out << " component=" << join(node.component);
  if (!node.shared.empty()) out << " shared=" << join(node.shared);
  if (!node.prey.empty()) out << " prey=" << join(node.prey);
  out << '\n';
  for (const auto& child : node.children) write_node(out, child, depth + 1);
}

std::size_t parse_count(std::string_view s, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::vector<VertexId> parse_list(std::string_view s, std::size_t line) {
  std::vector<VertexId> out;
  while (!s.empty()) {
    auto comma = s.find(',');
    auto token = s.substr(0, comma);
    if (!VertexId::valid_token(token)) {
      throw ParseError(line, "invalid vertex id '" + std::string(token) + "'");
    }
    out.emplace_back(std::string(token));
    s = comma == std::string_view::npos ? std::string_view{} : s.substr(comma + 1);
  }
  return out;
}

DerivationNode parse_node_line(std::string_view body, std::size_t line) {
  auto tokens = split_tokens(body);
  DerivationNode node;
  auto kind = parse_kind(tokens.at(0));
  if (!kind) throw ParseError(line, "unknown derivation kind '" + std::string(tokens[0]) + "'");
  node.kind = *kind;
  for (std::size_t t = 1; t < tokens.size(); ++t) {
    auto eq = tokens[t].find('=');
    if (eq == std::string_view::npos) throw ParseError(line, "expected key=value");
    auto key = tokens[t].substr(0, eq);
    auto value = tokens[t].substr(eq + 1);
    if (key == "k") {
      node.k = parse_count(value, line);
    } else if (key == "n") {
      node.vertices = parse_count(value, line);
    } else if (key == "m") {
      node.edges = parse_count(value, line);
    } else if (key == "edge") {
      auto ends = parse_list(value, line);
      if (ends.size() != 2 || ends[0] == ends[1]) throw ParseError(line, "bad edge");
      node.edge = Edge(ends[0], ends[1]);
    } else if (key == "hole") {
      node.hole = parse_list(value, line);
    } else if (key == "j") {
      node.j = parse_count(value, line);
    } else if (key == "shared_len") {
      node.shared_len = parse_count(value, line);
    } else if (key == "ear") {
      auto v = parse_list(value, line);
      if (v.size() != 1) throw ParseError(line, "bad ear");
      node.ear = v[0];
    } else if (key == "cut") {
      node.cut = parse_list(value, line);
    } else if (key == "component") {
      node.component = parse_list(value, line);
    } else if (key == "shared") {
      node.shared = parse_list(value, line);
    } else if (key == "prey") {
      node.prey = parse_list(value, line);
    } else {
      throw ParseError(line, "unknown derivation key '" + std::string(key) + "'");
    }
  }
  return node;
}

}  // namespace

std::string_view kind_name(DerivationKind kind) {
  for (const auto& [k, name] : kKinds) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<DerivationKind> parse_kind(std::string_view name) {
  for (const auto& [k, n] : kKinds) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string serialize_derivation(const DerivationNode& root) {
  std::ostringstream out;
  write_node(out, root, 0);
  return out.str();
}

std::string serialize_certificate(const Certificate& cert) {
  std::ostringstream out;
  out << "certificate k=" << cert.k << " fallback=" << (cert.fallback_used ? 1 : 0) << '\n';
  out << serialize_digraph(cert.digraph);
  out << "isolated";
  for (const auto& v : cert.isolated) out << ' ' << v;
  out << '\n';
  out << "derivation\n";
  out << serialize_derivation(cert.derivation);
  return out.str();
}

Certificate parse_certificate(std::string_view text, Graph target) {
  Certificate cert;
  cert.target = std::move(target);

  std::vector<std::pair<std::size_t, std::string_view>> lines;
  {
    std::size_t no = 0;
    std::string_view rest = text;
    while (!rest.empty()) {
      ++no;
      auto nl = rest.find('\n');
      auto line = rest.substr(0, nl);
      rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (split_tokens(line).empty()) continue;
      lines.emplace_back(no, line);
    }
  }
  if (lines.empty()) throw ParseError(0, "empty certificate");

  std::size_t at = 0;
  {
    auto [no, line] = lines[at++];
    auto t = split_tokens(line);
    if (t.size() != 3 || t[0] != "certificate" || !t[1].starts_with("k=") ||
        !t[2].starts_with("fallback=")) {
      throw ParseError(no, "expected 'certificate k=<k> fallback=<0|1>'");
    }
    cert.k = parse_count(t[1].substr(2), no);
    auto fb = t[2].substr(9);
    if (fb != "0" && fb != "1") throw ParseError(no, "fallback must be 0 or 1");
    cert.fallback_used = fb == "1";
  }

  std::string digraph_text;
  std::size_t digraph_first_line = at < lines.size() ? lines[at].first : 0;
  for (; at < lines.size(); ++at) {
    auto t = split_tokens(lines[at].second);
    if (t[0] == "isolated") break;
    digraph_text.append(lines[at].second).push_back('\n');
  }
  try {
    cert.digraph = parse_digraph(digraph_text);
  } catch (const ParseError& e) {
    throw ParseError(0, "digraph section starting at line " +
                            std::to_string(digraph_first_line) + ": " + e.what());
  }

  if (at == lines.size()) throw ParseError(0, "missing 'isolated' line");
  {
    auto [no, line] = lines[at++];
    auto t = split_tokens(line);
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!VertexId::valid_token(t[i])) throw ParseError(no, "invalid vertex id");
      cert.isolated.insert(VertexId(std::string(t[i])));
    }
  }

  if (at == lines.size() || split_tokens(lines[at].second)[0] != "derivation") {
    throw ParseError(at < lines.size() ? lines[at].first : 0, "missing 'derivation' line");
  }
  ++at;
  if (at == lines.size()) throw ParseError(0, "empty derivation");

  // Rebuild the tree from indentation.
  std::vector<std::pair<std::size_t, DerivationNode*>> stack;
  bool have_root = false;
  for (; at < lines.size(); ++at) {
    auto [no, line] = lines[at];
    std::size_t indent = line.find_first_not_of(' ');
    if (indent % 2 != 0) throw ParseError(no, "derivation indent must be even");
    std::size_t depth = indent / 2;
    DerivationNode node = parse_node_line(line.substr(indent), no);
    if (!have_root) {
      if (depth != 0) throw ParseError(no, "derivation root must not be indented");
      cert.derivation = std::move(node);
      stack.emplace_back(0, &cert.derivation);
      have_root = true;
      continue;
    }
    if (depth == 0) throw ParseError(no, "derivation has more than one root");
    while (!stack.empty() && stack.back().first >= depth) stack.pop_back();
    if (stack.empty() || stack.back().first + 1 != depth) {
      throw ParseError(no, "derivation indent skips a level");
    }
    auto& children = stack.back().second->children;
    children.push_back(std::move(node));
    stack.emplace_back(depth, &children.back());
  }
  return cert;
}

}  // namespace holecert
