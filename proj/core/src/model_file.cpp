#include "latentid/model_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "latentid/error.hpp"

namespace latentid {

namespace {

int parse_int(const std::string& token, int line) {
  int value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw ParseError(line, "expected an integer, got '" + token + "'");
  return value;
}

[[noreturn]] void invalid(int line, const std::string& what) {
  throw ValidationError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

LatentModel parse_model(std::istream& in) {
  std::optional<int> node_count;
  std::vector<int> levels;
  std::vector<bool> level_set;
  std::vector<Edge> edges;
  std::vector<NodeSet> seen;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    for (std::string t; words >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;

    const std::string& keyword = tokens[0];
    if (keyword == "nodes") {
      if (node_count) throw ParseError(line, "duplicate 'nodes' directive");
      if (tokens.size() != 2) throw ParseError(line, "usage: nodes <count>");
      const int n = parse_int(tokens[1], line);
      if (n < 2) invalid(line, "a model needs at least 2 nodes (latent plus one observed)");
      if (n > NodeSet::kCapacity) invalid(line, "at most 64 nodes are supported");
      node_count = n;
      levels.assign(static_cast<std::size_t>(n), 2);
      level_set.assign(static_cast<std::size_t>(n), false);
      seen.assign(static_cast<std::size_t>(n), NodeSet{});
      continue;
    }
    if (!node_count) throw ParseError(line, "'" + keyword + "' before the 'nodes' directive");

    if (keyword == "levels") {
      if (tokens.size() < 2) throw ParseError(line, "usage: levels <node>=<count> ...");
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        const auto eq = tokens[k].find('=');
        if (eq == std::string::npos) throw ParseError(line, "expected <node>=<count>, got '" + tokens[k] + "'");
        const int v = parse_int(tokens[k].substr(0, eq), line);
        const int l = parse_int(tokens[k].substr(eq + 1), line);
        if (v < 0 || v >= *node_count) invalid(line, "node " + std::to_string(v) + " out of range");
        if (level_set[static_cast<std::size_t>(v)]) {
          invalid(line, "levels of node " + std::to_string(v) + " given twice");
        }
        if (v == 0 && l != 2) invalid(line, "the latent node 0 must have exactly 2 levels");
        if (l < 2) invalid(line, "node " + std::to_string(v) + " needs at least 2 levels");
        levels[static_cast<std::size_t>(v)] = l;
        level_set[static_cast<std::size_t>(v)] = true;
      }
    } else if (keyword == "edge") {
      if (tokens.size() != 3) throw ParseError(line, "usage: edge <i> <j>");
      const int i = parse_int(tokens[1], line);
      const int j = parse_int(tokens[2], line);
      const std::string label = "(" + tokens[1] + "," + tokens[2] + ")";
      if (i < 0 || j < 0 || i >= *node_count || j >= *node_count) invalid(line, "edge " + label + " out of range");
      if (i == j) invalid(line, "self-loop " + label);
      if (seen[static_cast<std::size_t>(i)].contains(j)) invalid(line, "duplicate edge " + label);
      seen[static_cast<std::size_t>(i)].insert(j);
      seen[static_cast<std::size_t>(j)].insert(i);
      edges.emplace_back(std::min(i, j), std::max(i, j));
    } else {
      throw ParseError(line, "unknown directive '" + keyword + "'");
    }
  }
  if (!node_count) throw ParseError(line, "missing 'nodes' directive");
  return LatentModel(Graph(*node_count, edges), std::move(levels));
}

LatentModel parse_model_text(const std::string& text) {
  std::istringstream in(text);
  return parse_model(in);
}

LatentModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file '" + path.string() + "'");
  return parse_model(in);
}

std::string serialize_model(const LatentModel& m) {
  std::ostringstream out;
  out << "nodes " << m.node_count() << '\n';
  for (int v = 1; v < m.node_count(); ++v) {
    if (m.levels_of(v) != 2) out << "levels " << v << '=' << m.levels_of(v) << '\n';
  }
  for (auto [i, j] : m.graph().edges()) out << "edge " << i << ' ' << j << '\n';
  return out.str();
}

}  // namespace latentid
