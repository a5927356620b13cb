#include "latentid/loglinear.hpp"

#include <algorithm>

#include "latentid/error.hpp"

namespace latentid {

LatentModel::LatentModel(Graph graph, std::vector<int> levels)
    : graph_(std::move(graph)), levels_(std::move(levels)) {
  if (graph_.node_count() < 2) {
    throw ValidationError("a model needs the latent node and at least one observed node");
  }
  if (levels_.empty()) levels_.assign(static_cast<std::size_t>(graph_.node_count()), 2);
  if (levels_.size() != static_cast<std::size_t>(graph_.node_count())) {
    throw ValidationError("level vector has " + std::to_string(levels_.size()) + " entries for " +
                          std::to_string(graph_.node_count()) + " nodes");
  }
  if (levels_[0] != 2) throw ValidationError("the latent node must have exactly 2 levels");
  for (std::size_t v = 1; v < levels_.size(); ++v) {
    if (levels_[v] < 2) {
      throw ValidationError("node " + std::to_string(v) + " has " + std::to_string(levels_[v]) +
                            " levels; at least 2 are required");
    }
  }
}

std::size_t LatentModel::observed_cells() const {
  std::size_t l = 1;
  for (std::size_t v = 1; v < levels_.size(); ++v) l *= static_cast<std::size_t>(levels_[v]);
  return l;
}

LatentModel make_star_model(int observed_count, const std::vector<Edge>& observed_edges,
                            std::vector<int> levels) {
  std::vector<Edge> edges;
  for (int v = 1; v <= observed_count; ++v) edges.emplace_back(0, v);
  edges.insert(edges.end(), observed_edges.begin(), observed_edges.end());
  return LatentModel(Graph(observed_count + 1, edges), std::move(levels));
}

bool operator<(const ParamKey& a, const ParamKey& b) {
  if (a.subset.size() != b.subset.size()) return a.subset.size() < b.subset.size();
  if (a.subset != b.subset) return lex_less(a.subset, b.subset);
  return a.levels < b.levels;
}

std::string param_name(const ParamKey& key) {
  std::string out = "b{";
  const auto nodes = key.subset.to_vector();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(nodes[k]);
    if (key.levels[k] != 1) out += ':' + std::to_string(key.levels[k]);
  }
  out += '}';
  return out;
}

ParamIndex::ParamIndex(std::vector<ParamKey> entries) : entries_(std::move(entries)) {
  for (std::size_t c = 0; c < entries_.size(); ++c) lookup_.emplace(entries_[c], c);
}

std::optional<std::size_t> ParamIndex::find(const ParamKey& key) const {
  auto it = lookup_.find(key);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t ParamIndex::column(const ParamKey& key) const {
  if (auto c = find(key)) return *c;
  throw NotApplicable("coordinate " + param_name(key) + " is not a parameter of the model");
}

std::vector<std::vector<int>> level_combinations(const LatentModel& m, NodeSet subset) {
  std::vector<std::vector<int>> out{{}};
  subset.for_each([&](int v) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out) {
      for (int level = 1; level < m.levels_of(v); ++level) {
        auto combo = prefix;
        combo.push_back(level);
        next.push_back(std::move(combo));
      }
    }
    out = std::move(next);
  });
  return out;
}

ParamIndex build_param_index(const LatentModel& m) {
  std::vector<ParamKey> entries;
  std::vector<NodeSet> subsets = complete_subsets(m.graph(), 1);
  subsets.insert(subsets.begin(), NodeSet{});
  for (NodeSet s : subsets) {
    for (auto& combo : level_combinations(m, s)) entries.push_back(ParamKey{s, std::move(combo)});
  }
  std::sort(entries.begin(), entries.end());
  return ParamIndex(std::move(entries));
}

CellTable::CellTable(std::vector<int> dimensions) : dims_(std::move(dimensions)) {
  for (int d : dims_) size_ *= static_cast<std::size_t>(d);
}

std::vector<int> CellTable::decode(std::size_t cell) const {
  std::vector<int> out(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    const auto d = static_cast<std::size_t>(dims_[k]);
    out[k] = static_cast<int>(cell % d);
    cell /= d;
  }
  return out;
}

std::size_t CellTable::encode(const std::vector<int>& levels) const {
  std::size_t cell = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    cell = cell * static_cast<std::size_t>(dims_[k]) + static_cast<std::size_t>(levels[k]);
  }
  return cell;
}

Eigen::MatrixXd design_matrix(const LatentModel& m, const ParamIndex& idx) {
  const CellTable cells(m.levels());
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(cells.size()),
                                            static_cast<Eigen::Index>(idx.size()));
  for (std::size_t r = 0; r < cells.size(); ++r) {
    const auto levels = cells.decode(r);
    for (std::size_t c = 0; c < idx.size(); ++c) {
      const ParamKey& key = idx.entry(c);
      bool match = true;
      std::size_t k = 0;
      key.subset.for_each([&](int v) {
        if (levels[static_cast<std::size_t>(v)] != key.levels[k++]) match = false;
      });
      if (match) z(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = 1.0;
    }
  }
  return z;
}

Eigen::MatrixXd marginalization_matrix(const LatentModel& m) {
  const auto l = static_cast<Eigen::Index>(m.observed_cells());
  Eigen::MatrixXd out(l, 2 * l);
  out << Eigen::MatrixXd::Identity(l, l), Eigen::MatrixXd::Identity(l, l);
  return out;
}

}  // namespace latentid
