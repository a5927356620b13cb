#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "latentid/graph.hpp"

namespace latentid {

/// Node 0 of a LatentModel is always the binary latent variable.
inline constexpr int kLatent = 0;

/// Undirected graphical model over (A_0, A_1, ..., A_n) with A_0 hidden and binary.
class LatentModel {
 public:
  /// `levels` holds one count per node; an empty vector means every node is binary.
  /// Throws ValidationError unless levels[0] == 2, every level is >= 2 and n >= 1.
  LatentModel(Graph graph, std::vector<int> levels = {});

  const Graph& graph() const { return graph_; }
  const std::vector<int>& levels() const { return levels_; }
  int levels_of(int v) const { return levels_[static_cast<std::size_t>(v)]; }
  int node_count() const { return graph_.node_count(); }
  int observed_count() const { return node_count() - 1; }
  NodeSet observed() const { return graph_.nodes() - NodeSet::single(kLatent); }

  /// Product of observed level counts (rows of the marginal table).
  std::size_t observed_cells() const;
  /// 2 * observed_cells().
  std::size_t joint_cells() const { return 2 * observed_cells(); }

  friend bool operator==(const LatentModel&, const LatentModel&) = default;

 private:
  Graph graph_;
  std::vector<int> levels_;
};

/// Convenience: latent star plus the given observed edges, all binary.
LatentModel make_star_model(int observed_count, const std::vector<Edge>& observed_edges,
                            std::vector<int> levels = {});

/// Identifies one β coordinate: a complete subset plus a non-zero level per member.
struct ParamKey {
  NodeSet subset;
  std::vector<int> levels;  // aligned with subset.to_vector(), each in 1..l_v-1

  friend bool operator==(const ParamKey&, const ParamKey&) = default;
};

/// Deterministic ordering: |I|, then I lexicographically, then levels.
bool operator<(const ParamKey& a, const ParamKey& b);

/// Coordinate name such as "b{0,2,5}"; non-unit levels are written "v:level".
std::string param_name(const ParamKey& key);

/// Column layout of β under corner-point coding.
class ParamIndex {
 public:
  explicit ParamIndex(std::vector<ParamKey> entries);

  std::size_t size() const { return entries_.size(); }
  const std::vector<ParamKey>& entries() const { return entries_; }
  const ParamKey& entry(std::size_t column) const { return entries_[column]; }
  std::optional<std::size_t> find(const ParamKey& key) const;
  /// Throws NotApplicable for keys outside the model.
  std::size_t column(const ParamKey& key) const;
  std::string name(std::size_t column) const { return param_name(entries_[column]); }

 private:
  std::vector<ParamKey> entries_;
  std::map<ParamKey, std::size_t> lookup_;
};

ParamIndex build_param_index(const LatentModel& m);

/// Every level combination of `subset` with levels in 1..l_v-1, lexicographic.
std::vector<std::vector<int>> level_combinations(const LatentModel& m, NodeSet subset);

/// Mixed-radix cell addressing: A_0 slowest, then A_1, ..., A_n fastest.
class CellTable {
 public:
  explicit CellTable(std::vector<int> dimensions);

  std::size_t size() const { return size_; }
  /// Level of each variable in cell `cell`.
  std::vector<int> decode(std::size_t cell) const;
  std::size_t encode(const std::vector<int>& levels) const;

 private:
  std::vector<int> dims_;
  std::size_t size_ = 1;
};

/// 2l x p corner-point design matrix.
Eigen::MatrixXd design_matrix(const LatentModel& m, const ParamIndex& idx);

/// l x 2l matrix (1, 1) ⊗ I_l summing out the latent variable.
Eigen::MatrixXd marginalization_matrix(const LatentModel& m);

}  // namespace latentid
