#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "latentid/latentid.hpp"

namespace latentid::testing {

inline LatentModel fixture(const std::string& name) {
  return load_model(std::string(LATENTID_MODELS_DIR) + "/" + name + ".model");
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"figure1", "figure2a", "figure2b", "figure3", "figure4", "figure5"};
  return names;
}

/// G^O relabelled to 0..n-1; translate sets with to_local / to_original.
inline InducedSubgraph observed_view(const LatentModel& m) { return induced_subgraph(m.graph(), m.observed()); }

inline NodeSet ns(std::initializer_list<int> v) { return NodeSet(v); }

/// Every complete subset with at least `min_size` members, by plain enumeration.
inline std::vector<NodeSet> brute_complete_subsets(const Graph& g, int min_size) {
  std::vector<NodeSet> out;
  const int n = g.node_count();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const NodeSet s(bits);
    if (s.size() < min_size) continue;
    bool complete = true;
    const auto members = s.to_vector();
    for (std::size_t a = 0; a < members.size() && complete; ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (!g.adjacent(members[a], members[b])) {
          complete = false;
          break;
        }
      }
    }
    if (complete) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

inline std::vector<NodeSet> brute_maximal_cliques(const Graph& g) {
  const auto all = brute_complete_subsets(g, 1);
  std::vector<NodeSet> out;
  for (NodeSet s : all) {
    bool maximal = true;
    for (NodeSet t : all) {
      if (t != s && t.contains(s)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

/// μ_Y computed cell by cell from the parameter list alone, without Z or L.
class ReferenceMeans {
 public:
  ReferenceMeans(const LatentModel& m, const ParamIndex& idx) {
    const int n = m.node_count();
    const std::size_t l = m.observed_cells();
    active_.resize(2 * l);
    std::vector<int> cell(static_cast<std::size_t>(n), 0);
    for (std::size_t y = 0; y < l; ++y) {
      std::size_t rest = y;
      for (int v = n - 1; v >= 1; --v) {
        cell[static_cast<std::size_t>(v)] = static_cast<int>(rest % static_cast<std::size_t>(m.levels_of(v)));
        rest /= static_cast<std::size_t>(m.levels_of(v));
      }
      for (int a0 = 0; a0 < 2; ++a0) {
        cell[0] = a0;
        auto& on = active_[2 * y + static_cast<std::size_t>(a0)];
        for (std::size_t c = 0; c < idx.size(); ++c) {
          const ParamKey& key = idx.entry(c);
          const auto members = key.subset.to_vector();
          bool match = true;
          for (std::size_t k = 0; k < members.size(); ++k) {
            if (cell[static_cast<std::size_t>(members[k])] != key.levels[k]) match = false;
          }
          if (match) on.push_back(static_cast<Eigen::Index>(c));
        }
      }
    }
  }

  /// exp(η) per joint cell, ordered (observed cell, A_0).
  Eigen::VectorXd joint(const Eigen::VectorXd& beta) const {
    Eigen::VectorXd out(static_cast<Eigen::Index>(active_.size()));
    for (std::size_t k = 0; k < active_.size(); ++k) {
      double eta = 0.0;
      for (Eigen::Index c : active_[k]) eta += beta[c];
      out[static_cast<Eigen::Index>(k)] = std::exp(eta);
    }
    return out;
  }

  static Eigen::VectorXd sum_out_latent(const Eigen::VectorXd& joint) {
    return joint.reshaped(2, joint.size() / 2).colwise().sum().transpose();
  }

  Eigen::VectorXd operator()(const Eigen::VectorXd& beta) const { return sum_out_latent(joint(beta)); }

 private:
  std::vector<std::vector<Eigen::Index>> active_;  // columns switched on, per (observed cell, A_0)
};

/// Central differences of the reference μ_Y; returns the worst column-wise relative error.
/// Differences are taken per joint cell before A_0 is summed out, so the unperturbed
/// half of each observed cell cannot swamp the quotient in floating point.
inline double finite_difference_error(const ReferenceMeans& mu, const Eigen::MatrixXd& analytic,
                                      const Eigen::VectorXd& beta, double h = 1e-5) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < beta.size(); ++j) {
    Eigen::VectorXd up = beta;
    Eigen::VectorXd down = beta;
    up[j] += h;
    down[j] -= h;
    const Eigen::VectorXd fd = ReferenceMeans::sum_out_latent(mu.joint(up) - mu.joint(down)) / (2.0 * h);
    const double scale = analytic.col(j).cwiseAbs().maxCoeff();
    worst = std::max(worst, (analytic.col(j) - fd).cwiseAbs().maxCoeff() / scale);
  }
  return worst;
}

/// Σ_I ∏_{v∈I}(l_v − 1) over complete subsets of G^K, including the empty set.
inline std::size_t count_formula(const LatentModel& m) {
  std::size_t p = 0;
  for (NodeSet s : brute_complete_subsets(m.graph(), 0)) {
    std::size_t prod = 1;
    s.for_each([&](int v) { prod *= static_cast<std::size_t>(m.levels_of(v) - 1); });
    p += prod;
  }
  return p;
}

/// Both sides of the clique / complete-subset equivalence for sequence existence.
struct SequenceSides {
  bool every_clique_generalized = true;
  bool every_subset_plain = true;
};

inline SequenceSides sequence_sides(const Graph& g) {
  SequenceSides out;
  for (NodeSet c : maximal_cliques(g)) {
    if (c.size() > 1 && !find_generalized_sequence(g, c)) {
      out.every_clique_generalized = false;
      break;
    }
  }
  for (NodeSet s : complete_subsets(g, 2)) {
    if (!find_identifying_sequence(g, s)) {
      out.every_subset_plain = false;
      break;
    }
  }
  return out;
}

/// Calls fn(g) for every labelled graph on `n` nodes.
template <typename Fn>
void for_each_graph(int n, Fn&& fn) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) edges.push_back(pairs[k]);
    }
    fn(Graph(n, edges));
  }
}

}  // namespace latentid::testing
