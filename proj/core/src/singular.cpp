#include "latentid/singular.hpp"

#include <algorithm>
#include <map>

#include "latentid/error.hpp"
#include "latentid/identify.hpp"

namespace latentid {

namespace {

// Key for {0} ∪ nodes with levels read from `level_of`.
ParamKey latent_key(NodeSet nodes, const std::map<int, int>& level_of) {
  ParamKey key{nodes | NodeSet::single(kLatent), {}};
  key.subset.for_each([&](int v) { key.levels.push_back(v == kLatent ? 1 : level_of.at(v)); });
  return key;
}

std::map<int, int> zip_levels(NodeSet nodes, const std::vector<int>& combo) {
  std::map<int, int> out;
  std::size_t k = 0;
  nodes.for_each([&](int v) { out[v] = combo[k++]; });
  return out;
}

SingularEquation make_equation(ParamKey designated, std::vector<ParamKey> rest, EquationSource source,
                               NodeSet origin, NodeSet boundary) {
  std::sort(rest.begin(), rest.end());
  SingularEquation eq;
  eq.terms.push_back(std::move(designated));
  eq.terms.insert(eq.terms.end(), std::make_move_iterator(rest.begin()),
                  std::make_move_iterator(rest.end()));
  eq.source = source;
  eq.origin = origin;
  eq.boundary = boundary;
  return eq;
}

void append_unique(std::vector<SingularEquation>& out, std::vector<SingularEquation> more) {
  for (auto& eq : more) {
    if (std::find(out.begin(), out.end(), eq) == out.end()) out.push_back(std::move(eq));
  }
}

// Complete subsets (size >= 1) of `nodes` in the original labelling.
std::vector<NodeSet> complete_within(const Graph& g, NodeSet nodes) {
  const InducedSubgraph sub = induced_subgraph(g, nodes);
  std::vector<NodeSet> out;
  for (NodeSet s : complete_subsets(sub.graph, 1)) out.push_back(sub.to_original(s));
  return out;
}

bool has_complement_triangle(const Graph& g_s) {
  for (NodeSet c : maximal_cliques(complement(g_s))) {
    if (c.size() >= 3) return true;
  }
  return false;
}

}  // namespace

std::string SingularEquation::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k > 0) out += " + ";
    out += param_name(terms[k]);
  }
  return out + " = 0";
}

std::vector<NodeSet> failing_sets(const LatentModel& m) {
  const InducedSubgraph view = latent_neighbourhood(m);
  std::vector<NodeSet> out;
  for (NodeSet s : sets_without_sequence(view.graph)) out.push_back(view.to_original(s));
  return out;
}

std::vector<SingularEquation> locus_equations_for_set(const LatentModel& m, NodeSet i0) {
  const InducedSubgraph view = latent_neighbourhood(m);
  const NodeSet local = view.to_local(i0);
  if (view.to_original(local) != i0) {
    throw ValidationError("set " + i0.to_string() + " is not inside the latent neighbourhood");
  }
  if (find_identifying_sequence(view.graph, local)) {
    throw NotApplicable("set " + i0.to_string() + " has an identifying sequence");
  }
  const Graph& g = m.graph();
  const NodeSet s = latent_partition(m).adjacent;

  NodeSet boundary;
  i0.for_each([&](int i) { boundary |= s - g.neighbors(i) - NodeSet::single(i); });

  std::vector<SingularEquation> out;
  for (NodeSet v0 : complete_within(g, boundary)) {
    NodeSet shared;
    i0.for_each([&](int i) {
      if (g.neighbors(i).contains(v0)) shared.insert(i);
    });
    if (shared.empty()) continue;
    const NodeSet involved = v0 | shared;
    for (const auto& combo : level_combinations(m, involved)) {
      const auto level_of = zip_levels(involved, combo);
      std::vector<ParamKey> rest;
      for_each_subset(shared, [&](NodeSet part) {
        if (!part.empty()) rest.push_back(latent_key(v0 | part, level_of));
      });
      append_unique(out, {make_equation(latent_key(v0, level_of), std::move(rest),
                                        EquationSource::Locus, i0, v0)});
    }
  }
  return out;
}

std::vector<SingularEquation> disconnection_equations(const LatentModel& m) {
  const InducedSubgraph view = latent_neighbourhood(m);
  const auto local_components = connected_components(complement(view.graph));
  if (local_components.size() < 2) {
    throw NotApplicable("the complement of the latent neighbourhood is connected");
  }
  const Graph& g = m.graph();
  std::vector<std::vector<NodeSet>> blocks;
  for (NodeSet comp : local_components) blocks.push_back(complete_within(g, view.to_original(comp)));

  std::vector<SingularEquation> out;
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (a == b) continue;
      for (NodeSet base : blocks[a]) {
        for (NodeSet extra : blocks[b]) {
          const NodeSet wider = base | extra;
          for (const auto& combo : level_combinations(m, wider)) {
            const auto level_of = zip_levels(wider, combo);
            std::vector<ParamKey> rest;
            for_each_subset(wider, [&](NodeSet part) {
              if (part.intersects(extra) && part != extra) rest.push_back(latent_key(part, level_of));
            });
            append_unique(out, {make_equation(latent_key(extra, level_of), std::move(rest),
                                              EquationSource::Disconnection, base, wider)});
          }
        }
      }
    }
  }
  return out;
}

SingularSystem full_system(const LatentModel& m) {
  const InducedSubgraph view = latent_neighbourhood(m);
  if (!has_complement_triangle(view.graph)) {
    throw NotApplicable("the complement of the latent neighbourhood has no clique of size >= 3");
  }
  const auto failing = failing_sets(m);
  if (failing.empty()) throw NotApplicable("every complete set has an identifying sequence");
  SingularSystem sys;
  for (NodeSet i0 : failing) append_unique(sys.equations, locus_equations_for_set(m, i0));
  return sys;
}

BetaVector sample_on_subspace(const SingularSystem& sys, const ParamIndex& idx, std::mt19937_64& rng) {
  const std::size_t p = idx.size();
  const auto n_eq = static_cast<Eigen::Index>(sys.equations.size());

  std::vector<std::size_t> designated;
  std::map<std::size_t, Eigen::Index> slot;  // column -> equation solving it
  for (Eigen::Index e = 0; e < n_eq; ++e) {
    const auto& eq = sys.equations[static_cast<std::size_t>(e)];
    const std::size_t col = idx.column(eq.terms.front());
    if (!slot.emplace(col, e).second) {
      throw InconsistentSystem("coordinate " + idx.name(col) + " is designated by two equations");
    }
    designated.push_back(col);
  }

  // A y = -(free part), y the designated coordinates.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_eq, n_eq);
  std::vector<std::vector<std::size_t>> free_terms(static_cast<std::size_t>(n_eq));
  for (Eigen::Index e = 0; e < n_eq; ++e) {
    for (const ParamKey& key : sys.equations[static_cast<std::size_t>(e)].terms) {
      const std::size_t col = idx.column(key);
      if (auto it = slot.find(col); it != slot.end()) {
        a(e, it->second) += 1.0;
      } else {
        free_terms[static_cast<std::size_t>(e)].push_back(col);
      }
    }
  }
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (n_eq > 0 && !lu.isInvertible()) {
    throw InconsistentSystem("designated coordinates cannot be solved for");
  }

  constexpr int kMaxAttempts = 1000;
  constexpr double kMinMagnitude = 1e-6;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Eigen::VectorXd x(static_cast<Eigen::Index>(p));
    for (std::size_t c = 0; c < p; ++c) x[static_cast<Eigen::Index>(c)] = draw_coordinate(rng);
    if (n_eq == 0) return BetaVector(std::move(x));
    Eigen::VectorXd rhs(n_eq);
    for (Eigen::Index e = 0; e < n_eq; ++e) {
      double sum = 0.0;
      for (std::size_t col : free_terms[static_cast<std::size_t>(e)]) sum += x[static_cast<Eigen::Index>(col)];
      rhs[e] = -sum;
    }
    const Eigen::VectorXd y = lu.solve(rhs);
    if ((y.array().abs() < kMinMagnitude).any()) continue;
    for (Eigen::Index e = 0; e < n_eq; ++e) {
      x[static_cast<Eigen::Index>(designated[static_cast<std::size_t>(e)])] = y[e];
    }
    return BetaVector(std::move(x));
  }
  throw InconsistentSystem("no sample with all coordinates non-zero after 1000 attempts");
}

BetaVector sample_on_subspace(const SingularSystem& sys, const ParamIndex& idx, std::uint64_t seed) {
  auto rng = trial_engine(seed, 0);
  return sample_on_subspace(sys, idx, rng);
}

}  // namespace latentid
