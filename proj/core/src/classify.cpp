#include "latentid/classify.hpp"

#include <algorithm>

#include "latentid/error.hpp"

namespace latentid {

std::string to_string(Status status) {
  switch (status) {
    case Status::IdentifiedEverywhere:
      return "IdentifiedEverywhere";
    case Status::GenericallyIdentified:
      return "GenericallyIdentified";
    case Status::NotIdentified:
      return "NotIdentified";
  }
  return "Unknown";
}

namespace {

SequenceCert to_original(const InducedSubgraph& view, SequenceCert cert) {
  cert.target = view.to_original(cert.target);
  for (NodeSet& s : cert.chain) s = view.to_original(s);
  return cert;
}

ComplementOrdering to_original(const InducedSubgraph& view, ComplementOrdering ord) {
  auto id = [&](int v) { return view.original_ids[static_cast<std::size_t>(v)]; };
  for (int& v : ord.order) v = id(v);
  for (auto& [v, partner] : ord.pairs) {
    v = id(v);
    partner = id(partner);
  }
  return ord;
}

}  // namespace

Verdict classify(const LatentModel& m) {
  Verdict verdict;
  Evidence& ev = verdict.evidence;
  ev.partition = latent_partition(m);

  const InducedSubgraph view = induced_subgraph(m.graph(), ev.partition.adjacent);
  const Graph& g_s = view.graph;
  const Graph g_comp = complement(g_s);

  std::optional<NodeSet> m_clique;
  for (NodeSet c : maximal_cliques(g_comp)) {
    if (c.size() >= 3 && (!m_clique || c.size() > m_clique->size())) m_clique = c;
  }
  ev.complement_connected = is_connected(g_comp);
  const auto components = connected_components(g_s);
  for (NodeSet c : components) ev.components.push_back(view.to_original(c));

  bool all_cliques_ok = true;
  for (NodeSet c : maximal_cliques(g_s)) {
    if (c.size() < 2) continue;
    auto cert = find_generalized_sequence(g_s, c);
    if (!cert) all_cliques_ok = false;
    ev.clique_checks.push_back(
        {view.to_original(c), cert ? std::optional(to_original(view, *cert)) : std::nullopt});
  }

  if (m_clique) {
    ev.m_clique = view.to_original(*m_clique);
    if (ev.complement_connected) {
      if (auto ord = appendix_ordering(g_comp, *m_clique)) ev.ordering = to_original(view, *ord);
    }
    if (all_cliques_ok) {
      verdict.status = Status::IdentifiedEverywhere;
      return verdict;
    }
    for (NodeSet s : sets_without_sequence(g_s)) ev.failing_sets.push_back(view.to_original(s));
    verdict.status = Status::GenericallyIdentified;
    verdict.singular = full_system(m);
    return verdict;
  }

  const bool all_complete =
      std::all_of(components.begin(), components.end(), [&](NodeSet c) { return g_s.is_complete(c); });
  if (components.size() <= 2 && all_complete) {
    verdict.status = Status::NotIdentified;
    return verdict;
  }
  if (components.size() == 1) {
    verdict.status = Status::GenericallyIdentified;
    verdict.probe_only = true;
    return verdict;
  }
  throw Unsupported("G^S has " + std::to_string(components.size()) +
                    " components and its complement has no clique of size >= 3");
}

}  // namespace latentid
