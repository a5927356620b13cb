#include "commands.hpp"

#include <cmath>
#include <sstream>

namespace latentid::cli {

using nlohmann::ordered_json;

int exit_code_for(Status status) {
  switch (status) {
    case Status::IdentifiedEverywhere:
      return kExitIdentified;
    case Status::GenericallyIdentified:
      return kExitGeneric;
    case Status::NotIdentified:
      return kExitNotIdentified;
  }
  return kExitError;
}

namespace {

ordered_json nodes_json(NodeSet s) { return s.to_vector(); }

ordered_json sets_json(const std::vector<NodeSet>& sets) {
  ordered_json out = ordered_json::array();
  for (NodeSet s : sets) out.push_back(nodes_json(s));
  return out;
}

// JSON has no infinity; unbounded gaps are written as null.
ordered_json finite_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json model_json(const LatentModel& m) {
  ordered_json edges = ordered_json::array();
  for (auto [i, j] : m.graph().edges()) edges.push_back({i, j});
  return {{"nodes", m.node_count()}, {"levels", m.levels()}, {"edges", edges}};
}

ordered_json evidence_json(const Evidence& ev) {
  ordered_json cliques = ordered_json::array();
  for (const auto& check : ev.clique_checks) {
    cliques.push_back({{"clique", nodes_json(check.clique)},
                       {"sequence", check.sequence ? sets_json(check.sequence->chain) : ordered_json(nullptr)}});
  }
  ordered_json ordering = nullptr;
  if (ev.ordering) {
    ordered_json pairs = ordered_json::array();
    for (auto [v, partner] : ev.ordering->pairs) pairs.push_back({v, partner});
    ordering = {{"order", ev.ordering->order}, {"pairs", pairs}};
  }
  return {
      {"latent_neighbours", nodes_json(ev.partition.adjacent)},
      {"non_adjacent", nodes_json(ev.partition.non_adjacent)},
      {"m_clique", ev.m_clique ? nodes_json(*ev.m_clique) : ordered_json(nullptr)},
      {"complement_connected", ev.complement_connected},
      {"components", sets_json(ev.components)},
      {"cliques", cliques},
      {"failing_sets", sets_json(ev.failing_sets)},
      {"ordering", ordering},
  };
}

ordered_json equations_json(const std::vector<SingularEquation>& eqs) {
  ordered_json out = ordered_json::array();
  for (const auto& eq : eqs) out.push_back(eq.to_string());
  return out;
}

ordered_json system_json(const std::optional<SingularSystem>& sys) {
  if (!sys) return nullptr;
  return {{"equations", equations_json(sys->equations)},
          {"expected_rank_drop", sys->expected_rank_drop ? ordered_json(*sys->expected_rank_drop)
                                                         : ordered_json(nullptr)}};
}

ordered_json sampled_json(const SampledRank& s) {
  return {{"max", s.max_rank},
          {"modal", s.modal_rank},
          {"min", s.min_rank()},
          {"uniform", s.uniform()},
          {"ambiguous_trials", s.ambiguous_trials},
          {"gap", finite_or_null(s.best.gap)},
          {"tolerance_used", s.best.tolerance_used}};
}

RankOptions rank_options(const NumericFlags& flags) {
  RankOptions opts;
  opts.relative_tolerance = flags.tolerance;
  return opts;
}

ordered_json header(const std::string& command, const std::string& source, const LatentModel& m) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"source", source},
          {"model", model_json(m)},
          {"parameter_count", build_param_index(m).size()},
          {"observed_cells", m.observed_cells()}};
}

}  // namespace

Report cmd_classify(const LatentModel& m, const std::string& source) {
  Report report;
  report.document = header("classify", source, m);
  try {
    const Verdict v = classify(m);
    report.document["verdict"] = to_string(v.status);
    report.document["probe_only"] = v.probe_only;
    report.document["evidence"] = evidence_json(v.evidence);
    report.document["singular_system"] = system_json(v.singular);
    report.exit_code = exit_code_for(v.status);
  } catch (const Unsupported& e) {
    report.document["verdict"] = "Unsupported";
    report.document["reason"] = e.what();
    report.exit_code = kExitUnsupported;
  }
  return report;
}

Report cmd_verify(const LatentModel& m, const std::string& source, const NumericFlags& flags) {
  Report report = cmd_classify(m, source);
  auto& doc = report.document;
  doc["command"] = "verify";
  if (report.exit_code == kExitUnsupported) return report;

  const Verdict v = classify(m);
  const auto p = static_cast<int>(build_param_index(m).size());
  const RankOptions opts = rank_options(flags);

  ordered_json numeric = {{"seed", flags.seed},
                          {"trials", flags.trials},
                          {"tolerance", flags.tolerance ? ordered_json(*flags.tolerance) : ordered_json("auto")},
                          {"min_gap", opts.min_gap}};
  const SampledRank generic = generic_rank(m, flags.trials, flags.seed, opts);
  numeric["generic_rank"] = sampled_json(generic);

  std::optional<SampledRank> on_subspace;
  numeric["subspace_rank"] = nullptr;
  if (v.singular) {
    try {
      on_subspace = rank_on_system(m, *v.singular, flags.trials, flags.seed, opts);
      numeric["subspace_rank"] = sampled_json(*on_subspace);
    } catch (const InconsistentSystem& e) {
      numeric["subspace_rank"] = {{"error", e.what()}};
    }
  }

  if (!v.evidence.complement_connected) {
    ordered_json probes = ordered_json::array();
    for (const auto& eq : disconnection_equations(m)) {
      const SampledRank r = rank_on_system(m, SingularSystem{{eq}, std::nullopt}, flags.trials, flags.seed, opts);
      probes.push_back({{"equation", eq.to_string()}, {"max_rank", r.max_rank}});
    }
    numeric["disconnection_probe"] = probes;
  }
  doc["numeric"] = numeric;

  bool consistent = false;
  switch (v.status) {
    case Status::IdentifiedEverywhere:
      consistent = generic.max_rank == p;
      break;
    case Status::GenericallyIdentified:
      consistent = generic.max_rank == p;
      if (v.singular) consistent = consistent && on_subspace && on_subspace->max_rank < p;
      break;
    case Status::NotIdentified:
      consistent = generic.max_rank < p;
      break;
  }
  doc["consistent"] = consistent;
  report.exit_code = consistent ? exit_code_for(v.status) : kExitInconsistent;
  return report;
}

Report cmd_rank(const LatentModel& m, const std::string& source, const std::optional<BetaVector>& beta,
                const NumericFlags& flags) {
  const ParamIndex idx = build_param_index(m);
  BetaVector point = [&] {
    if (beta) return *beta;
    auto rng = trial_engine(flags.seed, 0);
    return sample_beta(idx.size(), rng);
  }();
  if (static_cast<std::size_t>(point.size()) != idx.size()) {
    throw DimensionMismatch("beta has " + std::to_string(point.size()) + " coordinates, model has " +
                            std::to_string(idx.size()));
  }
  const RankReport r = numeric_rank(jacobian(m, idx, point), rank_options(flags));

  Report report;
  auto& doc = report.document;
  doc = header("rank", source, m);
  ordered_json names = ordered_json::array();
  for (std::size_t c = 0; c < idx.size(); ++c) names.push_back(idx.name(c));
  doc["coordinates"] = names;
  doc["beta_source"] = beta ? ordered_json("file") : ordered_json({{"seed", flags.seed}});
  doc["beta"] = std::vector<double>(point.values().data(), point.values().data() + point.size());
  doc["rank"] = r.rank;
  doc["singular_values"] = r.singular_values;
  doc["tolerance"] = flags.tolerance ? ordered_json(*flags.tolerance) : ordered_json("auto");
  doc["tolerance_used"] = r.tolerance_used;
  doc["gap"] = finite_or_null(r.gap);
  doc["ambiguous"] = r.ambiguous;
  report.exit_code = 0;
  return report;
}

LocusOutput cmd_locus(const LatentModel& m) {
  LocusOutput out;
  Verdict v;
  try {
    v = classify(m);
  } catch (const Unsupported& e) {
    out.note = e.what();
    out.exit_code = kExitUnsupported;
    return out;
  }
  out.exit_code = exit_code_for(v.status);
  if (v.singular) {
    for (const auto& eq : v.singular->equations) out.text += eq.to_string() + "\n";
  } else if (v.probe_only) {
    out.note = "no closed-form singular system for this model; run 'verify' to probe the rank numerically";
  } else if (v.status == Status::NotIdentified) {
    out.note = "the model is rank deficient everywhere";
  } else {
    out.note = "the model is identified everywhere";
  }
  return out;
}

BetaVector read_beta(const std::string& text, std::size_t p) {
  std::istringstream lines(text);
  std::vector<double> values;
  std::string raw;
  int line = 0;
  while (std::getline(lines, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    for (std::string token; words >> token;) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw ParseError(line, "expected a real number, got '" + token + "'");
      values.push_back(v);
    }
  }
  if (values.size() != p) {
    throw DimensionMismatch("beta file has " + std::to_string(values.size()) + " values, model has " +
                            std::to_string(p) + " parameters");
  }
  return BetaVector(Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size())));
}

}  // namespace latentid::cli
