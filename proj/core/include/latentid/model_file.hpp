#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "latentid/loglinear.hpp"

namespace latentid {

// Line-oriented model description:
//
//   # comment (from '#' to end of line)
//   nodes <count>          exactly once, before any other directive
//   levels <v>=<l> ...     optional; nodes not listed have 2 levels
//   edge <i> <j>           one undirected edge
//
// Node 0 is the latent variable. Syntax problems raise ParseError; duplicate
// edges, self-loops, ids out of range, l_v < 2 and l_0 != 2 raise ValidationError.

LatentModel parse_model(std::istream& in);
LatentModel parse_model_text(const std::string& text);
LatentModel load_model(const std::filesystem::path& path);

/// Canonical text: nodes line, non-binary levels ascending, edges in canonical order.
std::string serialize_model(const LatentModel& m);

}  // namespace latentid
