// DOT emitter: one node per window ideal, one edge per covering
// containment (computed, not hard-coded), and optional closure arrows.
#pragma once

#include <optional>
#include <string>

#include "idealops/ops.hpp"

namespace idealops {

std::string emit_diagram(const Window& w, const std::optional<ClosureOp>& op);

}  // namespace idealops
