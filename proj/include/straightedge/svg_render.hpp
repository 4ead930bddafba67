#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>

#include "straightedge/graph.hpp"

namespace straightedge {

enum class ValueKind { kPerVertex, kPerEdge };

/// Optional highlighted element, drawn in purple on top of the value layer.
using RenderAnchor = std::variant<std::monostate, VertexId, EdgeKey>;

/// Writes an SVG 1.1 drawing of g: edges as line segments, values mapped
/// through a fixed blue-to-red gradient over [0, 1] with a legend strip.
/// kPerEdge colors the edges (one <line> per edge); kPerVertex colors vertex
/// discs over gray edges. Output is deterministic for fixed inputs.
/// Throws LengthMismatch when values.size() does not match the kind.
void render_svg(const SpatialGraph& g, std::span<const double> values, ValueKind kind,
                const RenderAnchor& anchor, const std::string& path);

/// Fixed colormap: linear blue (0) to red (1) blend, as an SVG color string.
std::string colormap_color(double value);

}  // namespace straightedge
