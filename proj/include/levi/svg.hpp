#pragma once

#include "levi/arrangement.hpp"

#include <optional>
#include <string>

namespace levi {

/// Disk model of the projective plane: the `infinity` curve is the boundary
/// circle, where antipodal points are identified (paired marks carry the same
/// number). The other curves are polylines through a barycentric layout of the
/// remaining vertices. Output is deterministic. Throws UnknownCurve.
std::string render_svg(const Arrangement& arr, CurveId infinity, std::optional<CurveId> highlight = {});

}  // namespace levi
