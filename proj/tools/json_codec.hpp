#pragma once

#include <optional>

#include <json.hpp>

#include "coadjoint/coadjoint.hpp"

namespace coadjoint::cli {

using json = nlohmann::json;

/// PointDocument: {"M": {"l": [3], "g": [3]} | "M_matrix": [[4]x4], "P": [4]}.
/// Throws Error(InvalidArgument) on malformed input and
/// Error(ConstraintViolation) when M_matrix is not in o(3,1).
CoadjointPoint point_from_json(const json& doc, const ToleranceConfig& tol = {});
json point_to_json(const CoadjointPoint& nu);

/// {"S": [[4]x4], "C": [4]} or {"involution": "space" | "time" | "spacetime"}.
PoincareElement element_from_json(const json& doc, const ToleranceConfig& tol = {});
json element_to_json(const PoincareElement& g);

/// ReportDocument. With `nf` set the representative, witness and residual
/// are included as well.
json report_to_json(const CoadjointPoint& nu, const OrbitClass& cls, const NormalFormResult* nf = nullptr);

json invariants_to_json(const CoadjointPoint& nu);

}  // namespace coadjoint::cli
