#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "curvefold/strip.hpp"

namespace curvefold {
namespace io {

// OBJ with v / f / l records, 6-decimal fixed point, deterministic order.
std::string obj_from_mesh(const StripMesh& mesh, bool crease_polyline = true);
// Curved folding: upper half-band of f, lower half-band of the dual, plus the
// shared crease as a polyline.
std::string obj_from_origami(const OrigamiMap& om, int n_v = 0);

// Crease pattern as SVG 1.1 with ruling ticks: beta_left measured to the left
// of the tangent, beta_right to the right.
std::string svg_from_pattern(const PlaneCurve& pattern, const std::vector<double>& beta_left,
                             const std::vector<double>& beta_right, double tick_len,
                             int tick_every);

std::string csv_from_columns(const std::vector<std::string>& header,
                             const std::vector<std::vector<double>>& columns);

void write_file(const std::string& path, const std::string& content);

// Stable 64-bit content hash (FNV-1a), used for golden-output regression.
std::uint64_t fnv1a64(const std::string& data);

}  // namespace io
}  // namespace curvefold
