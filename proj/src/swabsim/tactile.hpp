// Copyright 2026 The swabsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "swabsim/error.hpp"
#include "swabsim/types.hpp"

namespace swabsim {

/// One synthetic sensor image. Intensities are unit-interval, row major.
struct TactileFrame {
  int width = 64;
  int height = 64;
  std::vector<float> intensities;  // width*height values in [0,1]
  std::uint64_t timestamp = 0;     // control-cycle index
  bool saturated = false;          // deflection was outside the working range

  float at(int u, int v) const { return intensities[static_cast<std::size_t>(v) * width + u]; }
  float& at(int u, int v) { return intensities[static_cast<std::size_t>(v) * width + u]; }
};

/// Contact blob descriptor extracted from a frame.
struct ContactFeature {
  double center_u = 0.0;  // px
  double center_v = 0.0;  // px
  double radius = 0.0;    // px
  bool present = false;
};

/// Deflection-to-force maps measured on the physical device.
struct CalibrationModel {
  // Linear pressure->force per axis: force = slope*kPa + intercept, floored at 0.
  Vec3 pressure_slope = Vec3(0.0118, 0.0118, 0.14);    // N/kPa
  Vec3 pressure_intercept = Vec3(0.0, 0.0, -0.1);      // N
  // Quadratic tip-offset->force: force = c2*mm^2 + c1*mm + c0.
  double offset_c2 = 1.337e-4;  // N/mm^2
  double offset_c1 = 2.5e-3;    // N/mm
  double offset_c0 = 0.0;       // N
  double pixel_per_mm = 0.5;    // image scale, px per mm of deflection

  void validate() const;
};

/// Geometry of the rendered contact blob.
struct SensorGeometry {
  int width = 64;
  int height = 64;
  double baseline_radius_px = 5.0;  // blob radius at zero deflection
  double max_deflection_mm = 45.0;  // working range (saturation beyond)
  double pixel_per_mm = 0.5;
};

inline constexpr double kExtractThreshold = 0.5;
inline constexpr int kExtractMinAreaPx = 10;

/// Renders the swab's contact blob for a tip deflection given in the sensor
/// frame (u, v lateral in mm; third component positive when pressing into the
/// membrane). Gaussian pixel noise of the given sigma is added when `rng` is
/// non-null.
TactileFrame render_frame(const Vec3& tip_deflection_mm, const SensorGeometry& geometry,
                          double noise_sigma = 0.0, std::mt19937_64* rng = nullptr,
                          std::uint64_t timestamp = 0);

/// Threshold -> 4-connected components -> largest component's
/// intensity-weighted centroid and equivalent-area radius. Components below
/// `min_area_px` are ignored; an empty result is returned as present=false.
/// Equal areas tie-break to the component with the lexicographically smaller
/// (centroid_u, centroid_v).
ContactFeature extract_contact(const TactileFrame& frame,
                               double threshold = kExtractThreshold,
                               int min_area_px = kExtractMinAreaPx);

/// Quadratic deflection-offset (mm) to contact force (N).
/// Offsets beyond 45 mm extrapolate outside the calibrated band; the optional
/// flag reports that.
double offset_to_force(double offset_mm, const CalibrationModel& model,
                       bool* extrapolated = nullptr);

/// Inverse of offset_to_force on the non-negative branch.
double offset_from_force(double force_n, const CalibrationModel& model);

enum class Axis { x = 0, y = 1, z = 2 };

/// Linear gripping pressure (kPa) to force (N) for one axis, floored at 0.
double pressure_to_force(double pressure_kpa, Axis axis, const CalibrationModel& model);

/// Least-squares quadratic fit of (offset mm, force N) samples.
/// Returns (c2, c1, c0).
Eigen::Vector3d fit_offset_calibration(const std::vector<std::pair<double, double>>& samples);

}  // namespace swabsim
