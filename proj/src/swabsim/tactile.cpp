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

#include "swabsim/tactile.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace swabsim {

namespace {

constexpr double kCalibratedMaxOffsetMm = 45.0;
constexpr double kBlobPeakIntensity = 0.9;
constexpr double kBlobEdgeWidthPx = 1.0;

}  // namespace

void CalibrationModel::validate() const {
  if (!is_finite(pressure_slope) || !is_finite(pressure_intercept)) {
    throw Error(ErrorCode::validation, "calibration: pressure map entries must be finite");
  }
  if (std::abs(offset_c0) > 1e-12) {
    throw Error(ErrorCode::validation, "offset_c0: constraint violated: offset_to_force(0) = 0");
  }
  // non-decreasing derivative c1 + 2*c2*d over the calibrated band
  if (offset_c1 < 0.0 || offset_c1 + 2.0 * offset_c2 * kCalibratedMaxOffsetMm < 0.0) {
    throw Error(ErrorCode::validation,
                "offset quadratic: constraint violated: monotone non-decreasing on [0, 45] mm");
  }
  if (!(pixel_per_mm > 0.0)) {
    throw Error(ErrorCode::validation, "pixel_per_mm: constraint violated: pixel_per_mm > 0");
  }
}

TactileFrame render_frame(const Vec3& tip_deflection_mm, const SensorGeometry& geometry,
                          double noise_sigma, std::mt19937_64* rng, std::uint64_t timestamp) {
  if (!is_finite(tip_deflection_mm)) {
    throw Error(ErrorCode::invalid_argument, "render_frame: non-finite deflection");
  }
  TactileFrame frame;
  frame.width = geometry.width;
  frame.height = geometry.height;
  frame.timestamp = timestamp;
  frame.intensities.assign(static_cast<std::size_t>(geometry.width) * geometry.height, 0.0f);

  const double lateral = tip_deflection_mm.head<2>().norm();
  const double press = tip_deflection_mm.z();
  frame.saturated =
      lateral > geometry.max_deflection_mm || std::abs(press) > geometry.max_deflection_mm;

  const double cu = geometry.width / 2.0 + geometry.pixel_per_mm * tip_deflection_mm.x();
  const double cv = geometry.height / 2.0 + geometry.pixel_per_mm * tip_deflection_mm.y();
  const double radius = geometry.baseline_radius_px + geometry.pixel_per_mm * press;

  if (radius > 0.0) {
    for (int v = 0; v < geometry.height; ++v) {
      for (int u = 0; u < geometry.width; ++u) {
        const double dist = std::hypot(u - cu, v - cv);
        const double edge = (radius - dist) / kBlobEdgeWidthPx + 0.5;
        if (edge > 0.0) {
          frame.at(u, v) = static_cast<float>(kBlobPeakIntensity * std::min(edge, 1.0));
        }
      }
    }
  }

  if (noise_sigma > 0.0 && rng != nullptr) {
    std::normal_distribution<double> noise(0.0, noise_sigma);
    for (auto& px : frame.intensities) {
      px = static_cast<float>(std::clamp(static_cast<double>(px) + noise(*rng), 0.0, 1.0));
    }
  }
  return frame;
}

ContactFeature extract_contact(const TactileFrame& frame, double threshold, int min_area_px) {
  const int w = frame.width;
  const int h = frame.height;
  std::vector<int> label(static_cast<std::size_t>(w) * h, -1);

  struct Component {
    long area = 0;
    double weight = 0.0;
    double sum_u = 0.0;
    double sum_v = 0.0;
  };
  std::vector<Component> components;
  std::vector<int> stack;

  for (int v = 0; v < h; ++v) {
    for (int u = 0; u < w; ++u) {
      const int idx = v * w + u;
      if (label[idx] >= 0 || frame.intensities[idx] < threshold) continue;
      const int id = static_cast<int>(components.size());
      components.emplace_back();
      Component& comp = components.back();
      stack.clear();
      stack.push_back(idx);
      label[idx] = id;
      while (!stack.empty()) {
        const int cur = stack.back();
        stack.pop_back();
        const int cu = cur % w;
        const int cv = cur / w;
        const double intensity = frame.intensities[cur];
        comp.area += 1;
        comp.weight += intensity;
        comp.sum_u += intensity * cu;
        comp.sum_v += intensity * cv;
        const int neighbors[4] = {cur - 1, cur + 1, cur - w, cur + w};
        const bool valid[4] = {cu > 0, cu + 1 < w, cv > 0, cv + 1 < h};
        for (int k = 0; k < 4; ++k) {
          if (valid[k] && label[neighbors[k]] < 0 &&
              frame.intensities[neighbors[k]] >= threshold) {
            label[neighbors[k]] = id;
            stack.push_back(neighbors[k]);
          }
        }
      }
    }
  }

  ContactFeature feature;
  long best_area = 0;
  double best_u = 0.0, best_v = 0.0;
  for (const Component& comp : components) {
    if (comp.area < min_area_px || comp.weight <= 0.0) continue;
    const double cu = comp.sum_u / comp.weight;
    const double cv = comp.sum_v / comp.weight;
    const bool better = comp.area > best_area ||
                        (comp.area == best_area &&
                         std::tie(cu, cv) < std::tie(best_u, best_v));
    if (better) {
      best_area = comp.area;
      best_u = cu;
      best_v = cv;
    }
  }
  if (best_area > 0) {
    feature.present = true;
    feature.center_u = best_u;
    feature.center_v = best_v;
    feature.radius = std::sqrt(static_cast<double>(best_area) / M_PI);
  }
  return feature;
}

double offset_to_force(double offset_mm, const CalibrationModel& model, bool* extrapolated) {
  if (!(offset_mm >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "offset_to_force: offset must be >= 0");
  }
  if (extrapolated != nullptr) {
    *extrapolated = offset_mm > kCalibratedMaxOffsetMm;
  }
  return model.offset_c2 * offset_mm * offset_mm + model.offset_c1 * offset_mm + model.offset_c0;
}

double offset_from_force(double force_n, const CalibrationModel& model) {
  const double c = model.offset_c0 - force_n;
  if (force_n <= model.offset_c0) return 0.0;
  if (std::abs(model.offset_c2) < 1e-15) {
    return -c / model.offset_c1;
  }
  const double disc = model.offset_c1 * model.offset_c1 - 4.0 * model.offset_c2 * c;
  return (-model.offset_c1 + std::sqrt(std::max(disc, 0.0))) / (2.0 * model.offset_c2);
}

double pressure_to_force(double pressure_kpa, Axis axis, const CalibrationModel& model) {
  if (pressure_kpa < 0.0) {
    throw Error(ErrorCode::invalid_argument, "pressure_to_force: pressure must be >= 0");
  }
  const int i = static_cast<int>(axis);
  return std::max(0.0, model.pressure_slope[i] * pressure_kpa + model.pressure_intercept[i]);
}

Eigen::Vector3d fit_offset_calibration(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 3) {
    throw Error(ErrorCode::fit, "fit_offset_calibration: need at least 3 samples");
  }
  const long n = static_cast<long>(samples.size());
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd force(n);
  for (long i = 0; i < n; ++i) {
    const double d = samples[static_cast<std::size_t>(i)].first;
    design(i, 0) = d * d;
    design(i, 1) = d;
    design(i, 2) = 1.0;
    force(i) = samples[static_cast<std::size_t>(i)].second;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < 3) {
    throw Error(ErrorCode::fit, "fit_offset_calibration: rank-deficient design (need 3 distinct offsets)");
  }
  return qr.solve(force);
}

}  // namespace swabsim
