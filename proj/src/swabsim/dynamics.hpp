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

#include "swabsim/error.hpp"
#include "swabsim/types.hpp"

namespace swabsim {

/// Cartesian end state of the arm tool point.
struct EndEffectorState {
  Vec3 position = Vec3::Zero();      // m
  Vec3 velocity = Vec3::Zero();      // m/s
  Vec3 acceleration = Vec3::Zero();  // m/s^2
};

/// Virtual mass-damper-spring the commanded motion is computed against:
/// M*a + D*v + S*(x - x_d) = f.
struct AdmittanceParams {
  Mat3 mass = Mat3::Identity();              // kg
  Mat3 damping = 4.0 * Mat3::Identity();     // N*s/m
  Mat3 stiffness = 4.0 * Mat3::Identity();   // N/m
  Vec3 desired_position = Vec3::Zero();      // m

  // mass symmetric positive definite, damping/stiffness symmetric PSD
  void validate() const;
};

struct TimeStep {
  double dt = 0.008;  // s, hardware control cycle

  void validate() const {
    if (!(dt > 0.0)) throw Error(ErrorCode::validation, "dt: constraint violated: dt > 0");
  }
};

inline constexpr double kDefaultVelocityCap = 0.2;  // m/s

/// a = M^-1 * (f - D*v - S*(x - x_d)). Pure; throws on singular mass or
/// non-finite input.
Vec3 admittance_accel(const EndEffectorState& state, const AdmittanceParams& params,
                      const Vec3& force);

/// One control-cycle update: v' = v + a*dt, then x' = x + v'*dt (the new
/// velocity drives the position update). The velocity magnitude is clamped to
/// `velocity_cap` after the velocity update.
EndEffectorState integrate_step(const EndEffectorState& state, const Vec3& accel,
                                const TimeStep& dt,
                                double velocity_cap = kDefaultVelocityCap);

/// ||M*a + D*v + S*(x - x_d) - f||_2 — the loop convergence measure.
double residual_norm(const EndEffectorState& state, const AdmittanceParams& params,
                     const Vec3& force);

}  // namespace swabsim
