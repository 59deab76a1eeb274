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

#include "swabsim/dynamics.hpp"

#include <Eigen/Eigenvalues>

namespace swabsim {

namespace {

bool symmetric(const Mat3& m, double tol = 1e-9) {
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, m.cwiseAbs().maxCoeff());
}

double min_eigenvalue(const Mat3& m) {
  Eigen::SelfAdjointEigenSolver<Mat3> solver(m);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

void AdmittanceParams::validate() const {
  if (!is_finite(mass) || !is_finite(damping) || !is_finite(stiffness) ||
      !is_finite(desired_position)) {
    throw Error(ErrorCode::validation, "admittance params: all entries must be finite");
  }
  if (!symmetric(mass)) {
    throw Error(ErrorCode::validation, "mass: constraint violated: symmetric");
  }
  if (min_eigenvalue(mass) <= 0.0) {
    throw Error(ErrorCode::validation, "mass: constraint violated: positive definite");
  }
  if (!symmetric(damping) || min_eigenvalue(damping) < -1e-12) {
    throw Error(ErrorCode::validation, "damping: constraint violated: symmetric positive semidefinite");
  }
  if (!symmetric(stiffness) || min_eigenvalue(stiffness) < -1e-12) {
    throw Error(ErrorCode::validation, "stiffness: constraint violated: symmetric positive semidefinite");
  }
}

Vec3 admittance_accel(const EndEffectorState& state, const AdmittanceParams& params,
                      const Vec3& force) {
  if (!is_finite(state.position) || !is_finite(state.velocity) || !is_finite(force)) {
    throw Error(ErrorCode::invalid_argument, "admittance_accel: non-finite input");
  }
  Eigen::FullPivLU<Mat3> lu(params.mass);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::validation, "mass: constraint violated: invertible");
  }
  const Vec3 rhs = force - params.damping * state.velocity -
                   params.stiffness * (state.position - params.desired_position);
  return lu.solve(rhs);
}

EndEffectorState integrate_step(const EndEffectorState& state, const Vec3& accel,
                                const TimeStep& dt, double velocity_cap) {
  dt.validate();
  if (!is_finite(state.velocity) || !is_finite(accel)) {
    throw Error(ErrorCode::invalid_argument, "integrate_step: non-finite input");
  }
  EndEffectorState next;
  next.velocity = state.velocity + accel * dt.dt;
  const double speed = next.velocity.norm();
  if (speed > velocity_cap) {
    next.velocity *= velocity_cap / speed;
  }
  next.position = state.position + next.velocity * dt.dt;
  next.acceleration = accel;
  return next;
}

double residual_norm(const EndEffectorState& state, const AdmittanceParams& params,
                     const Vec3& force) {
  return (params.mass * state.acceleration + params.damping * state.velocity +
          params.stiffness * (state.position - params.desired_position) - force)
      .norm();
}

}  // namespace swabsim
