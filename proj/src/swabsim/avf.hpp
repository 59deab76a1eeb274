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

#include <array>
#include <cstdint>
#include <vector>

#include "swabsim/dynamics.hpp"
#include "swabsim/tactile.hpp"
#include "swabsim/types.hpp"

namespace swabsim {

struct SamplingTrace;

enum class PhaseName { Approach, Initial, Left, Right, Middle };

const char* phase_name_str(PhaseName name);

/// Image-space offset between the current and desired contact feature:
/// (du, dv, dr) in pixels.
struct ContactError {
  Vec3 e = Vec3::Zero();
  bool lost_contact = false;
};

struct AvfConfig {
  Mat3 gain = 0.01 * Mat3::Identity();             // K, N per px
  Vec3 learning_rate_1 = Vec3::Constant(0.001);    // v1
  Vec3 learning_rate_2 = Vec3::Constant(0.001);    // v2
  Vec3 learning_rate_3 = Vec3::Constant(0.001);    // v3
  Vec3 initial_weights_1 = Vec3::Constant(0.1);    // w1(0), P-like
  Vec3 initial_weights_2 = Vec3::Constant(0.05);   // w2(0), I-like
  Vec3 initial_weights_3 = Vec3::Constant(0.01);   // w3(0), D-like
  Vec3 desired_output = Vec3::Zero();              // u
  double force_max = 1.0;                          // N, per-axis clamp
  double weight_bound = 1e3;
};

/// Controller state of the adaptive virtual-force generator. Value type; the
/// update operations are pure state->state transitions.
struct AvfState {
  Vec3 force = Vec3::Zero();
  Vec3 force_offset = Vec3::Zero();
  Vec3 w1, w2, w3;
  Vec3 v1, v2, v3;
  Vec3 desired_output = Vec3::Zero();
  Mat3 gain = Mat3::Identity();
  std::array<Vec3, 3> error_history = {Vec3::Zero(), Vec3::Zero(), Vec3::Zero()};  // newest first

  static AvfState init(const AvfConfig& config, const Vec3& force_offset);

  /// Starts a sampling phase: force returns to the phase offset, the error
  /// history is zeroed, weights carry over.
  void reset_phase(const Vec3& new_force_offset);

  void push_error(const Vec3& e);
};

struct ZTerms {
  Vec3 z1, z2, z3;
};

/// One stage of the scripted sampling sequence.
struct SamplingPhase {
  PhaseName name = PhaseName::Initial;
  Vec3 force_offset = Vec3::Zero();   // N
  double duration_cap = 5.0;          // s
  ContactFeature desired;             // c_d in the sensor image
};

/// e = current - desired, componentwise (du, dv, dr). An absent current
/// feature yields zero error flagged lost_contact.
ContactError contact_error(const ContactFeature& current, const ContactFeature& desired);

/// z1 = e(n) - e(n-1); z2 = e(n); z3 = e(n) - 2 e(n-1) + e(n-2).
ZTerms z_terms(const std::array<Vec3, 3>& history);

/// w_i' = w_i + v_i o (u - f) o f o z_i (o = element-wise product), using the
/// pre-update force. Throws a controller fault when any weight exceeds
/// `weight_bound` in magnitude.
AvfState update_weights(const AvfState& state, const ZTerms& z, double weight_bound = 1e3);

/// f' = f + K * [sum_i w_i o z_i], clamped per axis to +-force_max. Call after
/// update_weights so the increment uses this cycle's weights.
AvfState virtual_force_step(const AvfState& state, const ZTerms& z, double force_max = 1.0);

/// What the simulated sensor reports each control cycle.
struct SensorReading {
  ContactFeature feature;
  Vec3 deflection_sensor_mm = Vec3::Zero();  // (u, v, press) mm
  bool saturated = false;
};

class SensorPort {
 public:
  virtual ~SensorPort() = default;
  virtual SensorReading sense(std::uint64_t cycle) = 0;
};

class PlantPort {
 public:
  virtual ~PlantPort() = default;
  /// Advance the world by one control period under the commanded
  /// end-effector velocity. Throws a scenario fault on unsafe contact.
  virtual void apply_command(const Vec3& commanded_velocity) = 0;
};

struct SamplingSettings {
  AdmittanceParams admittance;
  TimeStep step;
  double velocity_cap = kDefaultVelocityCap;
  AvfConfig controller;
  double epsilon = 0.01;  // N, residual convergence threshold
  int passes = 1;         // L
  // Maps image error (du, dv, dr) onto world force axes; derived from the
  // sensor frame: [u_axis | v_axis | -approach].
  Mat3 feature_to_error = Mat3::Identity();
  double lost_contact_hold_s = 0.2;
  Vec3 retreat_force = Vec3(0.0, 0.0, -0.2);  // N, applied after the hold expires
};

/// Runs `passes` passes over the phase list: sense -> error/z -> adapt
/// weights -> force step -> admittance -> integrate -> plant step, until the
/// residual drops below epsilon or the phase duration cap is hit. Rows and
/// phase summaries are appended to `trace`; a controller or scenario fault
/// aborts the run and is recorded on the trace. Returns the final arm state.
EndEffectorState run_sampling(const SamplingSettings& settings,
                              const std::vector<SamplingPhase>& phases, PlantPort& plant,
                              SensorPort& sensor, EndEffectorState arm, SamplingTrace& trace);

}  // namespace swabsim
