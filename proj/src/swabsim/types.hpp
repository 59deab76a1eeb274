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

#include <Eigen/Dense>

namespace swabsim {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline bool is_finite(const Vec3& v) { return v.allFinite(); }
inline bool is_finite(const Mat3& m) { return m.allFinite(); }

}  // namespace swabsim
