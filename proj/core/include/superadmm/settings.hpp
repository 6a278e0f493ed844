// Copyright 2026 The superadmm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERADMM_SETTINGS_HPP_
#define SUPERADMM_SETTINGS_HPP_

#include <limits>
#include <string_view>

namespace superadmm {

enum class Ordering { kMinimumDegree, kNatural };

std::string_view to_string(Ordering ordering);

struct Settings {
  // Per-iteration growth/shrink factor of the constraint penalties. A value of
  // 1 freezes the penalties and yields plain ADMM.
  double alpha = 500.0;
  // Proximal weight on x.
  double sigma = 1e-6;
  // Shrink factor of the stability bound.
  double tau = 0.5;
  double rho0 = 1.0;
  // Initial stability bound; penalties are clamped to [1/b, b].
  double b0 = 1e8;
  // Absolute tolerance on both residuals. Zero runs until the bound drops
  // below one or a limit is hit.
  double eps_abs = 1e-8;
  int max_iter = 4000;
  double time_limit = std::numeric_limits<double>::infinity();  // seconds
  int infeas_check_period = 10;
  // Tolerance of the infeasibility certificates, relative to the norm of the
  // iterate difference.
  double infeas_tol = 1e-9;
  Ordering ordering = Ordering::kMinimumDegree;
  bool record_trace = false;
};

// Throws std::invalid_argument if a field is outside its admissible range.
void validate_settings(const Settings& settings);

}  // namespace superadmm

#endif  // SUPERADMM_SETTINGS_HPP_
