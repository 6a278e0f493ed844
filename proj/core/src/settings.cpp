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

#include "superadmm/settings.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace superadmm {

std::string_view to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::kMinimumDegree:
      return "amd";
    case Ordering::kNatural:
      return "natural";
  }
  return "unknown";
}

void validate_settings(const Settings& s) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid settings: ") + what);
  };
  // alpha == 1 is allowed: it disables penalty adaptation.
  require(s.alpha >= 1.0 && std::isfinite(s.alpha), "alpha must be >= 1");
  require(s.sigma > 0.0 && std::isfinite(s.sigma), "sigma must be > 0");
  require(s.tau > 0.0 && s.tau < 1.0, "tau must lie in (0, 1)");
  require(s.b0 > 1.0 && std::isfinite(s.b0), "b0 must be > 1");
  require(s.rho0 > 0.0 && s.rho0 <= s.b0 && s.rho0 >= 1.0 / s.b0,
          "rho0 must lie in [1/b0, b0]");
  require(s.eps_abs >= 0.0, "eps_abs must be >= 0");
  require(s.max_iter >= 0, "max_iter must be >= 0");
  require(s.time_limit > 0.0, "time_limit must be > 0");
  require(s.infeas_check_period >= 1, "infeas_check_period must be >= 1");
  require(s.infeas_tol >= 0.0, "infeas_tol must be >= 0");
}

}  // namespace superadmm
