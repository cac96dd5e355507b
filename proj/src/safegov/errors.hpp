/******************************************************************************
 * Copyright 2026 The Safegov Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

#pragma once

#include <stdexcept>
#include <string>

namespace safegov {

// Invalid configuration: schema violations, broken invariants, bad units.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// The initial state does not satisfy V(z0) <= Gamma(x_tilde_d0).
class InfeasibleStartError : public std::runtime_error {
 public:
  explicit InfeasibleStartError(const std::string& what)
      : std::runtime_error(what) {}
};

// A simulated state left the configured sanity bound or became non-finite.
class DivergedError : public std::runtime_error {
 public:
  explicit DivergedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace safegov
