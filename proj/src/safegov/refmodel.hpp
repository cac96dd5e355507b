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

#include <Eigen/Dense>

namespace safegov::refmodel {

// Gains of the nominal PI loop. Stability of the closed loop requires
// K < 0, lambda > 0 and J_nom < 0 (so that K/J_nom > 0).
struct RefModelGains {
  double k = -1.0;       // scalar PI gain, < 0
  double lambda = 0.3;   // 1/s, > 0
  double j_nom = -2.79;  // nominal plant J, < 0
  double b_nom = -0.07;  // nominal plant B

  void validate() const;
};

// State of the reference model, z_m = [x_m, e_Im]^T with e_Im the integral
// of the model tracking error.
struct RefModelState {
  double x_m = 0.0;   // degC deviation
  double e_im = 0.0;  // degC*s

  Eigen::Vector2d vec() const { return {x_m, e_im}; }
};

// State-space form z_m' = A_m z_m + b_m x_d of the nominal PI loop for a
// constant command. A_m is Hurwitz for all admissible gains.
struct StateSpace2 {
  Eigen::Matrix2d a_m;
  Eigen::Vector2d b_m;
};

// True iff both eigenvalues of a 2x2 matrix have negative real part
// (trace < 0 and det > 0).
bool is_hurwitz(const Eigen::Matrix2d& a);

// Builds A_m, b_m from the gains:
//   A_m = [[-(K + J lam)/J, K lam / J], [-1, 0]],  b_m = [(K + J lam)/J, 1].
// Throws ConfigError if the gains violate their invariants or A_m fails the
// Hurwitz check.
StateSpace2 system_matrices(const RefModelGains& g);

// Equilibrium z_bar = -A_m^-1 b_m x_d. Its first component equals x_d and
// its second is zero (unit DC gain of the nominal loop).
RefModelState equilibrium(const StateSpace2& ss, double x_d);

// z_m' = A_m z_m + b_m x_d_in, with x_d_in held constant over the step.
Eigen::Vector2d ref_model_derivative(const StateSpace2& ss,
                                     const RefModelState& z, double x_d_in);

// Solves A_m^T P + P A_m = -Q for the symmetric positive definite P by a
// direct solve of the vectorized 3x3 system. Requires A_m Hurwitz and Q
// symmetric positive definite; the result is checked to residual 1e-10.
Eigen::Matrix2d solve_lyapunov(const StateSpace2& ss,
                               const Eigen::Matrix2d& q);

// Nominal PI control law:
//   u = B_nom x_m + J_nom (dx_d + lambda e_m) + K e_2m.
double nominal_pi_control(const RefModelGains& g, double x_m, double e_m,
                          double e_2m, double dx_d);

}  // namespace safegov::refmodel
