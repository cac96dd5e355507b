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

#include "safegov/plant.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "safegov/errors.hpp"

namespace safegov::plant {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

}  // namespace

void FuelCellParams::validate() const {
  require(alpha1 > 0.0, "plant: alpha1 must be positive");
  require(alpha2 < 0.0, "plant: alpha2 must be negative");
  require(beta1 > 0.0, "plant: beta1 must be positive");
  require(beta2 < 0.0, "plant: beta2 must be negative");
  require(theta1 > 0.0, "plant: theta1 must be positive");
  require(theta2 < 0.0, "plant: theta2 must be negative");
  require(n > 0.0, "plant: n must be positive");
  require(e0 > 0.0, "plant: e0 must be positive");
  require(a_cell > 0.0, "plant: a_cell must be positive");
  require(n_cell > 0.0, "plant: n_cell must be positive");
  require(mc > 0.0, "plant: mc must be positive");
  require(faraday > 0.0, "plant: faraday must be positive");
  require(mm_h2 > 0.0, "plant: mm_h2 must be positive");
  require(dh > 0.0, "plant: dh must be positive");
  require(eta_i > 0.0 && eta_i <= 1.0, "plant: eta_i must be in (0, 1]");
  require(cp_c > 0.0, "plant: cp_c must be positive");
}

void OperatingPoint::validate() const {
  require(i0 > 0.0, "plant: load current i0 must be positive");
  require(t_st0 > t_in,
          "plant: stack temperature t_st0 must exceed coolant inlet t_in");
}

double cell_voltage(const FuelCellParams& p, double current_a,
                    double t_degc) {
  if (!(current_a > 0.0)) {
    throw std::domain_error("cell_voltage: current must be positive");
  }
  // Current density in mA/cm^2; the fit coefficients expect this scaling.
  const double i = 1000.0 * current_a / p.a_cell;
  const double v_act = (p.alpha1 + p.alpha2 * t_degc) * std::log(i);
  const double v_ohm = (p.beta1 + p.beta2 * t_degc) * i;
  const double v_trans = (p.theta1 + p.theta2 * t_degc) * std::exp(p.n * i);
  return p.e0 - v_act - v_ohm - v_trans;
}

ThermalCoefficients thermal_coefficients(const FuelCellParams& p,
                                         double current_a) {
  if (!(current_a > 0.0)) {
    throw std::domain_error("thermal_coefficients: current must be positive");
  }
  const double i = 1000.0 * current_a / p.a_cell;
  ThermalCoefficients c;
  // Net heat rate per unit heat capacity, split into a temperature-free and
  // a temperature-proportional part. The 1/1000 converts the voltage terms
  // from W to kW so they subtract from the kJ-based generation term.
  c.a0 = (p.n_cell * current_a / p.mc) *
         (p.eta_i * p.mm_h2 * p.dh / (2.0 * p.faraday) +
          (1.0 / 1000.0) * (-p.e0 + p.alpha1 * std::log(i) + p.beta1 * i +
                            p.theta1 * std::exp(p.n * i)));
  c.a1 = (p.n_cell * current_a / (1000.0 * p.mc)) *
         (p.alpha2 * std::log(i) + p.beta2 * i + p.theta2 * std::exp(p.n * i));
  c.b0 = p.cp_c / p.mc;
  return c;
}

double bilinear_derivative(const FuelCellParams& p, double t_degc, double w_c,
                           double current_a, double t_in_degc) {
  const ThermalCoefficients c = thermal_coefficients(p, current_a);
  return c.a0 + c.a1 * t_degc - w_c * c.b0 * (t_degc - t_in_degc);
}

double nominal_coolant_flow(const FuelCellParams& p,
                            const OperatingPoint& op) {
  const ThermalCoefficients c = thermal_coefficients(p, op.i0);
  const double dt = op.t_st0 - op.t_in;
  if (dt == 0.0) {
    throw std::domain_error(
        "nominal_coolant_flow: t_st0 == t_in (division by zero)");
  }
  return (c.a0 + c.a1 * op.t_st0) / (c.b0 * dt);
}

LinearPlant linearize(const FuelCellParams& p, const OperatingPoint& op) {
  const ThermalCoefficients c = thermal_coefficients(p, op.i0);
  const double dt = op.t_st0 - op.t_in;
  if (dt == 0.0) {
    throw std::domain_error("linearize: t_st0 == t_in (division by zero)");
  }
  const double w_c0 = nominal_coolant_flow(p, op);
  LinearPlant lin;
  lin.j = -1.0 / (c.b0 * dt);
  lin.b = -(c.b0 * w_c0 - c.a1) / (c.b0 * dt);
  return lin;
}

LinearPlant perturb(const LinearPlant& nominal, double rel_j, double rel_b) {
  LinearPlant out;
  out.j = nominal.j * (1.0 + rel_j);
  out.b = nominal.b * (1.0 + rel_b);
  if (!(out.j < 0.0)) {
    throw ConfigError(
        "perturb: perturbed J = " + std::to_string(out.j) +
        " is not negative; the plant invariant J < 0 would be violated");
  }
  return out;
}

}  // namespace safegov::plant
