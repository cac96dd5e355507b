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

namespace safegov::plant {

// Empirical and physical constants of the PEM fuel cell stack (Ballard MK5
// fit). Defaults are the stack this project was identified against; all
// values can be overridden from the scenario file.
//
// Temperatures are degrees Celsius throughout: the voltage-fit coefficients
// are per-degC and reproduce the published polarization curve only with
// Celsius inputs.
struct FuelCellParams {
  double alpha1 = 4.01e-2;   // V
  double alpha2 = -1.40e-4;  // V/degC
  double beta1 = 4.77e-4;    // kOhm*cm^2
  double beta2 = -3.32e-6;   // kOhm*cm^2/degC
  double theta1 = 1.1e-4;    // V
  double theta2 = -1.2e-6;   // V/degC
  double n = 8.0e-3;         // cm^2/mA
  double e0 = 1.05;          // V, open-circuit voltage
  double a_cell = 232.0;     // cm^2, cell surface area
  double n_cell = 36.0;      // cells in the stack
  double mc = 35.0;          // kJ/degC, lumped stack heat capacity m_st*C_p_st
  double faraday = 96485.0;  // C/mol
  double mm_h2 = 2.016;      // g/mol, molar mass of H2
  double dh = 143.0;         // kJ/g, enthalpy of combustion of H2
  double eta_i = 0.98;       // Faraday efficiency, in (0, 1]
  double cp_c = 4.184;       // kJ/(kg*degC), coolant specific heat

  // Throws ConfigError if any sign/range constraint is broken.
  void validate() const;
};

// Operating point: stack temperature, load current, coolant inlet
// temperature. The coolant must be cooler than the stack.
struct OperatingPoint {
  double t_st0 = 70.0;  // degC
  double i0 = 100.0;    // A
  double t_in = 67.0;   // degC

  void validate() const;
};

// First-order uncertain plant  dx/dt = (1/J)(-B x + u)  obtained by
// linearizing the bilinear thermal balance about an operating point.
// J < 0 for every physical operating point.
struct LinearPlant {
  double j = 0.0;  // degC*kg/s scaling
  double b = 0.0;  // dimensionless gain
};

// Coefficients of the bilinear thermal balance
//   dT/dt = A0(I) + A1(I) T - w_c B0 (T - T_in).
struct ThermalCoefficients {
  double a0 = 0.0;  // degC/s
  double a1 = 0.0;  // 1/s
  double b0 = 0.0;  // 1/kg
};

// Polarization curve: E0 minus activation, ohmic and transport
// overpotentials at current density i = 1000 I / A_cell (mA/cm^2).
// Throws std::domain_error for non-positive current (log undefined).
double cell_voltage(const FuelCellParams& p, double current_a, double t_degc);

// Closed-form A0, A1, B0 at load current I. B0 does not depend on I.
ThermalCoefficients thermal_coefficients(const FuelCellParams& p,
                                         double current_a);

// Right-hand side of the bilinear thermal balance.
double bilinear_derivative(const FuelCellParams& p, double t_degc, double w_c,
                           double current_a, double t_in_degc);

// Coolant flow that holds the stack at op.t_st0 under load op.i0:
//   w_c0 = (A0 + A1 T_st0) / (B0 (T_st0 - T_in)).
// Throws std::domain_error when t_st0 == t_in.
double nominal_coolant_flow(const FuelCellParams& p, const OperatingPoint& op);

// First-order plant about the operating point:
//   J = -1 / (B0 (T_st0 - T_in)),
//   B = -(B0 w_c0 - A1) / (B0 (T_st0 - T_in)).
LinearPlant linearize(const FuelCellParams& p, const OperatingPoint& op);

// Relative parametric perturbation: J' = J (1 + rel_j), B' = B (1 + rel_b).
// Throws ConfigError if the perturbed J is not strictly negative.
LinearPlant perturb(const LinearPlant& nominal, double rel_j, double rel_b);

}  // namespace safegov::plant
