#pragma once

// Physical constants and the unit conventions used across the library.
//
// Internally hbar = 1 and every model parameter (omega_a, omega, J, g) is an
// ordinary frequency in GHz, i.e. an energy E maps to E / h expressed in GHz.
// Angular frequencies from circuit geometry convert via nu = omega / (2 pi).

namespace dressed::constants {

// SI defining constants (exact since the 2019 redefinition).
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double planck_h = 6.62607015e-34;            // J s
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double hbar = planck_h / (2.0 * pi);         // J s

// Magnetic flux quantum h/2e; some device papers quote hbar/2e instead, so
// both are provided and the CLI lets the user override the value in use.
inline constexpr double flux_quantum = planck_h / (2.0 * elementary_charge);
inline constexpr double flux_quantum_hbar_over_2e =
    hbar / (2.0 * elementary_charge);

// Energy in Joules -> frequency in GHz (E / h, scaled to 1e9 Hz).
inline constexpr double joules_to_ghz = 1.0 / (planck_h * 1.0e9);

// Angular frequency in rad/s -> ordinary frequency in GHz.
inline constexpr double rad_per_s_to_ghz = 1.0 / (2.0 * pi * 1.0e9);

}  // namespace dressed::constants
