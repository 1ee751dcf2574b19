#pragma once

#include <string>
#include <vector>

#include "dressed/analytic.hpp"
#include "dressed/model.hpp"
#include "dressed/numeric.hpp"

// Bath-induced transition physics: matrix elements of single-qubit ladder
// operators between dressed states, selection rules (dark-state protection
// and its breaking), Rabi splitting, and the damping-rate ratio.

namespace dressed {

enum class QubitOperator {
  SigmaPlus1,
  SigmaMinus1,
  SigmaPlus2,
  SigmaMinus2,
  SymmetricPlus,       // S+ = sigma+(1) + sigma+(2)
  SymmetricMinus,      // S- = sigma-(1) + sigma-(2)
  AntisymmetricPlus,   // sigma+(1) - sigma+(2)
  AntisymmetricMinus,  // sigma-(1) - sigma-(2)
};

std::string operator_label(QubitOperator op);

// Action of the operator on one coupled-basis ket. The photon index is
// untouched: the bath, not the cavity, absorbs the quantum.
std::vector<std::pair<BasisKet, double>> apply_operator(const BasisKet& ket,
                                                        QubitOperator op);

// <to| O |from> for dressed states over the common coupled basis.
double transition_amplitude(const DressedState& from, const DressedState& to,
                            QubitOperator op);

// Same operator applied to a full state vector (used for the symmetry-
// breaking "kick"); the result is generally unnormalized.
QuantumState apply_qubit_operator(const QuantumState& state, QubitOperator op);

enum class SpectralShape { Flat, Ohmic };

struct BathModel {
  double g1 = 1.0;  // qubit-1 coupling amplitude, GHz
  double g2 = 0.0;  // qubit-2 coupling amplitude, GHz
  SpectralShape shape1 = SpectralShape::Flat;
  SpectralShape shape2 = SpectralShape::Flat;
  double strength1 = 1.0;  // rho0 (flat) or eta (ohmic slope)
  double strength2 = 1.0;

  double g_plus() const { return g1 + g2; }
  double g_minus() const { return g1 - g2; }

  // Spectral densities; an ohmic density rejects negative frequencies.
  double density1(double omega) const;
  double density2(double omega) const;
};

struct TransitionRecord {
  DressedState from;
  DressedState to;
  QubitOperator op = QubitOperator::SymmetricMinus;
  double amplitude = 0.0;
  bool allowed = false;  // |amplitude| > 1e-12
};

// Exhaustive ordered scan over a dressed level set with the combined
// lowering operator g1 sigma-(1) + g2 sigma-(2) (decomposed internally into
// its symmetric and antisymmetric parts). symmetric=true means g1 = g2 = 1;
// asymmetric uses g1 = 1, g2 = 0.
std::vector<TransitionRecord> selection_rules(
    const std::vector<DressedState>& levels, bool symmetric);
std::vector<TransitionRecord> selection_rules(
    const std::vector<DressedState>& levels, double g1, double g2);

// Double-peak separation sqrt(J^2+g^2) - J of the emission spectrum, GHz.
double rabi_splitting(const ModelParams& params);

enum class RatioStatus { Ok, Forbidden };
std::string ratio_status_label(RatioStatus s);

struct DampingRatio {
  RatioStatus status = RatioStatus::Ok;
  // [sin(theta/2) G+ rho1(w1) / (G- rho2(w2))]^2 with
  // w_l = w - (2-l)(J + sqrt(J^2+g^2)), the ratio formula as commonly quoted.
  double value = 0.0;
  // First-principles golden-rule ratio from the actual matrix elements,
  // [G+ cos(theta/2)]^2 rho1(w1x) / ([G-]^2 rho2(w2x)), at the exact
  // transition frequencies. Reported alongside, not reconciled.
  double golden_rule_value = 0.0;
  double omega1 = 0.0;        // quoted-formula evaluation frequencies
  double omega2 = 0.0;
  double omega1_exact = 0.0;  // E(phi0 -) - E(|0,dd>)
  double omega2_exact = 0.0;  // E(|0,psi->) - E(|0,dd>)
  double theta = 0.0;
};

// Ratio gamma1/gamma2 of the two decay rates into the region-III ground
// state. omega_ref_shift offsets the reference frequency entering the
// quoted formula's w_l evaluation points, default 0.
DampingRatio damping_ratio(const ModelParams& params, const BathModel& bath,
                           double omega_ref_shift = 0.0);

}  // namespace dressed
