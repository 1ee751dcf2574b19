#include "dressed/transitions.hpp"

#include <cmath>
#include <stdexcept>

namespace dressed {

namespace {

const double kRootHalf = 1.0 / std::sqrt(2.0);

// sigma-(1) and sigma-(2) on the coupled spin labels:
//   sigma-(1): uu -> (psi+ - psi-)/sqrt(2), psi+ -> dd/sqrt(2), psi- -> dd/sqrt(2)
//   sigma-(2): uu -> (psi+ + psi-)/sqrt(2), psi+ -> dd/sqrt(2), psi- -> -dd/sqrt(2)
// obtained by expanding psi+- in the product basis and lowering one qubit.
void lower_single(int qubit, const BasisKet& ket,
                  std::vector<std::pair<BasisKet, double>>& out) {
  const double sign = (qubit == 1) ? -1.0 : 1.0;  // psi- component sign
  switch (ket.spin) {
    case Spin::UpUp:
      out.push_back({BasisKet{ket.photon, Spin::PsiPlus}, kRootHalf});
      out.push_back({BasisKet{ket.photon, Spin::PsiMinus}, sign * kRootHalf});
      break;
    case Spin::PsiPlus:
      out.push_back({BasisKet{ket.photon, Spin::DownDown}, kRootHalf});
      break;
    case Spin::PsiMinus:
      out.push_back({BasisKet{ket.photon, Spin::DownDown}, -sign * kRootHalf});
      break;
    case Spin::DownDown:
      break;  // annihilated
  }
}

void raise_single(int qubit, const BasisKet& ket,
                  std::vector<std::pair<BasisKet, double>>& out) {
  const double sign = (qubit == 1) ? -1.0 : 1.0;
  switch (ket.spin) {
    case Spin::UpUp:
      break;  // annihilated
    case Spin::PsiPlus:
      out.push_back({BasisKet{ket.photon, Spin::UpUp}, kRootHalf});
      break;
    case Spin::PsiMinus:
      out.push_back({BasisKet{ket.photon, Spin::UpUp}, sign * kRootHalf});
      break;
    case Spin::DownDown:
      out.push_back({BasisKet{ket.photon, Spin::PsiPlus}, kRootHalf});
      out.push_back({BasisKet{ket.photon, Spin::PsiMinus}, -sign * kRootHalf});
      break;
  }
}

void apply_into(const BasisKet& ket, QubitOperator op,
                std::vector<std::pair<BasisKet, double>>& out) {
  switch (op) {
    case QubitOperator::SigmaMinus1: lower_single(1, ket, out); return;
    case QubitOperator::SigmaMinus2: lower_single(2, ket, out); return;
    case QubitOperator::SigmaPlus1: raise_single(1, ket, out); return;
    case QubitOperator::SigmaPlus2: raise_single(2, ket, out); return;
    case QubitOperator::SymmetricMinus: {
      // S-: uu -> sqrt(2) psi+, psi+ -> sqrt(2) dd, psi- -> 0
      if (ket.spin == Spin::UpUp)
        out.push_back({BasisKet{ket.photon, Spin::PsiPlus}, std::sqrt(2.0)});
      else if (ket.spin == Spin::PsiPlus)
        out.push_back({BasisKet{ket.photon, Spin::DownDown}, std::sqrt(2.0)});
      return;
    }
    case QubitOperator::SymmetricPlus: {
      if (ket.spin == Spin::DownDown)
        out.push_back({BasisKet{ket.photon, Spin::PsiPlus}, std::sqrt(2.0)});
      else if (ket.spin == Spin::PsiPlus)
        out.push_back({BasisKet{ket.photon, Spin::UpUp}, std::sqrt(2.0)});
      return;
    }
    case QubitOperator::AntisymmetricMinus: {
      // sigma-(1) - sigma-(2): uu -> -sqrt(2) psi-, psi- -> sqrt(2) dd
      if (ket.spin == Spin::UpUp)
        out.push_back({BasisKet{ket.photon, Spin::PsiMinus}, -std::sqrt(2.0)});
      else if (ket.spin == Spin::PsiMinus)
        out.push_back({BasisKet{ket.photon, Spin::DownDown}, std::sqrt(2.0)});
      return;
    }
    case QubitOperator::AntisymmetricPlus: {
      if (ket.spin == Spin::DownDown)
        out.push_back({BasisKet{ket.photon, Spin::PsiMinus}, std::sqrt(2.0)});
      else if (ket.spin == Spin::PsiMinus)
        out.push_back({BasisKet{ket.photon, Spin::UpUp}, -std::sqrt(2.0)});
      return;
    }
  }
  throw std::invalid_argument("unknown qubit operator");
}

double density(SpectralShape shape, double strength, double omega) {
  switch (shape) {
    case SpectralShape::Flat:
      return strength;
    case SpectralShape::Ohmic:
      if (omega < 0.0)
        throw std::domain_error("ohmic spectral density needs omega >= 0");
      return strength * omega;
  }
  throw std::invalid_argument("unknown spectral shape");
}

}  // namespace

std::string operator_label(QubitOperator op) {
  switch (op) {
    case QubitOperator::SigmaPlus1: return "sigma+(1)";
    case QubitOperator::SigmaMinus1: return "sigma-(1)";
    case QubitOperator::SigmaPlus2: return "sigma+(2)";
    case QubitOperator::SigmaMinus2: return "sigma-(2)";
    case QubitOperator::SymmetricPlus: return "S+";
    case QubitOperator::SymmetricMinus: return "S-";
    case QubitOperator::AntisymmetricPlus: return "A+";
    case QubitOperator::AntisymmetricMinus: return "A-";
  }
  throw std::invalid_argument("unknown qubit operator");
}

std::vector<std::pair<BasisKet, double>> apply_operator(const BasisKet& ket,
                                                        QubitOperator op) {
  std::vector<std::pair<BasisKet, double>> out;
  apply_into(ket, op, out);
  return out;
}

double transition_amplitude(const DressedState& from, const DressedState& to,
                            QubitOperator op) {
  double amp = 0.0;
  for (const auto& [ket, coeff] : from.amplitudes) {
    for (const auto& [image, weight] : apply_operator(ket, op)) {
      for (const auto& [target, target_coeff] : to.amplitudes)
        if (target == image) amp += target_coeff * weight * coeff;
    }
  }
  return amp;
}

QuantumState apply_qubit_operator(const QuantumState& state, QubitOperator op) {
  if (state.amplitudes.size() % kSpinStates != 0)
    throw std::invalid_argument("state dimension is not a whole Fock ladder");
  QuantumState out;
  out.amplitudes.assign(state.amplitudes.size(), 0.0);
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    if (state.amplitudes[i] == std::complex<double>(0.0)) continue;
    for (const auto& [image, weight] :
         apply_operator(ket_at(static_cast<int>(i)), op)) {
      out.amplitudes[ket_index(image)] += weight * state.amplitudes[i];
    }
  }
  return out;
}

double BathModel::density1(double omega) const {
  return density(shape1, strength1, omega);
}

double BathModel::density2(double omega) const {
  return density(shape2, strength2, omega);
}

std::vector<TransitionRecord> selection_rules(
    const std::vector<DressedState>& levels, double g1, double g2) {
  // g1 s1- + g2 s2- = (g1+g2)/2 S- + (g1-g2)/2 A-
  const double half_plus = 0.5 * (g1 + g2);
  const double half_minus = 0.5 * (g1 - g2);
  std::vector<TransitionRecord> records;
  records.reserve(levels.size() * levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (std::size_t j = 0; j < levels.size(); ++j) {
      if (i == j) continue;
      TransitionRecord rec;
      rec.from = levels[i];
      rec.to = levels[j];
      rec.op = (g2 == 0.0 && g1 == 1.0) ? QubitOperator::SigmaMinus1
               : (g1 == g2)             ? QubitOperator::SymmetricMinus
                                        : QubitOperator::AntisymmetricMinus;
      rec.amplitude =
          half_plus * transition_amplitude(levels[i], levels[j],
                                           QubitOperator::SymmetricMinus) +
          half_minus * transition_amplitude(levels[i], levels[j],
                                            QubitOperator::AntisymmetricMinus);
      rec.allowed = std::abs(rec.amplitude) > 1e-12;
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::vector<TransitionRecord> selection_rules(
    const std::vector<DressedState>& levels, bool symmetric) {
  return symmetric ? selection_rules(levels, 1.0, 1.0)
                   : selection_rules(levels, 1.0, 0.0);
}

double rabi_splitting(const ModelParams& params) {
  params.validate();
  // sqrt(J^2+g^2) - J without cancellation for small g
  const double r = std::hypot(params.J, params.g);
  if (params.J >= 0.0) {
    if (r + params.J == 0.0) return 0.0;
    return params.g * params.g / (r + params.J);
  }
  return r - params.J;
}

std::string ratio_status_label(RatioStatus s) {
  return s == RatioStatus::Ok ? "ok" : "forbidden";
}

DampingRatio damping_ratio(const ModelParams& params, const BathModel& bath,
                           double omega_ref_shift) {
  params.validate();
  DampingRatio out;
  const double j = params.J;
  const double g = params.g;
  const double root = std::hypot(j, g);
  out.theta = mixing_angle(j, g);

  // quoted-formula evaluation points w_l = w - (2-l)(J + sqrt(J^2+g^2))
  const double ref = params.omega + omega_ref_shift;
  out.omega1 = ref - (j + root);
  out.omega2 = ref;

  // exact transition frequencies into the region-III ground state |0,dd>
  out.omega1_exact = params.omega_a - j - root;
  out.omega2_exact = params.omega_a - 2.0 * j;

  const double g_plus = bath.g_plus();
  const double g_minus = bath.g_minus();
  if (g_minus == 0.0) {
    // symmetric coupling: the singlet decay path is dark
    out.status = RatioStatus::Forbidden;
    return out;
  }
  const double rho2 = bath.density2(out.omega2);
  const double rho2_exact = bath.density2(out.omega2_exact);
  if (rho2 == 0.0 || rho2_exact == 0.0) {
    out.status = RatioStatus::Forbidden;
    return out;
  }

  const double s_half = std::sin(0.5 * out.theta);
  const double c_half = std::cos(0.5 * out.theta);
  const double quoted =
      s_half * g_plus * bath.density1(out.omega1) / (g_minus * rho2);
  out.value = quoted * quoted;

  const double golden_amp = g_plus * c_half / g_minus;
  out.golden_rule_value =
      golden_amp * golden_amp * bath.density1(out.omega1_exact) / rho2_exact;
  return out;
}

}  // namespace dressed
