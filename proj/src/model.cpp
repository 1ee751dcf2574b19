#include "dressed/model.hpp"

#include <cmath>
#include <stdexcept>

#include "dressed/constants.hpp"

namespace dressed {

namespace {

bool finite(double x) { return std::isfinite(x); }

int index_of(int photon, Spin s) {
  return kSpinStates * photon + static_cast<int>(s);
}

int index_of(int photon, ProductSpin s) {
  return kSpinStates * photon + static_cast<int>(s);
}

}  // namespace

std::string spin_name(Spin s) {
  switch (s) {
    case Spin::UpUp: return "uu";
    case Spin::PsiPlus: return "psi+";
    case Spin::PsiMinus: return "psi-";
    case Spin::DownDown: return "dd";
  }
  throw std::invalid_argument("unknown spin label");
}

int ket_index(const BasisKet& ket) {
  if (ket.photon < 0) throw std::invalid_argument("negative photon number");
  return index_of(ket.photon, ket.spin);
}

BasisKet ket_at(int index) {
  if (index < 0) throw std::invalid_argument("negative basis index");
  return BasisKet{index / kSpinStates, static_cast<Spin>(index % kSpinStates)};
}

std::vector<BasisKet> build_basis(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  std::vector<BasisKet> basis;
  basis.reserve(static_cast<std::size_t>(kSpinStates) * (n_max + 1));
  for (int n = 0; n <= n_max; ++n)
    for (int s = 0; s < kSpinStates; ++s)
      basis.push_back(BasisKet{n, static_cast<Spin>(s)});
  return basis;
}

void ModelParams::validate() const {
  if (!finite(omega_a) || !finite(omega) || !finite(J) || !finite(g))
    throw std::invalid_argument("model frequencies must be finite");
  if (g < 0.0) throw std::invalid_argument("coupling g must be nonnegative");
  if (!(omega > 0.0)) throw std::invalid_argument("resonator frequency must be positive");
  if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
}

double spin_energy(Spin s, double omega_a, double J) {
  switch (s) {
    case Spin::UpUp: return omega_a + J;
    case Spin::PsiPlus: return -J;
    case Spin::PsiMinus: return -J;
    case Spin::DownDown: return J - omega_a;
  }
  throw std::invalid_argument("unknown spin label");
}

Matrix hamiltonian_matrix(const ModelParams& params) {
  params.validate();
  const int dim = params.dimension();
  Matrix h(dim, dim);
  for (int n = 0; n <= params.n_max; ++n) {
    for (int s = 0; s < kSpinStates; ++s) {
      const int i = index_of(n, static_cast<Spin>(s));
      h(i, i) = n * params.omega +
                spin_energy(static_cast<Spin>(s), params.omega_a, params.J);
    }
    // (g/sqrt(2)) (S+ a + S- a†) with S± the total spin ladder: the sqrt(2)
    // ladder factor cancels the 1/sqrt(2), leaving g sqrt(n) hops along
    // uu <- psi+ <- dd. psi- decouples entirely.
    if (n >= 1) {
      const double amp = params.g * std::sqrt(static_cast<double>(n));
      const int up = index_of(n - 1, Spin::UpUp);
      const int mid = index_of(n, Spin::PsiPlus);
      h(up, mid) = amp;
      h(mid, up) = amp;
    }
    if (n + 1 <= params.n_max) {
      const double amp = params.g * std::sqrt(static_cast<double>(n + 1));
      const int mid = index_of(n, Spin::PsiPlus);
      const int down = index_of(n + 1, Spin::DownDown);
      h(mid, down) = amp;
      h(down, mid) = amp;
    }
  }
  return h;
}

Matrix hamiltonian_matrix_product(const ModelParams& params) {
  params.validate();
  const int dim = params.dimension();
  const double root_half = 1.0 / std::sqrt(2.0);
  Matrix h(dim, dim);
  auto diag = [&](ProductSpin s) {
    switch (s) {
      case ProductSpin::UpUp: return params.omega_a + params.J;
      case ProductSpin::UpDown: return -params.J;
      case ProductSpin::DownUp: return -params.J;
      case ProductSpin::DownDown: return params.J - params.omega_a;
    }
    throw std::invalid_argument("unknown product spin label");
  };
  for (int n = 0; n <= params.n_max; ++n) {
    for (int s = 0; s < kSpinStates; ++s) {
      const int i = index_of(n, static_cast<ProductSpin>(s));
      h(i, i) = n * params.omega + diag(static_cast<ProductSpin>(s));
    }
    if (n >= 1) {
      const double amp = params.g * root_half * std::sqrt(static_cast<double>(n));
      // sigma+ on qubit 1 paired with photon annihilation...
      auto hop = [&](ProductSpin from, ProductSpin to) {
        const int i = index_of(n - 1, to);
        const int j = index_of(n, from);
        h(i, j) += amp;
        h(j, i) += amp;
      };
      hop(ProductSpin::DownUp, ProductSpin::UpUp);
      hop(ProductSpin::DownDown, ProductSpin::UpDown);
      // ...and sigma+ on qubit 2.
      hop(ProductSpin::UpDown, ProductSpin::UpUp);
      hop(ProductSpin::DownDown, ProductSpin::DownUp);
    }
  }
  return h;
}

Matrix spin_basis_change(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  const int dim = kSpinStates * (n_max + 1);
  const double root_half = 1.0 / std::sqrt(2.0);
  Matrix c(dim, dim);
  for (int n = 0; n <= n_max; ++n) {
    const int base = kSpinStates * n;
    c(base + 0, base + 0) = 1.0;                 // uu <- uu
    c(base + 1, base + 1) = root_half;           // psi+ <- ud
    c(base + 1, base + 2) = root_half;           // psi+ <- du
    c(base + 2, base + 1) = root_half;           // psi- <- ud
    c(base + 2, base + 2) = -root_half;          // psi- <- du
    c(base + 3, base + 3) = 1.0;                 // dd <- dd
  }
  return c;
}

Matrix total_spin_squared(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  const int dim = kSpinStates * (n_max + 1);
  Matrix s2(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Spin s = ket_at(i).spin;
    s2(i, i) = (s == Spin::PsiMinus) ? 0.0 : 2.0;
  }
  return s2;
}

BlockPartition block_partition(int n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  BlockPartition part;
  part.singlet_chain.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    part.singlet_chain.push_back(index_of(n, Spin::PsiMinus));

  part.triplet_blocks.push_back(
      TripletBlock{0, {index_of(0, Spin::DownDown)}, false});
  part.triplet_blocks.push_back(
      TripletBlock{1,
                   {index_of(0, Spin::PsiPlus), index_of(1, Spin::DownDown)},
                   false});
  for (int n = 1; n <= n_max - 1; ++n) {
    part.triplet_blocks.push_back(
        TripletBlock{n + 1,
                     {index_of(n - 1, Spin::UpUp), index_of(n, Spin::PsiPlus),
                      index_of(n + 1, Spin::DownDown)},
                     false});
  }
  // Fock-cutoff remainders: the blocks that would extend past n_max.
  part.triplet_blocks.push_back(
      TripletBlock{n_max + 1,
                   {index_of(n_max - 1, Spin::UpUp),
                    index_of(n_max, Spin::PsiPlus)},
                   true});
  part.triplet_blocks.push_back(
      TripletBlock{n_max + 2, {index_of(n_max, Spin::UpUp)}, true});
  return part;
}

void DeviceParams::validate() const {
  auto positive = [](double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0)
      throw std::domain_error(std::string(what) + " must be positive");
  };
  positive(c_sigma, "island capacitance");
  positive(c_g, "gate capacitance");
  if (!std::isfinite(c_m) || c_m < 0.0)
    throw std::domain_error("mutual capacitance must be nonnegative");
  if (c_m >= c_sigma)
    throw std::domain_error("mutual capacitance must stay below the island capacitance");
  if (!std::isfinite(v_g))
    throw std::domain_error("gate voltage must be finite");
  if (!std::isfinite(e_j_ghz) || e_j_ghz < 0.0)
    throw std::domain_error("Josephson energy must be nonnegative");
  positive(squid_area, "SQUID area");
  positive(qubit_distance, "qubit-resonator distance");
  positive(resonator_length, "resonator length");
  positive(inductance_per_length, "inductance per length");
  positive(capacitance_per_length, "capacitance per length");
  if (mode_number < 1) throw std::domain_error("mode number must be at least 1");
  positive(flux_quantum, "flux quantum");
}

DerivedModel device_to_model(const DeviceParams& dev, int n_max) {
  dev.validate();
  namespace k = constants;
  const double e = k::elementary_charge;
  const double cap_diff = dev.c_sigma * dev.c_sigma - dev.c_m * dev.c_m;

  const double j_joule = e * e * dev.c_m / (2.0 * cap_diff);
  const double e_c_joule = 2.0 * e * e * dev.c_sigma / cap_diff;
  const double n_g = dev.c_g * dev.v_g / (2.0 * e);

  const double omega_rad =
      dev.mode_number * k::pi /
      (dev.resonator_length *
       std::sqrt(dev.inductance_per_length * dev.capacitance_per_length));

  const double e_j_joule = dev.e_j_ghz / k::joules_to_ghz;
  const double g_joule =
      dev.squid_area * e_j_joule *
      std::sqrt(k::hbar * dev.inductance_per_length * omega_rad) /
      (dev.flux_quantum * dev.qubit_distance * std::sqrt(dev.resonator_length));

  DerivedModel out;
  out.charging_energy_ghz = e_c_joule * k::joules_to_ghz;
  out.gate_charge = n_g;
  out.omega_rad_per_s = omega_rad;
  out.model.J = j_joule * k::joules_to_ghz;
  out.model.g = g_joule * k::joules_to_ghz;
  out.model.omega = omega_rad * k::rad_per_s_to_ghz;
  out.model.omega_a = 2.0 * out.charging_energy_ghz * (n_g - 0.5);
  out.model.n_max = n_max;
  out.model.validate();
  return out;
}

}  // namespace dressed
