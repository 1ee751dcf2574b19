#pragma once

#include <string>
#include <vector>

#include "dressed/linalg.hpp"

// Two Ising-coupled charge qubits in a single transmission-line resonator
// mode. The qubit pair is described in the coupled (total-spin) basis
//   uu, psi+ = (ud + du)/sqrt(2), psi- = (ud - du)/sqrt(2), dd
// and the resonator by Fock states 0..n_max. hbar = 1, frequencies in GHz.

namespace dressed {

enum class Spin : int { UpUp = 0, PsiPlus = 1, PsiMinus = 2, DownDown = 3 };

// Product-basis spin labels, only used to cross-check the change of basis.
enum class ProductSpin : int { UpUp = 0, UpDown = 1, DownUp = 2, DownDown = 3 };

inline constexpr int kSpinStates = 4;

std::string spin_name(Spin s);

struct BasisKet {
  int photon = 0;
  Spin spin = Spin::UpUp;
  friend bool operator==(const BasisKet&, const BasisKet&) = default;
};

// Flat index layout: 4 * photon + spin.
int ket_index(const BasisKet& ket);
BasisKet ket_at(int index);
std::vector<BasisKet> build_basis(int n_max);

struct ModelParams {
  double omega_a = 4.0;  // qubit level splitting, GHz
  double omega = 4.0;    // resonator frequency, GHz
  double J = 4.0;        // Ising qubit-qubit coupling, GHz
  double g = 2.0;        // qubit-field coupling, GHz
  int n_max = 40;        // Fock truncation: photon numbers 0..n_max

  bool resonant() const { return omega == omega_a; }
  int dimension() const { return kSpinStates * (n_max + 1); }

  // Throws std::invalid_argument on non-finite frequencies, g < 0 or
  // n_max < 1.
  void validate() const;
};

// Qubit-pair energy of one coupled spin label: (omega_a/2)(sz1+sz2) + J sz1 sz2.
double spin_energy(Spin s, double omega_a, double J);

// Full Hamiltonian over the coupled basis (real symmetric).
Matrix hamiltonian_matrix(const ModelParams& params);

// Same operator written over the product spin basis (uu, ud, du, dd per
// photon), for independent cross-checks of the coupled-basis construction.
Matrix hamiltonian_matrix_product(const ModelParams& params);

// Orthogonal change of basis with coupled = C * product, block diagonal over
// photon sectors.
Matrix spin_basis_change(int n_max);

// Total-spin Casimir S^2 of the qubit pair, diagonal in the coupled basis
// (2 for the triplet labels, 0 for psi-).
Matrix total_spin_squared(int n_max);

// The Hamiltonian never mixes psi- with the triplet labels, and the triplet
// sector splits into finite blocks W(k):
//   W(0)   = { |0,dd> }
//   W(1)   = { |0,psi+>, |1,dd> }
//   W(n+1) = { |n-1,uu>, |n,psi+>, |n+1,dd> }   for n >= 1
// Blocks whose highest ket would need photon > n_max are kept but flagged
// truncated (they are artifacts of the Fock cutoff).
struct TripletBlock {
  int block_index = 0;       // k in W(k)
  std::vector<int> indices;  // flat basis indices, ascending photon number
  bool truncated = false;
};

struct BlockPartition {
  std::vector<int> singlet_chain;  // |n,psi-> for n = 0..n_max
  std::vector<TripletBlock> triplet_blocks;
};

BlockPartition block_partition(int n_max);

// Charge-qubit device geometry -> model frequencies.
struct DeviceParams {
  double c_sigma = 6.0e-16;    // island total capacitance, F
  double c_m = 3.0e-17;        // inter-island mutual capacitance, F
  double c_g = 1.0e-17;        // gate capacitance, F
  double v_g = 0.0240326495;   // gate voltage, V
  double e_j_ghz = 4.0;        // Josephson energy, GHz
  double squid_area = 5.0e-11;           // SQUID loop area, m^2
  double qubit_distance = 1.0e-6;        // qubit-to-resonator distance, m
  double resonator_length = 1.0e-2;      // m
  double inductance_per_length = 4.1e-7; // H/m
  double capacitance_per_length = 1.6e-10;  // F/m
  int mode_number = 1;
  double flux_quantum = 2.067833848e-15;  // Wb, h/2e by default

  void validate() const;  // throws std::domain_error on unphysical geometry
};

struct DerivedModel {
  ModelParams model;
  double charging_energy_ghz = 0.0;  // E_c
  double gate_charge = 0.0;          // n_g
  double omega_rad_per_s = 0.0;      // resonator mode, rad/s
};

DerivedModel device_to_model(const DeviceParams& dev, int n_max = 40);

}  // namespace dressed
