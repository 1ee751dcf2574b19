#pragma once

#include <complex>
#include <vector>

#include "dressed/linalg.hpp"
#include "dressed/model.hpp"

// Brute-force numerics: a self-contained cyclic Jacobi eigensolver used as
// the independent check on every closed-form result, plus exact time
// evolution by spectral decomposition.

namespace dressed {

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // orthonormal columns, same order
  int sweeps = 0;
};

// Cyclic Jacobi diagonalization of a real symmetric matrix. Deterministic
// row-cyclic sweep order; converges when the off-diagonal Frobenius norm
// drops below tol * ||A||_F. Throws std::invalid_argument for non-square or
// asymmetric input and std::runtime_error if max_sweeps is exhausted.
//
// Rotations only ever touch pairs with a nonzero off-diagonal entry, so
// exact zero blocks are preserved exactly: eigenvectors of a block-diagonal
// matrix keep their block support even across degeneracies between blocks.
EigenDecomposition eigensolve_symmetric(Matrix a, double tol = 1e-12,
                                        int max_sweeps = 100);

enum class BlockKind { Singlet, Triplet };

struct LevelLabel {
  BlockKind kind = BlockKind::Triplet;
  int block_index = 0;  // photon number n for singlet levels, k of W(k) else
  bool truncated = false;
};

struct OracleSpectrum {
  EigenDecomposition eig;
  BlockPartition partition;
  std::vector<LevelLabel> labels;  // one per eigenpair
};

// Diagonalizes the full truncated Hamiltonian and labels every eigenpair by
// the invariant block carrying its support.
OracleSpectrum oracle_spectrum(const ModelParams& params, double tol = 1e-12);

struct QuantumState {
  std::vector<std::complex<double>> amplitudes;  // over the coupled basis

  double norm() const;
  void normalize();  // throws std::domain_error on the zero vector
};

// Total weight on the |n,psi-> chain; conserved under the dynamics.
double singlet_population(const QuantumState& state);

// Exact propagator exp(-i H t) built once from the spectral decomposition.
class Propagator {
 public:
  explicit Propagator(const ModelParams& params, double tol = 1e-12);

  // Requires a normalized state of matching dimension and t >= 0.
  // t is in units of 1/GHz; the phase of eigenpair k advances as E_k * t.
  QuantumState evolve(const QuantumState& initial, double t) const;

  const EigenDecomposition& decomposition() const { return eig_; }

 private:
  EigenDecomposition eig_;
};

// One-shot convenience wrapper around Propagator.
QuantumState evolve(const QuantumState& initial, const ModelParams& params,
                    double t);

}  // namespace dressed
