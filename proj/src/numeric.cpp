#include "dressed/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dressed {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) sum += 2.0 * a(i, j) * a(i, j);
  return std::sqrt(sum);
}

}  // namespace

EigenDecomposition eigensolve_symmetric(Matrix a, double tol, int max_sweeps) {
  if (!a.square()) throw std::invalid_argument("eigensolver needs a square matrix");
  const int n = a.rows();
  const double scale = a.frobenius_norm();
  if (a.max_asymmetry() > 1e-12 * (1.0 + scale))
    throw std::invalid_argument("eigensolver needs a symmetric matrix");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  EigenDecomposition out;
  out.eigenvectors = Matrix::identity(n);
  Matrix& v = out.eigenvectors;

  int sweep = 0;
  if (scale > 0.0) {
    for (sweep = 1; sweep <= max_sweeps + 1; ++sweep) {
      if (off_diagonal_norm(a) <= tol * scale) break;
      if (sweep > max_sweeps)
        throw std::runtime_error("Jacobi sweeps exhausted without convergence");
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const double apq = a(p, q);
          if (apq == 0.0) continue;
          // classic two-sided rotation choosing the smaller angle
          const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
          double t;
          if (std::abs(theta) > 1e150) {
            t = 0.5 / theta;  // avoid overflow in theta^2
          } else {
            t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            if (theta < 0.0) t = -t;
          }
          const double c = 1.0 / std::sqrt(t * t + 1.0);
          const double s = t * c;
          const double tau = s / (1.0 + c);

          a(p, p) -= t * apq;
          a(q, q) += t * apq;
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          for (int r = 0; r < n; ++r) {
            if (r == p || r == q) continue;
            const double arp = a(r, p);
            const double arq = a(r, q);
            a(r, p) = arp - s * (arq + tau * arp);
            a(p, r) = a(r, p);
            a(r, q) = arq + s * (arp - tau * arq);
            a(q, r) = a(r, q);
          }
          for (int r = 0; r < n; ++r) {
            const double vrp = v(r, p);
            const double vrq = v(r, q);
            v(r, p) = vrp - s * (vrq + tau * vrp);
            v(r, q) = vrq + s * (vrp - tau * vrq);
          }
        }
      }
    }
  }
  out.sweeps = std::max(0, sweep - 1);

  // sort ascending, ties kept in sweep order for determinism
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) < a(j, j); });

  out.eigenvalues.resize(n);
  Matrix sorted(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    for (int r = 0; r < n; ++r) sorted(r, k) = v(r, order[k]);
  }
  out.eigenvectors = std::move(sorted);
  return out;
}

OracleSpectrum oracle_spectrum(const ModelParams& params, double tol) {
  OracleSpectrum out;
  out.eig = eigensolve_symmetric(hamiltonian_matrix(params), tol);
  out.partition = block_partition(params.n_max);

  // Every eigenvector keeps the support of exactly one invariant block (the
  // Hamiltonian carries exact zeros between blocks, which Jacobi never
  // rotates), so the dominant block identifies the level.
  const int dim = params.dimension();
  struct Group {
    LevelLabel label;
    const std::vector<int>* indices;
    std::vector<int> singlet_single;  // storage when the group is one ket
  };
  std::vector<Group> groups;
  for (std::size_t n = 0; n < out.partition.singlet_chain.size(); ++n) {
    Group g;
    g.label = LevelLabel{BlockKind::Singlet, static_cast<int>(n), false};
    g.singlet_single = {out.partition.singlet_chain[n]};
    g.indices = nullptr;
    groups.push_back(std::move(g));
  }
  for (const TripletBlock& b : out.partition.triplet_blocks) {
    Group g;
    g.label = LevelLabel{BlockKind::Triplet, b.block_index, b.truncated};
    g.indices = &b.indices;
    groups.push_back(std::move(g));
  }

  out.labels.resize(dim);
  for (int k = 0; k < dim; ++k) {
    double best = -1.0;
    const Group* best_group = nullptr;
    for (const Group& g : groups) {
      const std::vector<int>& idx = g.indices ? *g.indices : g.singlet_single;
      double mass = 0.0;
      for (int i : idx) {
        const double c = out.eig.eigenvectors(i, k);
        mass += c * c;
      }
      if (mass > best) {
        best = mass;
        best_group = &g;
      }
    }
    if (!best_group || best < 1.0 - 1e-8)
      throw std::runtime_error("eigenvector not confined to a single invariant block");
    out.labels[k] = best_group->label;
  }
  return out;
}

double QuantumState::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

void QuantumState::normalize() {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize the zero state");
  for (auto& a : amplitudes) a /= n;
}

double singlet_population(const QuantumState& state) {
  if (state.amplitudes.size() % kSpinStates != 0)
    throw std::invalid_argument("state dimension is not a whole Fock ladder");
  double sum = 0.0;
  for (std::size_t i = static_cast<std::size_t>(Spin::PsiMinus);
       i < state.amplitudes.size(); i += kSpinStates)
    sum += std::norm(state.amplitudes[i]);
  return sum;
}

Propagator::Propagator(const ModelParams& params, double tol)
    : eig_(eigensolve_symmetric(hamiltonian_matrix(params), tol)) {}

QuantumState Propagator::evolve(const QuantumState& initial, double t) const {
  const int dim = static_cast<int>(eig_.eigenvalues.size());
  if (static_cast<int>(initial.amplitudes.size()) != dim)
    throw std::invalid_argument("state dimension does not match the model");
  if (std::abs(initial.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("state must be normalized before evolving");
  if (!(t >= 0.0)) throw std::invalid_argument("evolution time must be nonnegative");

  const Matrix& v = eig_.eigenvectors;
  std::vector<std::complex<double>> coeffs(dim, 0.0);
  for (int k = 0; k < dim; ++k) {
    std::complex<double> c = 0.0;
    for (int i = 0; i < dim; ++i) c += v(i, k) * initial.amplitudes[i];
    // energies are in GHz and t in 1/GHz, so E*t is already the phase angle
    const double phase = -eig_.eigenvalues[k] * t;
    coeffs[k] = c * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  QuantumState out;
  out.amplitudes.assign(dim, 0.0);
  for (int i = 0; i < dim; ++i) {
    std::complex<double> a = 0.0;
    for (int k = 0; k < dim; ++k) a += v(i, k) * coeffs[k];
    out.amplitudes[i] = a;
  }
  return out;
}

QuantumState evolve(const QuantumState& initial, const ModelParams& params,
                    double t) {
  return Propagator(params).evolve(initial, t);
}

}  // namespace dressed
