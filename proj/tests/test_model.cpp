#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "dressed/model.hpp"

using namespace dressed;

namespace {

ModelParams default_params() {
  ModelParams p;  // J=4, g=2, omega=omega_a=4
  p.n_max = 6;
  return p;
}

// Frobenius norm of H*S2 - S2*H
double commutator_norm(const Matrix& h, const Matrix& s2) {
  return (h * s2 - s2 * h).frobenius_norm();
}

}  // namespace

TEST_CASE("basis enumeration and index round-trip") {
  auto tiny = build_basis(0);
  CHECK(tiny.size() == 4);
  for (const auto& ket : tiny) CHECK(ket.photon == 0);

  auto basis = build_basis(2);
  CHECK(basis.size() == 12);
  CHECK(ket_index(BasisKet{1, Spin::PsiPlus}) == 4 * 1 + 1);

  auto big = build_basis(40);
  CHECK(big.size() == 164);
  for (int i = 0; i < static_cast<int>(big.size()); ++i) {
    CHECK(ket_index(big[i]) == i);
    CHECK(ket_at(i) == big[i]);
  }
  CHECK_THROWS_AS(build_basis(-1), std::invalid_argument);
  CHECK_THROWS_AS(ket_index(BasisKet{-1, Spin::UpUp}), std::invalid_argument);
}

TEST_CASE("qubit-pair energies per spin label") {
  const double j = 4.0, wa = 4.0;
  CHECK(spin_energy(Spin::UpUp, wa, j) == 8.0);
  CHECK(spin_energy(Spin::PsiPlus, wa, j) == -4.0);
  CHECK(spin_energy(Spin::PsiMinus, wa, j) == -4.0);
  CHECK(spin_energy(Spin::DownDown, wa, j) == 0.0);
}

TEST_CASE("parameter validation") {
  ModelParams p = default_params();
  CHECK_NOTHROW(p.validate());
  CHECK(p.resonant());
  CHECK(p.dimension() == 28);

  p.g = -1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = default_params();
  p.omega = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = default_params();
  p.n_max = 1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = default_params();
  p.J = std::nan("");
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("hamiltonian structure in the coupled basis") {
  ModelParams p = default_params();
  Matrix h = hamiltonian_matrix(p);
  CHECK(h.rows() == p.dimension());
  CHECK(h.max_asymmetry() == 0.0);

  // diagonal: n w + spin energy
  for (int n = 0; n <= p.n_max; ++n) {
    CHECK(h(4 * n + 0, 4 * n + 0) == n * 4.0 + 8.0);
    CHECK(h(4 * n + 1, 4 * n + 1) == n * 4.0 - 4.0);
    CHECK(h(4 * n + 2, 4 * n + 2) == n * 4.0 - 4.0);
    CHECK(h(4 * n + 3, 4 * n + 3) == n * 4.0 + 0.0);
  }
  // couplings g sqrt(n) and g sqrt(n+1)
  const int mid2 = ket_index(BasisKet{2, Spin::PsiPlus});
  CHECK(h(mid2, ket_index(BasisKet{1, Spin::UpUp})) ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(h(mid2, ket_index(BasisKet{3, Spin::DownDown})) ==
        doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-15));

  // the singlet chain is strictly diagonal
  for (int n = 0; n <= p.n_max; ++n) {
    const int i = ket_index(BasisKet{n, Spin::PsiMinus});
    for (int j = 0; j < h.cols(); ++j)
      if (j != i) CHECK(h(i, j) == 0.0);
  }
}

TEST_CASE("decoupled limit is diagonal") {
  ModelParams p = default_params();
  p.g = 0.0;
  Matrix h = hamiltonian_matrix(p);
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j)
      if (i != j) CHECK(h(i, j) == 0.0);
}

TEST_CASE("two-state block matches the hand-evaluated matrix") {
  ModelParams p;
  p.J = 1.0;
  p.g = 1.0;
  p.omega = 1.0;
  p.omega_a = 1.0;
  p.n_max = 3;
  Matrix h = hamiltonian_matrix(p);
  const int a = ket_index(BasisKet{0, Spin::PsiPlus});
  const int b = ket_index(BasisKet{1, Spin::DownDown});
  CHECK(h(a, a) == -1.0);
  CHECK(h(a, b) == 1.0);
  CHECK(h(b, a) == 1.0);
  CHECK(h(b, b) == 1.0);
}

TEST_CASE("block partition covers the space exactly once") {
  const int n_max = 6;
  BlockPartition part = block_partition(n_max);
  CHECK(part.singlet_chain.size() == n_max + 1);

  std::set<int> seen(part.singlet_chain.begin(), part.singlet_chain.end());
  CHECK(seen.size() == part.singlet_chain.size());
  int truncated_count = 0;
  for (const TripletBlock& b : part.triplet_blocks) {
    for (int idx : b.indices) {
      CHECK(seen.insert(idx).second);  // disjoint
      CHECK(ket_at(idx).spin != Spin::PsiMinus);
    }
    if (b.truncated) ++truncated_count;
  }
  CHECK(static_cast<int>(seen.size()) == 4 * (n_max + 1));
  CHECK(truncated_count == 2);

  // shape of the listed blocks
  CHECK(part.triplet_blocks[0].indices ==
        std::vector<int>{ket_index(BasisKet{0, Spin::DownDown})});
  CHECK(part.triplet_blocks[1].indices ==
        std::vector<int>{ket_index(BasisKet{0, Spin::PsiPlus}),
                         ket_index(BasisKet{1, Spin::DownDown})});
  CHECK(part.triplet_blocks[2].indices ==
        std::vector<int>{ket_index(BasisKet{0, Spin::UpUp}),
                         ket_index(BasisKet{1, Spin::PsiPlus}),
                         ket_index(BasisKet{2, Spin::DownDown})});
  // the last full block tops out at photon n_max
  const TripletBlock& tail = part.triplet_blocks[n_max];
  CHECK(!tail.truncated);
  CHECK(ket_at(tail.indices.back()).photon == n_max);
  CHECK_THROWS_AS(block_partition(1), std::invalid_argument);
}

TEST_CASE("no matrix elements between different blocks") {
  ModelParams p = default_params();
  Matrix h = hamiltonian_matrix(p);
  BlockPartition part = block_partition(p.n_max);

  std::vector<int> group_of(p.dimension(), -1);
  int gid = 0;
  for (int idx : part.singlet_chain) group_of[idx] = gid++;
  for (const TripletBlock& b : part.triplet_blocks) {
    for (int idx : b.indices) group_of[idx] = gid;
    ++gid;
  }
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j)
      if (group_of[i] != group_of[j]) CHECK(std::abs(h(i, j)) <= 1e-14);
}

TEST_CASE("total spin commutes with the hamiltonian") {
  ModelParams p = default_params();
  Matrix h = hamiltonian_matrix(p);
  Matrix s2 = total_spin_squared(p.n_max);
  for (int i = 0; i < s2.rows(); ++i) {
    const double expected = ket_at(i).spin == Spin::PsiMinus ? 0.0 : 2.0;
    CHECK(s2(i, i) == expected);
  }
  CHECK(commutator_norm(h, s2) <= 1e-12);
}

TEST_CASE("coupled and product assemblies agree through the basis change") {
  for (ModelParams p : {default_params(), ModelParams{3.7, 2.1, 1.3, 0.7, 5}}) {
    Matrix c = spin_basis_change(p.n_max);
    Matrix gram = c.transposed() * c;
    CHECK((gram - Matrix::identity(c.rows())).max_abs() <= 1e-15);

    Matrix coupled = hamiltonian_matrix(p);
    Matrix conjugated = c * hamiltonian_matrix_product(p) * c.transposed();
    CHECK((conjugated - coupled).max_abs() <=
          1e-13 * (1.0 + coupled.max_abs()));
  }
}

TEST_CASE("device mapping reproduces the frozen reference values") {
  DeviceParams dev;  // defaults
  DerivedModel derived = device_to_model(dev, 10);

  // independently evaluated from the mapping formulas
  CHECK(derived.omega_rad_per_s == doctest::Approx(38788050557.0945).epsilon(1e-12));
  CHECK(derived.model.omega == doctest::Approx(6.173309979059934).epsilon(1e-12));
  CHECK(derived.model.J == doctest::Approx(1.6182313554435357).epsilon(1e-12));
  CHECK(derived.charging_energy_ghz ==
        doctest::Approx(129.45850843548283).epsilon(1e-12));
  CHECK(derived.gate_charge == doctest::Approx(0.7499999996879246).epsilon(1e-12));
  CHECK(derived.model.omega_a ==
        doctest::Approx(64.72925413693979).epsilon(1e-12));
  CHECK(derived.model.g ==
        doctest::Approx(0.0012525450100196371).epsilon(1e-12));
  CHECK(derived.model.n_max == 10);
}

TEST_CASE("device mapping edge cases") {
  DeviceParams dev;
  dev.c_m = 0.0;  // no coupling capacitor
  CHECK(device_to_model(dev).model.J == 0.0);

  // charge degeneracy point n_g = 1/2
  dev = DeviceParams{};
  dev.v_g = 1.602176634e-19 / dev.c_g;
  CHECK(device_to_model(dev).model.omega_a ==
        doctest::Approx(0.0).epsilon(1e-9));

  // homogeneity: doubling both capacitances halves J
  DeviceParams big = DeviceParams{};
  big.c_sigma *= 2.0;
  big.c_m *= 2.0;
  CHECK(device_to_model(big).model.J ==
        doctest::Approx(0.5 * device_to_model(DeviceParams{}).model.J)
            .epsilon(1e-12));

  dev = DeviceParams{};
  dev.c_m = dev.c_sigma;  // divergent J
  CHECK_THROWS_AS(device_to_model(dev), std::domain_error);
  dev = DeviceParams{};
  dev.resonator_length = 0.0;
  CHECK_THROWS_AS(device_to_model(dev), std::domain_error);
  dev = DeviceParams{};
  dev.mode_number = 0;
  CHECK_THROWS_AS(device_to_model(dev), std::domain_error);
}
