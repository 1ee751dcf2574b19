#include "dressed/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "dressed/numeric.hpp"

namespace dressed {

namespace {

// N -+ J computed without cancellation for either sign of J, using
// N^2 - J^2 = (2n+1) g^2.
struct SplitRabi {
  double sum;   // N + J
  double diff;  // N - J
};

SplitRabi split_rabi(double j, double g, int n) {
  const double nn = dressed_rabi_frequency(j, g, n);
  if (nn == 0.0) return {0.0, 0.0};
  const double gg = (2.0 * n + 1.0) * g * g;
  if (j >= 0.0) {
    const double sum = nn + j;
    return {sum, gg / sum};
  }
  const double diff = nn - j;
  return {gg / diff, diff};
}

// Deterministic sign convention for numerically solved block eigenvectors:
// first non-negligible component positive.
void fix_sign(std::vector<double>& v) {
  for (double c : v) {
    if (std::abs(c) > 1e-12) {
      if (c < 0.0)
        for (double& x : v) x = -x;
      return;
    }
  }
}

DressedState make_state(Sector sector, int block, Branch branch, double energy,
                        std::vector<std::pair<BasisKet, double>> amps) {
  DressedState s;
  s.sector = sector;
  s.block = block;
  s.branch = branch;
  s.energy = energy;
  s.amplitudes = std::move(amps);
  return s;
}

double level_over_j(double g_over_j, int n, Branch b, double xi) {
  switch (b) {
    case Branch::Singlet: return n * xi - 1.0;
    case Branch::Zero: return n == 0 ? 1.0 - xi : n * xi + 1.0;
    case Branch::Plus:
      return n * xi + dressed_rabi_frequency(1.0, g_over_j, n);
    case Branch::Minus:
      return n * xi - dressed_rabi_frequency(1.0, g_over_j, n);
  }
  throw std::invalid_argument("unknown branch");
}

}  // namespace

std::string branch_label(Branch b) {
  switch (b) {
    case Branch::Plus: return "+";
    case Branch::Minus: return "-";
    case Branch::Zero: return "0";
    case Branch::Singlet: return "s";
  }
  throw std::invalid_argument("unknown branch");
}

double dressed_rabi_frequency(double j, double g, int n) {
  if (n < 0) throw std::invalid_argument("level index must be nonnegative");
  return std::hypot(j, std::sqrt(2.0 * n + 1.0) * g);
}

double mixing_angle(double j, double g) {
  if (g < 0.0) throw std::invalid_argument("coupling g must be nonnegative");
  return std::atan2(g, j);
}

double singlet_level(const ModelParams& params, int n) {
  params.validate();
  if (n < 0 || n > params.n_max)
    throw std::out_of_range("singlet level outside the Fock truncation");
  return n * params.omega - params.J;
}

DressedState singlet_state(const ModelParams& params, int n) {
  return make_state(Sector::Singlet, n, Branch::Singlet,
                    singlet_level(params, n),
                    {{BasisKet{n, Spin::PsiMinus}, 1.0}});
}

double w0_level(const ModelParams& params) {
  params.validate();
  return params.J - params.omega_a;
}

DressedState w0_state(const ModelParams& params) {
  return make_state(Sector::Triplet, 0, Branch::Zero, w0_level(params),
                    {{BasisKet{0, Spin::DownDown}, 1.0}});
}

W1System w1_eigensystem(const ModelParams& params) {
  params.validate();
  const double j = params.J;
  const double g = params.g;
  W1System out;
  out.theta = mixing_angle(j, g);

  const BasisKet mid{0, Spin::PsiPlus};
  const BasisKet top{1, Spin::DownDown};

  if (params.resonant()) {
    const double r = std::hypot(j, g);
    double c2 = 1.0, s2 = 0.0;  // cos(theta/2), sin(theta/2)
    if (r > 0.0) {
      const SplitRabi sr = split_rabi(j, g, 0);
      c2 = std::sqrt(sr.sum / (2.0 * r));
      s2 = std::sqrt(sr.diff / (2.0 * r));
    }
    out.minus = make_state(Sector::Triplet, 0, Branch::Minus, -r,
                           {{mid, c2}, {top, -s2}});
    out.plus = make_state(Sector::Triplet, 0, Branch::Plus, r,
                          {{mid, s2}, {top, c2}});
    return out;
  }

  // off resonance: diagonalize the block directly
  Matrix block(2, 2);
  block(0, 0) = -j;
  block(0, 1) = g;
  block(1, 0) = g;
  block(1, 1) = j - params.omega_a + params.omega;
  const EigenDecomposition eig = eigensolve_symmetric(block);
  std::vector<double> lo{eig.eigenvectors(0, 0), eig.eigenvectors(1, 0)};
  std::vector<double> hi{eig.eigenvectors(0, 1), eig.eigenvectors(1, 1)};
  fix_sign(lo);
  fix_sign(hi);
  out.minus = make_state(Sector::Triplet, 0, Branch::Minus, eig.eigenvalues[0],
                         {{mid, lo[0]}, {top, lo[1]}});
  out.plus = make_state(Sector::Triplet, 0, Branch::Plus, eig.eigenvalues[1],
                        {{mid, hi[0]}, {top, hi[1]}});
  return out;
}

WnSystem wn_eigensystem(const ModelParams& params, int n) {
  params.validate();
  if (n < 1) throw std::invalid_argument("three-state blocks need n >= 1");
  if (n + 1 > params.n_max)
    throw std::out_of_range("block is truncated by the Fock cutoff");

  const BasisKet low{n - 1, Spin::UpUp};
  const BasisKet mid{n, Spin::PsiPlus};
  const BasisKet top{n + 1, Spin::DownDown};
  const double j = params.J;
  const double g = params.g;
  WnSystem out;

  if (params.resonant()) {
    const double w = params.omega;
    const double nn = dressed_rabi_frequency(j, g, n);
    const double weight = 2.0 * n + 1.0;
    const double a0_low = std::sqrt((n + 1.0) / weight);
    const double a0_top = -std::sqrt(n / weight);
    out.zero = make_state(Sector::Triplet, n, Branch::Zero, n * w + j,
                          {{low, a0_low}, {mid, 0.0}, {top, a0_top}});
    if (nn == 0.0) {
      // fully degenerate block (J = 0, g = 0): use the g->0 limiting vectors
      out.plus = make_state(Sector::Triplet, n, Branch::Plus, n * w,
                            {{low, std::sqrt(n / weight)},
                             {mid, 0.0},
                             {top, std::sqrt((n + 1.0) / weight)}});
      out.minus = make_state(Sector::Triplet, n, Branch::Minus, n * w,
                             {{low, 0.0}, {mid, -1.0}, {top, 0.0}});
      return out;
    }
    const SplitRabi sr = split_rabi(j, g, n);
    const double two_nn = 2.0 * nn;
    out.plus = make_state(
        Sector::Triplet, n, Branch::Plus, n * w + nn,
        {{low, std::sqrt(n * sr.sum / (two_nn * weight))},
         {mid, std::sqrt(sr.diff / two_nn)},
         {top, std::sqrt((n + 1.0) * sr.sum / (two_nn * weight))}});
    out.minus = make_state(
        Sector::Triplet, n, Branch::Minus, n * w - nn,
        {{low, std::sqrt(n * sr.diff / (two_nn * weight))},
         {mid, -std::sqrt(sr.sum / two_nn)},
         {top, std::sqrt((n + 1.0) * sr.diff / (two_nn * weight))}});
    return out;
  }

  // off resonance: diagonalize the block directly
  Matrix block(3, 3);
  block(0, 0) = (n - 1) * params.omega + params.omega_a + j;
  block(1, 1) = n * params.omega - j;
  block(2, 2) = (n + 1) * params.omega + j - params.omega_a;
  block(0, 1) = block(1, 0) = g * std::sqrt(static_cast<double>(n));
  block(1, 2) = block(2, 1) = g * std::sqrt(n + 1.0);
  const EigenDecomposition eig = eigensolve_symmetric(block);
  const Branch branches[3] = {Branch::Minus, Branch::Zero, Branch::Plus};
  DressedState* slots[3] = {&out.minus, &out.zero, &out.plus};
  for (int k = 0; k < 3; ++k) {
    std::vector<double> v{eig.eigenvectors(0, k), eig.eigenvectors(1, k),
                          eig.eigenvectors(2, k)};
    fix_sign(v);
    *slots[k] = make_state(Sector::Triplet, n, branches[k], eig.eigenvalues[k],
                           {{low, v[0]}, {mid, v[1]}, {top, v[2]}});
  }
  return out;
}

double perturbative_shift(const ModelParams& params, int n) {
  params.validate();
  if (n < 0) throw std::invalid_argument("level index must be nonnegative");
  if (params.J == 0.0)
    throw std::domain_error("perturbative shift is singular at J = 0");
  return (2.0 * n + 1.0) * params.g * params.g / (2.0 * params.J);
}

PerturbativeLevels perturbative_levels(const ModelParams& params, int n) {
  const double shifted = params.J + perturbative_shift(params, n);
  return {n * params.omega - shifted, n * params.omega + shifted};
}

double xi0(const ModelParams& params) {
  params.validate();
  if (params.J == 0.0) throw std::domain_error("xi0 is singular at J = 0");
  const double ratio = params.g / params.J;
  return ratio * ratio;
}

double xi1(const ModelParams& params) {
  return 1.0 + std::sqrt(1.0 + xi0(params));
}

std::string region_name(Region r) {
  switch (r) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
  }
  throw std::invalid_argument("unknown region");
}

RegionInfo classify_region(double xi, const ModelParams& params) {
  params.validate();
  if (!(xi > 0.0)) throw std::invalid_argument("xi must be positive");
  if (params.J <= 0.0)
    throw std::domain_error("region classification needs J > 0");

  RegionInfo info;
  info.xi0_value = xi0(params);
  info.xi1_value = xi1(params);

  // resonant line through parameter space: w = w_a = xi J
  ModelParams p = params;
  p.omega = xi * params.J;
  p.omega_a = p.omega;

  // E_n(-) across every untruncated three-or-two-state block
  bool decreasing = true;
  double prev = -std::hypot(p.J, p.g);  // E_0(-)
  for (int n = 1; n + 1 <= p.n_max; ++n) {
    const double e = n * p.omega - dressed_rabi_frequency(p.J, p.g, n);
    if (!(e < prev)) decreasing = false;
    prev = e;
  }
  info.minus_ladder_strictly_decreasing = decreasing;

  if (xi <= info.xi0_value) {
    info.region = Region::I;
  } else if (xi <= info.xi1_value) {
    info.region = Region::II;
    info.ground = w1_eigensystem(p).minus;
  } else {
    info.region = Region::III;
    info.ground = w0_state(p);
  }
  return info;
}

std::string hq_ground_label(HqGround g) {
  switch (g) {
    case HqGround::UpUp: return "uu";
    case HqGround::PsiPair: return "psi_pair";
    case HqGround::DownDown: return "dd";
  }
  throw std::invalid_argument("unknown ground label");
}

HqPhase hq_phase(double xi_a) {
  if (!std::isfinite(xi_a)) throw std::invalid_argument("xi_a must be finite");
  HqPhase out;
  // level energies over J: uu -> 1 + xi_a, psi+- -> -1, dd -> 1 - xi_a
  if (xi_a < -2.0) {
    out.ground = HqGround::UpUp;
    out.energy_over_j = 1.0 + xi_a;
  } else if (xi_a > 2.0) {
    out.ground = HqGround::DownDown;
    out.energy_over_j = 1.0 - xi_a;
  } else {
    out.ground = HqGround::PsiPair;
    out.energy_over_j = -1.0;
    out.boundary = (xi_a == -2.0 || xi_a == 2.0);
  }
  return out;
}

CrossingPoint crossing_point(double g_over_j, int n) {
  if (n < 0) throw std::invalid_argument("level index must be nonnegative");
  if (!(g_over_j >= 0.0))
    throw std::invalid_argument("g/J must be nonnegative");

  const double nu_n = dressed_rabi_frequency(1.0, g_over_j, n);
  const double nu_next = dressed_rabi_frequency(1.0, g_over_j, n + 1);
  const double closed = nu_next - nu_n;

  // cross-check by bisection on f(xi) = [E_{n+1}(-) - E_n(-)]/J
  auto gap = [&](double xi) {
    return ((n + 1) * xi - nu_next) - (n * xi - nu_n);
  };
  double lo = 0.0;
  double hi = closed + 1.0;
  if (gap(lo) > 0.0 || gap(hi) < 0.0)
    throw std::logic_error("crossing bracket failed");
  double root = 0.0;
  if (gap(lo) == 0.0) {
    root = lo;  // g = 0: every crossing collapses to xi = 0
  } else {
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (gap(mid) >= 0.0)
        hi = mid;
      else
        lo = mid;
    }
    root = 0.5 * (lo + hi);
  }
  if (std::abs(root - closed) > 1e-10)
    throw std::logic_error("closed-form crossing disagrees with bisection");

  CrossingPoint out;
  out.n = n;
  out.xi_star = closed;
  out.energy_over_j = n * closed - nu_n;
  return out;
}

SpectrumTable spectrum_sweep(double g_over_j, const std::vector<double>& xi_grid,
                             int max_n, int threads) {
  if (xi_grid.empty()) throw std::invalid_argument("xi grid must be nonempty");
  if (!(g_over_j >= 0.0)) throw std::invalid_argument("g/J must be nonnegative");
  if (max_n < 0) throw std::invalid_argument("level range must be nonnegative");
  if (threads < 1) throw std::invalid_argument("thread count must be positive");
  double prev = 0.0;
  for (double xi : xi_grid) {
    if (!(xi > prev))
      throw std::invalid_argument("xi grid must be strictly increasing and positive");
    prev = xi;
  }

  SpectrumTable table;
  table.g_over_j = g_over_j;
  table.resonant = true;
  table.xi_grid = xi_grid;
  const Branch order[4] = {Branch::Plus, Branch::Minus, Branch::Zero,
                           Branch::Singlet};
  for (int n = 0; n <= max_n; ++n)
    for (Branch b : order)
      table.rows.push_back(
          SpectrumRow{n, b, std::vector<double>(xi_grid.size(), 0.0)});

  auto fill_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (SpectrumRow& row : table.rows)
        row.energies_over_j[i] =
            level_over_j(g_over_j, row.n, row.branch, xi_grid[i]);
  };

  const int workers =
      std::min<int>(threads, static_cast<int>(xi_grid.size()));
  if (workers <= 1) {
    fill_range(0, xi_grid.size());
  } else {
    // static index partition: identical results for any worker count
    std::vector<std::thread> pool;
    const std::size_t chunk = (xi_grid.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(xi_grid.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(fill_range, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }
  return table;
}

std::vector<DressedState> dressed_levels(const ModelParams& params, int max_n) {
  params.validate();
  if (max_n < 0) throw std::invalid_argument("level range must be nonnegative");
  if (max_n + 1 > params.n_max)
    throw std::out_of_range("level range reaches truncated blocks");

  std::vector<DressedState> levels;
  const W1System w1 = w1_eigensystem(params);
  levels.push_back(w1.plus);
  levels.push_back(w1.minus);
  levels.push_back(w0_state(params));
  levels.push_back(singlet_state(params, 0));
  for (int n = 1; n <= max_n; ++n) {
    const WnSystem wn = wn_eigensystem(params, n);
    levels.push_back(wn.plus);
    levels.push_back(wn.minus);
    levels.push_back(wn.zero);
    levels.push_back(singlet_state(params, n));
  }
  return levels;
}

}  // namespace dressed
