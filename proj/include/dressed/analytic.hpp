#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dressed/model.hpp"

// Closed-form dressed spectrum per invariant block, the perturbative limit,
// the criticality structure (xi0, xi1, regions, qubit-pair phase diagram),
// level crossings, and the resonant parameter sweeps.

namespace dressed {

// Level labels: each dressed level is (n, branch) with branch
//   s : singlet chain |n,psi->          E = n w - J
//   0 : middle triplet level            E = J - w_a (n=0), n w + J (n>=1)
//   + : upper dressed level             E = n w + N_n at resonance
//   - : lower dressed level             E = n w - N_n at resonance
enum class Branch { Plus, Minus, Zero, Singlet };
enum class Sector { Singlet, Triplet };

std::string branch_label(Branch b);  // "+", "-", "0", "s"

struct DressedState {
  Sector sector = Sector::Triplet;
  int block = 0;  // the level index n
  Branch branch = Branch::Zero;
  double energy = 0.0;  // GHz
  std::vector<std::pair<BasisKet, double>> amplitudes;
};

// N_n = sqrt(J^2 + (2n+1) g^2), the dressed Rabi-type frequency of the block
// mixing |n-1,uu>, |n,psi+>, |n+1,dd>.
double dressed_rabi_frequency(double j, double g, int n);

// Mixing angle with tan(theta) = g/J, theta in [0, pi).
double mixing_angle(double j, double g);

// --- per-block eigensystems -------------------------------------------------

double singlet_level(const ModelParams& params, int n);        // n w - J
DressedState singlet_state(const ModelParams& params, int n);  // exactly |n,psi->

double w0_level(const ModelParams& params);  // J - w_a
DressedState w0_state(const ModelParams& params);  // exactly |0,dd>

// Two-state block over {|0,psi+>, |1,dd>}. At resonance the closed form
// gives energies -+sqrt(J^2+g^2) with eigenvectors fixed by the mixing
// angle so that each state satisfies the eigenvalue equation; off resonance
// the 2x2 block is diagonalized directly.
struct W1System {
  DressedState minus, plus;
  double theta = 0.0;
};
W1System w1_eigensystem(const ModelParams& params);

// Three-state block over {|n-1,uu>, |n,psi+>, |n+1,dd>}, n >= 1. Resonant
// closed form: E = n w + J and n w -+ N_n; off resonance the 3x3 block is
// diagonalized directly.
struct WnSystem {
  DressedState minus, zero, plus;
};
WnSystem wn_eigensystem(const ModelParams& params, int n);

// Second-order level shift delta(n) = (2n+1) g^2 / (2J), the Taylor
// coefficient of N_n(g) - J. (A common printed variant halves this
// coefficient; that variant leaves an O(g^2) residual and is not used.)
double perturbative_shift(const ModelParams& params, int n);

struct PerturbativeLevels {
  double lower = 0.0;  // n w - (J + delta)
  double upper = 0.0;  // n w + (J + delta)
};
PerturbativeLevels perturbative_levels(const ModelParams& params, int n);

// --- criticality ------------------------------------------------------------

double xi0(const ModelParams& params);  // g^2 / J^2
double xi1(const ModelParams& params);  // 1 + sqrt(1 + xi0)

enum class Region { I, II, III };
std::string region_name(Region r);

struct RegionInfo {
  Region region = Region::I;
  // Ground state for regions II and III; region I has none (the minus
  // ladder is unbounded below as n grows).
  std::optional<DressedState> ground;
  // Evidence for region I: E_n(-) strictly decreasing across every
  // untruncated block examined (n = 0 .. n_max-1).
  bool minus_ladder_strictly_decreasing = false;
  double xi0_value = 0.0;
  double xi1_value = 0.0;
};

// Classifies xi = w/J on the resonant line w = w_a = xi J. Requires xi > 0
// and J > 0.
RegionInfo classify_region(double xi, const ModelParams& params);

// Ground state of the bare qubit pair as a function of xi_a = w_a/J:
// uu below -2, the degenerate psi+/psi- pair between -2 and 2, dd above 2.
enum class HqGround { UpUp, PsiPair, DownDown };
std::string hq_ground_label(HqGround g);

struct HqPhase {
  HqGround ground = HqGround::PsiPair;
  bool boundary = false;  // exactly xi_a = -2 or +2
  double energy_over_j = 0.0;
};
HqPhase hq_phase(double xi_a);

// Crossing of E_n(-) and E_{n+1}(-) along the resonant line, in units of J:
// xi*_n = N_{n+1}/J - N_n/J. The closed form is cross-checked internally by
// bisection on the energy difference.
struct CrossingPoint {
  int n = 0;
  double xi_star = 0.0;
  double energy_over_j = 0.0;
};
CrossingPoint crossing_point(double g_over_j, int n);

// --- sweeps -----------------------------------------------------------------

struct SpectrumRow {
  int n = 0;
  Branch branch = Branch::Singlet;
  std::vector<double> energies_over_j;  // one per grid point
};

struct SpectrumTable {
  double g_over_j = 0.0;
  bool resonant = true;
  std::vector<double> xi_grid;
  std::vector<SpectrumRow> rows;  // ordered by (n, branch label)
};

// E/J for every (n, branch) with n <= max_n over a strictly increasing
// xi > 0 grid, on the resonant line w = w_a = xi J with g/J held fixed.
// Grid points may be evaluated on `threads` workers; the output ordering is
// grid-ordered and identical for any thread count.
SpectrumTable spectrum_sweep(double g_over_j, const std::vector<double>& xi_grid,
                             int max_n, int threads = 1);

// Every dressed level with index n <= max_n: the singlet chain plus all
// triplet branches. Requires max_n + 1 <= n_max so no truncated block is
// touched.
std::vector<DressedState> dressed_levels(const ModelParams& params, int max_n);

}  // namespace dressed
