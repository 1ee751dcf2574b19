// Python bindings for the main operations: model setup, closed-form
// eigensystems, criticality classification, the brute-force oracle, time
// evolution, and the transition/damping machinery.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "dressed/analytic.hpp"
#include "dressed/io.hpp"
#include "dressed/model.hpp"
#include "dressed/numeric.hpp"
#include "dressed/transitions.hpp"

namespace py = pybind11;
using namespace dressed;

namespace {

Spin spin_from_name(const std::string& name) {
  if (name == "uu") return Spin::UpUp;
  if (name == "psi+") return Spin::PsiPlus;
  if (name == "psi-") return Spin::PsiMinus;
  if (name == "dd") return Spin::DownDown;
  throw std::invalid_argument("unknown spin label: " + name);
}

QubitOperator operator_from_name(const std::string& name) {
  for (QubitOperator op :
       {QubitOperator::SigmaPlus1, QubitOperator::SigmaMinus1,
        QubitOperator::SigmaPlus2, QubitOperator::SigmaMinus2,
        QubitOperator::SymmetricPlus, QubitOperator::SymmetricMinus,
        QubitOperator::AntisymmetricPlus, QubitOperator::AntisymmetricMinus})
    if (operator_label(op) == name) return op;
  throw std::invalid_argument("unknown operator label: " + name);
}

SpectralShape shape_from_name(const std::string& name) {
  if (name == "flat") return SpectralShape::Flat;
  if (name == "ohmic") return SpectralShape::Ohmic;
  throw std::invalid_argument("unknown spectral shape: " + name);
}

py::list amplitude_list(const DressedState& s) {
  py::list out;
  for (const auto& [ket, amp] : s.amplitudes)
    out.append(py::make_tuple(ket.photon, spin_name(ket.spin), amp));
  return out;
}

QuantumState make_state(const std::vector<std::complex<double>>& amplitudes) {
  QuantumState s;
  s.amplitudes = amplitudes;
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "dressed-state spectrum, criticality, and transitions of two "
      "Ising-coupled charge qubits in a transmission-line resonator";

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double j, double g, double omega, double omega_a,
                       int n_max) {
             ModelParams p;
             p.J = j;
             p.g = g;
             p.omega = omega;
             p.omega_a = omega_a;
             p.n_max = n_max;
             p.validate();
             return p;
           }),
           py::arg("j") = 4.0, py::arg("g") = 2.0, py::arg("omega") = 4.0,
           py::arg("omega_a") = 4.0, py::arg("n_max") = 40)
      .def_readwrite("J", &ModelParams::J)
      .def_readwrite("g", &ModelParams::g)
      .def_readwrite("omega", &ModelParams::omega)
      .def_readwrite("omega_a", &ModelParams::omega_a)
      .def_readwrite("n_max", &ModelParams::n_max)
      .def("resonant", &ModelParams::resonant)
      .def("dimension", &ModelParams::dimension)
      .def("validate", &ModelParams::validate)
      .def("__repr__", [](const ModelParams& p) {
        return "ModelParams(j=" + io::format_double(p.J) +
               ", g=" + io::format_double(p.g) +
               ", omega=" + io::format_double(p.omega) +
               ", omega_a=" + io::format_double(p.omega_a) +
               ", n_max=" + std::to_string(p.n_max) + ")";
      });

  py::class_<DressedState>(m, "DressedState")
      .def_readonly("energy", &DressedState::energy)
      .def_readonly("block", &DressedState::block)
      .def_property_readonly(
          "branch",
          [](const DressedState& s) { return branch_label(s.branch); })
      .def_property_readonly("sector",
                             [](const DressedState& s) {
                               return s.sector == Sector::Singlet
                                          ? std::string("singlet")
                                          : std::string("triplet");
                             })
      .def_property_readonly("amplitudes", &amplitude_list)
      .def("__repr__", [](const DressedState& s) {
        return "DressedState(n=" + std::to_string(s.block) + ", branch='" +
               branch_label(s.branch) +
               "', energy=" + io::format_double(s.energy) + ")";
      });

  m.def("ket_index", [](int photon, const std::string& spin) {
    return ket_index(BasisKet{photon, spin_from_name(spin)});
  });

  // closed forms
  m.def("mixing_angle", &mixing_angle, py::arg("j"), py::arg("g"));
  m.def("dressed_rabi_frequency", &dressed_rabi_frequency, py::arg("j"),
        py::arg("g"), py::arg("n"));
  m.def("singlet_level", &singlet_level, py::arg("params"), py::arg("n"));
  m.def("singlet_state", &singlet_state, py::arg("params"), py::arg("n"));
  m.def("w0_level", &w0_level, py::arg("params"));
  m.def("w0_state", &w0_state, py::arg("params"));

  py::class_<W1System>(m, "W1System")
      .def_readonly("minus", &W1System::minus)
      .def_readonly("plus", &W1System::plus)
      .def_readonly("theta", &W1System::theta);
  m.def("w1_eigensystem", &w1_eigensystem, py::arg("params"));

  py::class_<WnSystem>(m, "WnSystem")
      .def_readonly("minus", &WnSystem::minus)
      .def_readonly("zero", &WnSystem::zero)
      .def_readonly("plus", &WnSystem::plus);
  m.def("wn_eigensystem", &wn_eigensystem, py::arg("params"), py::arg("n"));

  m.def("perturbative_shift", &perturbative_shift, py::arg("params"),
        py::arg("n"));
  m.def("dressed_levels", &dressed_levels, py::arg("params"), py::arg("max_n"));

  // criticality
  m.def("xi0", &xi0, py::arg("params"));
  m.def("xi1", &xi1, py::arg("params"));

  py::class_<RegionInfo>(m, "RegionInfo")
      .def_property_readonly(
          "region", [](const RegionInfo& r) { return region_name(r.region); })
      .def_property_readonly("ground",
                             [](const RegionInfo& r) -> py::object {
                               if (!r.ground.has_value()) return py::none();
                               return py::cast(*r.ground);
                             })
      .def_readonly("minus_ladder_strictly_decreasing",
                    &RegionInfo::minus_ladder_strictly_decreasing)
      .def_readonly("xi0", &RegionInfo::xi0_value)
      .def_readonly("xi1", &RegionInfo::xi1_value);
  m.def("classify_region", &classify_region, py::arg("xi"), py::arg("params"));

  m.def("hq_phase", [](double xi_a) {
    const HqPhase phase = hq_phase(xi_a);
    return py::make_tuple(hq_ground_label(phase.ground), phase.boundary,
                          phase.energy_over_j);
  });

  py::class_<CrossingPoint>(m, "CrossingPoint")
      .def_readonly("n", &CrossingPoint::n)
      .def_readonly("xi_star", &CrossingPoint::xi_star)
      .def_readonly("energy_over_j", &CrossingPoint::energy_over_j);
  m.def("crossing_point", &crossing_point, py::arg("g_over_j"), py::arg("n"));

  // brute-force oracle
  m.def(
      "oracle_levels",
      [](const ModelParams& p) {
        const OracleSpectrum oracle = oracle_spectrum(p);
        py::list out;
        for (std::size_t k = 0; k < oracle.eig.eigenvalues.size(); ++k) {
          const LevelLabel& label = oracle.labels[k];
          out.append(py::make_tuple(
              oracle.eig.eigenvalues[k],
              label.kind == BlockKind::Singlet ? "singlet" : "triplet",
              label.block_index, label.truncated));
        }
        return out;
      },
      py::arg("params"),
      "every eigenvalue of the truncated Hamiltonian with its block label");

  // time evolution
  py::class_<Propagator>(m, "Propagator")
      .def(py::init<const ModelParams&>(), py::arg("params"))
      .def(
          "evolve",
          [](const Propagator& prop,
             const std::vector<std::complex<double>>& amplitudes, double t) {
            return prop.evolve(make_state(amplitudes), t).amplitudes;
          },
          py::arg("amplitudes"), py::arg("t"));
  m.def("singlet_population",
        [](const std::vector<std::complex<double>>& amplitudes) {
          return singlet_population(make_state(amplitudes));
        });

  // transitions and damping
  m.def("transition_amplitude",
        [](const DressedState& from, const DressedState& to,
           const std::string& op) {
          return transition_amplitude(from, to, operator_from_name(op));
        },
        py::arg("from_state"), py::arg("to_state"), py::arg("op"));
  m.def(
      "apply_qubit_operator",
      [](const std::vector<std::complex<double>>& amplitudes,
         const std::string& op) {
        return apply_qubit_operator(make_state(amplitudes),
                                    operator_from_name(op))
            .amplitudes;
      },
      py::arg("amplitudes"), py::arg("op"));
  m.def(
      "selection_rules",
      [](const std::vector<DressedState>& levels, double g1, double g2) {
        py::list out;
        for (const TransitionRecord& rec : selection_rules(levels, g1, g2)) {
          py::dict row;
          row["from_n"] = rec.from.block;
          row["from_branch"] = branch_label(rec.from.branch);
          row["to_n"] = rec.to.block;
          row["to_branch"] = branch_label(rec.to.branch);
          row["op"] = operator_label(rec.op);
          row["amplitude"] = rec.amplitude;
          row["allowed"] = rec.allowed;
          out.append(row);
        }
        return out;
      },
      py::arg("levels"), py::arg("g1") = 1.0, py::arg("g2") = 1.0);
  m.def("rabi_splitting", &rabi_splitting, py::arg("params"));
  m.def(
      "damping_ratio",
      [](const ModelParams& params, double g1, double g2,
         const std::string& rho, double strength1, double strength2,
         double omega_ref_shift) {
        BathModel bath;
        bath.g1 = g1;
        bath.g2 = g2;
        bath.shape1 = bath.shape2 = shape_from_name(rho);
        bath.strength1 = strength1;
        bath.strength2 = strength2;
        const DampingRatio r = damping_ratio(params, bath, omega_ref_shift);
        py::dict out;
        out["status"] = ratio_status_label(r.status);
        out["value"] = r.value;
        out["golden_rule_value"] = r.golden_rule_value;
        out["omega1"] = r.omega1;
        out["omega2"] = r.omega2;
        out["omega1_exact"] = r.omega1_exact;
        out["omega2_exact"] = r.omega2_exact;
        out["theta"] = r.theta;
        return out;
      },
      py::arg("params"), py::arg("g1") = 1.0, py::arg("g2") = 0.0,
      py::arg("rho") = "flat", py::arg("strength1") = 1.0,
      py::arg("strength2") = 1.0, py::arg("omega_ref_shift") = 0.0);

  // device mapping
  m.def(
      "device_to_model",
      [](double c_sigma, double c_m, double c_g, double v_g, double e_j_ghz,
         double squid_area, double qubit_distance, double resonator_length,
         double inductance_per_length, double capacitance_per_length,
         int mode_number, double flux_quantum, int n_max) {
        DeviceParams dev;
        dev.c_sigma = c_sigma;
        dev.c_m = c_m;
        dev.c_g = c_g;
        dev.v_g = v_g;
        dev.e_j_ghz = e_j_ghz;
        dev.squid_area = squid_area;
        dev.qubit_distance = qubit_distance;
        dev.resonator_length = resonator_length;
        dev.inductance_per_length = inductance_per_length;
        dev.capacitance_per_length = capacitance_per_length;
        dev.mode_number = mode_number;
        dev.flux_quantum = flux_quantum;
        const DerivedModel derived = device_to_model(dev, n_max);
        py::dict out;
        out["model"] = derived.model;
        out["charging_energy_ghz"] = derived.charging_energy_ghz;
        out["gate_charge"] = derived.gate_charge;
        out["omega_rad_per_s"] = derived.omega_rad_per_s;
        return out;
      },
      py::arg("c_sigma") = 6.0e-16, py::arg("c_m") = 3.0e-17,
      py::arg("c_g") = 1.0e-17, py::arg("v_g") = 0.0240326495,
      py::arg("e_j_ghz") = 4.0, py::arg("squid_area") = 5.0e-11,
      py::arg("qubit_distance") = 1.0e-6, py::arg("resonator_length") = 1.0e-2,
      py::arg("inductance_per_length") = 4.1e-7,
      py::arg("capacitance_per_length") = 1.6e-10, py::arg("mode_number") = 1,
      py::arg("flux_quantum") = 2.067833848e-15, py::arg("n_max") = 40);
}
