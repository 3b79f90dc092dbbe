#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stoclab/constants.hpp"
#include "stoclab/cosmology.hpp"
#include "stoclab/dirac.hpp"
#include "stoclab/kerr_newman.hpp"
#include "stoclab/nelson.hpp"
#include "stoclab/random_walk.hpp"
#include "stoclab/rng.hpp"
#include "stoclab/version.hpp"

namespace py = pybind11;
using namespace stoclab;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stochastic origins of quantum scales: random walks, Nelson diffusion, "
            "1+1D Dirac dynamics, Kerr-Newman classification and sqrt(N) cosmology";

  // ---- constants ----
  py::class_<PhysicalConstants>(m, "PhysicalConstants")
      .def(py::init<>())
      .def_readwrite("hbar", &PhysicalConstants::hbar)
      .def_readwrite("c", &PhysicalConstants::c)
      .def_readwrite("G", &PhysicalConstants::G)
      .def_readwrite("k_B", &PhysicalConstants::k_B)
      .def_readwrite("e", &PhysicalConstants::e)
      .def("validate", &PhysicalConstants::validate);

  py::class_<Particle>(m, "Particle")
      .def(py::init([](std::string name, double mass, double charge, double spin) {
             return Particle{std::move(name), mass, charge, spin};
           }),
           py::arg("name"), py::arg("mass"), py::arg("charge") = 0.0, py::arg("spin") = 0.0)
      .def_readwrite("name", &Particle::name)
      .def_readwrite("mass", &Particle::mass)
      .def_readwrite("charge", &Particle::charge)
      .def_readwrite("spin", &Particle::spin);

  py::class_<ConstantsTable>(m, "ConstantsTable")
      .def(py::init<>())
      .def_readwrite("version", &ConstantsTable::version)
      .def_readwrite("constants", &ConstantsTable::constants)
      .def_readwrite("particles", &ConstantsTable::particles)
      .def("particle", &ConstantsTable::particle, py::return_value_policy::copy)
      .def("has_particle", &ConstantsTable::has_particle);

  m.def("default_table", &default_table);
  m.def("cgs_constants", &cgs_constants);
  m.def("natural_units", &natural_units);
  m.def("compton_wavelength", &compton_wavelength, py::arg("particle"), py::arg("constants"),
        py::arg("reduced") = true);
  m.def("compton_time", &compton_time);
  m.def("thermal_wavelength", &thermal_wavelength);
  m.def("load_table_file", &load_table_file);
  m.def("load_table_text", [](const std::string& text) {
    std::istringstream in(text);
    return load_table(in);
  });
  m.def("table_to_text", &table_to_text);

  // ---- rng ----
  py::class_<Philox>(m, "Philox")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"), py::arg("stream"))
      .def("uniform", &Philox::uniform)
      .def("gaussian", &Philox::gaussian)
      .def_static("block", &Philox::block)
      .def_property_readonly_static("name", [](py::object) { return Philox::name(); });

  // ---- random walk ----
  py::class_<WalkSpec>(m, "WalkSpec")
      .def(py::init<>())
      .def_readwrite("steps", &WalkSpec::steps)
      .def_readwrite("step_length", &WalkSpec::step_length)
      .def_readwrite("dim", &WalkSpec::dim)
      .def_readwrite("walkers", &WalkSpec::walkers)
      .def_readwrite("seed", &WalkSpec::seed)
      .def("validate", &WalkSpec::validate);

  py::class_<WalkEnsembleResult>(m, "WalkEnsembleResult")
      .def_readonly("rms_displacement", &WalkEnsembleResult::rms_displacement)
      .def_readonly("stderr_rms", &WalkEnsembleResult::stderr_rms)
      .def_readonly("stderr_defined", &WalkEnsembleResult::stderr_defined)
      .def_readonly("mean_displacement", &WalkEnsembleResult::mean_displacement)
      .def_readonly("mean_square_displacement", &WalkEnsembleResult::mean_square_displacement)
      .def_readonly("walkers", &WalkEnsembleResult::walkers)
      .def_readonly("seed", &WalkEnsembleResult::seed);

  m.def("rms_stretch", &rms_stretch);
  m.def("simulate_walk", &simulate_walk);
  m.def("walk_displacements", &walk_displacements, py::arg("spec"), py::arg("threads") = 1);
  m.def("estimate_rms", &estimate_rms, py::arg("spec"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("universe_consistency", &universe_consistency);

  // ---- nelson ----
  py::enum_<DiffusionConvention>(m, "DiffusionConvention")
      .value("paper", DiffusionConvention::paper)
      .value("nelson", DiffusionConvention::nelson);

  py::class_<DiffusionSpec>(m, "DiffusionSpec")
      .def(py::init<>())
      .def_readwrite("nu", &DiffusionSpec::nu)
      .def_readwrite("convention", &DiffusionSpec::convention)
      .def_readwrite("dt", &DiffusionSpec::dt)
      .def_readwrite("t_end", &DiffusionSpec::t_end)
      .def_readwrite("walkers", &DiffusionSpec::walkers)
      .def_readwrite("seed", &DiffusionSpec::seed)
      .def("sde_nu", &DiffusionSpec::sde_nu)
      .def("validate", &DiffusionSpec::validate);

  py::class_<QuantumModel> qm(m, "QuantumModel");
  py::enum_<QuantumModel::Kind>(qm, "Kind")
      .value("free_gaussian_packet", QuantumModel::Kind::free_gaussian_packet)
      .value("harmonic_ground_state", QuantumModel::Kind::harmonic_ground_state);
  qm.def(py::init<>())
      .def_readwrite("kind", &QuantumModel::kind)
      .def_readwrite("sigma0", &QuantumModel::sigma0)
      .def_readwrite("omega", &QuantumModel::omega)
      .def_readwrite("mass", &QuantumModel::mass)
      .def_readwrite("hbar", &QuantumModel::hbar)
      .def_static("free_packet", &QuantumModel::free_packet, py::arg("sigma0"),
                  py::arg("mass") = 1.0, py::arg("hbar") = 1.0)
      .def_static("harmonic", &QuantumModel::harmonic, py::arg("omega"), py::arg("mass") = 1.0,
                  py::arg("hbar") = 1.0);

  py::class_<WalkerEnsemble>(m, "WalkerEnsemble")
      .def(py::init<>())
      .def_readwrite("positions", &WalkerEnsemble::positions)
      .def_readwrite("time", &WalkerEnsemble::time)
      .def_readwrite("seed", &WalkerEnsemble::seed);

  py::class_<DensityReport>(m, "DensityReport")
      .def_readonly("l1", &DensityReport::l1)
      .def_readonly("ks", &DensityReport::ks)
      .def_readonly("bins", &DensityReport::bins)
      .def_readonly("bin_width", &DensityReport::bin_width)
      .def_readonly("degenerate", &DensityReport::degenerate);

  m.def("diffusion_constant", &diffusion_constant);
  m.def("increment_scale", &increment_scale);
  m.def("drift_field", &drift_field);
  m.def("model_density", &model_density);
  m.def("model_cdf", &model_cdf);
  m.def("model_variance", &model_variance);
  m.def("euler_maruyama_step", &euler_maruyama_step);
  m.def("evolve_ensemble", &evolve_ensemble, py::arg("model"), py::arg("spec"),
        py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("density_distance", &density_distance, py::arg("ensemble"), py::arg("model"),
        py::arg("bin_width_override") = 0.0);

  // ---- dirac ----
  py::class_<QUnits>(m, "QUnits")
      .def(py::init<>())
      .def(py::init([](double hbar, double c) { return QUnits{hbar, c}; }), py::arg("hbar"),
           py::arg("c"))
      .def_readwrite("hbar", &QUnits::hbar)
      .def_readwrite("c", &QUnits::c);

  py::class_<LatticeSpec>(m, "LatticeSpec")
      .def(py::init<>())
      .def_readwrite("dx", &LatticeSpec::dx)
      .def_readwrite("points", &LatticeSpec::points)
      .def_readwrite("steps", &LatticeSpec::steps)
      .def("dt", &LatticeSpec::dt)
      .def("extent", &LatticeSpec::extent)
      .def("validate", &LatticeSpec::validate);

  py::enum_<Representation>(m, "Representation")
      .value("position", Representation::position)
      .value("momentum", Representation::momentum);

  py::class_<SpinorField>(m, "SpinorField")
      .def(py::init<>())
      .def_readwrite("dx", &SpinorField::dx)
      .def_readwrite("x0", &SpinorField::x0)
      .def_readwrite("up", &SpinorField::up)
      .def_readwrite("down", &SpinorField::down)
      .def_readwrite("time", &SpinorField::time)
      .def_readwrite("rep", &SpinorField::rep)
      .def("size", &SpinorField::size)
      .def("x", &SpinorField::x)
      .def("norm", &SpinorField::norm)
      .def("normalize", &SpinorField::normalize);

  py::class_<EvolveDiagnostics>(m, "EvolveDiagnostics")
      .def(py::init<>())
      .def_readwrite("boundary_contact", &EvolveDiagnostics::boundary_contact)
      .def_readwrite("max_edge_fraction", &EvolveDiagnostics::max_edge_fraction)
      .def_readwrite("aliasing", &EvolveDiagnostics::aliasing)
      .def_readwrite("nyquist_fraction", &EvolveDiagnostics::nyquist_fraction);

  py::class_<ZitterReport>(m, "ZitterReport")
      .def_readonly("dominant_frequency", &ZitterReport::dominant_frequency)
      .def_readonly("oscillation_amplitude", &ZitterReport::oscillation_amplitude)
      .def_readonly("drift_velocity", &ZitterReport::drift_velocity);

  py::class_<Eq2MeanPosition>(m, "Eq2MeanPosition")
      .def_readonly("classical", &Eq2MeanPosition::classical)
      .def_readonly("amplitude", &Eq2MeanPosition::amplitude)
      .def_readonly("frequency", &Eq2MeanPosition::frequency);

  m.def("gaussian_packet", &gaussian_packet, py::arg("points"), py::arg("dx"),
        py::arg("center"), py::arg("sigma"), py::arg("p0"),
        py::arg("up_weight") = std::complex<double>(1.0, 0.0),
        py::arg("down_weight") = std::complex<double>(0.0, 0.0), py::arg("units") = QUnits{});
  m.def(
      "checkerboard_propagate",
      [](const SpinorField& psi0, const LatticeSpec& lat, double mass, const QUnits& u) {
        EvolveDiagnostics diag;
        auto out = checkerboard_propagate(psi0, lat, mass, u, &diag);
        return py::make_tuple(std::move(out), diag);
      },
      py::arg("psi0"), py::arg("lattice"), py::arg("mass"), py::arg("units") = QUnits{});
  m.def(
      "spectral_evolve",
      [](const SpinorField& psi0, double mass, double t, const QUnits& u) {
        EvolveDiagnostics diag;
        auto out = spectral_evolve(psi0, mass, t, u, &diag);
        return py::make_tuple(std::move(out), diag);
      },
      py::arg("psi0"), py::arg("mass"), py::arg("t"), py::arg("units") = QUnits{});
  m.def("project_positive_band", &project_positive_band, py::arg("psi0"), py::arg("mass"),
        py::arg("units") = QUnits{});
  m.def("to_momentum", &to_momentum);
  m.def("to_position", &to_position);
  m.def("mean_position", &mean_position);
  m.def("mean_position_series", &mean_position_series, py::arg("psi0"), py::arg("mass"),
        py::arg("times"), py::arg("units") = QUnits{});
  m.def("zitter_analyze", &zitter_analyze);
  m.def("eq2_mean_position", &eq2_mean_position, py::arg("p"), py::arg("mass"), py::arg("t"),
        py::arg("units") = QUnits{});

  // ---- kerr-newman ----
  py::enum_<KNKind>(m, "KNKind")
      .value("black_hole", KNKind::black_hole)
      .value("extremal", KNKind::extremal)
      .value("naked_singularity", KNKind::naked_singularity);

  py::enum_<ChargeTerm>(m, "ChargeTerm")
      .value("standard", ChargeTerm::standard)
      .value("literal", ChargeTerm::literal);

  py::class_<KNConfig>(m, "KNConfig")
      .def(py::init<>())
      .def(py::init([](double mass, double charge, double spin_param) {
             return KNConfig{mass, charge, spin_param};
           }),
           py::arg("mass"), py::arg("charge") = 0.0, py::arg("spin_param") = 0.0)
      .def_readwrite("mass", &KNConfig::mass)
      .def_readwrite("charge", &KNConfig::charge)
      .def_readwrite("spin_param", &KNConfig::spin_param);

  py::class_<KNClassification>(m, "KNClassification")
      .def_readonly("kind", &KNClassification::kind)
      .def_readonly("r_plus", &KNClassification::r_plus)
      .def_readonly("r_minus", &KNClassification::r_minus)
      .def_readonly("b", &KNClassification::b);

  m.def("kn_discriminant", &kn_discriminant, py::arg("config"), py::arg("constants"),
        py::arg("charge_term") = ChargeTerm::standard);
  m.def("kn_classify", &kn_classify, py::arg("config"), py::arg("constants"),
        py::arg("charge_term") = ChargeTerm::standard);
  m.def("particle_kn_config", &particle_kn_config);
  m.def("electron_kn_check", &electron_kn_check);

  // ---- cosmology ----
  py::class_<CosmologySpec>(m, "CosmologySpec")
      .def(py::init<>())
      .def_readwrite("N0", &CosmologySpec::N0)
      .def_readwrite("tau", &CosmologySpec::tau)
      .def_readwrite("t_end", &CosmologySpec::t_end)
      .def_readwrite("dt", &CosmologySpec::dt)
      .def("validate", &CosmologySpec::validate);

  py::class_<CosmologyTrajectory>(m, "CosmologyTrajectory")
      .def_readonly("times", &CosmologyTrajectory::times)
      .def_readonly("N_values", &CosmologyTrajectory::N_values)
      .def_readonly("monotone", &CosmologyTrajectory::monotone)
      .def_readonly("refined", &CosmologyTrajectory::refined)
      .def_readonly("substeps", &CosmologyTrajectory::substeps);

  py::class_<CosmicScales>(m, "CosmicScales")
      .def_readonly("age", &CosmicScales::age)
      .def_readonly("radius", &CosmicScales::radius)
      .def_readonly("mass", &CosmicScales::mass)
      .def_readonly("hubble", &CosmicScales::hubble);

  py::class_<AuditRow>(m, "AuditRow")
      .def_readonly("name", &AuditRow::name)
      .def_readonly("ratio", &AuditRow::ratio)
      .def_readonly("residual_dex", &AuditRow::residual_dex)
      .def_readonly("structural", &AuditRow::structural)
      .def_readonly("pass_", &AuditRow::pass)
      .def_readonly("note", &AuditRow::note);

  py::class_<AuditInputs>(m, "AuditInputs")
      .def(py::init<>())
      .def_readwrite("R", &AuditInputs::R)
      .def_readwrite("N", &AuditInputs::N)
      .def_readwrite("T_obs", &AuditInputs::T_obs)
      .def_readwrite("M_obs", &AuditInputs::M_obs);

  m.def("creation_rate", &creation_rate);
  m.def("population_closed_form", &population_closed_form);
  m.def("exact_growth_time", &exact_growth_time);
  m.def("integrate_population", &integrate_population);
  m.def("derived_scales", &derived_scales);
  m.def("pion_hubble_mass", &pion_hubble_mass);
  m.def("large_number_audit", &large_number_audit);

#ifdef STOCLAB_VERSION_INFO
  m.attr("__version__") = STOCLAB_VERSION_INFO;
#else
  m.attr("__version__") = STOCLAB_VERSION;
#endif
}
