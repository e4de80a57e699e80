// bindings.cpp — pybind11 surface over the sbflow core

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sbflow/bath.hpp"
#include "sbflow/energetics.hpp"
#include "sbflow/errors.hpp"
#include "sbflow/nonmarkov.hpp"
#include "sbflow/specfun.hpp"
#include "sbflow/sweep.hpp"
#include "sbflow/tcl2.hpp"
#include "sbflow/version.hpp"

namespace py = pybind11;
using namespace sbflow;

namespace {

template <typename Getter>
std::vector<double> collect(const tcl2::Trajectory& traj, Getter getter) {
    std::vector<double> out;
    out.reserve(traj.size());
    for (const tcl2::TrajectoryPoint& pt : traj.points) out.push_back(getter(pt));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "energy flow and trace-distance non-Markovianity for the spin-boson model";
    m.attr("__version__") = kVersion;

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<PoleError>(m, "PoleError", PyExc_ArithmeticError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<NumericsError>(m, "NumericsError", PyExc_RuntimeError);

    // ---------------------------- special functions -------------------------
    m.def("trigamma", [](std::complex<double> z) { return specfun::trigamma(z); },
          py::arg("z"), "derivative of the digamma function for complex arguments");
    m.def("bose_occupation", &specfun::bose_occupation, py::arg("omega"), py::arg("temperature"));
    m.def("csch", &specfun::csch, py::arg("x"));

    // --------------------------------- bath ---------------------------------
    py::class_<bath::BathParams>(m, "BathParams")
        .def(py::init([](double lam, double cutoff, double temp) {
                 bath::BathParams p{lam, cutoff, temp};
                 p.validate();
                 return p;
             }),
             py::arg("lambda_"), py::arg("cutoff"), py::arg("temp"))
        .def_readwrite("lambda_", &bath::BathParams::lambda)
        .def_readwrite("cutoff", &bath::BathParams::cutoff)
        .def_readwrite("temp", &bath::BathParams::temp)
        .def("__repr__", [](const bath::BathParams& p) {
            return "BathParams(lambda_=" + std::to_string(p.lambda) +
                   ", cutoff=" + std::to_string(p.cutoff) + ", temp=" + std::to_string(p.temp) + ")";
        });

    m.def("spectral_density", &bath::spectral_density, py::arg("omega"), py::arg("params"));
    m.def("effective_spectral_density", &bath::effective_spectral_density, py::arg("omega"),
          py::arg("params"));
    m.def("noise_kernel", &bath::noise_kernel, py::arg("tau"), py::arg("params"));
    m.def("noise_kernel_quadrature", &bath::noise_kernel_quadrature, py::arg("tau"),
          py::arg("params"));
    m.def("dissipation_kernel", &bath::dissipation_kernel, py::arg("tau"), py::arg("params"));
    m.def("kernel_time_derivatives",
          [](double tau, const bath::BathParams& p) {
              const bath::KernelPair k = bath::kernel_time_derivatives(tau, p);
              return py::make_tuple(k.d1, k.d2);
          },
          py::arg("tau"), py::arg("params"));
    m.def("resonance_deviation", &bath::resonance_deviation, py::arg("params"),
          py::arg("omega0") = 1.0);
    m.def("resonance_curve", &bath::resonance_curve, py::arg("bath_temp"), py::arg("omega0") = 1.0);
    m.def("markov_rate", &bath::markov_rate, py::arg("params"), py::arg("omega0") = 1.0);

    // --------------------------------- tcl2 ---------------------------------
    py::class_<tcl2::SystemParams>(m, "SystemParams")
        .def(py::init([](double omega0, double sys_temp) {
                 tcl2::SystemParams s{omega0, sys_temp};
                 s.validate();
                 return s;
             }),
             py::arg("omega0") = 1.0, py::arg("sys_temp") = 5.0)
        .def_readwrite("omega0", &tcl2::SystemParams::omega0)
        .def_readwrite("sys_temp", &tcl2::SystemParams::sys_temp);

    py::class_<tcl2::QubitState>(m, "QubitState")
        .def(py::init([](double p0, std::complex<double> coh) {
                 tcl2::QubitState s{p0, coh};
                 s.validate();
                 return s;
             }),
             py::arg("p0"), py::arg("coh") = std::complex<double>(0.0, 0.0))
        .def_readonly("p0", &tcl2::QubitState::p0)
        .def_readonly("coh", &tcl2::QubitState::coh)
        .def_property_readonly("p1", &tcl2::QubitState::p1)
        .def("bloch", [](const tcl2::QubitState& s) {
            return py::make_tuple(s.bloch_x(), s.bloch_y(), s.bloch_z());
        })
        .def_static("from_bloch", &tcl2::QubitState::from_bloch, py::arg("x"), py::arg("y"),
                    py::arg("z"))
        .def_static("gibbs", &tcl2::QubitState::gibbs, py::arg("system"));

    py::class_<tcl2::TimeGrid>(m, "TimeGrid")
        .def(py::init([](double t_max, double dt) {
                 tcl2::TimeGrid g{t_max, dt};
                 g.validate();
                 return g;
             }),
             py::arg("t_max") = 100.0, py::arg("dt") = 0.01)
        .def_readwrite("t_max", &tcl2::TimeGrid::t_max)
        .def_readwrite("dt", &tcl2::TimeGrid::dt);

    py::class_<tcl2::Trajectory>(m, "Trajectory")
        .def("__len__", &tcl2::Trajectory::size)
        .def_readonly("max_bloch_norm", &tcl2::Trajectory::max_bloch_norm)
        .def_property_readonly("times",
                               [](const tcl2::Trajectory& tr) {
                                   return collect(tr, [](const auto& pt) { return pt.t; });
                               })
        .def_property_readonly("rho00",
                               [](const tcl2::Trajectory& tr) {
                                   return collect(tr, [](const auto& pt) { return pt.state.p0; });
                               })
        .def_property_readonly("a_zz",
                               [](const tcl2::Trajectory& tr) {
                                   return collect(tr, [](const auto& pt) { return pt.coeffs.a_zz; });
                               })
        .def_property_readonly("b_z",
                               [](const tcl2::Trajectory& tr) {
                                   return collect(tr, [](const auto& pt) { return pt.coeffs.b_z; });
                               })
        .def("state_at", [](const tcl2::Trajectory& tr, std::size_t i) { return tr[i].state; },
             py::arg("index"));

    m.def("propagate", &tcl2::propagate, py::arg("bath"), py::arg("system"), py::arg("init"),
          py::arg("grid"));
    m.def("born_markov_population", &tcl2::born_markov_population, py::arg("t"), py::arg("bath"),
          py::arg("system"), py::arg("rho00_0"));

    // ------------------------------ energetics -------------------------------
    py::class_<energetics::FlowTrace>(m, "FlowTrace")
        .def_readonly("times", &energetics::FlowTrace::times)
        .def_readonly("theta", &energetics::FlowTrace::theta)
        .def_readonly("theta_alt", &energetics::FlowTrace::theta_alt)
        .def_readonly("dq", &energetics::FlowTrace::dq)
        .def_readonly("f_term", &energetics::FlowTrace::f_term)
        .def_readonly("markov_theta", &energetics::FlowTrace::markov_theta)
        .def_readonly("max_route_deviation", &energetics::FlowTrace::max_route_deviation);

    py::class_<energetics::BackflowResult>(m, "BackflowResult")
        .def_readonly("value", &energetics::BackflowResult::value)
        .def_readonly("negativity_intervals", &energetics::BackflowResult::negativity_intervals)
        .def_readonly("argmax_sys_temp", &energetics::BackflowResult::argmax_sys_temp);

    m.def("energy_flow", &energetics::energy_flow, py::arg("trajectory"), py::arg("bath"),
          py::arg("system"));
    m.def(
        "backflow_measure",
        [](const bath::BathParams& p, const tcl2::SystemParams& s, const tcl2::TimeGrid& grid,
           const std::optional<std::vector<double>>& scan_temps) {
            const energetics::InitStateStrategy strategy =
                scan_temps ? energetics::InitStateStrategy::scan_temps(*scan_temps)
                           : energetics::InitStateStrategy::fixed_equal_temps();
            return energetics::backflow_measure(p, s, grid, strategy);
        },
        py::arg("bath"), py::arg("system"), py::arg("grid"), py::arg("scan_temps") = py::none());

    // ------------------------------- nonmarkov -------------------------------
    py::class_<nonmarkov::StatePair>(m, "StatePair")
        .def(py::init([](const tcl2::QubitState& a, const tcl2::QubitState& b) {
                 return nonmarkov::StatePair{a, b};
             }),
             py::arg("s1"), py::arg("s2"))
        .def_static("canonical", &nonmarkov::StatePair::canonical)
        .def_readonly("s1", &nonmarkov::StatePair::s1)
        .def_readonly("s2", &nonmarkov::StatePair::s2);

    py::class_<nonmarkov::BLPResult>(m, "BLPResult")
        .def_readonly("value", &nonmarkov::BLPResult::value)
        .def_readonly("regrowth_intervals", &nonmarkov::BLPResult::regrowth_intervals)
        .def_readonly("times", &nonmarkov::BLPResult::times)
        .def_readonly("distance_trace", &nonmarkov::BLPResult::distance_trace);

    m.def("trace_distance", &nonmarkov::trace_distance, py::arg("a"), py::arg("b"));
    m.def("blp_measure", &nonmarkov::blp_measure, py::arg("bath"), py::arg("system"),
          py::arg("grid"), py::arg("pair") = nonmarkov::StatePair::canonical());
    m.def("blp_closed_form", &nonmarkov::blp_closed_form, py::arg("bath"), py::arg("grid"));

    // --------------------------------- sweep ---------------------------------
    py::class_<sweep::GridSpec>(m, "GridSpec")
        .def(py::init([](double omega_min, double omega_max, double temp_min, double temp_max,
                         std::size_t n_omega, std::size_t n_temp) {
                 sweep::GridSpec g{omega_min, omega_max, temp_min, temp_max, n_omega, n_temp};
                 g.validate();
                 return g;
             }),
             py::arg("omega_min") = 0.2, py::arg("omega_max") = 5.0, py::arg("temp_min") = 0.2,
             py::arg("temp_max") = 5.0, py::arg("n_omega") = 50, py::arg("n_temp") = 50)
        .def_readonly("n_omega", &sweep::GridSpec::n_omega)
        .def_readonly("n_temp", &sweep::GridSpec::n_temp)
        .def("cell_omega", &sweep::GridSpec::cell_omega, py::arg("i"))
        .def("cell_temp", &sweep::GridSpec::cell_temp, py::arg("j"));

    py::class_<sweep::HeatmapGrid>(m, "HeatmapGrid")
        .def_readonly("values", &sweep::HeatmapGrid::values)
        .def_readonly("lambda_", &sweep::HeatmapGrid::lambda)
        .def_readonly("spec", &sweep::HeatmapGrid::spec)
        .def_property_readonly("measure",
                               [](const sweep::HeatmapGrid& g) {
                                   return sweep::measure_kind_name(g.kind);
                               })
        .def_property_readonly("failed_cells",
                               [](const sweep::HeatmapGrid& g) {
                                   std::vector<py::tuple> out;
                                   for (const auto& f : g.failed_cells) {
                                       out.push_back(py::make_tuple(f.omega_index, f.temp_index,
                                                                    f.message));
                                   }
                                   return out;
                               })
        .def("at", &sweep::HeatmapGrid::at, py::arg("i_omega"), py::arg("i_temp"))
        .def("max_value", &sweep::HeatmapGrid::max_value);

    m.def("sweep_backflow", &sweep::sweep_backflow, py::arg("spec"), py::arg("lambda_"),
          py::arg("grid"), py::arg("jobs") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("sweep_blp", &sweep::sweep_blp, py::arg("spec"), py::arg("lambda_"), py::arg("grid"),
          py::arg("jobs") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("sweep_resonance_deviation", &sweep::sweep_resonance_deviation, py::arg("spec"),
          py::arg("lambda_"), py::arg("jobs") = 0);
}
