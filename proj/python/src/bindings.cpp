#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "ljcell/action_angle.hpp"
#include "ljcell/asymptotics.hpp"
#include "ljcell/dynamics.hpp"
#include "ljcell/errors.hpp"
#include "ljcell/fourier.hpp"
#include "ljcell/potentials.hpp"
#include "ljcell/resonance.hpp"
#include "ljcell/specfun.hpp"

namespace py = pybind11;
using namespace ljcell;

namespace {

QuadratureOptions quad(double rel_tol) { return {rel_tol, 0.0, 400000}; }

py::dict sweep_row(const SweepPoint& pt) {
    py::dict row;
    row["q0"] = pt.q0;
    row["omega1"] = pt.omega1;
    row["error"] = pt.error;
    if (pt.result) {
        const OverlapResult& r = *pt.result;
        row["k"] = r.k_value;
        row["width_sum"] = r.width_sum;
        row["spacing"] = r.spacing;
        row["upper"] = r.upper;
        row["lower"] = r.lower;
    } else {
        row["k"] = py::none();
    }
    return row;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lennard-Jones cell oscillator: action-angle variables, resonances and dynamics";
    m.attr("__version__") = LJCELL_VERSION;

    auto base = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<NoResonanceError>(m, "NoResonanceError", PyExc_RuntimeError);
    py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_RuntimeError);
    py::register_exception<RegimeError>(m, "RegimeError", base.ptr());

    py::class_<PotentialSpec>(m, "PotentialSpec")
        .def(py::init([](double alpha, double beta, double amp, double omega1) {
                 PotentialSpec s{alpha, beta, amp, omega1};
                 validate(s);
                 return s;
             }),
             py::arg("alpha") = 12.0, py::arg("beta") = 6.0, py::arg("amp") = 0.01,
             py::arg("omega1") = 30.0)
        .def_readwrite("alpha", &PotentialSpec::alpha)
        .def_readwrite("beta", &PotentialSpec::beta)
        .def_readwrite("amp", &PotentialSpec::amp)
        .def_readwrite("omega1", &PotentialSpec::omega1)
        .def("__repr__", [](const PotentialSpec& s) {
            return "PotentialSpec(alpha=" + py::repr(py::float_(s.alpha)).cast<std::string>() +
                   ", beta=" + py::repr(py::float_(s.beta)).cast<std::string>() +
                   ", amp=" + py::repr(py::float_(s.amp)).cast<std::string>() +
                   ", omega1=" + py::repr(py::float_(s.omega1)).cast<std::string>() + ")";
        });

    py::class_<OrbitRecord>(m, "OrbitRecord")
        .def_readonly("q0", &OrbitRecord::q0)
        .def_readonly("e", &OrbitRecord::e)
        .def_readonly("h", &OrbitRecord::h)
        .def_readonly("action", &OrbitRecord::action)
        .def_readonly("omega", &OrbitRecord::omega)
        .def_readonly("domega_de", &OrbitRecord::domega_de)
        .def_readonly("domega_di", &OrbitRecord::domega_di)
        .def_readonly("accuracy_warning", &OrbitRecord::accuracy_warning);

    py::class_<ResonanceInfo>(m, "ResonanceInfo")
        .def_readonly("n", &ResonanceInfo::n)
        .def_readonly("q0n", &ResonanceInfo::q0n)
        .def_readonly("orbit", &ResonanceInfo::orbit)
        .def_readonly("hn", &ResonanceInfo::hn)
        .def_readonly("delta_omega", &ResonanceInfo::delta_omega);

    py::class_<OverlapResult>(m, "OverlapResult")
        .def_readonly("n", &OverlapResult::n)
        .def_readonly("k", &OverlapResult::k_value)
        .def_readonly("width_sum", &OverlapResult::width_sum)
        .def_readonly("spacing", &OverlapResult::spacing)
        .def_readonly("upper", &OverlapResult::upper)
        .def_readonly("lower", &OverlapResult::lower)
        .def_property_readonly("overlapping", &OverlapResult::overlapping);

    py::class_<SmallEnergyAsymptote>(m, "SmallEnergyAsymptote")
        .def_readonly("h", &SmallEnergyAsymptote::h)
        .def_readonly("k", &SmallEnergyAsymptote::k)
        .def_readonly("period", &SmallEnergyAsymptote::period)
        .def_readonly("omega", &SmallEnergyAsymptote::omega)
        .def_readonly("omega_leading", &SmallEnergyAsymptote::omega_leading)
        .def_readonly("domega_de", &SmallEnergyAsymptote::domega_de);

    py::class_<HighEnergyAsymptote>(m, "HighEnergyAsymptote")
        .def_readonly("e", &HighEnergyAsymptote::e)
        .def_readonly("q1_big", &HighEnergyAsymptote::q1_big)
        .def_readonly("j_big", &HighEnergyAsymptote::j_big)
        .def_readonly("omega_big", &HighEnergyAsymptote::omega_big)
        .def_readonly("domega_big_de", &HighEnergyAsymptote::domega_big_de)
        .def("hn_limit", &HighEnergyAsymptote::hn_limit, py::arg("n"));

    py::class_<PhaseState>(m, "PhaseState")
        .def(py::init<double, double, double>(), py::arg("q"), py::arg("p"), py::arg("t") = 0.0)
        .def_readwrite("q", &PhaseState::q)
        .def_readwrite("p", &PhaseState::p)
        .def_readwrite("t", &PhaseState::t);

    m.def("lj", &lj, py::arg("spec"), py::arg("r"));
    m.def("lj_deriv", &lj_deriv, py::arg("spec"), py::arg("r"), py::arg("order"));
    m.def("wall_potential", &wall_potential, py::arg("spec"), py::arg("q"));
    m.def("well_bottom_frequency", &well_bottom_frequency, py::arg("spec"));
    m.def("complete_elliptic_k", &complete_elliptic_k, py::arg("k"));
    m.def("incomplete_elliptic_f", &incomplete_elliptic_f, py::arg("phi"), py::arg("k"));

    m.def("height", &height, py::arg("spec"), py::arg("q0"));
    m.def("amplitude_for_height", &amplitude_for_height, py::arg("spec"), py::arg("h"));
    m.def("turning_points",
          [](const PotentialSpec& s, double e) {
              const TurningPoints tp = turning_points(s, e);
              return py::make_tuple(tp.left, tp.right);
          },
          py::arg("spec"), py::arg("e"));
    m.def("action", [](const PotentialSpec& s, double q0, double tol) { return action(s, q0, quad(tol)); },
          py::arg("spec"), py::arg("q0"), py::arg("tol") = 1e-10);
    m.def("frequency",
          [](const PotentialSpec& s, double q0, double tol) { return frequency(s, q0, quad(tol)); },
          py::arg("spec"), py::arg("q0"), py::arg("tol") = 1e-10);
    m.def("orbit_record", &orbit_record, py::arg("spec"), py::arg("q0"));
    m.def("fourier_coeff",
          [](const PotentialSpec& s, double q0, int n, double tol) {
              return fourier_coeff(s, q0, n, quad(tol)).value;
          },
          py::arg("spec"), py::arg("q0"), py::arg("n"), py::arg("tol") = 1e-10);

    m.def("find_resonance", &find_resonance, py::arg("spec"), py::arg("n"));
    m.def("overlap_k", &overlap_k, py::arg("spec"), py::arg("n"));
    m.def("sweep_k",
          [](const PotentialSpec& s, int n, const std::vector<double>& grid, unsigned threads) {
              std::vector<SweepPoint> pts;
              {
                  py::gil_scoped_release release;
                  pts = sweep_k(s, n, grid, threads);
              }
              py::list rows;
              for (const SweepPoint& pt : pts)
                  rows.append(sweep_row(pt));
              return rows;
          },
          py::arg("spec"), py::arg("n"), py::arg("q0_grid"), py::arg("threads") = 0);

    m.def("small_e_asymptote", &small_e_asymptote, py::arg("spec"), py::arg("h"));
    m.def("k21_small", &k21_small, py::arg("spec"), py::arg("h"), py::arg("omega1") = py::none());
    m.def("k32_small", &k32_small, py::arg("spec"), py::arg("h"), py::arg("omega1") = py::none());
    m.def("high_e_action", &high_e_action, py::arg("spec"), py::arg("e"));
    m.def("hn_high", &hn_high, py::arg("spec"), py::arg("e"), py::arg("n"));
    m.def("k_high", &k_high, py::arg("spec"), py::arg("n"));

    m.def("step", &step, py::arg("spec"), py::arg("state"), py::arg("dt"),
          py::arg("drive_phase") = 0.0);
    m.def("unperturbed_energy", &unperturbed_energy, py::arg("spec"), py::arg("q"), py::arg("p"));
    m.def("poincare_section",
          [](const PotentialSpec& s, const PhaseState& init, std::size_t periods,
             std::size_t steps, double phase) {
              PoincareSection sec;
              {
                  py::gil_scoped_release release;
                  sec = poincare_section(s, init, periods, steps, phase);
              }
              py::list pts;
              for (const SectionPoint& p : sec.points)
                  pts.append(py::make_tuple(p.k, p.t, p.q, p.p));
              py::dict out;
              out["points"] = pts;
              out["dt"] = sec.dt;
              out["steps_per_period"] = sec.steps_per_period;
              out["error"] = sec.error;
              out["action_spread"] = sec.points.size() > 0 && !sec.truncated()
                                         ? py::cast(action_spread(s, sec.points))
                                         : py::none();
              return out;
          },
          py::arg("spec"), py::arg("initial"), py::arg("n_periods"),
          py::arg("steps_per_period") = 1000, py::arg("drive_phase") = 0.0);
    m.def("point_action", &point_action, py::arg("spec"), py::arg("q"), py::arg("p"));
}
