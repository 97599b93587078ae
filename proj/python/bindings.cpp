// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lopsim/analysis.hpp"
#include "lopsim/circuits.hpp"
#include "lopsim/detection.hpp"
#include "lopsim/dsl.hpp"
#include "lopsim/fock.hpp"
#include "lopsim/network.hpp"
#include "lopsim/output.hpp"

namespace py = pybind11;
using namespace lopsim;

namespace {

FlipPort flip_from_string(const std::string& name) {
    if (name == "first") return FlipPort::first;
    if (name == "second") return FlipPort::second;
    throw std::invalid_argument("flip must be 'first' or 'second'");
}

BellState bell_from_string(const std::string& name) {
    for (BellState kind : kBellStates)
        if (to_string(kind) == name) return kind;
    throw std::invalid_argument("bell state must be psi+, psi-, phi+ or phi-");
}

py::dict terms_dict(const PureState& state) {
    py::dict d;
    for (const auto& [ket, amp] : state.terms())
        d[py::tuple(py::cast(ket))] = amp;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact few-photon simulator of linear-optical mode networks";
    m.attr("__version__") = "0.1.0";

    py::class_<PureState>(m, "PureState")
        .def(py::init<int>(), py::arg("mode_count"))
        .def_property_readonly("mode_count", &PureState::mode_count)
        .def("terms", &terms_dict,
             "Sparse amplitudes as a dict {occupation tuple: complex}")
        .def("amplitude", &PureState::amplitude, py::arg("ket"))
        .def("norm", &PureState::norm)
        .def("normalized", &PureState::normalized)
        .def("__len__", [](const PureState& s) { return s.terms().size(); })
        .def("__repr__", [](const PureState& s) {
            return "<PureState over " + std::to_string(s.mode_count()) +
                   " modes, " + std::to_string(s.terms().size()) + " terms>";
        });

    py::class_<CircuitLayout>(m, "CircuitLayout")
        .def_readonly("modes", &CircuitLayout::modes)
        .def_readonly("outputs", &CircuitLayout::outputs)
        .def("index", &CircuitLayout::index, py::arg("name"))
        .def("output", &CircuitLayout::output, py::arg("name"));

    py::class_<GateCircuit>(m, "GateCircuit")
        .def_readonly("transform", &GateCircuit::transform)
        .def_readonly("layout", &GateCircuit::layout);

    py::class_<DetectorGroup>(m, "DetectorGroup")
        .def(py::init([](std::string label, std::vector<int> modes) {
                 return DetectorGroup{std::move(label), std::move(modes)};
             }),
             py::arg("label"), py::arg("modes"))
        .def_readonly("label", &DetectorGroup::label)
        .def_readonly("modes", &DetectorGroup::modes);

    py::class_<RateTable>(m, "RateTable")
        .def_readonly("row_labels", &RateTable::row_labels)
        .def_readonly("col_labels", &RateTable::col_labels)
        .def_readonly("values", &RateTable::values)
        .def("at", &RateTable::at, py::arg("row"), py::arg("col"));

    py::class_<ErrorReport>(m, "ErrorReport")
        .def_readonly("eta", &ErrorReport::eta)
        .def_readonly("eta_prime", &ErrorReport::eta_prime)
        .def_readonly("xi", &ErrorReport::xi)
        .def_readonly("error", &ErrorReport::error)
        .def_readonly("total_rate", &ErrorReport::total_rate);

    py::class_<CircuitDescription>(m, "CircuitDescription")
        .def_readonly("modes", &CircuitDescription::modes)
        .def_readonly("input_photons", &CircuitDescription::input_photons)
        .def("__eq__", [](const CircuitDescription& a, const CircuitDescription& b) {
            return a == b;
        });

    // fock
    m.def("basis_state", &basis_state, py::arg("mode_count"), py::arg("occupied"));
    m.def("vacuum_state", &vacuum_state, py::arg("mode_count"));
    m.def("transform_state", &transform_state, py::arg("state"), py::arg("u"));
    m.def("transition_amplitude", &transition_amplitude, py::arg("u"),
          py::arg("input"), py::arg("output"));
    m.def("inner_product", &inner_product, py::arg("a"), py::arg("b"));
    m.def("enumerate_fock_states", &enumerate_fock_states, py::arg("mode_count"),
          py::arg("photons"));

    // network
    m.def(
        "beamsplitter_matrix",
        [](double eta, const std::string& flip) {
            return Eigen::MatrixXcd(beamsplitter_matrix(eta, flip_from_string(flip)));
        },
        py::arg("eta"), py::arg("flip") = "second");
    m.def("mode_match_matrix",
          [](double xi) { return Eigen::MatrixXcd(mode_match_matrix(xi)); },
          py::arg("xi"));
    m.def(
        "embed_two_mode",
        [](int mode_count, int i, int j, const Eigen::MatrixXcd& m2) {
            if (m2.rows() != 2 || m2.cols() != 2)
                throw std::invalid_argument("embed_two_mode expects a 2x2 matrix");
            return embed_two_mode(mode_count, i, j, Eigen::Matrix2cd(m2));
        },
        py::arg("mode_count"), py::arg("i"), py::arg("j"), py::arg("m"));
    m.def("compose",
          [](const std::vector<ModeTransform>& stages) { return compose(stages); },
          py::arg("stages"),
          "Apply the stages in physical order: compose([A, B]) == B @ A");
    m.def("is_unitary", &is_unitary, py::arg("u"), py::arg("tol") = 1e-12);
    m.def("unitarity_defect", &unitarity_defect, py::arg("u"));

    // circuits
    m.def(
        "build_cnot",
        [](double eta, double etap) { return build_cnot({eta, etap, 1.0}); },
        py::arg("eta") = 1.0 / 3.0, py::arg("etap") = 0.5);
    m.def(
        "build_cnot_mismatch",
        [](double eta, double etap, double xi) {
            return build_cnot_mismatch({eta, etap, xi});
        },
        py::arg("eta") = 1.0 / 3.0, py::arg("etap") = 0.5, py::arg("xi") = 1.0);
    m.def("append_bell_analyzer", &append_bell_analyzer, py::arg("gate"));
    m.def("logical_input_state", &logical_input_state, py::arg("alpha"),
          py::arg("beta"), py::arg("gamma"), py::arg("delta"), py::arg("layout"));
    m.def(
        "bell_input_state",
        [](const std::string& kind, const CircuitLayout& layout) {
            return bell_input_state(bell_from_string(kind), layout);
        },
        py::arg("kind"), py::arg("layout"));
    m.def("logical_detectors", &logical_detectors, py::arg("layout"));
    m.def("bell_detectors", &bell_detectors, py::arg("layout"));

    // detection
    m.def("coincidence_rate", &coincidence_rate, py::arg("state"), py::arg("a"),
          py::arg("b"));
    m.def(
        "postselect_coincidence",
        [](const PureState& state, const std::vector<int>& control,
           const std::vector<int>& target) {
            auto result = postselect_coincidence(state, control, target);
            return py::make_tuple(result.probability,
                                  result.state ? py::cast(*result.state)
                                               : py::none());
        },
        py::arg("state"), py::arg("control"), py::arg("target"));

    // analysis
    m.def(
        "logical_rate_table",
        [](double eta, double etap, double xi) {
            return logical_rate_table({eta, etap, xi});
        },
        py::arg("eta") = 1.0 / 3.0, py::arg("etap") = 0.5, py::arg("xi") = 1.0);
    m.def(
        "bell_rate_table",
        [](double eta, double etap, double xi) {
            return bell_rate_table({eta, etap, xi});
        },
        py::arg("eta") = 1.0 / 3.0, py::arg("etap") = 0.5, py::arg("xi") = 1.0);
    m.def(
        "bell_error_probability",
        [](const RateTable& table, const std::string& input) {
            return bell_error_probability(table, bell_from_string(input));
        },
        py::arg("table"), py::arg("input"));
    m.def(
        "sweep_beamsplitter",
        [](double eta_lo, double eta_hi, int eta_count, double etap_lo,
           double etap_hi, int etap_count) {
            return sweep_beamsplitter({eta_lo, eta_hi, eta_count},
                                      {etap_lo, etap_hi, etap_count});
        },
        py::arg("eta_lo"), py::arg("eta_hi"), py::arg("eta_count"),
        py::arg("etap_lo"), py::arg("etap_hi"), py::arg("etap_count"));
    m.def(
        "sweep_mismatch",
        [](double xi_lo, double xi_hi, int count) {
            return sweep_mismatch({xi_lo, xi_hi, count});
        },
        py::arg("xi_lo"), py::arg("xi_hi"), py::arg("count"));

    // dsl
    m.def("parse_circuit", &parse_circuit, py::arg("text"));
    m.def("serialize_circuit", &serialize, py::arg("description"));
    m.def("lower_circuit",
          [](const CircuitDescription& desc) {
              auto [u, layout] = lower(desc);
              return py::make_tuple(u, layout);
          },
          py::arg("description"));

    py::register_exception<parse_error>(m, "CircuitParseError");
}
