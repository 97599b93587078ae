// SPDX-License-Identifier: Apache-2.0
//
// Plain-text circuit description format (.lop): a line-oriented grammar for
// mode declarations, network elements, photon inputs and detector groups.
//
//   modes <name>+
//   bs <label> <portA> <portB> <eta> flip=first|second
//   mm <label> <portA> <portB> <xi>
//   matrix <label> <N*N row-major reals>     (raw-transform escape hatch)
//   input photon <mode>+                     (repeatable; one photon per name)
//   detector <label> <mode>+
//   # comment
//
// Element order is application order. Reflectivities accept decimal literals
// plus the exact tokens 1/3, 1/2 and 2/3.

#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lopsim/circuits.hpp"
#include "lopsim/fock.hpp"
#include "lopsim/network.hpp"

namespace lopsim {

enum class ParseErrorKind {
    syntax,
    undeclared_mode,
    duplicate_mode,
    parameter_out_of_range,
    identical_ports,
};

class parse_error : public std::runtime_error {
public:
    parse_error(ParseErrorKind kind, int line, int column, std::string message);

    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }      // 1-based
    int column() const { return column_; }  // 1-based

private:
    ParseErrorKind kind_;
    int line_;
    int column_;
};

struct BeamsplitterElement {
    std::string label;
    int port_a = 0;
    int port_b = 0;
    double eta = 0.0;
    FlipPort flip = FlipPort::second;

    bool operator==(const BeamsplitterElement&) const = default;
};

struct ModeMatchElement {
    std::string label;
    int port_a = 0;
    int port_b = 0;
    double xi = 0.0;

    bool operator==(const ModeMatchElement&) const = default;
};

struct MatrixElement {
    std::string label;
    std::vector<double> entries;  // row-major, mode_count^2

    bool operator==(const MatrixElement&) const = default;
};

using Element = std::variant<BeamsplitterElement, ModeMatchElement, MatrixElement>;

struct DetectorSpec {
    std::string label;
    std::vector<int> modes;

    bool operator==(const DetectorSpec&) const = default;
};

struct CircuitDescription {
    std::vector<std::string> modes;
    std::vector<Element> elements;
    std::vector<int> input_photons;  // one entry per photon: the mode index
    std::vector<DetectorSpec> detectors;

    bool operator==(const CircuitDescription&) const = default;
};

CircuitDescription parse_circuit(const std::string& text);

/// Canonical text form: declarations in original order, one element per
/// line, parameters at 17 significant digits. parse(serialize(d)) == d.
std::string serialize(const CircuitDescription& desc);

/// Composes the embedded elements in listed order. The result is unitary for
/// any bs/mm circuit; matrix elements can break that, which `unitarity_defect`
/// then exposes.
std::pair<ModeTransform, CircuitLayout> lower(const CircuitDescription& desc);

}  // namespace lopsim
