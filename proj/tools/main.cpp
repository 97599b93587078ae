// SPDX-License-Identifier: Apache-2.0
//
// lopsim command line: emit coincidence tables, run error sweeps, simulate
// circuit files and validate their unitarity.
//
// Exit codes: 0 success, 2 usage error, 3 circuit parse error,
// 4 validation failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lopsim/analysis.hpp"
#include "lopsim/circuits.hpp"
#include "lopsim/detection.hpp"
#include "lopsim/dsl.hpp"
#include "lopsim/output.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitValidation = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

lopsim::Range parse_range(const std::string& text, const std::string& flag) {
    lopsim::Range range;
    char sep1 = 0, sep2 = 0;
    std::istringstream in(text);
    if (!(in >> range.lo >> sep1 >> range.hi >> sep2 >> range.count) ||
        sep1 != ':' || sep2 != ':' || !in.eof() || range.count < 1)
        throw UsageError(flag + ": expected lo:hi:count, got '" + text + "'");
    if (range.lo < 0.0 || range.hi > 1.0 || range.lo > range.hi)
        throw UsageError(flag + ": range must satisfy 0 <= lo <= hi <= 1");
    if (range.count == 1 && range.lo != range.hi)
        throw UsageError(flag + ": a single-point range needs lo == hi");
    return range;
}

std::string range_token(const lopsim::Range& range) {
    return lopsim::format_double(range.lo) + ":" + lopsim::format_double(range.hi) +
           ":" + std::to_string(range.count);
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> names;
    std::string current;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!current.empty()) names.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) names.push_back(std::move(current));
    return names;
}

void write_output(const std::string& payload, const std::string& path) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file '" + path + "'");
    out << payload;
}

lopsim::OutputFormat to_format(const std::string& name) {
    return name == "json" ? lopsim::OutputFormat::json : lopsim::OutputFormat::csv;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lopsim::parse_error(lopsim::ParseErrorKind::syntax, 1, 1,
                                       "cannot open circuit file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_tables(const std::string& which, double eta, double etap, double xi,
               const std::string& format, const std::string& out_path) {
    lopsim::GateParams params{eta, etap, xi};
    lopsim::RateTable table = which == "bell" ? lopsim::bell_rate_table(params)
                                              : lopsim::logical_rate_table(params);
    lopsim::RunInfo info;
    info.command = "tables " + which;
    info.params = {{"eta", lopsim::format_double(eta)},
                   {"etap", lopsim::format_double(etap)},
                   {"xi", lopsim::format_double(xi)}};
    write_output(lopsim::emit_rate_table(table, info, to_format(format)), out_path);
    return kExitOk;
}

int run_sweep(const std::string& kind, const std::string& eta_text,
              const std::string& etap_text, const std::string& xi_text,
              const std::string& format, const std::string& out_path) {
    lopsim::RunInfo info;
    info.command = "sweep " + kind;
    std::vector<lopsim::ErrorReport> reports;
    bool mismatch = kind == "mismatch";
    if (mismatch) {
        lopsim::Range xi = parse_range(xi_text, "--xi");
        info.params = {{"xi", range_token(xi)}};
        reports = lopsim::sweep_mismatch(xi);
    } else {
        lopsim::Range eta = parse_range(eta_text, "--eta");
        lopsim::Range etap = parse_range(etap_text, "--etap");
        info.params = {{"eta", range_token(eta)}, {"etap", range_token(etap)}};
        reports = lopsim::sweep_beamsplitter(eta, etap);
    }
    write_output(lopsim::emit_error_reports(reports, mismatch, info, to_format(format)),
                 out_path);
    return kExitOk;
}

int run_simulate(const std::string& path, const std::string& input_override,
                 bool print_state, const std::string& postselect_spec,
                 const std::string& format, const std::string& out_path) {
    lopsim::CircuitDescription desc = lopsim::parse_circuit(read_file(path));
    auto [transform, layout] = lopsim::lower(desc);

    std::vector<int> photons = desc.input_photons;
    if (!input_override.empty()) {
        photons.clear();
        for (const auto& name : split_names(input_override))
            photons.push_back(layout.index(name));
    }
    if (photons.size() > 2)
        throw ValidationError("at most two input photons are supported");

    lopsim::PureState input = lopsim::basis_state(layout.mode_count(), photons);
    lopsim::PureState output = lopsim::transform_state(input, transform);

    std::vector<lopsim::DetectorGroup> groups;
    for (const auto& det : desc.detectors) groups.push_back({det.label, det.modes});
    if (groups.size() < 2) {
        groups.clear();
        for (int m = 0; m < layout.mode_count(); ++m)
            groups.push_back({layout.modes[m], {m}});
    }

    lopsim::SimulationResult result;
    for (size_t i = 0; i < groups.size(); ++i)
        for (size_t j = i + 1; j < groups.size(); ++j)
            result.rates.emplace_back(
                groups[i].label, groups[j].label,
                lopsim::coincidence_rate(output, groups[i], groups[j]));
    if (print_state) result.output_state = output;

    if (!postselect_spec.empty()) {
        auto colon = postselect_spec.find(':');
        if (colon == std::string::npos)
            throw UsageError("--postselect: expected <control modes>:<target modes>");
        std::vector<int> control, target;
        for (const auto& name : split_names(postselect_spec.substr(0, colon)))
            control.push_back(layout.index(name));
        for (const auto& name : split_names(postselect_spec.substr(colon + 1)))
            target.push_back(layout.index(name));
        auto post = lopsim::postselect_coincidence(output, control, target);
        result.postselected = true;
        result.postselect_probability = post.probability;
        result.postselected_state = post.state;
    }

    lopsim::RunInfo info;
    info.command = "simulate";
    info.params = {{"circuit", path}};
    write_output(lopsim::emit_simulation(result, info, to_format(format)), out_path);
    return kExitOk;
}

int run_check(const std::string& path) {
    lopsim::CircuitDescription desc = lopsim::parse_circuit(read_file(path));
    auto [transform, layout] = lopsim::lower(desc);
    double defect = layout.mode_count() == 0 ? 0.0
                                             : lopsim::unitarity_defect(transform);
    std::cout << "unitarity defect " << lopsim::format_double(defect) << "\n";
    if (defect > 1e-12) {
        std::cout << "FAIL\n";
        return kExitValidation;
    }
    std::cout << "OK\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact few-photon simulator of linear-optical mode networks"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("-o,--output", out_path, "Write to a file instead of stdout");
    };

    // tables
    std::string which = "logical";
    double eta = 1.0 / 3.0;
    double etap = 0.5;
    double xi = 1.0;
    CLI::App* tables = app.add_subcommand("tables", "Coincidence tables");
    tables->add_option("which", which, "logical or bell")
        ->required()
        ->check(CLI::IsMember({"logical", "bell"}));
    tables->add_option("--eta", eta, "Reflectivity of the nominal 1/3 beamsplitters")
        ->check(CLI::Range(0.0, 1.0));
    tables->add_option("--etap", etap, "Reflectivity of the nominal 1/2 beamsplitters")
        ->check(CLI::Range(0.0, 1.0));
    tables->add_option("--xi", xi, "Mode-match parameter")
        ->check(CLI::Range(0.0, 1.0));
    add_io(tables);

    // sweep
    std::string sweep_kind;
    std::string eta_range = "0.28:0.38:101";
    std::string etap_range = "0.4:0.6:101";
    std::string xi_range = "0.8:1:201";
    CLI::App* sweep = app.add_subcommand("sweep", "Bell-discrimination error sweeps");
    sweep->add_option("kind", sweep_kind, "bs or mismatch")
        ->required()
        ->check(CLI::IsMember({"bs", "mismatch"}));
    sweep->add_option("--eta", eta_range, "eta range lo:hi:count");
    sweep->add_option("--etap", etap_range, "eta' range lo:hi:count");
    sweep->add_option("--xi", xi_range, "xi range lo:hi:count");
    add_io(sweep);

    // simulate
    std::string circuit_path;
    std::string input_override;
    std::string postselect_spec;
    bool print_state = false;
    CLI::App* simulate = app.add_subcommand("simulate", "Propagate a circuit file");
    simulate->add_option("circuit", circuit_path, "Circuit file (.lop)")->required();
    simulate->add_option("--input", input_override,
                         "Photon modes, overriding the file's input lines");
    simulate->add_flag("--state", print_state, "Include the full output state");
    simulate->add_option("--postselect", postselect_spec,
                         "Coincidence post-selection: <control modes>:<target modes>");
    add_io(simulate);

    // check
    std::string check_path;
    CLI::App* check = app.add_subcommand("check", "Validate a circuit file");
    check->add_option("circuit", check_path, "Circuit file (.lop)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (tables->parsed())
            return run_tables(which, eta, etap, xi, format, out_path);
        if (sweep->parsed())
            return run_sweep(sweep_kind, eta_range, etap_range, xi_range, format,
                             out_path);
        if (simulate->parsed())
            return run_simulate(circuit_path, input_override, print_state,
                                postselect_spec, format, out_path);
        if (check->parsed()) return run_check(check_path);
    } catch (const lopsim::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
