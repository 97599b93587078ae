// SPDX-License-Identifier: Apache-2.0

#include "lopsim/output.hpp"

#include <charconv>
#include <system_error>

#include <json.hpp>

namespace lopsim {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

namespace {

std::string csv_preamble(const RunInfo& info) {
    std::string out = std::string("# ") + kToolVersion + "\n";
    out += "# command: " + info.command + "\n";
    for (const auto& [key, value] : info.params)
        out += "# " + key + "=" + value + "\n";
    return out;
}

ordered_json json_header(const RunInfo& info) {
    ordered_json j;
    j["tool"] = kToolVersion;
    j["command"] = info.command;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : info.params) params[key] = value;
    j["params"] = params;
    return j;
}

std::string ket_string(const FockState& ket) {
    std::string s;
    s.reserve(ket.size());
    for (int n : ket) s += static_cast<char>('0' + n);
    return s;
}

ordered_json state_json(const PureState& state) {
    ordered_json terms = ordered_json::array();
    for (const auto& [ket, amp] : state.terms()) {
        ordered_json term;
        term["ket"] = ket;
        term["re"] = amp.real();
        term["im"] = amp.imag();
        terms.push_back(std::move(term));
    }
    return terms;
}

std::string state_csv(const PureState& state) {
    std::string out = "ket,re,im\n";
    for (const auto& [ket, amp] : state.terms())
        out += ket_string(ket) + "," + format_double(amp.real()) + "," +
               format_double(amp.imag()) + "\n";
    return out;
}

}  // namespace

std::string emit_rate_table(const RateTable& table, const RunInfo& info,
                            OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json j = json_header(info);
        j["columns"] = table.col_labels;
        ordered_json rows = ordered_json::array();
        for (size_t r = 0; r < table.row_labels.size(); ++r) {
            ordered_json row;
            row["input"] = table.row_labels[r];
            row["rates"] = table.values[r];
            rows.push_back(std::move(row));
        }
        j["rows"] = rows;
        return j.dump(2) + "\n";
    }

    std::string out = csv_preamble(info);
    out += "input";
    for (const auto& col : table.col_labels) out += "," + col;
    out += "\n";
    for (size_t r = 0; r < table.row_labels.size(); ++r) {
        out += table.row_labels[r];
        for (double v : table.values[r]) out += "," + format_double(v);
        out += "\n";
    }
    return out;
}

std::string emit_error_reports(const std::vector<ErrorReport>& reports,
                               bool mismatch_sweep, const RunInfo& info,
                               OutputFormat format) {
    static const char* kErrorCols[4] = {"err_psi+", "err_psi-", "err_phi+",
                                        "err_phi-"};
    if (format == OutputFormat::json) {
        ordered_json j = json_header(info);
        ordered_json rows = ordered_json::array();
        for (const auto& report : reports) {
            ordered_json row;
            if (mismatch_sweep) {
                row["xi"] = report.xi;
            } else {
                row["eta"] = report.eta;
                row["etap"] = report.eta_prime;
            }
            for (int i = 0; i < 4; ++i) row[kErrorCols[i]] = report.error[i];
            ordered_json totals = ordered_json::array();
            for (int i = 0; i < 4; ++i) totals.push_back(report.total_rate[i]);
            row["total_rate"] = totals;
            rows.push_back(std::move(row));
        }
        j["rows"] = rows;
        return j.dump(2) + "\n";
    }

    std::string out = csv_preamble(info);
    out += mismatch_sweep ? "xi" : "eta,etap";
    for (const char* col : kErrorCols) out += std::string(",") + col;
    out += "\n";
    for (const auto& report : reports) {
        if (mismatch_sweep)
            out += format_double(report.xi);
        else
            out += format_double(report.eta) + "," + format_double(report.eta_prime);
        for (int i = 0; i < 4; ++i) out += "," + format_double(report.error[i]);
        out += "\n";
    }
    return out;
}

std::string emit_simulation(const SimulationResult& result, const RunInfo& info,
                            OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json j = json_header(info);
        ordered_json rates = ordered_json::array();
        for (const auto& [a, b, rate] : result.rates) {
            ordered_json row;
            row["detector_a"] = a;
            row["detector_b"] = b;
            row["rate"] = rate;
            rates.push_back(std::move(row));
        }
        j["rates"] = rates;
        if (result.output_state) j["state"] = state_json(*result.output_state);
        if (result.postselected) {
            j["postselect_probability"] = result.postselect_probability;
            j["postselected_state"] = result.postselected_state
                                          ? state_json(*result.postselected_state)
                                          : ordered_json::array();
        }
        return j.dump(2) + "\n";
    }

    std::string out = csv_preamble(info);
    out += "detector_a,detector_b,rate\n";
    for (const auto& [a, b, rate] : result.rates)
        out += a + "," + b + "," + format_double(rate) + "\n";
    if (result.output_state) {
        out += "\n";
        out += state_csv(*result.output_state);
    }
    if (result.postselected) {
        out += "\n# postselect_probability=" +
               format_double(result.postselect_probability) + "\n";
        if (result.postselected_state) out += state_csv(*result.postselected_state);
    }
    return out;
}

}  // namespace lopsim
