// SPDX-License-Identifier: Apache-2.0

#include "lopsim/dsl.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace lopsim {

parse_error::parse_error(ParseErrorKind kind, int line, int column,
                         std::string message)
    : std::runtime_error("line " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;  // comment to end of line
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    CircuitDescription run() {
        std::istringstream stream(text_);
        std::string raw;
        line_ = 0;
        while (std::getline(stream, raw)) {
            ++line_;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            auto tokens = tokenize(raw);
            if (tokens.empty()) continue;
            dispatch(tokens);
        }
        return std::move(desc_);
    }

private:
    [[noreturn]] void fail(ParseErrorKind kind, int column, const std::string& msg) {
        throw parse_error(kind, line_, column, msg);
    }

    void dispatch(const std::vector<Token>& t) {
        const std::string& head = t[0].text;
        if (head == "modes")
            parse_modes(t);
        else if (head == "bs")
            parse_bs(t);
        else if (head == "mm")
            parse_mm(t);
        else if (head == "matrix")
            parse_matrix(t);
        else if (head == "input")
            parse_input(t);
        else if (head == "detector")
            parse_detector(t);
        else
            fail(ParseErrorKind::syntax, t[0].column,
                 "unknown directive '" + head + "'");
    }

    int mode_index(const Token& t) {
        auto it = mode_lookup_.find(t.text);
        if (it == mode_lookup_.end())
            fail(ParseErrorKind::undeclared_mode, t.column,
                 "undeclared mode '" + t.text + "'");
        return it->second;
    }

    double parse_real(const Token& t) {
        if (t.text == "1/3") return 1.0 / 3.0;
        if (t.text == "1/2") return 0.5;
        if (t.text == "2/3") return 2.0 / 3.0;
        double value = 0.0;
        const char* begin = t.text.data();
        const char* end = begin + t.text.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end || !std::isfinite(value))
            fail(ParseErrorKind::syntax, t.column,
                 "expected a number, got '" + t.text + "'");
        return value;
    }

    double parse_unit_interval(const Token& t, const char* what) {
        double value = parse_real(t);
        if (value < 0.0 || value > 1.0)
            fail(ParseErrorKind::parameter_out_of_range, t.column,
                 std::string(what) + " " + t.text + " outside [0,1]");
        return value;
    }

    void parse_modes(const std::vector<Token>& t) {
        if (t.size() < 2)
            fail(ParseErrorKind::syntax, t[0].column, "modes: expected at least one name");
        for (size_t i = 1; i < t.size(); ++i) {
            if (mode_lookup_.count(t[i].text))
                fail(ParseErrorKind::duplicate_mode, t[i].column,
                     "duplicate mode '" + t[i].text + "'");
            mode_lookup_[t[i].text] = static_cast<int>(desc_.modes.size());
            desc_.modes.push_back(t[i].text);
        }
    }

    void parse_bs(const std::vector<Token>& t) {
        if (t.size() != 6)
            fail(ParseErrorKind::syntax, t[0].column,
                 "bs: expected 'bs <label> <portA> <portB> <eta> flip=first|second'");
        BeamsplitterElement e;
        e.label = t[1].text;
        e.port_a = mode_index(t[2]);
        e.port_b = mode_index(t[3]);
        if (e.port_a == e.port_b)
            fail(ParseErrorKind::identical_ports, t[3].column,
                 "identical ports '" + t[3].text + "'");
        e.eta = parse_unit_interval(t[4], "reflectivity");
        if (t[5].text == "flip=first")
            e.flip = FlipPort::first;
        else if (t[5].text == "flip=second")
            e.flip = FlipPort::second;
        else
            fail(ParseErrorKind::syntax, t[5].column,
                 "expected flip=first or flip=second, got '" + t[5].text + "'");
        desc_.elements.emplace_back(std::move(e));
    }

    void parse_mm(const std::vector<Token>& t) {
        if (t.size() != 5)
            fail(ParseErrorKind::syntax, t[0].column,
                 "mm: expected 'mm <label> <portA> <portB> <xi>'");
        ModeMatchElement e;
        e.label = t[1].text;
        e.port_a = mode_index(t[2]);
        e.port_b = mode_index(t[3]);
        if (e.port_a == e.port_b)
            fail(ParseErrorKind::identical_ports, t[3].column,
                 "identical ports '" + t[3].text + "'");
        e.xi = parse_unit_interval(t[4], "mode-match parameter");
        desc_.elements.emplace_back(std::move(e));
    }

    void parse_matrix(const std::vector<Token>& t) {
        const size_t n = desc_.modes.size();
        if (t.size() != 2 + n * n)
            fail(ParseErrorKind::syntax, t[0].column,
                 "matrix: expected a label and " + std::to_string(n * n) +
                     " row-major entries");
        MatrixElement e;
        e.label = t[1].text;
        e.entries.reserve(n * n);
        for (size_t i = 2; i < t.size(); ++i) e.entries.push_back(parse_real(t[i]));
        desc_.elements.emplace_back(std::move(e));
    }

    void parse_input(const std::vector<Token>& t) {
        if (t.size() < 3 || t[1].text != "photon")
            fail(ParseErrorKind::syntax, t.size() > 1 ? t[1].column : t[0].column,
                 "input: expected 'input photon <mode>+'");
        for (size_t i = 2; i < t.size(); ++i)
            desc_.input_photons.push_back(mode_index(t[i]));
    }

    void parse_detector(const std::vector<Token>& t) {
        if (t.size() < 3)
            fail(ParseErrorKind::syntax, t[0].column,
                 "detector: expected 'detector <label> <mode>+'");
        DetectorSpec d;
        d.label = t[1].text;
        for (size_t i = 2; i < t.size(); ++i) {
            int mode = mode_index(t[i]);
            for (int seen : d.modes)
                if (seen == mode)
                    fail(ParseErrorKind::duplicate_mode, t[i].column,
                         "duplicate mode '" + t[i].text + "' in detector group");
            d.modes.push_back(mode);
        }
        desc_.detectors.push_back(std::move(d));
    }

    const std::string& text_;
    CircuitDescription desc_;
    std::map<std::string, int> mode_lookup_;
    int line_ = 0;
};

std::string real_token(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

}  // namespace

CircuitDescription parse_circuit(const std::string& text) {
    return Parser(text).run();
}

std::string serialize(const CircuitDescription& desc) {
    std::string out;
    if (!desc.modes.empty()) {
        out += "modes";
        for (const auto& name : desc.modes) out += " " + name;
        out += "\n";
    }
    for (const auto& element : desc.elements) {
        if (const auto* bs = std::get_if<BeamsplitterElement>(&element)) {
            out += "bs " + bs->label + " " + desc.modes[bs->port_a] + " " +
                   desc.modes[bs->port_b] + " " + real_token(bs->eta) +
                   (bs->flip == FlipPort::first ? " flip=first" : " flip=second") +
                   "\n";
        } else if (const auto* mm = std::get_if<ModeMatchElement>(&element)) {
            out += "mm " + mm->label + " " + desc.modes[mm->port_a] + " " +
                   desc.modes[mm->port_b] + " " + real_token(mm->xi) + "\n";
        } else if (const auto* mat = std::get_if<MatrixElement>(&element)) {
            out += "matrix " + mat->label;
            for (double entry : mat->entries) out += " " + real_token(entry);
            out += "\n";
        }
    }
    if (!desc.input_photons.empty()) {
        out += "input photon";
        for (int mode : desc.input_photons) out += " " + desc.modes[mode];
        out += "\n";
    }
    for (const auto& det : desc.detectors) {
        out += "detector " + det.label;
        for (int mode : det.modes) out += " " + desc.modes[mode];
        out += "\n";
    }
    return out;
}

std::pair<ModeTransform, CircuitLayout> lower(const CircuitDescription& desc) {
    const int n = static_cast<int>(desc.modes.size());
    ModeTransform u = ModeTransform::Identity(n, n);
    for (const auto& element : desc.elements) {
        if (const auto* bs = std::get_if<BeamsplitterElement>(&element)) {
            u = embed_two_mode(n, bs->port_a, bs->port_b,
                               beamsplitter_matrix(bs->eta, bs->flip)) *
                u;
        } else if (const auto* mm = std::get_if<ModeMatchElement>(&element)) {
            u = embed_two_mode(n, mm->port_a, mm->port_b,
                               mode_match_matrix(mm->xi)) *
                u;
        } else if (const auto* mat = std::get_if<MatrixElement>(&element)) {
            ModeTransform raw(n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    raw(r, c) = mat->entries[static_cast<size_t>(r) * n + c];
            u = raw * u;
        }
    }
    CircuitLayout layout;
    layout.modes = desc.modes;
    return {std::move(u), std::move(layout)};
}

}  // namespace lopsim
