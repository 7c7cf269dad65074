#include "levi/psl_io.hpp"

#include "levi/errors.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace levi {

namespace {

void print_row(std::ostringstream& out, const char* key, std::span<const Dart> values) {
    out << key << ':';
    for (Dart v : values) out << ' ' << v;
    out << '\n';
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<Dart> parse_ints(const std::string& body, int line) {
    std::vector<Dart> out;
    std::istringstream in(body);
    std::string tok;
    while (in >> tok) {
        Dart v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError(line, "not an integer: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

std::string print_psl(const PslDocument& doc) {
    const Arrangement arr = canonical_relabel(doc.arrangement);
    const auto& m = arr.map();
    std::ostringstream out;
    out << "psl " << doc.version << '\n';
    out << "darts " << m.size() << '\n';
    print_row(out, "sigma", m.sigma_array());
    print_row(out, "alpha", m.alpha_array());
    print_row(out, "tau", m.tau_array());
    print_row(out, "labels", arr.dart_curves());
    for (const auto& [cell, name] : doc.names) out << "name " << cell << ' ' << name << '\n';
    return out.str();
}

std::string print_psl(const Arrangement& arr) {
    PslDocument doc;
    doc.arrangement = arr;
    return print_psl(doc);
}

PslDocument parse_psl_document(const std::string& text) {
    PslDocument doc;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    int header_line = 0;
    std::optional<Dart> darts;
    std::optional<std::vector<Dart>> rows[4];
    const char* keys[4] = {"sigma", "alpha", "tau", "labels"};
    int last_line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        last_line = line;
        if (!header_line) {
            if (s.rfind("psl", 0) != 0) throw ParseError(line, "expected header 'psl 1'");
            auto v = parse_ints(s.substr(3), line);
            if (v.size() != 1) throw ParseError(line, "expected header 'psl 1'");
            if (v[0] != 1) throw ParseError(line, "unsupported version " + std::to_string(v[0]));
            doc.version = v[0];
            header_line = line;
            continue;
        }
        if (s.rfind("name ", 0) == 0) {
            std::istringstream ns(s.substr(5));
            std::string cell, rest;
            ns >> cell;
            std::getline(ns, rest);
            rest = trim(rest);
            if (cell.empty() || rest.empty()) throw ParseError(line, "name line needs a cell and a name");
            doc.names[cell] = rest;
            continue;
        }
        if (s.rfind("darts", 0) == 0 && (s.size() == 5 || s[5] == ' ' || s[5] == '\t')) {
            if (darts) throw ParseError(line, "duplicate 'darts' line");
            auto v = parse_ints(s.substr(5), line);
            if (v.size() != 1 || v[0] < 0 || v[0] % 4 != 0)
                throw ParseError(line, "dart count must be a non-negative multiple of 4");
            darts = v[0];
            continue;
        }
        const auto colon = s.find(':');
        if (colon == std::string::npos) throw ParseError(line, "unrecognized line");
        const std::string key = trim(s.substr(0, colon));
        int slot = -1;
        for (int k = 0; k < 4; ++k)
            if (key == keys[k]) slot = k;
        if (slot < 0) throw ParseError(line, "unknown key '" + key + "'");
        if (!darts) throw ParseError(line, "'darts' must precede '" + key + "'");
        if (rows[slot]) throw ParseError(line, "duplicate '" + key + "' line");
        auto v = parse_ints(s.substr(colon + 1), line);
        if (static_cast<Dart>(v.size()) != *darts)
            throw ParseError(line, key + " has " + std::to_string(v.size()) + " entries, expected " +
                                       std::to_string(*darts));
        rows[slot] = std::move(v);
    }
    if (!header_line) throw ParseError(line, "expected header 'psl 1'");
    if (!darts) throw ParseError(last_line, "missing 'darts' line");
    for (int k = 0; k < 4; ++k)
        if (!rows[k]) throw ParseError(last_line, std::string("missing '") + keys[k] + "' line");
    for (Dart v : *rows[3])
        if (v < 0) throw ParseError(last_line, "negative curve label");
    if (*darts == 0) return doc;
    auto map = CombMap::build(std::move(*rows[0]), std::move(*rows[1]), std::move(*rows[2]));
    doc.arrangement = Arrangement(std::move(map), std::vector<CurveId>(rows[3]->begin(), rows[3]->end()));
    return doc;
}

Arrangement parse_psl(const std::string& text) { return parse_psl_document(text).arrangement; }

std::string export_crossing_lists(const Arrangement& arr) {
    const auto& m = arr.map();
    std::ostringstream out;
    out << "curves " << arr.size() << '\n';
    for (CurveId c = 0; c < arr.size(); ++c) {
        const auto cycle = arr.curve_cycle(c);
        out << "curve " << c << ':';
        // half the cover cycle is the quotient curve
        for (std::size_t i = 0; i < cycle.size() / 2; ++i)
            out << ' ' << cell_index(arr, m.vertex_cell(cycle[i]));
        out << '\n';
    }
    for (const auto& v : cells(m).vertices) {
        out << "vertex " << cell_index(arr, v) << ':';
        for (CurveId c : arr.curves_at_vertex(v.orbit)) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

}  // namespace levi
