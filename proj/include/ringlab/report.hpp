#pragma once

// Report documents: one payload record per row, rendered either as an aligned
// human table or as a line-delimited machine format (tab-separated fields:
// kind, ring, flag_or_check, status, witness, nanos).  The machine format
// round-trips through parse_machine.

#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"

namespace ringlab {

struct ReportRecord {
    std::string kind;           // meta | census | count | element | check | witness | stat | note
    std::string ring;
    std::string flag_or_check;
    std::string status;
    std::string witness;
    long long nanos = 0;
};

struct ReportDocument {
    std::string command;
    std::string spec;
    std::string caps_text;
    std::string timestamp;
    std::vector<ReportRecord> rows;
};

namespace detail {

inline std::string sanitize_field(std::string s) {
    for (char& c : s)
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    if (s.empty()) s = "-";
    return s;
}

} // namespace detail

inline std::string render_machine(const ReportDocument& doc) {
    std::ostringstream out;
    auto row = [&](const ReportRecord& r) {
        out << detail::sanitize_field(r.kind) << '\t' << detail::sanitize_field(r.ring) << '\t'
            << detail::sanitize_field(r.flag_or_check) << '\t'
            << detail::sanitize_field(r.status) << '\t' << detail::sanitize_field(r.witness)
            << '\t' << r.nanos << '\n';
    };
    row({"meta", "-", "command", "-", doc.command, 0});
    row({"meta", "-", "spec", "-", doc.spec, 0});
    row({"meta", "-", "caps", "-", doc.caps_text, 0});
    row({"meta", "-", "timestamp", "-", doc.timestamp, 0});
    for (const auto& r : doc.rows) row(r);
    return out.str();
}

inline ReportDocument parse_machine(const std::string& text) {
    ReportDocument doc;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == '\t') {
                f.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (f.size() != 6) throw InputError("bad machine report line: '" + line + "'");
        ReportRecord r{f[0], f[1], f[2], f[3], f[4], 0};
        try {
            r.nanos = std::stoll(f[5]);
        } catch (...) {
            throw InputError("bad nanos field in line: '" + line + "'");
        }
        if (r.kind == "meta") {
            if (r.flag_or_check == "command") doc.command = r.witness;
            else if (r.flag_or_check == "spec") doc.spec = r.witness;
            else if (r.flag_or_check == "caps") doc.caps_text = r.witness;
            else if (r.flag_or_check == "timestamp") doc.timestamp = r.witness;
            continue;
        }
        doc.rows.push_back(std::move(r));
    }
    return doc;
}

inline std::string render_human(const ReportDocument& doc) {
    std::ostringstream out;
    out << "# " << doc.command;
    if (!doc.spec.empty() && doc.spec != "-") out << "  [" << doc.spec << "]";
    out << "\n";
    if (!doc.caps_text.empty() && doc.caps_text != "-") out << "# caps: " << doc.caps_text << "\n";

    std::vector<std::vector<std::string>> cells;
    cells.push_back({"kind", "ring", "flag/check", "status", "witness"});
    for (const auto& r : doc.rows)
        cells.push_back({r.kind, r.ring, r.flag_or_check, r.status,
                         r.witness.empty() ? "-" : r.witness});
    std::vector<std::size_t> w(5, 0);
    for (const auto& row : cells)
        for (std::size_t i = 0; i < 5; ++i) w[i] = std::max(w[i], row[i].size());
    for (std::size_t ri = 0; ri < cells.size(); ++ri) {
        for (std::size_t i = 0; i < 5; ++i) {
            out << cells[ri][i];
            if (i + 1 < 5) out << std::string(w[i] - cells[ri][i].size() + 2, ' ');
        }
        out << "\n";
        if (ri == 0) {
            std::size_t total = 0;
            for (std::size_t i = 0; i < 5; ++i) total += w[i] + (i + 1 < 5 ? 2 : 0);
            out << std::string(total, '-') << "\n";
        }
    }
    return out.str();
}

} // namespace ringlab
