#include "qrabi/csv.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "qrabi/errors.hpp"

namespace qrabi {

namespace {

std::string sanitize(std::string s) {
    for (char& c : s) {
        if (c == ',') c = ';';
        if (c == '\n' || c == '\r') c = ' ';
    }
    return s;
}

double parse_double(std::string_view s) {
    if (s.empty()) return 0.0;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("parse_csv: bad number '" + std::string(s) + "'");
    return v;
}

int parse_int(std::string_view s) {
    if (s.empty()) return 0;
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("parse_csv: bad integer '" + std::string(s) + "'");
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string to_csv(const std::vector<SweepRecord>& records) {
    std::string out;
    out.reserve(records.size() * 160 + 256);
    out += kCsvHeader;
    out += '\n';
    for (const auto& rec : records) {
        out += format_double(rec.delta);
        out += ',';
        out += format_double(rec.g);
        out += ',';
        out += format_double(rec.lambda);
        out += ',';
        out += to_string(rec.phase);
        out += ',';
        if (rec.ok()) {
            out += to_string(rec.parity);
            out += ',';
            out += format_double(rec.x_root);
            out += ',';
            out += format_double(rec.energy);
            out += ',';
            out += format_double(rec.residual);
            out += ',';
            out += format_double(rec.stats.mean_n);
            out += ',';
            out += format_double(rec.stats.var_n);
            out += ',';
            out += format_double(rec.stats.q_excess);
            out += ',';
            // derived column, guarded against an empty mode
            if (rec.stats.mean_n >= 1e-12)
                out += format_double(rec.stats.q_excess / rec.stats.mean_n);
            out += ',';
            out += format_double(rec.stats.mean_x);
            out += ',';
            out += format_double(rec.stats.dx);
            out += ',';
            out += format_double(rec.stats.dp);
            out += ',';
            out += format_double(rec.stats.product);
            out += ',';
            out += format_double(rec.stats.r);
            out += ',';
            out += format_double(rec.stats.overlap);
            out += ',';
            out += format_double(rec.stats.cov_xp);
            out += ',';
            out += std::to_string(rec.truncation_n);
            out += ',';
        } else {
            out += ",,,,,,,,,,,,,,,,";
        }
        out += sanitize(rec.error);
        out += '\n';
    }
    return out;
}

std::vector<SweepRecord> parse_csv(std::string_view text) {
    std::vector<SweepRecord> records;
    size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                           : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        if (line.empty()) continue;
        if (first) {
            if (line != kCsvHeader)
                throw std::invalid_argument("parse_csv: unexpected header '" +
                                            std::string(line) + "'");
            first = false;
            continue;
        }
        std::vector<std::string_view> cells;
        size_t c = 0;
        for (int field = 0; field < 20; ++field) {
            size_t comma = line.find(',', c);
            if (comma == std::string_view::npos)
                throw std::invalid_argument("parse_csv: short row '" + std::string(line) +
                                            "'");
            cells.push_back(line.substr(c, comma - c));
            c = comma + 1;
        }
        cells.push_back(line.substr(c));  // error column may contain anything

        SweepRecord rec;
        rec.delta = parse_double(cells[0]);
        rec.g = parse_double(cells[1]);
        rec.lambda = parse_double(cells[2]);
        rec.phase = cells[3] == "superradiant" ? Phase::superradiant : Phase::normal;
        rec.error = std::string(cells[20]);
        if (rec.ok()) {
            rec.parity = cells[4] == "plus" ? Parity::plus : Parity::minus;
            rec.x_root = parse_double(cells[5]);
            rec.energy = parse_double(cells[6]);
            rec.residual = parse_double(cells[7]);
            rec.stats.mean_n = parse_double(cells[8]);
            rec.stats.var_n = parse_double(cells[9]);
            rec.stats.q_excess = parse_double(cells[10]);
            rec.stats.mean_x = parse_double(cells[12]);
            rec.stats.dx = parse_double(cells[13]);
            rec.stats.dp = parse_double(cells[14]);
            rec.stats.product = parse_double(cells[15]);
            rec.stats.r = parse_double(cells[16]);
            rec.stats.overlap = parse_double(cells[17]);
            rec.stats.cov_xp = parse_double(cells[18]);
            rec.truncation_n = parse_int(cells[19]);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace qrabi
