#include "qrabi/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qrabi {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    return b == std::string_view::npos ? std::string{}
                                       : std::string(s.substr(b, e - b + 1));
}

double to_number(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: key '" + key + "' has non-numeric value '" +
                                    value + "'");
    }
}

}  // namespace

void RunConfig::validate() const {
    if (!(root_tolerance > 0.0) || !(series_tolerance > 0.0) ||
        !(state_tail_tolerance > 0.0) || !(convergence_target > 0.0))
        throw std::invalid_argument("config: tolerances must be positive");
    if (n_cap < 8 || oracle_n_max_cap < 8)
        throw std::invalid_argument("config: caps too small");
    if (delta_range.steps < 2 || g_range.steps < 2)
        throw std::invalid_argument("config: sweep steps must be >= 2");
    if (format != "csv" && format != "json" && format != "svg")
        throw std::invalid_argument("config: format must be csv, json, or svg");
}

SolveOptions RunConfig::solve_options() const {
    SolveOptions opts;
    opts.root.root_tolerance = root_tolerance;
    opts.root.series.series_tolerance = series_tolerance;
    opts.root.series.n_cap = n_cap;
    opts.branch.state_tail_tolerance = state_tail_tolerance;
    opts.branch.n_cap = n_cap;
    opts.oracle.e0_target = convergence_target;
    opts.oracle.n_hard_cap = oracle_n_max_cap;
    return opts;
}

RunConfig parse_config(const std::string& text, RunConfig base) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (size_t hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::string entry = trim(line);
        if (entry.empty()) continue;
        size_t eq = entry.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key=value, got '" + entry + "'");
        std::string key = trim(entry.substr(0, eq));
        std::string value = trim(entry.substr(eq + 1));

        if (key == "root_tolerance") base.root_tolerance = to_number(key, value);
        else if (key == "series_tolerance") base.series_tolerance = to_number(key, value);
        else if (key == "state_tail_tolerance") base.state_tail_tolerance = to_number(key, value);
        else if (key == "convergence_target") base.convergence_target = to_number(key, value);
        else if (key == "n_cap") base.n_cap = static_cast<int>(to_number(key, value));
        else if (key == "oracle_n_max_cap") base.oracle_n_max_cap = static_cast<int>(to_number(key, value));
        else if (key == "delta_lo") base.delta_range.lo = to_number(key, value);
        else if (key == "delta_hi") base.delta_range.hi = to_number(key, value);
        else if (key == "delta_steps") base.delta_range.steps = static_cast<int>(to_number(key, value));
        else if (key == "g_lo") base.g_range.lo = to_number(key, value);
        else if (key == "g_hi") base.g_range.hi = to_number(key, value);
        else if (key == "g_steps") base.g_range.steps = static_cast<int>(to_number(key, value));
        else if (key == "workers") base.workers = static_cast<int>(to_number(key, value));
        else if (key == "output") base.output = value;
        else if (key == "format") base.format = value;
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    base.validate();
    return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

}  // namespace qrabi
