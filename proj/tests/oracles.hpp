// Shared test helpers: independent oracles (elliptic integral, period
// measurement), a minimal XML well-formedness check, CSV parsing, and a
// process runner for CLI tests.
#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "openph/numcore/series.hpp"

namespace testutil {

// Complete elliptic integral of the first kind, modulus k; computed with the
// arithmetic-geometric mean, independent of any library code under test.
inline double elliptic_K_modulus(double k) {
    double a = 1.0;
    double b = std::sqrt(1.0 - k * k);
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-17 * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return M_PI / (2.0 * a);
}

// Oscillation period from zero crossings of one column (linear interpolation
// between samples). Crossings are half a period apart.
inline double measure_period(const openph::numcore::TimeSeries& ts, std::size_t t_col,
                             std::size_t v_col) {
    std::vector<double> crossings;
    for (std::size_t i = 0; i + 1 < ts.rows(); ++i) {
        const double a = ts.at(i, v_col);
        const double b = ts.at(i + 1, v_col);
        if (a * b < 0.0) {
            const double ta = ts.at(i, t_col);
            const double tb = ts.at(i + 1, t_col);
            crossings.push_back(ta + (tb - ta) * (-a) / (b - a));
        }
    }
    if (crossings.size() < 2) throw std::runtime_error("measure_period: too few zero crossings");
    return 2.0 * (crossings.back() - crossings.front()) /
           static_cast<double>(crossings.size() - 1);
}

// Minimal well-formedness check: prolog allowed, tags balanced, attributes
// quoted, text free of stray '<' and of '&' outside entities.
inline bool xml_well_formed(std::string_view doc) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    const std::size_t n = doc.size();

    const auto entity_ok = [&](std::size_t pos) {
        static const char* entities[] = {"&amp;", "&lt;", "&gt;", "&quot;", "&apos;"};
        for (const char* e : entities)
            if (doc.compare(pos, std::string_view(e).size(), e) == 0) return true;
        if (pos + 1 < n && doc[pos + 1] == '#') {
            std::size_t j = pos + 2;
            while (j < n && std::isdigit(static_cast<unsigned char>(doc[j]))) ++j;
            return j > pos + 2 && j < n && doc[j] == ';';
        }
        return false;
    };

    while (i < n) {
        if (doc[i] == '<') {
            if (i + 1 < n && doc[i + 1] == '?') {  // prolog/processing instruction
                const auto end = doc.find("?>", i);
                if (end == std::string_view::npos) return false;
                i = end + 2;
                continue;
            }
            const auto close = doc.find('>', i);
            if (close == std::string_view::npos) return false;
            std::string_view tag = doc.substr(i + 1, close - i - 1);
            if (tag.find('<') != std::string_view::npos) return false;

            // Inside the tag, quotes must pair up.
            int quotes = 0;
            for (char c : tag)
                if (c == '"') ++quotes;
            if (quotes % 2 != 0) return false;

            if (!tag.empty() && tag.front() == '/') {  // closing tag
                const std::string name(tag.substr(1));
                if (stack.empty() || stack.back() != name) return false;
                stack.pop_back();
            } else {
                bool self_closing = !tag.empty() && tag.back() == '/';
                if (self_closing) tag.remove_suffix(1);
                std::size_t e = 0;
                while (e < tag.size() && !std::isspace(static_cast<unsigned char>(tag[e]))) ++e;
                const std::string name(tag.substr(0, e));
                if (name.empty()) return false;
                if (!self_closing) stack.push_back(name);
            }
            i = close + 1;
        } else if (doc[i] == '&') {
            if (!entity_ok(i)) return false;
            i = doc.find(';', i) + 1;
        } else if (doc[i] == '>') {
            return false;
        } else {
            ++i;
        }
    }
    return stack.empty();
}

struct ParsedCsv {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> rows;
};

inline ParsedCsv parse_csv(const std::string& text) {
    ParsedCsv out;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        std::string_view rest = line;
        while (true) {
            const auto comma = rest.find(',');
            fields.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (header) {
            for (auto f : fields) out.labels.emplace_back(f);
            header = false;
            continue;
        }
        std::vector<double> row;
        for (auto f : fields) {
            double v = 0.0;
            const auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc{} || p != f.data() + f.size())
                throw std::runtime_error("parse_csv: bad field '" + std::string(f) + "'");
            row.push_back(v);
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

inline std::size_t count_occurrences(std::string_view text, std::string_view needle) {
    std::size_t count = 0;
    for (auto pos = text.find(needle); pos != std::string_view::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs `bin args` through the shell with stdout/stderr captured in temp files.
inline CliResult run_cli(const std::string& bin, const std::string& args) {
    static int counter = 0;
    const std::string base =
        "/tmp/openph_t" + std::to_string(getpid()) + "_" + std::to_string(counter++);
    const std::string out_path = base + ".out";
    const std::string err_path = base + ".err";
    const std::string cmd = bin + " " + args + " >" + out_path + " 2>" + err_path;

    const int rc = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = read_file(out_path);
    r.err = read_file(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

// The data=0x................ tag from a summary line.
inline std::string data_hash(const std::string& summary) {
    const auto pos = summary.find("data=");
    if (pos == std::string::npos) throw std::runtime_error("summary has no data hash");
    return summary.substr(pos + 5, 18);
}

}  // namespace testutil
