// Copyright 2026 The qconcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qconcat/additive_code.hpp"
#include "qconcat/bounds.hpp"

namespace qconcat {

class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Generator matrix file: a line "n dim", then dim lines of 2n bits (a-part, then b-part).
inline void write_generators(std::ostream &out, const AdditiveCode &c) {
    out << c.length() << ' ' << c.dim() << '\n';
    for (const auto &g : c.generators()) {
        out << g.bit_str() << '\n';
    }
}

inline AdditiveCode read_generators(std::istream &in) {
    std::size_t n = 0;
    std::size_t dim = 0;
    if (!(in >> n >> dim)) {
        throw FormatError("generator file: expected header 'n dim'");
    }
    std::vector<SymplecticVec> gens;
    for (std::size_t r = 0; r < dim; r++) {
        std::string bits;
        if (!(in >> bits)) {
            throw FormatError("generator file: expected " + std::to_string(dim) + " rows, got " + std::to_string(r));
        }
        if (bits.size() != 2 * n) {
            throw FormatError("generator file: row " + std::to_string(r + 1) + " has " + std::to_string(bits.size()) +
                              " bits, expected " + std::to_string(2 * n));
        }
        SymplecticVec v(n);
        for (std::size_t j = 0; j < bits.size(); j++) {
            if (bits[j] != '0' && bits[j] != '1') {
                throw FormatError("generator file: row " + std::to_string(r + 1) + " has a non-bit character");
            }
            v.set_bit(j, bits[j] == '1');
        }
        gens.push_back(std::move(v));
    }
    std::string extra;
    if (in >> extra) {
        throw FormatError("generator file: trailing content after " + std::to_string(dim) + " rows");
    }
    try {
        return AdditiveCode(n, std::move(gens));
    } catch (const std::invalid_argument &e) {
        throw FormatError(std::string("generator file: ") + e.what());
    }
}

inline AdditiveCode read_generators_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path);
    }
    return read_generators(in);
}

inline std::string strip_comment(const std::string &line) {
    std::string s = line.substr(0, line.find('#'));
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

/// Inner code table: one "n k d" record per line, '#' comments, blank lines ignored.
inline InnerCodeTable read_code_table(std::istream &in) {
    InnerCodeTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::string body = strip_comment(line);
        if (body.empty()) {
            continue;
        }
        std::istringstream ss(body);
        long long n = 0;
        long long k = 0;
        long long d = 0;
        std::string extra;
        if (!(ss >> n >> k >> d) || (ss >> extra) || n <= 0 || k <= 0 || d <= 0) {
            throw FormatError("code table line " + std::to_string(lineno) + ": expected three positive integers");
        }
        InnerCodeRecord rec{static_cast<std::size_t>(n), static_cast<std::size_t>(k), static_cast<std::size_t>(d)};
        try {
            validate_record(rec);
        } catch (const std::invalid_argument &e) {
            throw FormatError("code table line " + std::to_string(lineno) + ": " + e.what());
        }
        table.push_back(rec);
    }
    if (table.empty()) {
        throw FormatError("code table has no records");
    }
    return table;
}

inline InnerCodeTable read_code_table_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path);
    }
    return read_code_table(in);
}

inline std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

/// A named (R, delta) curve read from CSV with header "R,delta".
struct Overlay {
    std::string name;
    std::vector<std::pair<double, double>> points;

    /// Linear interpolation in R; nullopt outside the sampled range.
    std::optional<double> at(double r) const {
        for (std::size_t i = 0; i < points.size(); i++) {
            if (points[i].first == r) {
                return points[i].second;
            }
            if (i + 1 < points.size()) {
                double r0 = points[i].first;
                double r1 = points[i + 1].first;
                if ((r0 < r && r < r1) || (r1 < r && r < r0)) {
                    double t = (r - r0) / (r1 - r0);
                    return points[i].second + t * (points[i + 1].second - points[i].second);
                }
            }
        }
        return std::nullopt;
    }
};

inline Overlay read_overlay(std::istream &in, std::string name) {
    Overlay ov;
    ov.name = std::move(name);
    std::string line;
    bool header = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line[0] == '#') {
            continue;
        }
        std::string body = strip_comment(line);
        if (body.empty()) {
            continue;
        }
        if (!header) {
            if (body != "R,delta") {
                throw FormatError("overlay " + ov.name + ": header must be 'R,delta'");
            }
            header = true;
            continue;
        }
        std::size_t comma = body.find(',');
        if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos) {
            throw FormatError("overlay " + ov.name + " line " + std::to_string(lineno) + ": expected two fields");
        }
        try {
            std::size_t used = 0;
            std::string f0 = body.substr(0, comma);
            std::string f1 = body.substr(comma + 1);
            double r = std::stod(f0, &used);
            if (used != f0.size()) {
                throw std::invalid_argument("R");
            }
            double d = std::stod(f1, &used);
            if (used != f1.size()) {
                throw std::invalid_argument("delta");
            }
            ov.points.emplace_back(r, d);
        } catch (const std::exception &) {
            throw FormatError("overlay " + ov.name + " line " + std::to_string(lineno) + ": unparsable number");
        }
    }
    if (!header) {
        throw FormatError("overlay " + ov.name + ": missing 'R,delta' header");
    }
    return ov;
}

inline Overlay read_overlay_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path);
    }
    return read_overlay(in, std::filesystem::path(path).stem().string());
}

/// CSV with '#' config lines, header "R,delta[,overlay...]", 6 decimals.
inline void write_curve_csv(std::ostream &out, const BoundCurve &curve, const std::vector<std::string> &config,
                            const std::vector<Overlay> &overlays = {}) {
    for (const auto &c : config) {
        out << "# " << c << '\n';
    }
    out << "R,delta";
    for (const auto &ov : overlays) {
        out << ',' << ov.name;
    }
    out << '\n';
    for (const auto &[r, d] : curve.points) {
        out << fixed6(r) << ',' << fixed6(d);
        for (const auto &ov : overlays) {
            out << ',';
            if (auto v = ov.at(r)) {
                out << fixed6(*v);
            }
        }
        out << '\n';
    }
}

}  // namespace qconcat
