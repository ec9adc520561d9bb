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

#include <cstdint>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qconcat/additive_code.hpp"
#include "qconcat/concatenation.hpp"
#include "qconcat/distance.hpp"
#include "qconcat/io.hpp"
#include "qconcat/quantum_rs.hpp"
#include "qconcat/search.hpp"

namespace qconcat {

// Code spec grammar:
//   five | steane | trivial:M | qrs:M:K | search:N:K:D | <generator file>
//   OUTER+INNER      plain concatenation of two of the above

struct CodeSpecOptions {
    uint64_t seed = 0;
    uint64_t budget = uint64_t{1} << 34;
};

namespace detail {

inline std::vector<std::string> split_on(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t p = s.find(sep, start);
        parts.push_back(s.substr(start, p - start));
        if (p == std::string::npos) {
            return parts;
        }
        start = p + 1;
    }
}

inline std::size_t parse_count(const std::string &s, const std::string &spec) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
        throw std::invalid_argument("bad number '" + s + "' in code spec '" + spec + "'");
    }
    return static_cast<std::size_t>(std::stoul(s));
}

}  // namespace detail

/// Certifies the exact distance by coset enumeration when none is recorded.
inline void ensure_certified(StabilizerCode &q, uint64_t budget) {
    if (q.d_lower() || q.k() == 0) {
        return;
    }
    EnumerationOptions opts;
    opts.budget = budget;
    q.set_exact_distance(min_weight_outside(q, opts).weight);
}

inline bool is_qrs_spec(const std::string &spec) { return spec.rfind("qrs:", 0) == 0; }

inline QuantumRSCode resolve_qrs(const std::string &spec) {
    auto parts = detail::split_on(spec, ':');
    if (parts.size() != 3 || parts[0] != "qrs") {
        throw std::invalid_argument("expected qrs:M:K, got '" + spec + "'");
    }
    return quantum_rs(static_cast<unsigned>(detail::parse_count(parts[1], spec)),
                      static_cast<uint32_t>(detail::parse_count(parts[2], spec)));
}

/// A single (non-concatenated) code.
inline StabilizerCode resolve_stabilizer(const std::string &spec, const CodeSpecOptions &opts = {}) {
    if (spec == "five") {
        return five_qubit_code();
    }
    if (spec == "steane") {
        return steane_code();
    }
    auto parts = detail::split_on(spec, ':');
    if (parts[0] == "trivial" && parts.size() == 2) {
        return trivial_code(detail::parse_count(parts[1], spec));
    }
    if (parts[0] == "qrs") {
        return resolve_qrs(spec).stab;
    }
    if (parts[0] == "search" && parts.size() == 4) {
        std::size_t n = detail::parse_count(parts[1], spec);
        std::size_t k = detail::parse_count(parts[2], spec);
        std::size_t d = detail::parse_count(parts[3], spec);
        return find_nested_chain(n, {k}, {d}, opts.seed).front();
    }
    if (std::filesystem::exists(spec)) {
        StabilizerCode q =
            StabilizerCode::from_stabilizers(read_generators_file(spec), std::filesystem::path(spec).stem().string());
        return q;
    }
    throw std::invalid_argument("unknown code spec '" + spec +
                                "' (expected five, steane, trivial:M, qrs:M:K, search:N:K:D, a generator file, "
                                "or OUTER+INNER)");
}

inline OuterCode resolve_outer(const std::string &spec, const CodeSpecOptions &opts = {}) {
    if (is_qrs_spec(spec)) {
        return outer_view(resolve_qrs(spec));
    }
    StabilizerCode q = resolve_stabilizer(spec, opts);
    ensure_certified(q, opts.budget);
    return outer_view(q);
}

inline bool is_concat_spec(const std::string &spec) { return spec.find('+') != std::string::npos; }

inline ConcatenatedCode resolve_concat(const std::string &spec, const CodeSpecOptions &opts = {}) {
    auto parts = detail::split_on(spec, '+');
    if (parts.size() != 2) {
        throw std::invalid_argument("expected OUTER+INNER, got '" + spec + "'");
    }
    OuterCode outer = resolve_outer(parts[0], opts);
    StabilizerCode inner = resolve_stabilizer(parts[1], opts);
    ensure_certified(inner, opts.budget);
    return concatenate(std::move(outer), inner);
}

/// The stabilizer code of any spec, concatenated or not.
inline StabilizerCode resolve_any(const std::string &spec, const CodeSpecOptions &opts = {}) {
    if (is_concat_spec(spec)) {
        return resolve_concat(spec, opts).stab;
    }
    return resolve_stabilizer(spec, opts);
}

}  // namespace qconcat
