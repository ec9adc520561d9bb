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
#include <functional>
#include <memory>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qconcat/additive_code.hpp"
#include "qconcat/concatenation.hpp"
#include "qconcat/counting.hpp"
#include "qconcat/decoder.hpp"
#include "qconcat/distance.hpp"
#include "qconcat/enumerate.hpp"
#include "qconcat/quantum_rs.hpp"
#include "qconcat/search.hpp"
#include "qconcat/symplectic_basis.hpp"

namespace qconcat {

struct CheckResult {
    std::string name;
    std::string anchor;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::size_t max_n = 3;
    uint64_t seed = 0;
};

namespace detail {

inline CheckResult run_check(std::string name, std::string anchor, const std::function<std::string()> &body) {
    CheckResult r{std::move(name), std::move(anchor), false, {}};
    try {
        r.detail = body();
        r.pass = r.detail.empty();
    } catch (const std::exception &e) {
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

inline std::string expect(bool ok, const std::string &msg) { return ok ? std::string() : msg; }

}  // namespace detail

inline std::vector<CheckResult> verify_counting(const VerifyOptions &opts) {
    std::vector<CheckResult> out;
    const std::size_t max_n = std::min<std::size_t>(opts.max_n, 3);
    for (std::size_t n = 1; n <= max_n; n++) {
        out.push_back(detail::run_check(
            "sigma/tau vs enumeration n=" + std::to_string(n), "self-orthogonal code counts", [n]() -> std::string {
                auto census = enumerate_self_orthogonal(n);
                for (std::size_t k = 1; k <= n; k++) {
                    if (BigInt(census.sigma[k]) != sigma_count(n, k)) {
                        return "sigma mismatch at k=" + std::to_string(k);
                    }
                    if (BigInt(census.tau[k]) != tau_count(n, k)) {
                        return "tau mismatch at k=" + std::to_string(k);
                    }
                }
                return {};
            }));
        out.push_back(detail::run_check(
            "counting identity n=" + std::to_string(n), "(sigma+tau)(2^2n-1) = |Phi|(2^(n+k)-1)",
            [n]() -> std::string {
                auto census = enumerate_self_orthogonal(n);
                for (std::size_t k = 0; k + 1 <= n; k++) {
                    std::size_t dim = n - k;
                    BigInt lhs = (sigma_count(n, dim) + tau_count(n, dim)) * (pow2(2 * n) - 1);
                    BigInt rhs = BigInt(census.phi[dim]) * (pow2(n + k) - 1);
                    if (lhs != rhs) {
                        return "identity fails at k=" + std::to_string(k);
                    }
                }
                return {};
            }));
    }
    return out;
}

inline std::string check_family_gram(const NestedInnerFamily &f) {
    return detail::expect(f.verify(), "nested family failed verification");
}

inline std::vector<CheckResult> verify_symplectic(const VerifyOptions &opts) {
    std::vector<CheckResult> out;
    out.push_back(detail::run_check("random code Gram patterns", "symplectic basis of C-perp/C", [&]() -> std::string {
        std::mt19937_64 rng(opts.seed);
        for (int t = 0; t < 100; t++) {
            std::size_t n = 1 + rng() % 10;
            std::size_t dim = rng() % n;
            AdditiveCode c = random_self_orthogonal(n, dim, rng);
            StabilizerCode q = StabilizerCode::from_stabilizers(c);
            SymplecticBasis b = symplectic_basis(q);
            if (!b.has_standard_gram() || !b.completes(q) || b.size() != q.k()) {
                return "trial " + std::to_string(t) + " failed";
            }
        }
        return {};
    }));
    out.push_back(detail::run_check("nested s=2 family", "nested basis sets", [&]() -> std::string {
        auto chain = find_nested_chain(6, {1, 2}, {2, 2}, opts.seed);
        return check_family_gram(extend_symplectic_chain(chain));
    }));
    return out;
}

inline std::string rho_exhaustive(const StabilizerCode &q) {
    RhoMap rho = RhoMap::for_code(q);
    const std::size_t m = rho.width();
    const uint64_t count = uint64_t{1} << (2 * m);
    auto members = q.c().members();
    for (uint64_t u = 0; u < count; u++) {
        SymplecticVec su = SymplecticVec::from_key(m, u);
        SymplecticVec ru = rho.apply(su);
        for (const auto &c : members) {
            if (!(rho.invert(ru + c) == su)) {
                return "round trip fails for " + su.str();
            }
        }
        for (uint64_t v = 0; v < count; v++) {
            SymplecticVec sv = SymplecticVec::from_key(m, v);
            if (trace_inner(ru, rho.apply(sv)) != trace_inner(su, sv)) {
                return "inner product not preserved";
            }
            if (!(rho.apply(su + sv) == ru + rho.apply(sv))) {
                return "rho not additive";
            }
        }
    }
    return {};
}

inline std::vector<CheckResult> verify_rho(const VerifyOptions &) {
    std::vector<CheckResult> out;
    out.push_back(detail::run_check("rho exhaustive m=1 (five)", "inner-product-preserving map",
                                    [] { return rho_exhaustive(five_qubit_code()); }));
    out.push_back(detail::run_check("rho exhaustive m=2 (qrs:2:1)", "inner-product-preserving map",
                                    [] { return rho_exhaustive(quantum_rs(2, 1).stab); }));
    out.push_back(detail::run_check("rho exhaustive m=2 (trivial:2)", "inner-product-preserving map",
                                    [] { return rho_exhaustive(trivial_code(2)); }));
    return out;
}

inline std::vector<CheckResult> verify_distance(const VerifyOptions &) {
    std::vector<CheckResult> out;
    out.push_back(detail::run_check("five-qubit distance 3", "min weight of C-perp \\ C", []() -> std::string {
        std::size_t d = min_weight_outside(five_qubit_code()).weight;
        return detail::expect(d == 3, "got " + std::to_string(d));
    }));
    out.push_back(detail::run_check("[[25,1]] distance 9", "product bound d1*d2 met", []() -> std::string {
        ConcatenatedCode cc = concatenate(outer_view(five_qubit_code()), five_qubit_code());
        std::size_t d = min_weight_outside(cc.stab).weight;
        return detail::expect(cc.stab.n() == 25 && cc.stab.k() == 1 && cc.d_lower == 9 && d == 9,
                              cc.stab.params() + " d_lower=" + std::to_string(cc.d_lower) + " d=" + std::to_string(d));
    }));
    for (auto [m, k] : std::vector<std::pair<unsigned, uint32_t>>{{2, 1}, {3, 1}, {3, 2}, {3, 3}}) {
        out.push_back(detail::run_check(
            "qrs:" + std::to_string(m) + ":" + std::to_string(k) + " block distance k+1", "quantum RS distance",
            [m = m, k = k]() -> std::string {
                QuantumRSCode q = quantum_rs(m, k);
                std::size_t d = min_weight_outside_by_support(q.stab, m);
                return detail::expect(d == k + 1, "got " + std::to_string(d));
            }));
    }
    return out;
}

inline std::vector<CheckResult> verify_decoder(const VerifyOptions &) {
    std::vector<CheckResult> out;
    out.push_back(detail::run_check("[[25,1]] corrects all weight <= 2", "two-stage decoding radius",
                                    []() -> std::string {
                                        auto cc = std::make_shared<const ConcatenatedCode>(
                                            concatenate(outer_view(five_qubit_code()), five_qubit_code()));
                                        ConcatDecoder dec(cc);
                                        auto rep = verify_correctability(dec, 2);
                                        return detail::expect(rep.ok && rep.checked == 2776,
                                                              "checked " + std::to_string(rep.checked));
                                    }));
    out.push_back(detail::run_check("five-qubit table corrects weight 1", "coset-leader decoding",
                                    []() -> std::string {
                                        StabilizerCode q = five_qubit_code();
                                        SyndromeTable table(q);
                                        RhoMap rho = RhoMap::for_code(q);
                                        if (!table.verify_exhaustive()) {
                                            return "table not minimal";
                                        }
                                        for (std::size_t i = 0; i < 5; i++) {
                                            for (uint8_t s = 1; s <= 3; s++) {
                                                SymplecticVec e(5);
                                                e.set(i, F4::from_bits(s));
                                                if (!inner_decode(table, rho, e).symbol.is_zero()) {
                                                    return "weight-1 error not corrected";
                                                }
                                            }
                                        }
                                        return {};
                                    }));
    return out;
}

inline std::vector<CheckResult> run_suite(const std::string &suite, const VerifyOptions &opts) {
    using Fn = std::vector<CheckResult> (*)(const VerifyOptions &);
    const std::vector<std::pair<std::string, Fn>> suites = {{"counting", verify_counting},
                                                            {"symplectic", verify_symplectic},
                                                            {"rho", verify_rho},
                                                            {"distance", verify_distance},
                                                            {"decoder", verify_decoder}};
    std::vector<CheckResult> out;
    bool found = false;
    for (const auto &[name, fn] : suites) {
        if (suite == "all" || suite == name) {
            found = true;
            auto part = fn(opts);
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    if (!found) {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    return out;
}

}  // namespace qconcat
