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

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qconcat/additive_code.hpp"
#include "qconcat/concatenation.hpp"
#include "qconcat/counting.hpp"
#include "qconcat/distance.hpp"
#include "qconcat/reed_solomon.hpp"

namespace qconcat {

/// A Pauli error on N qubits: symbol 0 is the identity, w / w-bar / 1 are the
/// X / Z / Y components.
using PauliError = SymplecticVec;

/// Each qubit independently untouched with probability 1 - p, otherwise hit
/// by one of the three nontrivial Paulis, each with probability p/3.
struct DepolarizingChannel {
    double p = 0;
    uint64_t seed = 0;
};

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// The generator for trial `index` of a run seeded with `seed`.
inline std::mt19937_64 trial_rng(uint64_t seed, uint64_t index) { return std::mt19937_64(splitmix64(seed ^ index)); }

inline PauliError sample_error(const DepolarizingChannel &ch, std::size_t n, std::mt19937_64 &rng) {
    if (!(ch.p >= 0 && ch.p <= 1)) {
        throw std::invalid_argument("error probability outside [0, 1]");
    }
    PauliError e(n);
    if (ch.p == 0) {
        return e;
    }
    const bool always = ch.p >= 1;
    const uint64_t threshold = always ? 0 : static_cast<uint64_t>(std::ldexp(static_cast<long double>(ch.p), 64));
    for (std::size_t i = 0; i < n; i++) {
        if (always || rng() < threshold) {
            e.set(i, F4::from_bits(static_cast<uint8_t>(1 + rng() % 3)));
        }
    }
    return e;
}

/// Samples with a generator seeded from the channel.
inline PauliError sample_error(const DepolarizingChannel &ch, std::size_t n) {
    std::mt19937_64 rng(splitmix64(ch.seed));
    return sample_error(ch, n, rng);
}

namespace detail {

/// Generators of C packed as single words (requires n <= 64).
struct PackedChecks {
    std::size_t n = 0;
    std::vector<uint64_t> ga;
    std::vector<uint64_t> gb;

    explicit PackedChecks(const StabilizerCode &q) : n(q.n()) {
        if (n > 64) {
            throw std::invalid_argument("syndrome tables support blocks of at most 64 qubits");
        }
        if (q.c().dim() > 64) {
            throw std::invalid_argument("too many checks for a packed syndrome");
        }
        for (const auto &g : q.c().generators()) {
            ga.push_back(g.a_words()[0]);
            gb.push_back(g.b_words()[0]);
        }
    }
    PackedChecks() = default;

    uint64_t syndrome(uint64_t a, uint64_t b) const {
        uint64_t s = 0;
        for (std::size_t j = 0; j < ga.size(); j++) {
            s |= static_cast<uint64_t>(std::popcount((a & gb[j]) ^ (b & ga[j])) & 1) << j;
        }
        return s;
    }
};

/// Calls f on every assignment of nonzero GF(4) symbols to `w`-subsets of n
/// positions, subsets in lexicographic order, symbols in order w, w-bar, 1 with
/// the first position varying slowest. Stops when f returns false.
inline bool for_each_error_of_weight(std::size_t n, std::size_t w,
                                     const std::function<bool(const std::vector<std::size_t> &,
                                                              const std::vector<uint8_t> &)> &f) {
    if (w > n) {
        return true;
    }
    std::vector<std::size_t> pos(w);
    for (std::size_t i = 0; i < w; i++) {
        pos[i] = i;
    }
    std::vector<uint8_t> sym(w);
    while (true) {
        std::fill(sym.begin(), sym.end(), 1);
        while (true) {
            if (!f(pos, sym)) {
                return false;
            }
            std::size_t i = w;
            while (i > 0 && sym[i - 1] == 3) {
                sym[i - 1] = 1;
                i--;
            }
            if (i == 0) {
                break;
            }
            sym[i - 1]++;
        }
        std::size_t i = w;
        while (i > 0 && pos[i - 1] == n - w + i - 1) {
            i--;
        }
        if (i == 0) {
            return true;
        }
        pos[i - 1]++;
        for (std::size_t j = i; j < w; j++) {
            pos[j] = pos[j - 1] + 1;
        }
    }
}

}  // namespace detail

/// Syndrome s with s_j = <e, g_j> over the generator list of C, bit j of the result.
inline uint64_t inner_syndrome(const StabilizerCode &q, const SymplecticVec &e) {
    if (e.size() != q.n()) {
        throw std::invalid_argument("error length does not match code length");
    }
    if (q.c().dim() > 64) {
        throw std::invalid_argument("too many checks for a packed syndrome");
    }
    uint64_t s = 0;
    for (std::size_t j = 0; j < q.c().dim(); j++) {
        s |= static_cast<uint64_t>(trace_inner(e, q.c().generators()[j])) << j;
    }
    return s;
}

/// Minimum-weight coset leader for every syndrome of a code on at most 32
/// qubits with at most 24 checks. Among leaders of equal weight the smallest
/// key wins.
class SyndromeTable {
   public:
    SyndromeTable() = default;
    explicit SyndromeTable(const StabilizerCode &q) : n_(q.n()), checks_(q) {
        if (n_ > 32) {
            throw std::invalid_argument("syndrome tables support codes of at most 32 qubits");
        }
        const std::size_t r = q.c().dim();
        if (r > 24) {
            throw std::invalid_argument("syndrome table would need 2^" + std::to_string(r) + " entries");
        }
        const std::size_t size = std::size_t{1} << r;
        leaders_.assign(size, 0);
        weights_.assign(size, kUnset);
        std::size_t filled = 0;
        std::vector<uint64_t> best(size);
        for (std::size_t w = 0; w <= n_ && filled < size; w++) {
            std::fill(best.begin(), best.end(), kNone);
            detail::for_each_error_of_weight(
                n_, w, [&](const std::vector<std::size_t> &pos, const std::vector<uint8_t> &sym) {
                    uint64_t a = 0;
                    uint64_t b = 0;
                    for (std::size_t i = 0; i < pos.size(); i++) {
                        a |= static_cast<uint64_t>(sym[i] & 1) << pos[i];
                        b |= static_cast<uint64_t>((sym[i] >> 1) & 1) << pos[i];
                    }
                    uint64_t s = checks_.syndrome(a, b);
                    if (weights_[s] == kUnset) {
                        best[s] = std::min(best[s], a | (b << n_));
                    }
                    return true;
                });
            for (std::size_t s = 0; s < size; s++) {
                if (best[s] != kNone) {
                    leaders_[s] = best[s];
                    weights_[s] = static_cast<uint8_t>(w);
                    filled++;
                }
            }
        }
        if (filled != size) {
            throw std::logic_error("syndrome table incomplete");
        }
    }

    std::size_t n() const { return n_; }
    std::size_t size() const { return leaders_.size(); }
    uint64_t syndrome(uint64_t a, uint64_t b) const { return checks_.syndrome(a, b); }
    uint64_t syndrome(const SymplecticVec &e) const { return checks_.syndrome(e.a_words()[0], e.b_words()[0]); }
    uint64_t leader_key(uint64_t s) const { return leaders_.at(s); }
    SymplecticVec leader(uint64_t s) const { return SymplecticVec::from_key(n_, leaders_.at(s)); }
    std::size_t leader_weight(uint64_t s) const { return weights_.at(s); }

    /// Exhaustive check over all 4^n vectors: every entry recomputes to its key
    /// and no vector has smaller weight than its syndrome's leader.
    bool verify_exhaustive() const {
        if (n_ > 12) {
            throw std::invalid_argument("exhaustive table verification limited to n <= 12");
        }
        for (std::size_t s = 0; s < size(); s++) {
            uint64_t key = leaders_[s];
            uint64_t a = key & ((uint64_t{1} << n_) - 1);
            uint64_t b = key >> n_;
            if (syndrome(a, b) != s || static_cast<std::size_t>(std::popcount(a | b)) != weights_[s]) {
                return false;
            }
        }
        const uint64_t mask = (uint64_t{1} << n_) - 1;
        for (uint64_t key = 0; key < (uint64_t{1} << (2 * n_)); key++) {
            uint64_t a = key & mask;
            uint64_t b = key >> n_;
            if (static_cast<std::size_t>(std::popcount(a | b)) < weights_[syndrome(a, b)]) {
                return false;
            }
        }
        return true;
    }

   private:
    static constexpr uint8_t kUnset = 0xFF;
    static constexpr uint64_t kNone = ~uint64_t{0};

    std::size_t n_ = 0;
    detail::PackedChecks checks_;
    std::vector<uint64_t> leaders_;
    std::vector<uint8_t> weights_;
};

struct InnerDecodeResult {
    SymplecticVec correction;  // the coset leader applied to the block
    SymplecticVec symbol;      // rho^{-1} of the corrected block
};

/// Table decoding of one block followed by rho^{-1} of the corrected block.
inline InnerDecodeResult inner_decode(const SyndromeTable &table, const RhoMap &rho, const SymplecticVec &block_error) {
    SymplecticVec leader = table.leader(table.syndrome(block_error));
    SymplecticVec residual = block_error + leader;
    return {std::move(leader), rho.invert_unchecked(residual)};
}

/// Outer decoding of a quantum RS code through its CSS structure: the w- and
/// w-bar-parts of the logical word are read as words over GF(2^m) and each is
/// decoded against C_RS-perp. Returns the estimated outer error, or nullopt
/// when either component decode fails.
inline std::optional<SymplecticVec> outer_decode(const QuantumRSCode &outer, const SymplecticVec &logical_word) {
    auto [a, b] = outer.split(logical_word);
    auto da = rs_decode_bm(outer.crs_dual, a);
    if (!da) {
        return std::nullopt;
    }
    auto db = rs_decode_bm(outer.crs_dual, b);
    if (!db) {
        return std::nullopt;
    }
    // The residual logical word is the decoded codeword; the estimate is the difference.
    return logical_word + outer.merge(*da, *db);
}

struct DecodeResult {
    bool success = false;
    std::size_t inner_failures = 0;
    bool outer_failed = false;
    PauliError residual;
};

/// The two-step decoder for a (generalized) concatenated code. Inner blocks
/// are decoded with the coset-leader table of the innermost code; every outer
/// level is then decoded independently (RS CSS decoding for quantum RS
/// outers, coset-leader tables for qubit outers). Success means the total
/// residual lies in C.
class ConcatDecoder {
   public:
    explicit ConcatDecoder(std::shared_ptr<const ConcatenatedCode> code)
        : code_(std::move(code)), inner_table_(code_->inner_code()) {
        for (const auto &o : code_->outers) {
            if (o.rs) {
                outer_tables_.emplace_back();
            } else {
                if (o.block_width != 1) {
                    throw std::invalid_argument("table outer decoding needs one qubit per block");
                }
                outer_tables_.push_back(std::make_shared<const SyndromeTable>(o.stab));
            }
        }
    }

    const ConcatenatedCode &code() const { return *code_; }
    const SyndromeTable &inner_table() const { return inner_table_; }

    DecodeResult decode(const PauliError &e) const {
        const ConcatenatedCode &cc = *code_;
        const std::size_t n1 = cc.num_blocks();
        const std::size_t n2 = cc.inner_length();
        const std::size_t m = cc.block_width();
        const std::size_t s = cc.order();
        if (e.size() != n1 * n2) {
            throw std::invalid_argument("error length does not match code length");
        }
        DecodeResult result;
        SymplecticVec correction(e.size());
        std::vector<SymplecticVec> words(s, SymplecticVec(n1 * m));
        for (std::size_t l = 0; l < n1; l++) {
            SymplecticVec block = e.slice(l * n2, n2);
            InnerDecodeResult r = inner_decode(inner_table_, cc.rho, block);
            correction.place(l * n2, r.correction);
            if (!r.symbol.is_zero()) {
                result.inner_failures++;
            }
            for (std::size_t j = 0; j < s; j++) {
                for (std::size_t i = 0; i < m; i++) {
                    words[j].set(l * m + i, r.symbol.get(j * m + i));
                }
            }
        }
        for (std::size_t j = 0; j < s; j++) {
            if (words[j].is_zero()) {
                continue;
            }
            std::optional<SymplecticVec> est;
            const OuterCode &o = cc.outers[j];
            if (o.rs) {
                est = outer_decode(*o.rs, words[j]);
            } else {
                est = outer_tables_[j]->leader(outer_tables_[j]->syndrome(words[j]));
            }
            if (!est) {
                result.outer_failed = true;
                continue;
            }
            correction += cc.lift(j, *est);
        }
        result.residual = e + correction;
        result.success = cc.stab.c().contains(result.residual);
        return result;
    }

   private:
    std::shared_ptr<const ConcatenatedCode> code_;
    SyndromeTable inner_table_;
    std::vector<std::shared_ptr<const SyndromeTable>> outer_tables_;
};

/// Error weight below which decoding provably succeeds: a block with fewer
/// than ceil(d_s/2) errors decodes to the zero symbol, and outer level j
/// tolerates ceil(D_j/2) - 1 nonzero symbols.
inline std::size_t guaranteed_radius(const ConcatenatedCode &code) {
    const std::size_t d_in = *code.inner_code().d_lower();
    std::size_t outer_blocks = static_cast<std::size_t>(-1);
    for (const auto &o : code.outers) {
        outer_blocks = std::min(outer_blocks, (o.block_distance + 1) / 2);
    }
    return ((d_in + 1) / 2) * outer_blocks - 1;
}

struct CorrectabilityReport {
    bool ok = true;
    uint64_t checked = 0;
    std::optional<PauliError> counterexample;
};

/// Decodes every error of weight <= t, stopping at the first failure.
inline CorrectabilityReport verify_correctability(const ConcatDecoder &decoder, std::size_t t,
                                                  uint64_t budget = uint64_t{1} << 32) {
    const std::size_t n = decoder.code().stab.n();
    BigInt total = 0;
    BigInt p3 = 1;
    for (std::size_t w = 0; w <= t && w <= n; w++) {
        total += p3 * binomial(n, w);
        p3 *= 3;
    }
    if (total > budget) {
        throw BudgetExceeded("correctability check up to weight " + std::to_string(t), total.str());
    }
    CorrectabilityReport report;
    for (std::size_t w = 0; w <= t && w <= n && report.ok; w++) {
        detail::for_each_error_of_weight(n, w, [&](const std::vector<std::size_t> &pos, const std::vector<uint8_t> &sym) {
            PauliError e(n);
            for (std::size_t i = 0; i < pos.size(); i++) {
                e.set(pos[i], F4::from_bits(sym[i]));
            }
            report.checked++;
            if (!decoder.decode(e).success) {
                report.ok = false;
                report.counterexample = e;
                return false;
            }
            return true;
        });
    }
    return report;
}

struct Interval {
    double lo = 0;
    double hi = 0;
};

/// Wilson score interval at 95% confidence.
inline Interval wilson_interval(uint64_t failures, uint64_t trials) {
    if (trials == 0) {
        return {0, 1};
    }
    const double z = 1.959963984540054;
    const double nt = static_cast<double>(trials);
    const double ph = static_cast<double>(failures) / nt;
    const double denom = 1 + z * z / nt;
    const double center = (ph + z * z / (2 * nt)) / denom;
    const double half = z / denom * std::sqrt(ph * (1 - ph) / nt + z * z / (4 * nt * nt));
    return {failures == 0 ? 0.0 : std::max(0.0, center - half), failures == trials ? 1.0 : std::min(1.0, center + half)};
}

struct SimulationStats {
    uint64_t trials = 0;
    uint64_t failures = 0;
    double failure_rate = 0;
    Interval wilson;
    double seconds = 0;
};

/// Monte Carlo logical failure rate under depolarizing noise. Trial i uses
/// trial_rng(seed, i), so the counts do not depend on the thread count.
inline SimulationStats simulate(const ConcatDecoder &decoder, double p, uint64_t trials, uint64_t seed,
                                unsigned threads = 1) {
    if (trials < 1) {
        throw std::invalid_argument("need at least one trial");
    }
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("error probability outside [0, 1]");
    }
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = decoder.code().stab.n();
    const DepolarizingChannel ch{p, seed};
    threads = std::max(1u, threads);
    std::vector<uint64_t> failures(threads, 0);
    auto work = [&](unsigned t) {
        for (uint64_t i = t; i < trials; i += threads) {
            std::mt19937_64 rng = trial_rng(seed, i);
            if (!decoder.decode(sample_error(ch, n, rng)).success) {
                failures[t]++;
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(work, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    SimulationStats stats;
    stats.trials = trials;
    for (uint64_t f : failures) {
        stats.failures += f;
    }
    stats.failure_rate = static_cast<double>(stats.failures) / static_cast<double>(trials);
    stats.wilson = wilson_interval(stats.failures, trials);
    stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return stats;
}

}  // namespace qconcat
