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
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qconcat/additive_code.hpp"

namespace qconcat {

/// Thrown when an exhaustive enumeration would exceed its element budget.
class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(const std::string &what, std::string required)
        : std::runtime_error(what + " requires " + required + " element evaluations"), required_(std::move(required)) {}
    const std::string &required() const { return required_; }

   private:
    std::string required_;
};

namespace detail {

/// 2^bits * (2^extra_bits - 1) as a decimal string, exact.
inline std::string pow2_product_string(std::size_t bits, std::size_t extra_bits) {
    // Decimal long multiplication on a digit vector, least significant first.
    std::vector<int> digits{1};
    auto times2 = [&digits]() {
        int carry = 0;
        for (int &d : digits) {
            int v = d * 2 + carry;
            d = v % 10;
            carry = v / 10;
        }
        if (carry) {
            digits.push_back(carry);
        }
    };
    for (std::size_t i = 0; i < extra_bits; i++) {
        times2();
    }
    // subtract 1 (digits represent a power of two >= 1, so no underflow past the top)
    for (int &d : digits) {
        if (d > 0) {
            d--;
            break;
        }
        d = 9;
    }
    while (digits.size() > 1 && digits.back() == 0) {
        digits.pop_back();
    }
    for (std::size_t i = 0; i < bits; i++) {
        times2();
    }
    std::string s;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        s += static_cast<char>('0' + *it);
    }
    return s;
}

/// Flat word layout used by the enumeration kernels: each vector occupies
/// `stride` words, a-part first then b-part.
struct PackedVectors {
    std::size_t half = 0;    // words per half
    std::size_t stride = 0;  // 2 * half
    std::vector<uint64_t> words;

    PackedVectors(const std::vector<SymplecticVec> &vs, std::size_t n) : half((n + 63) / 64), stride(2 * half) {
        words.reserve(vs.size() * stride);
        for (const auto &v : vs) {
            words.insert(words.end(), v.words().begin(), v.words().end());
        }
    }
    const uint64_t *at(std::size_t i) const { return words.data() + i * stride; }
};

/// Weight of a packed vector, counted in blocks of `width` symbols.
struct BlockWeigher {
    std::size_t n;
    std::size_t width;
    std::size_t half;
    std::vector<uint64_t> block_masks;  // one mask per (block, word) pair, flattened
    std::vector<std::size_t> block_word_begin;
    std::vector<std::size_t> block_word_end;

    BlockWeigher(std::size_t n_, std::size_t width_) : n(n_), width(width_ == 0 ? 1 : width_), half((n_ + 63) / 64) {
        if (width > 1) {
            for (std::size_t start = 0; start < n; start += width) {
                std::size_t end = std::min(start + width, n);
                block_word_begin.push_back(start / 64);
                block_word_end.push_back((end - 1) / 64 + 1);
                for (std::size_t w = start / 64; w < (end - 1) / 64 + 1; w++) {
                    uint64_t mask = 0;
                    for (std::size_t i = std::max(start, w * 64); i < std::min(end, (w + 1) * 64); i++) {
                        mask |= uint64_t{1} << (i & 63);
                    }
                    block_masks.push_back(mask);
                }
            }
        }
    }

    std::size_t operator()(const uint64_t *v) const {
        if (width == 1) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < half; i++) {
                w += static_cast<std::size_t>(std::popcount(v[i] | v[half + i]));
            }
            return w;
        }
        std::size_t count = 0;
        std::size_t m = 0;
        for (std::size_t blk = 0; blk < block_word_begin.size(); blk++) {
            bool nonzero = false;
            for (std::size_t w = block_word_begin[blk]; w < block_word_end[blk]; w++, m++) {
                if ((v[w] | v[half + w]) & block_masks[m]) {
                    nonzero = true;
                }
            }
            count += nonzero ? 1 : 0;
        }
        return count;
    }
};

}  // namespace detail

struct MinWeightResult {
    std::size_t weight = 0;
    SymplecticVec witness;
};

struct EnumerationOptions {
    uint64_t budget = uint64_t{1} << 34;
    /// Weight is counted in blocks of this many symbols (1 = ordinary weight).
    std::size_t block_width = 1;
    unsigned threads = 1;
};

/// Exact minimum weight of C-perp \ C, by enumerating each of the 2^(2k) - 1
/// nontrivial cosets v + C of C in C-perp. Costs 2^dim(C) * (2^(2k) - 1) weight
/// evaluations; refuses with BudgetExceeded beyond `opts.budget`.
inline MinWeightResult min_weight_outside(const StabilizerCode &q, const EnumerationOptions &opts = {}) {
    if (q.k() == 0) {
        throw std::invalid_argument("min_weight_outside needs k >= 1 (C-perp \\ C is empty for k = 0)");
    }
    const std::size_t n = q.n();
    const std::size_t dim_c = q.c().dim();
    const std::size_t two_k = 2 * q.k();
    if (dim_c + two_k > 63 || (uint64_t{1} << dim_c) > opts.budget / ((uint64_t{1} << two_k) - 1)) {
        throw BudgetExceeded("coset enumeration of " + q.params(), detail::pow2_product_string(dim_c, two_k));
    }
    const std::vector<SymplecticVec> reps = q.logical_representatives();
    const detail::PackedVectors gens(q.c().generators(), n);
    const detail::PackedVectors logicals(reps, n);
    const detail::BlockWeigher weigh(n, opts.block_width);
    const std::size_t stride = gens.stride;

    const uint64_t num_outer = (uint64_t{1} << two_k) - 1;
    const uint64_t num_inner = uint64_t{1} << dim_c;
    const unsigned threads = std::max(1u, opts.threads);

    struct Best {
        std::size_t weight = static_cast<std::size_t>(-1);
        uint64_t outer = 0;
        uint64_t inner = 0;
    };
    std::vector<Best> best(threads);
    std::atomic<std::size_t> global_best{static_cast<std::size_t>(-1)};

    auto work = [&](unsigned t) {
        std::vector<uint64_t> acc(stride);
        Best local;
        for (uint64_t i = 1 + t; i <= num_outer; i += threads) {
            if (global_best.load(std::memory_order_relaxed) <= 1) {
                break;
            }
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t b = 0; b < two_k; b++) {
                if ((i >> b) & 1) {
                    const uint64_t *src = logicals.at(b);
                    for (std::size_t w = 0; w < stride; w++) {
                        acc[w] ^= src[w];
                    }
                }
            }
            std::size_t wt = weigh(acc.data());
            if (wt < local.weight) {
                local = {wt, i, 0};
            }
            for (uint64_t j = 1; j < num_inner; j++) {
                const uint64_t *src = gens.at(static_cast<std::size_t>(std::countr_zero(j)));
                for (std::size_t w = 0; w < stride; w++) {
                    acc[w] ^= src[w];
                }
                wt = weigh(acc.data());
                if (wt < local.weight) {
                    local = {wt, i, j ^ (j >> 1)};
                }
            }
            std::size_t cur = global_best.load(std::memory_order_relaxed);
            while (local.weight < cur && !global_best.compare_exchange_weak(cur, local.weight)) {
            }
        }
        best[t] = local;
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

    // Deterministic tie-break: smallest (weight, outer, inner).
    Best winner = best[0];
    for (const auto &b : best) {
        if (b.weight < winner.weight || (b.weight == winner.weight && (b.outer < winner.outer ||
                                                                     (b.outer == winner.outer && b.inner < winner.inner)))) {
            winner = b;
        }
    }
    SymplecticVec witness(n);
    for (std::size_t b = 0; b < two_k; b++) {
        if ((winner.outer >> b) & 1) {
            witness += reps[b];
        }
    }
    for (std::size_t b = 0; b < dim_c; b++) {
        if ((winner.inner >> b) & 1) {
            witness += q.c().generators()[b];
        }
    }
    return {winner.weight, witness};
}

/// Minimum nonzero weight of an additive code (used for k = 0 fixtures, where
/// the stabilizer-code distance is not defined through C-perp \ C).
inline std::size_t min_weight_nonzero(const AdditiveCode &c, uint64_t budget = uint64_t{1} << 34) {
    if (c.dim() == 0) {
        throw std::invalid_argument("zero code has no nonzero element");
    }
    if (c.dim() > 63 || (uint64_t{1} << c.dim()) > budget) {
        throw BudgetExceeded("nonzero-weight enumeration", detail::pow2_product_string(c.dim(), 1));
    }
    const detail::PackedVectors gens(c.generators(), c.length());
    const detail::BlockWeigher weigh(c.length(), 1);
    std::vector<uint64_t> acc(gens.stride, 0);
    std::size_t best = static_cast<std::size_t>(-1);
    for (uint64_t j = 1; j < (uint64_t{1} << c.dim()); j++) {
        const uint64_t *src = gens.at(static_cast<std::size_t>(std::countr_zero(j)));
        for (std::size_t w = 0; w < gens.stride; w++) {
            acc[w] ^= src[w];
        }
        best = std::min(best, weigh(acc.data()));
    }
    return best;
}

namespace detail {

/// Rank of `vs` after zeroing every coordinate inside the blocks listed in
/// `support` (block indices, width `width`).
inline std::size_t rank_outside(const std::vector<SymplecticVec> &vs, std::size_t n, std::size_t width,
                                const std::vector<std::size_t> &support) {
    SymplecticVec mask(n);
    for (std::size_t blk : support) {
        for (std::size_t i = blk * width; i < std::min((blk + 1) * width, n); i++) {
            mask.set(i, F4::one());
        }
    }
    RowEchelon e(n);
    for (const auto &v : vs) {
        SymplecticVec r = v;
        for (std::size_t w = 0; w < r.num_words(); w++) {
            r.a_words()[w] &= ~mask.a_words()[w];
            r.b_words()[w] &= ~mask.b_words()[w];
        }
        e.insert(r);
    }
    return e.rank();
}

}  // namespace detail

/// Exact minimum (block) weight of C-perp \ C by support enumeration: the
/// smallest w for which some set S of w blocks has
/// dim(C-perp restricted to S) > dim(C restricted to S), where "restricted to S"
/// means the members vanishing outside S. Independent of the coset route, and
/// cheap when the distance is small relative to the number of blocks.
inline std::size_t min_weight_outside_by_support(const StabilizerCode &q, std::size_t block_width = 1) {
    if (q.k() == 0) {
        throw std::invalid_argument("min_weight_outside_by_support needs k >= 1");
    }
    const std::size_t n = q.n();
    const std::size_t width = std::max<std::size_t>(1, block_width);
    const std::size_t num_blocks = (n + width - 1) / width;
    const auto &gc = q.c().generators();
    const auto &gp = q.c_perp().generators();
    for (std::size_t w = 1; w <= num_blocks; w++) {
        std::vector<std::size_t> support(w);
        for (std::size_t i = 0; i < w; i++) {
            support[i] = i;
        }
        while (true) {
            std::size_t in_perp = gp.size() - detail::rank_outside(gp, n, width, support);
            std::size_t in_c = gc.size() - detail::rank_outside(gc, n, width, support);
            if (in_perp > in_c) {
                return w;
            }
            // next combination
            std::size_t i = w;
            while (i > 0 && support[i - 1] == num_blocks - w + i - 1) {
                i--;
            }
            if (i == 0) {
                break;
            }
            support[i - 1]++;
            for (std::size_t j = i; j < w; j++) {
                support[j] = support[j - 1] + 1;
            }
        }
    }
    throw std::logic_error("C-perp \\ C is nonempty but no support found");
}

}  // namespace qconcat
