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

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qconcat/qconcat.hpp"

namespace {

using namespace qconcat;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

/// Thrown for invalid parameter combinations detected after parsing.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

uint64_t default_seed() {
    const char *env = std::getenv("QCONCAT_SEED");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    try {
        std::size_t used = 0;
        uint64_t s = std::stoull(env, &used);
        if (used == std::string(env).size()) {
            return s;
        }
    } catch (const std::exception &) {
    }
    throw UsageError(std::string("QCONCAT_SEED is not an unsigned integer: ") + env);
}

/// Echoes the resolved configuration as '#' lines.
class Config {
   public:
    explicit Config(std::string command) : command_(std::move(command)) {}
    template <typename T>
    void add(const std::string &key, const T &value) {
        std::ostringstream ss;
        ss << value;
        entries_.push_back(key + "=" + ss.str());
    }
    std::vector<std::string> lines() const {
        std::vector<std::string> out{"qconcat " + command_};
        for (const auto &e : entries_) {
            out.push_back(e);
        }
        return out;
    }
    void print(std::ostream &out) const {
        for (const auto &l : lines()) {
            out << "# " << l << '\n';
        }
    }

   private:
    std::string command_;
    std::vector<std::string> entries_;
};

void report_code(std::ostream &out, const StabilizerCode &q, std::size_t d_lower) {
    out << q.params() << " d_lower=" << d_lower << '\n';
    out << "stabilizer_generators=" << q.c().dim() << '\n';
    out << "logical_coset_generators=" << q.c_perp().dim() << '\n';
}

void emit_generators(const std::string &path, const StabilizerCode &q) {
    if (path.empty()) {
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw std::runtime_error("cannot write " + path);
    }
    write_generators(f, q.c());
}

struct BuildArgs {
    unsigned m = 0;
    uint32_t k = 0;
    std::string outer;
    std::string inner;
    std::size_t s = 0;
    std::vector<std::size_t> ks;
    std::size_t inner_n = 0;
    std::vector<std::size_t> inner_d;
    std::string emit;
    uint64_t seed = 0;
};

int cmd_build_qrs(const BuildArgs &a) {
    Config cfg("build qrs");
    cfg.add("m", a.m);
    cfg.add("k", a.k);
    QuantumRSCode q = quantum_rs(a.m, a.k);
    cfg.print(std::cout);
    report_code(std::cout, q.stab, *q.stab.d_lower());
    std::cout << "block_width=" << q.m << '\n';
    emit_generators(a.emit, q.stab);
    return kExitOk;
}

int cmd_build_concat(const BuildArgs &a) {
    Config cfg("build concat");
    cfg.add("outer", a.outer);
    cfg.add("inner", a.inner);
    cfg.add("seed", a.seed);
    ConcatenatedCode cc = resolve_concat(a.outer + "+" + a.inner, {a.seed});
    cfg.print(std::cout);
    report_code(std::cout, cc.stab, cc.d_lower);
    std::cout << "blocks=" << cc.num_blocks() << " inner_length=" << cc.inner_length() << '\n';
    emit_generators(a.emit, cc.stab);
    return kExitOk;
}

int cmd_build_gconcat(const BuildArgs &a) {
    Config cfg("build gconcat");
    cfg.add("s", a.s);
    cfg.add("m", a.m);
    std::string ks;
    for (auto k : a.ks) {
        ks += (ks.empty() ? "" : ",") + std::to_string(k);
    }
    std::string ds;
    for (auto d : a.inner_d) {
        ds += (ds.empty() ? "" : ",") + std::to_string(d);
    }
    cfg.add("ks", ks);
    cfg.add("inner_n", a.inner_n);
    cfg.add("inner_d", ds);
    cfg.add("seed", a.seed);
    if (a.ks.size() != a.s || a.inner_d.size() != a.s) {
        throw UsageError("--ks and --inner-d need exactly s = " + std::to_string(a.s) + " entries");
    }
    std::vector<OuterCode> outers;
    std::vector<std::size_t> dims;
    for (std::size_t j = 0; j < a.s; j++) {
        outers.push_back(outer_view(quantum_rs(a.m, static_cast<uint32_t>(a.ks[j]))));
        dims.push_back((j + 1) * a.m);
    }
    auto chain = find_nested_chain(a.inner_n, dims, a.inner_d, a.seed);
    ConcatenatedCode cc = generalized_concatenate(std::move(outers), extend_symplectic_chain(std::move(chain)));
    cfg.print(std::cout);
    report_code(std::cout, cc.stab, cc.d_lower);
    std::cout << "order=" << cc.order() << " blocks=" << cc.num_blocks() << " inner_length=" << cc.inner_length()
              << '\n';
    std::cout << "rate=" << fixed6(static_cast<double>(cc.stab.k()) / static_cast<double>(cc.stab.n())) << '\n';
    emit_generators(a.emit, cc.stab);
    return kExitOk;
}

int cmd_mindist(const std::string &spec, uint64_t budget, unsigned threads, std::size_t block_width, uint64_t seed) {
    Config cfg("mindist");
    cfg.add("code", spec);
    cfg.add("budget", budget);
    cfg.add("block_width", block_width);
    cfg.add("seed", seed);
    StabilizerCode q = resolve_any(spec, {seed, budget});
    cfg.print(std::cout);
    EnumerationOptions opts;
    opts.budget = budget;
    opts.threads = threads;
    opts.block_width = block_width;
    const auto start = std::chrono::steady_clock::now();
    MinWeightResult r = min_weight_outside(q, opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << q.params() << " d=" << r.weight << '\n';
    std::cout << "witness=" << r.witness.pauli_str() << '\n';
    std::cerr << "elapsed_seconds=" << secs << '\n';
    return kExitOk;
}

int cmd_bounds(const std::string &kind_name, std::size_t s, const std::string &table_path, std::size_t grid,
               const std::vector<std::string> &overlay_paths, const std::string &output) {
    Config cfg("bounds");
    BoundKind kind = parse_bound_kind(kind_name);
    cfg.add("kind", kind_name);
    if (kind == BoundKind::kGcq) {
        cfg.add("s", s);
    }
    cfg.add("grid", grid);
    InnerCodeTable table;
    CurveParams params;
    params.s = s;
    if (kind == BoundKind::kKtv) {
        if (table_path.empty()) {
            throw UsageError("--kind ktv requires --table FILE");
        }
        table = read_code_table_file(table_path);
        params.table = &table;
        cfg.add("table", table_path);
    }
    std::vector<Overlay> overlays;
    for (const auto &p : overlay_paths) {
        overlays.push_back(read_overlay_file(p));
        cfg.add("overlay", p);
    }
    BoundCurve curve = curve_sample(kind, grid, params);
    if (output.empty()) {
        write_curve_csv(std::cout, curve, cfg.lines(), overlays);
    } else {
        cfg.add("output", output);
        std::ofstream f(output);
        if (!f) {
            throw std::runtime_error("cannot write " + output);
        }
        write_curve_csv(f, curve, cfg.lines(), overlays);
    }
    return kExitOk;
}

std::shared_ptr<const ConcatenatedCode> decodable_code(const std::string &spec, uint64_t seed) {
    if (is_concat_spec(spec)) {
        return std::make_shared<const ConcatenatedCode>(resolve_concat(spec, {seed}));
    }
    // A plain code is decoded as an outer code over a one-qubit trivial inner code.
    return std::make_shared<const ConcatenatedCode>(resolve_concat(spec + "+trivial:1", {seed}));
}

int cmd_simulate(const std::string &spec, double p, uint64_t trials, uint64_t seed, unsigned threads) {
    Config cfg("simulate");
    cfg.add("code", spec);
    cfg.add("p", fixed6(p));
    cfg.add("trials", trials);
    cfg.add("seed", seed);
    if (!(p >= 0 && p <= 1)) {
        throw UsageError("--p must lie in [0, 1]");
    }
    if (trials < 1) {
        throw UsageError("--trials must be at least 1");
    }
    auto code = decodable_code(spec, seed);
    ConcatDecoder decoder(code);
    cfg.print(std::cout);
    SimulationStats st = simulate(decoder, p, trials, seed, threads);
    std::cout << code->stab.params() << " d_lower=" << code->d_lower << '\n';
    std::cout << "trials=" << st.trials << '\n';
    std::cout << "failures=" << st.failures << '\n';
    std::cout << "failure_rate=" << fixed6(st.failure_rate) << '\n';
    std::cout << "wilson95=[" << fixed6(st.wilson.lo) << "," << fixed6(st.wilson.hi) << "]\n";
    std::cerr << "wall_seconds=" << st.seconds << " threads=" << threads << '\n';
    return kExitOk;
}

int cmd_verify(const std::string &suite, std::size_t max_n, uint64_t seed) {
    Config cfg("verify");
    cfg.add("suite", suite);
    cfg.add("max_n", max_n);
    cfg.add("seed", seed);
    VerifyOptions opts;
    opts.max_n = max_n;
    opts.seed = seed;
    auto results = run_suite(suite, opts);
    cfg.print(std::cout);
    bool all = true;
    for (const auto &r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " [" << r.anchor << "]";
        if (!r.detail.empty()) {
            std::cout << " : " << r.detail;
        }
        std::cout << '\n';
        all &= r.pass;
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
    return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qconcat: concatenated stabilizer codes, bounds and decoding"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    uint64_t seed = 0;
    try {
        seed = default_seed();
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    BuildArgs build;
    build.seed = seed;
    auto *cmd_build = app.add_subcommand("build", "construct a code and print its parameters");
    cmd_build->require_subcommand(1);
    auto *b_qrs = cmd_build->add_subcommand("qrs", "quantum Reed-Solomon code");
    b_qrs->add_option("--m", build.m, "field degree")->required();
    b_qrs->add_option("--k", build.k, "RS dimension")->required();
    b_qrs->add_option("--emit-generators", build.emit, "write the stabilizer generator matrix");
    auto *b_concat = cmd_build->add_subcommand("concat", "plain concatenation");
    b_concat->add_option("--outer", build.outer, "outer code spec")->required();
    b_concat->add_option("--inner", build.inner, "inner code spec or generator file")->required();
    b_concat->add_option("--emit-generators", build.emit, "write the stabilizer generator matrix");
    b_concat->add_option("--seed", build.seed, "search seed");
    auto *b_gconcat = cmd_build->add_subcommand("gconcat", "generalized concatenation with quantum RS outers");
    b_gconcat->add_option("--s", build.s, "order")->required()->check(CLI::PositiveNumber);
    b_gconcat->add_option("--m", build.m, "field degree")->required();
    b_gconcat->add_option("--ks", build.ks, "outer RS dimensions, one per level")->required()->delimiter(',');
    b_gconcat->add_option("--inner-n", build.inner_n, "inner block length")->required();
    b_gconcat->add_option("--inner-d", build.inner_d, "minimum inner distances, one per level")
        ->required()
        ->delimiter(',');
    b_gconcat->add_option("--emit-generators", build.emit, "write the stabilizer generator matrix");
    b_gconcat->add_option("--seed", build.seed, "search seed");

    std::string md_code;
    uint64_t md_budget = uint64_t{1} << 34;
    unsigned md_threads = 1;
    std::size_t md_block = 1;
    uint64_t md_seed = seed;
    auto *cmd_md = app.add_subcommand("mindist", "exact minimum distance by coset enumeration");
    cmd_md->add_option("--code", md_code, "code spec or generator file")->required();
    cmd_md->add_option("--budget", md_budget, "maximum number of weight evaluations");
    cmd_md->add_option("--threads", md_threads, "worker threads")->check(CLI::PositiveNumber);
    cmd_md->add_option("--block-width", md_block, "count weight in blocks of this many qubits")
        ->check(CLI::PositiveNumber);
    cmd_md->add_option("--seed", md_seed, "search seed");

    std::string bd_kind;
    std::size_t bd_s = 1;
    std::string bd_table;
    std::size_t bd_grid = 101;
    std::vector<std::string> bd_overlay;
    std::string bd_output;
    auto *cmd_bd = app.add_subcommand("bounds", "sample an asymptotic bound curve as CSV");
    cmd_bd->add_option("--kind", bd_kind, "gv | zyablov | gcq | bz | ktv")
        ->required()
        ->check(CLI::IsMember({"gv", "zyablov", "gcq", "bz", "ktv"}));
    cmd_bd->add_option("--s", bd_s, "order for gcq")->check(CLI::PositiveNumber);
    cmd_bd->add_option("--table", bd_table, "inner code table for ktv");
    cmd_bd->add_option("--grid", bd_grid, "number of rate samples")->check(CLI::Range(2, 1000000));
    cmd_bd->add_option("--overlay", bd_overlay, "extra R,delta CSV curve (repeatable)");
    cmd_bd->add_option("--output", bd_output, "write CSV here instead of stdout");

    std::string sim_code;
    double sim_p = 0;
    uint64_t sim_trials = 0;
    uint64_t sim_seed = seed;
    unsigned sim_threads = 1;
    auto *cmd_sim = app.add_subcommand("simulate", "Monte Carlo decoding under depolarizing noise");
    cmd_sim->add_option("--code", sim_code, "code spec (OUTER+INNER, or a single code)")->required();
    cmd_sim->add_option("--p", sim_p, "per-qubit error probability")->required();
    cmd_sim->add_option("--trials", sim_trials, "number of trials")->required();
    cmd_sim->add_option("--seed", sim_seed, "RNG seed");
    cmd_sim->add_option("--threads", sim_threads, "worker threads")->check(CLI::PositiveNumber);

    std::string vf_suite;
    std::size_t vf_max_n = 3;
    uint64_t vf_seed = seed;
    auto *cmd_vf = app.add_subcommand("verify", "run invariant verification suites");
    cmd_vf->add_option("--suite", vf_suite, "counting | symplectic | rho | distance | decoder | all")
        ->required()
        ->check(CLI::IsMember({"counting", "symplectic", "rho", "distance", "decoder", "all"}));
    cmd_vf->add_option("--max-n", vf_max_n, "largest length for enumeration checks");
    cmd_vf->add_option("--seed", vf_seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_build->parsed()) {
            if (b_qrs->parsed()) {
                return cmd_build_qrs(build);
            }
            if (b_concat->parsed()) {
                return cmd_build_concat(build);
            }
            return cmd_build_gconcat(build);
        }
        if (cmd_md->parsed()) {
            return cmd_mindist(md_code, md_budget, md_threads, md_block, md_seed);
        }
        if (cmd_bd->parsed()) {
            return cmd_bounds(bd_kind, bd_s, bd_table, bd_grid, bd_overlay, bd_output);
        }
        if (cmd_sim->parsed()) {
            return cmd_simulate(sim_code, sim_p, sim_trials, sim_seed, sim_threads);
        }
        return cmd_verify(vf_suite, vf_max_n, vf_seed);
    } catch (const BudgetExceeded &e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitBudget;
    } catch (const SearchExhausted &e) {
        std::cerr << "search failed: " << e.what() << '\n';
        return kExitVerifyFailed;
    } catch (const FormatError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "failure: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
}
