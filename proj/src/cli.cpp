#include "sumcomp/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sumcomp/bench.hpp"
#include "sumcomp/datagen.hpp"
#include "sumcomp/errors.hpp"
#include "sumcomp/exhaustive.hpp"
#include "sumcomp/existential.hpp"
#include "sumcomp/oracle.hpp"
#include "sumcomp/subset_enum.hpp"

namespace sumcomp {

namespace {

Partition parse_nonempty(const std::string& text, const char* which) {
    Partition p = parse_partition(text);
    if (p.empty()) {
        throw std::invalid_argument(std::string("partition ") + which + " must be non-empty");
    }
    return p;
}

// A and B inline, or the first two lines of --file. B is accepted in any
// order but canonicalized, with a warning when it was not sorted.
std::pair<Partition, Partition> load_pair(const std::string& a_text, const std::string& b_text,
                                          const std::string& file, std::ostream& err) {
    std::string a_in = a_text, b_in = b_text;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open file: " + file);
        if (!std::getline(in, a_in) || !std::getline(in, b_in)) {
            throw std::invalid_argument("file must contain two lines (A then B): " + file);
        }
    } else if (a_in.empty() || b_in.empty()) {
        throw std::invalid_argument("expected partitions A and B (inline or via --file)");
    }
    Partition a = parse_nonempty(a_in, "A");
    std::vector<Value> b_values = parse_values(b_in);
    if (!std::is_sorted(b_values.begin(), b_values.end())) {
        err << "warning: B was not sorted increasingly; sorting it\n";
    }
    Partition b = Partition::from_values(b_values);
    if (b.empty()) throw std::invalid_argument("partition B must be non-empty");
    return {std::move(a), std::move(b)};
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad " + what + ": \"" + text + "\"");
    }
}

// "3", "3:12", or comma-joined mixes like "3:5,8".
std::vector<std::uint64_t> parse_u64_list(const std::string& text, const std::string& what) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            out.push_back(parse_u64(item, what));
        } else {
            std::uint64_t first = parse_u64(item.substr(0, colon), what);
            std::uint64_t last = parse_u64(item.substr(colon + 1), what);
            if (last < first) throw std::invalid_argument("descending range in " + what);
            for (std::uint64_t v = first; v <= last; ++v) out.push_back(v);
        }
    }
    if (out.empty()) throw std::invalid_argument("empty list for " + what);
    return out;
}

std::pair<Value, Value> parse_value_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("range must be lo:hi, got \"" + text + "\"");
    }
    Value lo = parse_u64(text.substr(0, colon), "range");
    Value hi = parse_u64(text.substr(colon + 1), "range");
    if (lo < 1 || hi < lo) throw std::invalid_argument("range must satisfy 1 <= lo <= hi");
    return {lo, hi};
}

std::uint64_t default_max_blocks() {
    if (const char* env = std::getenv("SUMCOMP_MAX_BLOCKS")) {
        return parse_u64(env, "SUMCOMP_MAX_BLOCKS");
    }
    return EnumerateOptions{}.max_stored_blocks;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"integer-partition sum-composition toolkit"};
    app.name("sumcomp");
    app.require_subcommand(1);
    int rc = 0;

    // --- enumerate ----------------------------------------------------
    struct {
        std::string a, b, file;
        bool no_prune = false, canonical = false;
        std::uint64_t max_blocks = default_max_blocks();
    } en;
    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "print every AB-decomposition, one per line");
    enumerate_cmd->add_option("A", en.a, "partition A, e.g. \"1,2,2,3,4,5\"");
    enumerate_cmd->add_option("B", en.b, "partition B, e.g. \"5,5,7\"");
    enumerate_cmd->add_option("--file", en.file, "read A and B from the first two lines");
    enumerate_cmd->add_flag("--no-prune", en.no_prune,
                            "disable the necessary-condition preamble (same output, slower)");
    enumerate_cmd->add_flag("--canonical", en.canonical,
                            "collapse orderings that only permute equal targets");
    enumerate_cmd->add_option("--max-blocks", en.max_blocks,
                              "stored-block budget (also via SUMCOMP_MAX_BLOCKS)");
    enumerate_cmd->callback([&] {
        auto [a, b] = load_pair(en.a, en.b, en.file, err);
        EnumerateOptions opts;
        opts.prune = !en.no_prune;
        opts.max_stored_blocks = en.max_blocks;
        std::vector<Decomposition> all = sum_comp(a, b, opts);
        if (en.canonical) all = canonicalize(std::move(all));
        for (const Decomposition& d : all) out << to_text(d) << '\n';
        rc = all.empty() ? 1 : 0;
    });

    // --- count --------------------------------------------------------
    struct {
        std::string a, b, file;
        bool no_prune = false;
    } ct;
    auto* count_cmd = app.add_subcommand("count", "print the number of AB-decompositions");
    count_cmd->add_option("A", ct.a, "partition A");
    count_cmd->add_option("B", ct.b, "partition B");
    count_cmd->add_option("--file", ct.file, "read A and B from the first two lines");
    count_cmd->add_flag("--no-prune", ct.no_prune, "disable the preamble checks");
    count_cmd->callback([&] {
        auto [a, b] = load_pair(ct.a, ct.b, ct.file, err);
        EnumerateOptions opts;
        opts.prune = !ct.no_prune;
        std::uint64_t n = count_decompositions(a, b, opts);
        out << n << '\n';
        rc = n > 0 ? 0 : 1;
    });

    // --- exists -------------------------------------------------------
    struct {
        std::string a, b, file;
        bool report = false, no_prune = false, iterate = false;
    } ex;
    auto* exists_cmd = app.add_subcommand("exists", "decide whether A <= B");
    exists_cmd->add_option("A", ex.a, "partition A");
    exists_cmd->add_option("B", ex.b, "partition B");
    exists_cmd->add_option("--file", ex.file, "read A and B from the first two lines");
    exists_cmd->add_flag("--report", ex.report, "print exit variant and reduction sizes");
    exists_cmd->add_flag("--no-prune", ex.no_prune,
                         "skip the reductions (equivalent slower path)");
    exists_cmd->add_flag("--iterate-reductions", ex.iterate,
                         "re-run the reductions to a fixpoint");
    exists_cmd->callback([&] {
        auto [a, b] = load_pair(ex.a, ex.b, ex.file, err);
        ExistOptions opts;
        opts.simplify = !ex.no_prune;
        opts.iterate_reductions = ex.iterate;
        ExistReport report = sum_comp_exist(a, b, opts);
        out << (report.exists ? "true" : "false") << '\n';
        if (ex.report) {
            out << "exit=" << exit_tag(report.exit) << " a_parts=" << report.a_parts_before
                << "->" << report.a_parts_after << " b_parts=" << report.b_parts_before << "->"
                << report.b_parts_after << " elapsed_us=" << report.elapsed.count() << '\n';
        }
        rc = report.exists ? 0 : 1;
    });

    // --- subsets --------------------------------------------------------
    struct {
        std::string a, file;
        std::uint64_t target = 0;
        std::uint64_t from_pos = 1;
    } su;
    auto* subsets_cmd =
        app.add_subcommand("subsets", "print every sub-multiset of A summing to --target");
    subsets_cmd->add_option("A", su.a, "partition A");
    subsets_cmd->add_option("--file", su.file, "read A from the first line");
    subsets_cmd->add_option("--target", su.target, "required sum")->required();
    subsets_cmd->add_option("--from-pos", su.from_pos,
                            "1-based distinct-part position to start from");
    subsets_cmd->callback([&] {
        std::string a_in = su.a;
        if (!su.file.empty()) {
            std::ifstream in(su.file);
            if (!in || !std::getline(in, a_in)) {
                throw std::invalid_argument("cannot read partition from file: " + su.file);
            }
        }
        Partition a = parse_nonempty(a_in, "A");
        if (su.target == 0) throw std::invalid_argument("--target must be >= 1");
        if (su.from_pos == 0) throw std::invalid_argument("--from-pos is 1-based");
        std::uint64_t visits = for_each_subset_sum(a, su.target, su.from_pos - 1,
                                                   [&](const Partition& s) {
                                                       out << to_text(s) << '\n';
                                                       return true;
                                                   });
        rc = visits > 0 ? 0 : 1;
    });

    // --- oracle ---------------------------------------------------------
    struct {
        std::string a, b, file;
    } orc;
    auto* oracle_cmd =
        app.add_subcommand("oracle", "brute-force reference (small instances only)");
    oracle_cmd->require_subcommand(1);
    auto add_oracle_sub = [&](const char* name, const char* help, bool counting) {
        auto* sub = oracle_cmd->add_subcommand(name, help);
        sub->add_option("A", orc.a, "partition A");
        sub->add_option("B", orc.b, "partition B");
        sub->add_option("--file", orc.file, "read A and B from the first two lines");
        sub->callback([&, counting] {
            auto [a, b] = load_pair(orc.a, orc.b, orc.file, err);
            if (counting) {
                std::uint64_t n = oracle_decompositions(a, b).size();
                out << n << '\n';
                rc = n > 0 ? 0 : 1;
            } else {
                bool found = oracle_exists(a, b);
                out << (found ? "true" : "false") << '\n';
                rc = found ? 0 : 1;
            }
        });
    };
    add_oracle_sub("count", "count decompositions by exhaustive assignment", true);
    add_oracle_sub("exists", "decide existence by exhaustive assignment", false);

    // --- gen ------------------------------------------------------------
    struct {
        std::string rule = "r1";
        std::uint64_t n = 0, m = 0, seed = 0, count = 1;
        Value lo = 1, hi = 1;
        bool distinct = false;
    } gn;
    auto* gen_cmd = app.add_subcommand("gen", "emit seeded instances, two lines each (A then B)");
    gen_cmd->add_option("--rule", gn.rule, "r1 (existence guaranteed) or r2 (sum-matched only)");
    gen_cmd->add_option("--n", gn.n, "length of A")->required();
    gen_cmd->add_option("--m", gn.m, "length of B (2 <= m < n)")->required();
    gen_cmd->add_option("--lo", gn.lo, "smallest value")->required();
    gen_cmd->add_option("--hi", gn.hi, "largest value")->required();
    gen_cmd->add_option("--seed", gn.seed, "seed of the first instance");
    gen_cmd->add_option("--count", gn.count, "emit this many instances, consecutive seeds");
    gen_cmd->add_flag("--distinct", gn.distinct, "draw A without repeated values");
    gen_cmd->callback([&] {
        auto rule = rule_from_name(gn.rule);
        if (!rule) throw std::invalid_argument("rule must be r1 or r2");
        for (std::uint64_t i = 0; i < gn.count; ++i) {
            GenConfig config{gn.n, gn.m, gn.lo, gn.hi, *rule, gn.seed + i, gn.distinct};
            Instance inst = gen_instance(config);
            out << to_text(inst.a) << '\n' << to_text(inst.b) << '\n';
        }
    });

    // --- bench ------------------------------------------------------------
    struct {
        std::string mode, rule = "r1", n_list, m_list, out_path, summary_path;
        std::vector<std::string> range_args;
        std::uint64_t trials = 100, seed_base = 0, timeout_ms = 0;
        unsigned threads = 1;
        bool parallel = false, no_warmup = false, no_prune = false, iterate = false;
    } bn;
    auto* bench_cmd = app.add_subcommand("bench", "run a seeded experiment grid, emit CSV");
    bench_cmd->add_option("--mode", bn.mode, "exhaustive | existential | oracle")->required();
    bench_cmd->add_option("--rule", bn.rule, "r1 | r2");
    bench_cmd->add_option("--n", bn.n_list, "lengths of A, e.g. 3:12 or 6,8,10")->required();
    bench_cmd->add_option("--m", bn.m_list, "lengths of B")->required();
    bench_cmd->add_option("--range", bn.range_args, "value range lo:hi (repeatable)");
    bench_cmd->add_option("--trials", bn.trials, "trials per cell");
    bench_cmd->add_option("--seed-base", bn.seed_base, "first seed of the grid");
    bench_cmd->add_option("--out", bn.out_path, "records CSV path, or - for stdout")->required();
    bench_cmd->add_option("--summary", bn.summary_path, "aggregate CSV path, or - for stdout");
    bench_cmd->add_option("--threads", bn.threads, "worker threads over cells");
    bench_cmd->add_flag("--parallel", bn.parallel, "use all hardware threads");
    bench_cmd->add_option("--timeout-ms", bn.timeout_ms, "per-trial cap; expiry flags aborted");
    bench_cmd->add_flag("--no-warmup", bn.no_warmup, "skip the discarded warmup trial per cell");
    bench_cmd->add_flag("--no-prune", bn.no_prune, "disable pruning/reductions in the algorithms");
    bench_cmd->add_flag("--iterate-reductions", bn.iterate, "fixpoint reductions (existential)");
    bench_cmd->callback([&] {
        auto mode = bench_mode_from_name(bn.mode);
        if (!mode) throw std::invalid_argument("mode must be exhaustive, existential or oracle");
        auto rule = rule_from_name(bn.rule);
        if (!rule) throw std::invalid_argument("rule must be r1 or r2");
        BenchGrid grid;
        grid.rule = *rule;
        grid.n_values = parse_u64_list(bn.n_list, "--n");
        grid.m_values = parse_u64_list(bn.m_list, "--m");
        if (bn.range_args.empty()) bn.range_args = {"1:200"};
        for (const std::string& arg : bn.range_args) {
            grid.ranges.push_back(parse_value_range(arg));
        }
        BenchOptions opts;
        opts.trials = bn.trials;
        opts.seed_base = bn.seed_base;
        opts.threads = bn.parallel ? std::max(1u, std::thread::hardware_concurrency())
                                   : std::max(1u, bn.threads);
        opts.trial_timeout = std::chrono::milliseconds(bn.timeout_ms);
        opts.warmup = !bn.no_warmup;
        opts.exist_options.simplify = !bn.no_prune;
        opts.exist_options.iterate_reductions = bn.iterate;
        opts.enum_options.prune = !bn.no_prune;

        std::vector<BenchRecord> records = run_grid(*mode, grid, opts);
        auto emit = [&](const std::string& path, auto writer, const char* what) {
            if (path == "-") {
                writer(out);
            } else {
                std::ofstream file(path);
                if (!file) throw std::invalid_argument("cannot open " + path);
                writer(file);
                err << "wrote " << what << " to " << path << '\n';
            }
        };
        emit(bn.out_path,
             [&](std::ostream& os) { write_records_csv(os, records); }, "records");
        if (!bn.summary_path.empty()) {
            std::vector<SummaryRow> rows = summarize(records);
            emit(bn.summary_path,
                 [&](std::ostream& os) { write_summary_csv(os, rows); }, "summary");
        }
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}

}  // namespace sumcomp
