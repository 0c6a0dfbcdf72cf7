#include "sumcomp/exhaustive.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "sumcomp/errors.hpp"
#include "sumcomp/subset_enum.hpp"

namespace sumcomp {

namespace {

class Enumerator {
public:
    Enumerator(const Partition& b, const EnumerateOptions& opts,
               const std::function<bool(const Decomposition&)>& visit)
        : opts_(opts), visit_(visit) {
        targets_ = b.expand();
        suffix_sigma_.assign(targets_.size() + 1, 0);
        for (std::size_t j = targets_.size(); j-- > 0;) {
            suffix_sigma_[j] = suffix_sigma_[j + 1] + targets_[j];
        }
        live_bytes_ = targets_.size() * (sizeof(Value) + sizeof(std::uint64_t));
        peak_live_bytes_ = live_bytes_;
    }

    void run(const Partition& a) {
        current_.blocks.reserve(targets_.size());
        recurse(a, 0);
    }

    std::size_t peak_live_bytes() const { return peak_live_bytes_; }
    bool timed_out() const { return timed_out_; }

private:
    bool deadline_expired() {
        if (!opts_.deadline) return false;
        if (++ticks_ % 1024 != 0) return false;
        if (std::chrono::steady_clock::now() >= *opts_.deadline) {
            timed_out_ = true;
        }
        return timed_out_;
    }

    // Necessary conditions on the residual instance (a, targets[level..]).
    // Mirrors the preamble of the exhaustive algorithm, evaluated against
    // the target list without materializing it as a Partition.
    bool preamble_pass(const Partition& a, std::size_t level) const {
        const std::size_t remaining = targets_.size() - level;
        if (a.sigma() != suffix_sigma_[level]) return false;
        if (a.size() < remaining) return false;
        if (a.empty()) return false;
        if (a.min_value() > targets_[level] || a.max_value() > targets_.back()) return false;

        // Cardinality bound: |A| <= 2|B| - k - 1 with k = |A ∩ B|.
        std::uint64_t k = 0;
        {
            std::size_t j = level;
            for (const Part& part : a.parts()) {
                while (j < targets_.size() && targets_[j] < part.value) ++j;
                std::uint64_t run = 0;
                while (j < targets_.size() && targets_[j] == part.value) {
                    ++run;
                    ++j;
                }
                k += std::min<std::uint64_t>(run, part.mult);
            }
        }
        if (!(opts_.cardinality_requires_common && k == 0) &&
            a.size() + k + 1 <= 2 * static_cast<std::uint64_t>(remaining)) {
            return false;
        }

        // Prefix-sum dominance at every distinct value of A ∪ B.
        {
            auto ia = a.parts().begin();
            const auto ea = a.parts().end();
            std::size_t j = level;
            std::uint64_t sum_a = 0, sum_b = 0;
            while (ia != ea || j < targets_.size()) {
                Value h;
                if (j >= targets_.size() || (ia != ea && ia->value < targets_[j])) {
                    h = ia->value;
                } else {
                    h = targets_[j];
                }
                while (ia != ea && ia->value == h) {
                    sum_a += ia->value * ia->mult;
                    ++ia;
                }
                while (j < targets_.size() && targets_[j] == h) {
                    sum_b += h;
                    ++j;
                }
                if (sum_a < sum_b) return false;
            }
        }

        if (opts_.use_divisibility_check) {
            Value d = 0;
            for (const Part& part : a.parts()) d = std::gcd(d, part.value);
            if (d > 1) {
                for (std::size_t j = level; j < targets_.size(); ++j) {
                    if (targets_[j] % d != 0) return false;
                }
            }
        }
        return true;
    }

    // Returns false iff the whole enumeration should stop.
    bool recurse(const Partition& a, std::size_t level) {
        if (deadline_expired()) return false;
        if (opts_.prune && !preamble_pass(a, level)) return true;

        const Value target = targets_[level];
        if (level + 1 == targets_.size()) {
            if (a.sigma() != target) return true;  // unreachable when pruning
            current_.blocks.push_back({target, a});
            bool keep_going = visit_(current_);
            current_.blocks.pop_back();
            return keep_going;
        }

        std::vector<Part> chosen;
        return detail::enumerate_subset_sums(
            a.parts(), target, 0, chosen, [&](const std::vector<Part>& parts) {
                if (deadline_expired()) return false;
                Partition block(parts);
                Partition rest = subtract(a, block);
                const std::size_t frame =
                    (block.distinct_size() + rest.distinct_size()) * sizeof(Part) + 64;
                live_bytes_ += frame;
                peak_live_bytes_ = std::max(peak_live_bytes_, live_bytes_);
                current_.blocks.push_back({target, std::move(block)});
                bool keep_going = recurse(rest, level + 1);
                current_.blocks.pop_back();
                live_bytes_ -= frame;
                return keep_going;
            });
    }

    std::vector<Value> targets_;
    std::vector<std::uint64_t> suffix_sigma_;
    const EnumerateOptions& opts_;
    const std::function<bool(const Decomposition&)>& visit_;
    Decomposition current_;
    std::size_t live_bytes_ = 0;
    std::size_t peak_live_bytes_ = 0;
    std::uint64_t ticks_ = 0;
    bool timed_out_ = false;
};

}  // namespace

void sum_comp_stream(const Partition& a, const Partition& b,
                     const std::function<bool(const Decomposition&)>& visit,
                     const EnumerateOptions& opts, EnumerationStats* stats) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("sum_comp requires non-empty partitions");
    }
    std::uint64_t count = 0;
    Enumerator e(b, opts, [&](const Decomposition& d) {
        ++count;
        return visit(d);
    });
    e.run(a);
    if (stats) {
        stats->decompositions = count;
        stats->peak_live_bytes = e.peak_live_bytes();
        stats->timed_out = e.timed_out();
    }
}

std::vector<Decomposition> sum_comp(const Partition& a, const Partition& b,
                                    const EnumerateOptions& opts) {
    std::vector<Decomposition> out;
    std::uint64_t stored_blocks = 0;
    sum_comp_stream(
        a, b,
        [&](const Decomposition& d) {
            stored_blocks += d.blocks.size();
            if (stored_blocks > opts.max_stored_blocks) {
                throw ResourceLimitError("stored-block budget exceeded (" +
                                         std::to_string(opts.max_stored_blocks) + " blocks)");
            }
            out.push_back(d);
            return true;
        },
        opts);
    return out;
}

std::vector<Decomposition> sum_comp_parallel(const Partition& a, const Partition& b,
                                             unsigned threads, const EnumerateOptions& opts) {
    if (threads <= 1 || b.size() <= 1) return sum_comp(a, b, opts);
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("sum_comp requires non-empty partitions");
    }

    const Value first_target = b.expand().front();
    const Partition rest_b = subtract(b, Partition::from_values({first_target}));
    std::vector<Partition> branches = subset_sums(a, first_target);

    std::vector<std::vector<Decomposition>> per_branch(branches.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> stored_blocks{0};
    std::atomic<bool> over_budget{false};

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= branches.size() || over_budget.load()) return;
            Partition rest_a = subtract(a, branches[i]);
            std::vector<Decomposition>& out = per_branch[i];
            sum_comp_stream(
                rest_a, rest_b,
                [&](const Decomposition& d) {
                    if (stored_blocks.fetch_add(b.size()) + b.size() > opts.max_stored_blocks) {
                        over_budget.store(true);
                        return false;
                    }
                    Decomposition full;
                    full.blocks.reserve(d.blocks.size() + 1);
                    full.blocks.push_back({first_target, branches[i]});
                    full.blocks.insert(full.blocks.end(), d.blocks.begin(), d.blocks.end());
                    out.push_back(std::move(full));
                    return true;
                },
                opts);
        }
    };
    std::vector<std::thread> pool;
    const unsigned workers = std::min<unsigned>(threads, std::max<std::size_t>(branches.size(), 1));
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (over_budget.load()) {
        throw ResourceLimitError("stored-block budget exceeded (" +
                                 std::to_string(opts.max_stored_blocks) + " blocks)");
    }

    std::vector<Decomposition> out;
    for (std::vector<Decomposition>& chunk : per_branch) {
        out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                   std::make_move_iterator(chunk.end()));
    }
    return out;
}

std::uint64_t count_decompositions(const Partition& a, const Partition& b,
                                   const EnumerateOptions& opts, EnumerationStats* stats) {
    EnumerationStats local;
    sum_comp_stream(a, b, [](const Decomposition&) { return true; }, opts, &local);
    if (stats) *stats = local;
    return local.decompositions;
}

std::vector<Decomposition> canonicalize(std::vector<Decomposition> decompositions) {
    for (Decomposition& d : decompositions) {
        std::sort(d.blocks.begin(), d.blocks.end());
    }
    std::sort(decompositions.begin(), decompositions.end());
    decompositions.erase(std::unique(decompositions.begin(), decompositions.end()),
                         decompositions.end());
    return decompositions;
}

}  // namespace sumcomp
