#include "sumcomp/existential.hpp"

#include <stdexcept>

#include "sumcomp/subset_enum.hpp"

namespace sumcomp {

namespace {

struct AuxSearch {
    std::vector<Value> targets;
    std::vector<std::uint64_t> suffix_sigma;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::uint64_t ticks = 0;
    bool timed_out = false;

    explicit AuxSearch(const Partition& b,
                       std::optional<std::chrono::steady_clock::time_point> dl)
        : deadline(dl) {
        targets = b.expand();
        suffix_sigma.assign(targets.size() + 1, 0);
        for (std::size_t j = targets.size(); j-- > 0;) {
            suffix_sigma[j] = suffix_sigma[j + 1] + targets[j];
        }
    }

    bool deadline_expired() {
        if (!deadline) return false;
        if (++ticks % 1024 != 0) return false;
        if (std::chrono::steady_clock::now() >= *deadline) timed_out = true;
        return timed_out;
    }

    bool search(const Partition& a, std::size_t level) {
        if (a.sigma() != suffix_sigma[level]) return false;
        if (targets.size() - level == 1) return true;
        bool found = false;
        std::vector<Part> chosen;
        detail::enumerate_subset_sums(a.parts(), targets[level], 0, chosen,
                                      [&](const std::vector<Part>& parts) {
                                          if (deadline_expired()) return false;
                                          Partition rest = subtract(a, Partition(parts));
                                          if (search(rest, level + 1)) {
                                              found = true;
                                              return false;  // short-circuit
                                          }
                                          return true;
                                      });
        return found;
    }
};

}  // namespace

bool sum_comp_exist_aux(const Partition& a, const Partition& b) {
    AuxSearch aux(b, std::nullopt);
    return aux.search(a, 0);
}

ExistReport sum_comp_exist(const Partition& a, const Partition& b, const ExistOptions& opts) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("sum_comp_exist requires non-empty partitions");
    }
    const auto start = std::chrono::steady_clock::now();

    ExistReport report;
    report.a_parts_before = a.size();
    report.b_parts_before = b.size();
    report.a_parts_after = a.size();
    report.b_parts_after = b.size();

    auto finish = [&](bool exists, Exit exit) {
        report.exists = exists;
        report.exit = exit;
        report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - start);
        return report;
    };

    if (a.sigma() != b.sigma()) return finish(false, Exit::kSumMismatch);
    if (b.size() > a.size()) return finish(false, Exit::kLengthBound);
    if (a.min_value() > b.min_value() || a.max_value() > b.max_value()) {
        return finish(false, Exit::kEndpointBound);
    }

    Partition ra = a;
    Partition rb = b;
    if (opts.simplify) {
        bool changed = true;
        bool first_pass = true;
        while (changed && (first_pass || opts.iterate_reductions)) {
            changed = false;
            Partition common = intersect(ra, rb);
            if (!common.empty()) {
                ra = subtract(ra, common);
                rb = subtract(rb, common);
                changed = true;
            }
            report.a_parts_after = ra.size();
            report.b_parts_after = rb.size();
            if (ra.empty()) return finish(true, Exit::kEqualReduced);
            if (ra.size() + 1 <= 2 * rb.size()) return finish(false, Exit::kCardinalityBound);
            // Tail merge under the full hypothesis b_{m-1} < a_n < b_m.
            // After common removal a_n == b_m is impossible; a_n > b_m is
            // left for the prefix-sum check, which always rejects it.
            if (tail_simplification_applies(ra, rb)) {
                std::tie(ra, rb) = simplify_tail(ra, rb);
                changed = true;
                report.a_parts_after = ra.size();
                report.b_parts_after = rb.size();
            }
            first_pass = false;
        }
    } else {
        // Equivalent unreduced checks: equality, then the cardinality
        // bound with the common part counted explicitly.
        if (ra == rb) return finish(true, Exit::kEqualReduced);
        const std::uint64_t k = intersect(ra, rb).size();
        if (ra.size() + k + 1 <= 2 * rb.size()) {
            return finish(false, Exit::kCardinalityBound);
        }
    }

    if (!check_prefix_sums(ra, rb)) return finish(false, Exit::kPrefixSumBound);
    if (opts.use_divisibility_check && !check_divisibility(ra, rb)) {
        return finish(false, Exit::kDivisibility);
    }

    AuxSearch aux(rb, opts.deadline);
    bool exists = aux.search(ra, 0);
    report.timed_out = aux.timed_out;
    return finish(exists, Exit::kSearch);
}

}  // namespace sumcomp
