#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sumcomp {

using Value = std::uint64_t;

/// One distinct part value together with its multiplicity.
struct Part {
    Value value = 0;
    std::uint64_t mult = 0;

    friend bool operator==(const Part&, const Part&) = default;
    friend auto operator<=>(const Part&, const Part&) = default;
};

/// An integer partition stored as a run-length-encoded multiset:
/// distinct values strictly increasing, every multiplicity >= 1.
///
/// Partitions are immutable values. The element count and the part sum
/// are computed once at construction; the sum is overflow-checked and
/// construction throws std::overflow_error instead of wrapping.
class Partition {
public:
    /// The empty partition (no parts, sum 0).
    Partition() = default;

    /// Builds from explicit (value, multiplicity) pairs. Throws
    /// std::invalid_argument unless values are strictly increasing,
    /// positive, and every multiplicity is >= 1.
    explicit Partition(std::vector<Part> parts);

    /// Canonicalizes an arbitrary list of positive values (any order,
    /// repeats allowed). Throws std::invalid_argument on a zero value.
    static Partition from_values(std::span<const Value> values);
    static Partition from_values(std::initializer_list<Value> values);

    std::span<const Part> parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// Number of parts counted with multiplicity (n).
    std::uint64_t size() const { return size_; }
    /// Number of distinct parts (h).
    std::size_t distinct_size() const { return parts_.size(); }
    /// Sum of all parts counted with multiplicity.
    std::uint64_t sigma() const { return sigma_; }

    /// Smallest / largest part; both require a non-empty partition.
    Value min_value() const;
    Value max_value() const;

    /// Multiplicity of `v` (0 when absent).
    std::uint64_t multiplicity_of(Value v) const;

    /// Flat ascending list with repeats.
    std::vector<Value> expand() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<Part> parts_;
    std::uint64_t size_ = 0;
    std::uint64_t sigma_ = 0;
};

Partition union_of(const Partition& p, const Partition& q);
Partition intersect(const Partition& p, const Partition& q);

/// True iff every multiplicity in `q` is <= the one in `p` (q ⊆ p).
bool is_subpartition(const Partition& q, const Partition& p);

/// Multiset difference p ∖ q. Throws std::invalid_argument unless q ⊆ p;
/// never clamps silently.
Partition subtract(const Partition& p, const Partition& q);

/// Parts <= k, resp. parts >= k. For every k:
/// p == union_of(prefix_le(p, k), suffix_ge(p, k + 1)).
Partition prefix_le(const Partition& p, Value k);
Partition suffix_ge(const Partition& p, Value k);

/// Multiplies (resp. divides) every value by d, multiplicities unchanged.
/// scale throws std::overflow_error on value overflow; scale_div throws
/// std::invalid_argument when d does not divide some value. d >= 1.
Partition scale(const Partition& p, Value d);
Partition scale_div(const Partition& p, Value d);

/// Text form: comma- or whitespace-separated positive integers with
/// optional run-length tokens "v*m", e.g. "50,100*2,200,250,300".
/// parse_values preserves input order (expanded); parse_partition
/// canonicalizes. Both throw std::invalid_argument on malformed input.
std::vector<Value> parse_values(std::string_view text);
Partition parse_partition(std::string_view text);

/// Canonical text: increasing values, "v*m" whenever the multiplicity
/// is >= 2. The empty partition prints as "".
std::string to_text(const Partition& p);

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// One decomposition block: a sub-multiset of A whose parts sum to the
/// aligned target of B.
struct DecompositionBlock {
    Value target = 0;
    Partition parts;

    friend bool operator==(const DecompositionBlock&, const DecompositionBlock&) = default;
    friend auto operator<=>(const DecompositionBlock&, const DecompositionBlock&) = default;
};

/// An ordered list of blocks aligned with B's positions (B sorted
/// increasing): blocks[j].target == b_j and the multiset union of all
/// blocks equals A.
struct Decomposition {
    std::vector<DecompositionBlock> blocks;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
    friend auto operator<=>(const Decomposition&, const Decomposition&) = default;
};

/// Checks the two defining invariants: every block sums to its target
/// and the blocks' union equals `a`, with the targets equal to `b`.
bool is_valid_decomposition(const Decomposition& d, const Partition& a, const Partition& b);

/// Text form, one decomposition per line: `b1:[...] b2:[...] ...` with
/// each block in canonical partition text.
std::string to_text(const Decomposition& d);

}  // namespace sumcomp
