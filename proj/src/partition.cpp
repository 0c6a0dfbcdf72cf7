#include "sumcomp/partition.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sumcomp {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("partition sum overflows 64 bits");
    }
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("partition sum overflows 64 bits");
    }
    return r;
}

}  // namespace

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    Value prev = 0;
    for (const Part& p : parts_) {
        if (p.value == 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (p.mult == 0) {
            throw std::invalid_argument("partition multiplicities must be >= 1");
        }
        if (p.value <= prev) {
            throw std::invalid_argument("partition values must be strictly increasing");
        }
        prev = p.value;
        size_ = checked_add(size_, p.mult);
        sigma_ = checked_add(sigma_, checked_mul(p.value, p.mult));
    }
}

Partition Partition::from_values(std::span<const Value> values) {
    std::vector<Value> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Part> parts;
    for (Value v : sorted) {
        if (v == 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (!parts.empty() && parts.back().value == v) {
            ++parts.back().mult;
        } else {
            parts.push_back({v, 1});
        }
    }
    return Partition(std::move(parts));
}

Partition Partition::from_values(std::initializer_list<Value> values) {
    return from_values(std::span<const Value>(values.begin(), values.size()));
}

Value Partition::min_value() const {
    if (empty()) throw std::invalid_argument("min_value of empty partition");
    return parts_.front().value;
}

Value Partition::max_value() const {
    if (empty()) throw std::invalid_argument("max_value of empty partition");
    return parts_.back().value;
}

std::uint64_t Partition::multiplicity_of(Value v) const {
    auto it = std::lower_bound(parts_.begin(), parts_.end(), v,
                               [](const Part& p, Value x) { return p.value < x; });
    if (it != parts_.end() && it->value == v) return it->mult;
    return 0;
}

std::vector<Value> Partition::expand() const {
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (const Part& p : parts_) {
        for (std::uint64_t i = 0; i < p.mult; ++i) out.push_back(p.value);
    }
    return out;
}

Partition union_of(const Partition& p, const Partition& q) {
    std::vector<Part> out;
    out.reserve(p.distinct_size() + q.distinct_size());
    auto a = p.parts().begin(), ae = p.parts().end();
    auto b = q.parts().begin(), be = q.parts().end();
    while (a != ae && b != be) {
        if (a->value < b->value) {
            out.push_back(*a++);
        } else if (b->value < a->value) {
            out.push_back(*b++);
        } else {
            out.push_back({a->value, a->mult + b->mult});
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, ae);
    out.insert(out.end(), b, be);
    return Partition(std::move(out));
}

Partition intersect(const Partition& p, const Partition& q) {
    std::vector<Part> out;
    auto a = p.parts().begin(), ae = p.parts().end();
    auto b = q.parts().begin(), be = q.parts().end();
    while (a != ae && b != be) {
        if (a->value < b->value) {
            ++a;
        } else if (b->value < a->value) {
            ++b;
        } else {
            out.push_back({a->value, std::min(a->mult, b->mult)});
            ++a;
            ++b;
        }
    }
    return Partition(std::move(out));
}

bool is_subpartition(const Partition& q, const Partition& p) {
    auto a = p.parts().begin(), ae = p.parts().end();
    for (const Part& part : q.parts()) {
        while (a != ae && a->value < part.value) ++a;
        if (a == ae || a->value != part.value || a->mult < part.mult) return false;
    }
    return true;
}

Partition subtract(const Partition& p, const Partition& q) {
    if (!is_subpartition(q, p)) {
        throw std::invalid_argument("subtract: right operand is not a subpartition");
    }
    std::vector<Part> out;
    out.reserve(p.distinct_size());
    auto b = q.parts().begin(), be = q.parts().end();
    for (const Part& part : p.parts()) {
        std::uint64_t take = 0;
        if (b != be && b->value == part.value) {
            take = b->mult;
            ++b;
        }
        if (part.mult > take) out.push_back({part.value, part.mult - take});
    }
    return Partition(std::move(out));
}

Partition prefix_le(const Partition& p, Value k) {
    std::vector<Part> out;
    for (const Part& part : p.parts()) {
        if (part.value <= k) out.push_back(part);
    }
    return Partition(std::move(out));
}

Partition suffix_ge(const Partition& p, Value k) {
    std::vector<Part> out;
    for (const Part& part : p.parts()) {
        if (part.value >= k) out.push_back(part);
    }
    return Partition(std::move(out));
}

Partition scale(const Partition& p, Value d) {
    if (d == 0) throw std::invalid_argument("scale: d must be >= 1");
    std::vector<Part> out;
    out.reserve(p.distinct_size());
    for (const Part& part : p.parts()) {
        out.push_back({checked_mul(part.value, d), part.mult});
    }
    return Partition(std::move(out));
}

Partition scale_div(const Partition& p, Value d) {
    if (d == 0) throw std::invalid_argument("scale_div: d must be >= 1");
    std::vector<Part> out;
    out.reserve(p.distinct_size());
    for (const Part& part : p.parts()) {
        if (part.value % d != 0) {
            throw std::invalid_argument("scale_div: " + std::to_string(part.value) +
                                        " is not divisible by " + std::to_string(d));
        }
        out.push_back({part.value / d, part.mult});
    }
    return Partition(std::move(out));
}

std::vector<Value> parse_values(std::string_view text) {
    std::vector<Value> out;
    std::size_t i = 0;
    auto skip_sep = [&] {
        while (i < text.size() &&
               (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) {
            ++i;
        }
    };
    auto read_number = [&](const char* what) -> std::uint64_t {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument(std::string("expected ") + what +
                                        " in partition text: \"" + std::string(text) + "\"");
        }
        std::uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::uint64_t digit = static_cast<std::uint64_t>(text[i] - '0');
            if (__builtin_mul_overflow(v, std::uint64_t{10}, &v) ||
                __builtin_add_overflow(v, digit, &v)) {
                throw std::invalid_argument("number too large in partition text");
            }
            ++i;
        }
        return v;
    };
    skip_sep();
    while (i < text.size()) {
        Value v = read_number("a value");
        std::uint64_t mult = 1;
        if (i < text.size() && text[i] == '*') {
            ++i;
            mult = read_number("a multiplicity after '*'");
            if (mult == 0) throw std::invalid_argument("multiplicity must be >= 1");
        }
        if (v == 0) throw std::invalid_argument("partition parts must be positive");
        for (std::uint64_t r = 0; r < mult; ++r) out.push_back(v);
        std::size_t before = i;
        skip_sep();
        if (i < text.size() && before == i) {
            throw std::invalid_argument("unexpected character in partition text: \"" +
                                        std::string(text) + "\"");
        }
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    std::vector<Value> values = parse_values(text);
    return Partition::from_values(values);
}

std::string to_text(const Partition& p) {
    std::ostringstream os;
    bool first = true;
    for (const Part& part : p.parts()) {
        if (!first) os << ',';
        first = false;
        os << part.value;
        if (part.mult >= 2) os << '*' << part.mult;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << to_text(p);
}

bool is_valid_decomposition(const Decomposition& d, const Partition& a, const Partition& b) {
    Partition cover;
    std::vector<Value> targets;
    targets.reserve(d.blocks.size());
    for (const DecompositionBlock& block : d.blocks) {
        if (block.parts.sigma() != block.target) return false;
        cover = union_of(cover, block.parts);
        targets.push_back(block.target);
    }
    return cover == a && Partition::from_values(targets) == b &&
           std::is_sorted(targets.begin(), targets.end());
}

std::string to_text(const Decomposition& d) {
    std::ostringstream os;
    bool first = true;
    for (const DecompositionBlock& block : d.blocks) {
        if (!first) os << ' ';
        first = false;
        os << block.target << ":[" << to_text(block.parts) << ']';
    }
    return os.str();
}

}  // namespace sumcomp
