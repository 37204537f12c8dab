#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>

namespace hooktab {

// Multiset of positive integers in canonical form: no zero multiplicities.
class NatMultiset {
public:
    NatMultiset() = default;

    NatMultiset(std::initializer_list<unsigned> values) {
        for (unsigned v : values) add(v);
    }

    void add(unsigned value, std::uint64_t multiplicity = 1) {
        if (multiplicity == 0) return;
        counts_[value] += multiplicity;
    }

    [[nodiscard]] std::uint64_t count(unsigned value) const {
        auto it = counts_.find(value);
        return it == counts_.end() ? 0 : it->second;
    }

    [[nodiscard]] std::uint64_t size() const {
        std::uint64_t n = 0;
        for (const auto& [v, m] : counts_) n += m;
        return n;
    }

    [[nodiscard]] bool empty() const { return counts_.empty(); }

    [[nodiscard]] unsigned min() const { return counts_.begin()->first; }
    [[nodiscard]] unsigned max() const { return counts_.rbegin()->first; }

    // True when every multiplicity is one.
    [[nodiscard]] bool is_set() const {
        for (const auto& [v, m] : counts_)
            if (m != 1) return false;
        return true;
    }

    NatMultiset& operator+=(const NatMultiset& other) {
        for (const auto& [v, m] : other.counts_) counts_[v] += m;
        return *this;
    }

    [[nodiscard]] friend NatMultiset operator+(NatMultiset a, const NatMultiset& b) {
        a += b;
        return a;
    }

    // Copy with every value shifted up by one ({x+1 : x in X}).
    [[nodiscard]] NatMultiset shifted_up() const {
        NatMultiset out;
        for (const auto& [v, m] : counts_) out.counts_[v + 1] = m;
        return out;
    }

    // {lo, lo+1, ..., hi}; empty when hi < lo.
    [[nodiscard]] static NatMultiset range(unsigned lo, unsigned hi) {
        NatMultiset out;
        for (unsigned v = lo; v <= hi && hi >= lo; ++v) out.add(v);
        return out;
    }

    // Smallest value whose multiplicities differ, if any.
    [[nodiscard]] std::optional<unsigned> first_difference(const NatMultiset& other) const {
        auto a = counts_.begin();
        auto b = other.counts_.begin();
        while (a != counts_.end() || b != other.counts_.end()) {
            if (b == other.counts_.end()) return a->first;
            if (a == counts_.end()) return b->first;
            if (a->first < b->first) return a->first;
            if (b->first < a->first) return b->first;
            if (a->second != b->second) return a->first;
            ++a, ++b;
        }
        return std::nullopt;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (const auto& [v, m] : counts_) {
            for (std::uint64_t k = 0; k < m; ++k) {
                if (!first) s += ',';
                s += std::to_string(v);
                first = false;
            }
        }
        s += '}';
        return s;
    }

    [[nodiscard]] const std::map<unsigned, std::uint64_t>& counts() const { return counts_; }

    friend bool operator==(const NatMultiset&, const NatMultiset&) = default;

private:
    std::map<unsigned, std::uint64_t> counts_;
};

} // namespace hooktab
