#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hooktab {

// Row/column indices are 1-based throughout; row 1 is the north row.
struct Box {
    unsigned i = 1;
    unsigned j = 1;

    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

// Largest frame side supported; keeps every entry (at most r+c-1) small.
inline constexpr unsigned kMaxFrameSide = 10000;

struct Frame {
    unsigned r;
    unsigned c;

    Frame(unsigned rows, unsigned cols) : r(rows), c(cols) {
        if (r < 1 || c < 1)
            throw std::invalid_argument("frame sides must be positive");
        if (r > kMaxFrameSide || c > kMaxFrameSide)
            throw std::invalid_argument("frame sides capped at 10000");
    }

    [[nodiscard]] bool contains(Box b) const {
        return b.i >= 1 && b.i <= r && b.j >= 1 && b.j <= c;
    }

    friend bool operator==(const Frame&, const Frame&) = default;
};

// A partition: weakly decreasing positive parts.  The strict constructor
// rejects zeros outright; use normalized() when trailing zeros may occur.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        validate();
    }

    Partition(std::initializer_list<unsigned> parts)
        : parts_(parts) {
        validate();
    }

    // Accepts trailing zeros and strips them; still rejects non-monotone
    // or interior-zero input.
    [[nodiscard]] static Partition normalized(std::vector<unsigned> parts) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        return Partition(std::move(parts));
    }

    [[nodiscard]] const std::vector<unsigned>& parts() const { return parts_; }
    [[nodiscard]] unsigned length() const { return static_cast<unsigned>(parts_.size()); }
    [[nodiscard]] unsigned width() const { return parts_.empty() ? 0 : parts_[0]; }
    [[nodiscard]] bool empty() const { return parts_.empty(); }

    [[nodiscard]] std::uint64_t size() const {
        std::uint64_t n = 0;
        for (unsigned p : parts_) n += p;
        return n;
    }

    // 1-based row length; zero beyond length().
    [[nodiscard]] unsigned part(unsigned i) const {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    // Number of parts that are >= j, i.e. the 1-based conjugate part.
    [[nodiscard]] unsigned conjugate_part(unsigned j) const {
        unsigned n = 0;
        for (unsigned p : parts_) {
            if (p >= j) ++n; else break;
        }
        return n;
    }

    [[nodiscard]] bool contains_box(Box b) const {
        return b.i >= 1 && b.i <= parts_.size() && b.j >= 1 && b.j <= parts_[b.i - 1];
    }

    [[nodiscard]] std::string to_string() const {
        std::string s;
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(parts_[k]);
        }
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    void validate() const {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] == 0)
                throw std::invalid_argument("partition parts must be positive");
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    std::vector<unsigned> parts_;
};

[[nodiscard]] inline bool fits(const Partition& lambda, const Frame& frame) {
    return lambda.length() <= frame.r && lambda.width() <= frame.c;
}

// All boxes (a,b) whose addition to [lambda] leaves a Young diagram inside
// the frame, sorted by increasing row.
[[nodiscard]] std::vector<Box> addable_boxes(const Partition& lambda, const Frame& frame);

[[nodiscard]] bool is_addable(const Partition& lambda, const Frame& frame, Box b);

// lambda' with part a lengthened by one.
[[nodiscard]] Partition add_box(const Partition& lambda, Box b);

// The 180-degree complement of [lambda] in the frame.
[[nodiscard]] Partition complement(const Partition& lambda, const Frame& frame);

} // namespace hooktab
