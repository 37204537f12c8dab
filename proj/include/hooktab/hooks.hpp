#pragma once

#include <optional>
#include <vector>

#include "hooktab/natmultiset.hpp"
#include "hooktab/partition.hpp"

namespace hooktab {

// A filling of every box of the frame (minus an optional hole) together
// with the inside-[lambda] mask.  Entries are stored row-major, 0 marks
// the hole.
struct RectTableau {
    Frame frame;
    std::vector<std::vector<unsigned>> grid;  // [r][c], 1-based via at()
    std::vector<std::vector<bool>> inside;    // true iff box in [lambda]
    std::optional<Box> hole;

    [[nodiscard]] unsigned at(unsigned i, unsigned j) const { return grid[i - 1][j - 1]; }
    [[nodiscard]] bool is_inside(unsigned i, unsigned j) const { return inside[i - 1][j - 1]; }
    [[nodiscard]] bool is_hole(unsigned i, unsigned j) const {
        return hole && hole->i == i && hole->j == j;
    }

    friend bool operator==(const RectTableau&, const RectTableau&) = default;
};

// The boxes of the hook on b, per the inside/outside case split.
[[nodiscard]] std::vector<Box> hook_boxes(const Partition& lambda, const Frame& frame, Box b);

[[nodiscard]] unsigned hook_length(const Partition& lambda, const Frame& frame, Box b);

// South/west walk length to (r,1) inside, north/east walk to (1,c) outside.
[[nodiscard]] unsigned distance(const Partition& lambda, const Frame& frame, Box b);

[[nodiscard]] RectTableau hook_distance_tableau(const Partition& lambda, const Frame& frame);
[[nodiscard]] RectTableau distance_hook_tableau(const Partition& lambda, const Frame& frame);

// Hooks of lambda inside [lambda], hooks of lambda' outside [lambda'],
// no entry at the added box.
[[nodiscard]] RectTableau hook_hook_tableau(const Partition& lambda, const Frame& frame, Box addbox);

struct Lemma2Sets {
    NatMultiset R;        // { h_(a,j)(lambda)  : 1 <= j < b }
    NatMultiset R_prime;  // { h_(i,b)(lambda') : a < i <= r }
    NatMultiset C;        // { h_(i,b)(lambda)  : 1 <= i < a }
    NatMultiset C_prime;  // { h_(a,j)(lambda') : b < j <= c }
};

[[nodiscard]] Lemma2Sets lemma2_sets(const Partition& lambda, const Frame& frame, Box addbox);

// Multiset of all r*c entries; rejects tableaux with a hole.
[[nodiscard]] NatMultiset entry_multiset(const RectTableau& t);

} // namespace hooktab
