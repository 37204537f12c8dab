#include "hooktab/hooks.hpp"

#include <stdexcept>

namespace hooktab {

namespace {

void require_box(const Partition& lambda, const Frame& frame, Box b) {
    if (!fits(lambda, frame))
        throw std::invalid_argument("partition does not fit frame");
    if (!frame.contains(b))
        throw std::invalid_argument("box outside frame");
}

} // namespace

std::vector<Box> hook_boxes(const Partition& lambda, const Frame& frame, Box b) {
    require_box(lambda, frame, b);
    std::vector<Box> out{b};
    if (lambda.contains_box(b)) {
        for (unsigned i = b.i + 1; i <= frame.r; ++i)
            if (lambda.contains_box({i, b.j})) out.push_back({i, b.j});
        for (unsigned j = b.j + 1; j <= frame.c; ++j)
            if (lambda.contains_box({b.i, j})) out.push_back({b.i, j});
    } else {
        for (unsigned i = 1; i < b.i; ++i)
            if (!lambda.contains_box({i, b.j})) out.push_back({i, b.j});
        for (unsigned j = 1; j < b.j; ++j)
            if (!lambda.contains_box({b.i, j})) out.push_back({b.i, j});
    }
    return out;
}

unsigned hook_length(const Partition& lambda, const Frame& frame, Box b) {
    require_box(lambda, frame, b);
    if (lambda.contains_box(b)) {
        // arm + leg + 1, with the leg clipped by the column of [lambda]
        return (lambda.part(b.i) - b.j) + (lambda.conjugate_part(b.j) - b.i) + 1;
    }
    // Boxes of D\[lambda] north in the column are those below row
    // conjugate_part(j); west in the row, those beyond column part(i).
    return (b.i - lambda.conjugate_part(b.j)) + (b.j - lambda.part(b.i)) - 1;
}

unsigned distance(const Partition& lambda, const Frame& frame, Box b) {
    require_box(lambda, frame, b);
    return lambda.contains_box(b) ? frame.r - b.i + b.j : b.i + frame.c - b.j;
}

namespace {

RectTableau blank_tableau(const Partition& lambda, const Frame& frame) {
    RectTableau t{frame,
                  std::vector<std::vector<unsigned>>(frame.r, std::vector<unsigned>(frame.c, 0)),
                  std::vector<std::vector<bool>>(frame.r, std::vector<bool>(frame.c, false)),
                  std::nullopt};
    for (unsigned i = 1; i <= frame.r; ++i)
        for (unsigned j = 1; j <= lambda.part(i); ++j)
            t.inside[i - 1][j - 1] = true;
    return t;
}

} // namespace

RectTableau hook_distance_tableau(const Partition& lambda, const Frame& frame) {
    if (!fits(lambda, frame))
        throw std::invalid_argument("partition does not fit frame");
    RectTableau t = blank_tableau(lambda, frame);
    for (unsigned i = 1; i <= frame.r; ++i)
        for (unsigned j = 1; j <= frame.c; ++j)
            t.grid[i - 1][j - 1] = t.inside[i - 1][j - 1] ? hook_length(lambda, frame, {i, j})
                                                          : distance(lambda, frame, {i, j});
    return t;
}

RectTableau distance_hook_tableau(const Partition& lambda, const Frame& frame) {
    if (!fits(lambda, frame))
        throw std::invalid_argument("partition does not fit frame");
    RectTableau t = blank_tableau(lambda, frame);
    for (unsigned i = 1; i <= frame.r; ++i)
        for (unsigned j = 1; j <= frame.c; ++j)
            t.grid[i - 1][j - 1] = t.inside[i - 1][j - 1] ? distance(lambda, frame, {i, j})
                                                          : hook_length(lambda, frame, {i, j});
    return t;
}

RectTableau hook_hook_tableau(const Partition& lambda, const Frame& frame, Box addbox) {
    if (!fits(lambda, frame))
        throw std::invalid_argument("partition does not fit frame");
    if (!is_addable(lambda, frame, addbox))
        throw std::invalid_argument("box is not addable");
    Partition mu = add_box(lambda, addbox);
    RectTableau t = blank_tableau(lambda, frame);
    t.hole = addbox;
    for (unsigned i = 1; i <= frame.r; ++i)
        for (unsigned j = 1; j <= frame.c; ++j) {
            if (t.is_hole(i, j)) continue;
            t.grid[i - 1][j - 1] = t.inside[i - 1][j - 1] ? hook_length(lambda, frame, {i, j})
                                                          : hook_length(mu, frame, {i, j});
        }
    return t;
}

Lemma2Sets lemma2_sets(const Partition& lambda, const Frame& frame, Box addbox) {
    if (!is_addable(lambda, frame, addbox))
        throw std::invalid_argument("box is not addable");
    Partition mu = add_box(lambda, addbox);
    const auto [a, b] = addbox;
    Lemma2Sets s;
    for (unsigned j = 1; j < b; ++j) s.R.add(hook_length(lambda, frame, {a, j}));
    for (unsigned i = a + 1; i <= frame.r; ++i) s.R_prime.add(hook_length(mu, frame, {i, b}));
    for (unsigned i = 1; i < a; ++i) s.C.add(hook_length(lambda, frame, {i, b}));
    for (unsigned j = b + 1; j <= frame.c; ++j) s.C_prime.add(hook_length(mu, frame, {a, j}));
    return s;
}

NatMultiset entry_multiset(const RectTableau& t) {
    if (t.hole)
        throw std::invalid_argument("tableau has a hole");
    NatMultiset out;
    for (const auto& row : t.grid)
        for (unsigned v : row) out.add(v);
    return out;
}

} // namespace hooktab
