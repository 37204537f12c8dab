#include "hooktab/partition.hpp"

namespace hooktab {

std::vector<Box> addable_boxes(const Partition& lambda, const Frame& frame) {
    if (!fits(lambda, frame))
        throw std::invalid_argument("partition does not fit frame");
    std::vector<Box> out;
    for (unsigned a = 1; a <= frame.r; ++a) {
        unsigned len = lambda.part(a);
        unsigned b = len + 1;
        if (b > frame.c) continue;
        unsigned above = (a == 1) ? frame.c : lambda.part(a - 1);
        if (b <= above) out.push_back({a, b});
    }
    return out;
}

bool is_addable(const Partition& lambda, const Frame& frame, Box b) {
    if (!frame.contains(b)) return false;
    if (b.j != lambda.part(b.i) + 1) return false;
    unsigned above = (b.i == 1) ? frame.c : lambda.part(b.i - 1);
    return b.j <= above;
}

Partition add_box(const Partition& lambda, Box b) {
    if (b.j != lambda.part(b.i) + 1 || (b.i > 1 && lambda.part(b.i - 1) < b.j))
        throw std::invalid_argument("box is not addable");
    std::vector<unsigned> parts = lambda.parts();
    if (b.i == parts.size() + 1)
        parts.push_back(1);
    else if (b.i <= parts.size())
        ++parts[b.i - 1];
    else
        throw std::invalid_argument("box is not addable");
    return Partition(std::move(parts));
}

Partition complement(const Partition& lambda, const Frame& frame) {
    if (!fits(lambda, frame))
        throw std::invalid_argument("partition does not fit frame");
    std::vector<unsigned> parts(frame.r);
    for (unsigned i = 0; i < frame.r; ++i)
        parts[i] = frame.c - lambda.part(frame.r - i);
    return Partition::normalized(std::move(parts));
}

} // namespace hooktab
