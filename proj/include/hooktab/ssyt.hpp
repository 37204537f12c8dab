#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hooktab/partition.hpp"

namespace hooktab {

// Semistandard filling of [shape] with entries in {1,...,max_entry}.
struct SSYT {
    Partition shape;
    unsigned max_entry = 1;
    std::vector<std::vector<unsigned>> rows;  // rows[i-1] has shape.part(i) entries

    friend bool operator==(const SSYT&, const SSYT&) = default;
};

[[nodiscard]] bool is_semistandard(const Partition& shape,
                                   const std::vector<std::vector<unsigned>>& rows,
                                   unsigned max_entry);

[[nodiscard]] std::uint64_t weight(const SSYT& t);

// B(lambda) = sum of i * lambda_i, the least weight of any filling.
[[nodiscard]] std::uint64_t min_weight(const Partition& shape);

// Lazy stream over SSYT_max_entry(shape) in lexicographic order of the
// row-reading word.  Single consumer; next() yields nullopt when done.
class SsytStream {
public:
    SsytStream(Partition shape, unsigned max_entry);

    [[nodiscard]] std::optional<SSYT> next();

private:
    [[nodiscard]] unsigned min_value_at(unsigned row, unsigned col) const;
    [[nodiscard]] bool refill_from(std::size_t box_index);

    Partition shape_;
    unsigned max_entry_;
    std::vector<std::pair<unsigned, unsigned>> boxes_;  // row-major, 0-based
    std::vector<std::vector<unsigned>> rows_;
    bool exhausted_ = false;
    bool fresh_ = true;
};

// Materialized enumeration, for callers that want the whole set.
[[nodiscard]] std::vector<SSYT> enumerate_ssyt(const Partition& shape, unsigned max_entry);

// Column-complement map onto SSYT of the complementary shape.
[[nodiscard]] SSYT king_complement(const SSYT& t, const Frame& frame);

} // namespace hooktab
