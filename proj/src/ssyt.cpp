#include "hooktab/ssyt.hpp"

#include <algorithm>
#include <stdexcept>

namespace hooktab {

bool is_semistandard(const Partition& shape,
                     const std::vector<std::vector<unsigned>>& rows,
                     unsigned max_entry) {
    if (rows.size() != shape.length())
        throw std::invalid_argument("row count does not match shape");
    for (unsigned i = 1; i <= shape.length(); ++i)
        if (rows[i - 1].size() != shape.part(i))
            throw std::invalid_argument("row length does not match shape");
    for (unsigned i = 1; i <= shape.length(); ++i) {
        for (unsigned j = 1; j <= shape.part(i); ++j) {
            unsigned v = rows[i - 1][j - 1];
            if (v < 1 || v > max_entry) return false;
            if (j > 1 && rows[i - 1][j - 2] > v) return false;
            if (i > 1 && rows[i - 2][j - 1] >= v) return false;
        }
    }
    return true;
}

std::uint64_t weight(const SSYT& t) {
    std::uint64_t w = 0;
    for (const auto& row : t.rows)
        for (unsigned v : row) w += v;
    return w;
}

std::uint64_t min_weight(const Partition& shape) {
    std::uint64_t w = 0;
    for (unsigned i = 1; i <= shape.length(); ++i)
        w += static_cast<std::uint64_t>(i) * shape.part(i);
    return w;
}

SsytStream::SsytStream(Partition shape, unsigned max_entry)
    : shape_(std::move(shape)), max_entry_(max_entry) {
    for (unsigned i = 1; i <= shape_.length(); ++i)
        for (unsigned j = 1; j <= shape_.part(i); ++j)
            boxes_.emplace_back(i, j);
    rows_.resize(shape_.length());
    for (unsigned i = 1; i <= shape_.length(); ++i)
        rows_[i - 1].assign(shape_.part(i), 0);
    exhausted_ = !refill_from(0);
}

unsigned SsytStream::min_value_at(unsigned row, unsigned col) const {
    unsigned lo = 1;
    if (col > 1) lo = std::max(lo, rows_[row - 1][col - 2]);
    if (row > 1) lo = std::max(lo, rows_[row - 2][col - 1] + 1);
    return lo;
}

bool SsytStream::refill_from(std::size_t box_index) {
    for (std::size_t k = box_index; k < boxes_.size(); ++k) {
        auto [i, j] = boxes_[k];
        unsigned lo = min_value_at(i, j);
        if (lo > max_entry_) return false;
        rows_[i - 1][j - 1] = lo;
    }
    return true;
}

std::optional<SSYT> SsytStream::next() {
    if (exhausted_) return std::nullopt;
    if (fresh_) {
        fresh_ = false;
        return SSYT{shape_, max_entry_, rows_};
    }
    // Bump the last box that can grow; larger bumps only tighten the
    // minimal suffix refill, so one candidate per box suffices.
    for (std::size_t k = boxes_.size(); k-- > 0;) {
        auto [i, j] = boxes_[k];
        unsigned v = rows_[i - 1][j - 1];
        if (v + 1 > max_entry_) continue;
        rows_[i - 1][j - 1] = v + 1;
        if (refill_from(k + 1))
            return SSYT{shape_, max_entry_, rows_};
        rows_[i - 1][j - 1] = v;
    }
    exhausted_ = true;
    return std::nullopt;
}

std::vector<SSYT> enumerate_ssyt(const Partition& shape, unsigned max_entry) {
    std::vector<SSYT> out;
    SsytStream stream(shape, max_entry);
    while (auto t = stream.next()) out.push_back(std::move(*t));
    return out;
}

SSYT king_complement(const SSYT& t, const Frame& frame) {
    if (!fits(t.shape, frame))
        throw std::invalid_argument("shape does not fit frame");
    const unsigned r = t.max_entry;
    Partition comp = complement(t.shape, frame);
    SSYT out{comp, r, {}};
    out.rows.resize(comp.length());
    for (unsigned i = 1; i <= comp.length(); ++i)
        out.rows[i - 1].assign(comp.part(i), 0);
    for (unsigned j = 1; j <= comp.width(); ++j) {
        unsigned src_col = frame.c + 1 - j;
        std::vector<bool> used(r + 1, false);
        for (unsigned i = 1; i <= t.shape.conjugate_part(src_col); ++i)
            used[t.rows[i - 1][src_col - 1]] = true;
        unsigned row = 1;
        for (unsigned v = 1; v <= r; ++v) {
            if (used[v]) continue;
            out.rows[row - 1][j - 1] = v;
            ++row;
        }
    }
    return out;
}

} // namespace hooktab
