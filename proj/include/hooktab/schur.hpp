#pragma once

#include "hooktab/natmultiset.hpp"
#include "hooktab/partition.hpp"
#include "hooktab/qpoly.hpp"

namespace hooktab {

struct InvalidBound : std::invalid_argument {
    InvalidBound() : std::invalid_argument("partition has more parts than variables") {}
};

struct NotAGeometricProduct : std::runtime_error {
    NotAGeometricProduct() : std::runtime_error("polynomial is not a product of (q^e - 1) factors") {}
};

// s_lambda(q, q^2, ..., q^r) as the weight generating function of SSYT.
[[nodiscard]] QPoly schur_by_enumeration(const Partition& lambda, unsigned r);

// The same specialization via the Hook Content Formula:
// q^B(lambda) * prod (q^(r+j-i) - 1) / prod (q^h - 1), one exact division.
[[nodiscard]] QPoly schur_hcf(const Partition& lambda, unsigned r);

// prod over the multiset of (q^e - 1).
[[nodiscard]] QPoly geometric_product(const NatMultiset& exponents);

// Inverse of geometric_product: strip the largest dividing (q^u - 1)
// repeatedly.  Largest-first is essential.
[[nodiscard]] NatMultiset recover_exponent_multiset(QPoly p);

// Coefficientwise palindrome test about exponent (r+1)n/2.
[[nodiscard]] bool is_centrally_symmetric(const QPoly& p, std::uint64_t n, unsigned r);

} // namespace hooktab
