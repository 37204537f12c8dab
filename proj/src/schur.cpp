#include "hooktab/schur.hpp"

#include "hooktab/hooks.hpp"
#include "hooktab/ssyt.hpp"

namespace hooktab {

QPoly schur_by_enumeration(const Partition& lambda, unsigned r) {
    QPoly out;
    SsytStream stream(lambda, r);
    while (auto t = stream.next()) out.add_term(weight(*t), 1);
    return out;
}

QPoly schur_hcf(const Partition& lambda, unsigned r) {
    if (lambda.length() > r) throw InvalidBound();
    // Hooks inside [lambda] do not depend on the frame; any frame that
    // holds the shape works.
    Frame frame(std::max(lambda.length(), 1u), std::max(lambda.width(), 1u));
    QPoly num = QPoly::one();
    QPoly den = QPoly::one();
    for (unsigned i = 1; i <= lambda.length(); ++i)
        for (unsigned j = 1; j <= lambda.part(i); ++j) {
            num = poly_mul(num, QPoly::geometric_factor(r + j - i));
            den = poly_mul(den, QPoly::geometric_factor(hook_length(lambda, frame, {i, j})));
        }
    QPoly ratio = poly_exact_div(num, den);
    return poly_mul(QPoly::monomial(min_weight(lambda), 1), ratio);
}

QPoly geometric_product(const NatMultiset& exponents) {
    QPoly out = QPoly::one();
    for (const auto& [e, m] : exponents.counts())
        for (std::uint64_t k = 0; k < m; ++k)
            out = poly_mul(out, QPoly::geometric_factor(e));
    return out;
}

NatMultiset recover_exponent_multiset(QPoly p) {
    if (p.is_zero()) throw NotAGeometricProduct();
    NatMultiset out;
    while (p != QPoly::one()) {
        bool found = false;
        for (QPoly::Exp u = p.degree(); u >= 1; --u) {
            if (auto q = poly_try_exact_div(p, QPoly::geometric_factor(u))) {
                out.add(static_cast<unsigned>(u));
                p = std::move(*q);
                found = true;
                break;
            }
        }
        if (!found) throw NotAGeometricProduct();
    }
    return out;
}

bool is_centrally_symmetric(const QPoly& p, std::uint64_t n, unsigned r) {
    const std::uint64_t total = (static_cast<std::uint64_t>(r) + 1) * n;
    for (const auto& [e, c] : p.coeffs()) {
        if (e > total) return false;
        if (p.coefficient(total - e) != c) return false;
    }
    return true;
}

} // namespace hooktab
