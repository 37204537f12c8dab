#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hooktab {

using BigInt = boost::multiprecision::cpp_int;

struct NonExactDivision : std::runtime_error {
    NonExactDivision() : std::runtime_error("polynomial division is not exact") {}
};

// Sparse polynomial in q over the integers; no zero coefficients stored.
class QPoly {
public:
    using Exp = std::uint64_t;

    QPoly() = default;

    [[nodiscard]] static QPoly zero() { return QPoly(); }
    [[nodiscard]] static QPoly one() { return monomial(0, 1); }

    [[nodiscard]] static QPoly monomial(Exp e, BigInt coeff) {
        QPoly p;
        if (coeff != 0) p.coeffs_[e] = std::move(coeff);
        return p;
    }

    // q^e - 1
    [[nodiscard]] static QPoly geometric_factor(Exp e) {
        QPoly p = monomial(e, 1);
        p.coeffs_[0] -= 1;
        p.strip_zeros();
        return p;
    }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

    [[nodiscard]] Exp degree() const {
        if (is_zero()) throw std::logic_error("degree of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    [[nodiscard]] Exp lowest_exponent() const {
        if (is_zero()) throw std::logic_error("lowest exponent of zero polynomial");
        return coeffs_.begin()->first;
    }

    [[nodiscard]] BigInt coefficient(Exp e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    void add_term(Exp e, const BigInt& coeff) {
        if (coeff == 0) return;
        BigInt& c = coeffs_[e];
        c += coeff;
        if (c == 0) coeffs_.erase(e);
    }

    [[nodiscard]] const std::map<Exp, BigInt>& coeffs() const { return coeffs_; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    void strip_zeros() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
    }

    std::map<Exp, BigInt> coeffs_;
};

[[nodiscard]] QPoly poly_add(const QPoly& p, const QPoly& q);
[[nodiscard]] QPoly poly_sub(const QPoly& p, const QPoly& q);
[[nodiscard]] QPoly poly_mul(const QPoly& p, const QPoly& q);

// Quotient p/d when the remainder vanishes over the integers; nullopt
// otherwise.
[[nodiscard]] std::optional<QPoly> poly_try_exact_div(const QPoly& p, const QPoly& d);

// As above but throws NonExactDivision instead of returning nullopt.
[[nodiscard]] QPoly poly_exact_div(const QPoly& p, const QPoly& d);

} // namespace hooktab
