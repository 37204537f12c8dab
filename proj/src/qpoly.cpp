#include "hooktab/qpoly.hpp"

namespace hooktab {

std::string QPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first)
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        first = false;
        std::string mag = a.str();
        if (e == 0) {
            out += mag;
        } else {
            if (a != 1) out += mag + "*";
            out += (e == 1) ? "q" : "q^" + std::to_string(e);
        }
    }
    return out;
}

QPoly poly_add(const QPoly& p, const QPoly& q) {
    QPoly out = p;
    for (const auto& [e, c] : q.coeffs()) out.add_term(e, c);
    return out;
}

QPoly poly_sub(const QPoly& p, const QPoly& q) {
    QPoly out = p;
    for (const auto& [e, c] : q.coeffs()) out.add_term(e, -c);
    return out;
}

QPoly poly_mul(const QPoly& p, const QPoly& q) {
    QPoly out;
    for (const auto& [e1, c1] : p.coeffs())
        for (const auto& [e2, c2] : q.coeffs()) out.add_term(e1 + e2, c1 * c2);
    return out;
}

std::optional<QPoly> poly_try_exact_div(const QPoly& p, const QPoly& d) {
    if (d.is_zero())
        throw std::invalid_argument("division by zero polynomial");
    QPoly rem = p;
    QPoly quot;
    const QPoly::Exp dd = d.degree();
    const BigInt dc = d.coeffs().rbegin()->second;
    while (!rem.is_zero()) {
        if (rem.degree() < dd) return std::nullopt;
        const BigInt rc = rem.coeffs().rbegin()->second;
        if (rc % dc != 0) return std::nullopt;
        const BigInt t = rc / dc;
        const QPoly::Exp shift = rem.degree() - dd;
        quot.add_term(shift, t);
        for (const auto& [e, c] : d.coeffs()) rem.add_term(e + shift, -t * c);
    }
    return quot;
}

QPoly poly_exact_div(const QPoly& p, const QPoly& d) {
    auto q = poly_try_exact_div(p, d);
    if (!q) throw NonExactDivision();
    return std::move(*q);
}

} // namespace hooktab
