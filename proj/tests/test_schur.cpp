#include <doctest.h>

#include <random>

#include "hooktab/schur.hpp"
#include "hooktab/ssyt.hpp"
#include "oracles.hpp"

using namespace hooktab;

TEST_CASE("schur specialization of (3,2,1) in three variables") {
    // weights of the eight tableaux: 10,11,11,12,12,13,13,14
    QPoly expect;
    expect.add_term(10, 1);
    expect.add_term(11, 2);
    expect.add_term(12, 2);
    expect.add_term(13, 2);
    expect.add_term(14, 1);
    CHECK(schur_by_enumeration(Partition{3, 2, 1}, 3) == expect);
    CHECK(schur_hcf(Partition{3, 2, 1}, 3) == expect);
}

TEST_CASE("schur specializations of small shapes") {
    CHECK(schur_hcf(Partition{}, 5) == QPoly::one());
    CHECK(schur_by_enumeration(Partition{}, 5) == QPoly::one());

    QPoly single = poly_add(QPoly::monomial(1, 1), QPoly::monomial(2, 1));
    CHECK(schur_hcf(Partition{1}, 2) == single);                    // q + q^2

    CHECK(schur_hcf(Partition{2, 2}, 2) == QPoly::monomial(6, 1));  // q^6
}

TEST_CASE("too many parts for the variable count") {
    CHECK_THROWS_AS(schur_hcf(Partition{1, 1, 1}, 2), InvalidBound);
    CHECK(schur_by_enumeration(Partition{1, 1, 1}, 2).is_zero());
    CHECK_NOTHROW(schur_hcf(Partition{1, 1, 1}, 3));
}

TEST_CASE("enumeration and hook content formula agree on a frame sweep") {
    for (const Partition& lam : oracle::partitions_in_frame(Frame(3, 3))) {
        for (unsigned r = lam.length(); r <= 4; ++r) {
            if (r == 0) continue;
            CHECK(schur_by_enumeration(lam, r) == schur_hcf(lam, r));
        }
    }
}

TEST_CASE("schur polynomial exponent extremes") {
    for (const Partition& lam : oracle::partitions_in_frame(Frame(3, 3))) {
        if (lam.empty()) continue;
        const unsigned r = 3;
        QPoly s = schur_hcf(lam, r);
        CHECK(s.lowest_exponent() == min_weight(lam));
        CHECK(s.degree() == (std::uint64_t(r) + 1) * lam.size() - min_weight(lam));
        CHECK(s.coefficient(s.lowest_exponent()) == 1);
        CHECK(s.coefficient(s.degree()) == 1);
    }
}

TEST_CASE("geometric products of explicit multisets") {
    CHECK(geometric_product(NatMultiset{}) == QPoly::one());

    NatMultiset ms;
    ms.add(1);
    ms.add(2);
    // (q - 1)(q^2 - 1) = q^3 - q^2 - q + 1
    QPoly expect;
    expect.add_term(3, 1);
    expect.add_term(2, -1);
    expect.add_term(1, -1);
    expect.add_term(0, 1);
    CHECK(geometric_product(ms) == expect);
}

TEST_CASE("recovery inverts geometric products") {
    NatMultiset ms;
    ms.add(1);
    ms.add(3, 2);
    CHECK(recover_exponent_multiset(geometric_product(ms)) == ms);

    CHECK(recover_exponent_multiset(QPoly::one()) == NatMultiset{});

    // q^2 - 1 factors as (q-1)(q+1); only the greedy largest factor is valid
    NatMultiset two;
    two.add(2);
    CHECK(recover_exponent_multiset(QPoly::geometric_factor(2)) == two);
}

TEST_CASE("recovery rejects non-products") {
    CHECK_THROWS_AS(recover_exponent_multiset(QPoly::zero()), NotAGeometricProduct);
    CHECK_THROWS_AS(recover_exponent_multiset(QPoly::monomial(0, 2)), NotAGeometricProduct);
    QPoly qp1 = poly_add(QPoly::monomial(1, 1), QPoly::one());
    CHECK_THROWS_AS(recover_exponent_multiset(qp1), NotAGeometricProduct);
    CHECK_THROWS_AS(recover_exponent_multiset(QPoly::monomial(1, 1)), NotAGeometricProduct);
}

TEST_CASE("recovery round-trips on random multisets") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<unsigned> size_dist(0, 6);
    std::uniform_int_distribution<unsigned> elem_dist(1, 10);
    for (int trial = 0; trial < 200; ++trial) {
        NatMultiset ms;
        unsigned n = size_dist(rng);
        for (unsigned k = 0; k < n; ++k) ms.add(elem_dist(rng));
        CHECK(recover_exponent_multiset(geometric_product(ms)) == ms);
    }
}

TEST_CASE("schur specializations are centrally symmetric") {
    QPoly s321 = schur_hcf(Partition{3, 2, 1}, 3);
    CHECK(is_centrally_symmetric(s321, 6, 3));

    QPoly s21 = schur_hcf(Partition{2, 1}, 2);  // q^4 + q^5, pivot 9/2
    CHECK(is_centrally_symmetric(s21, 3, 2));

    QPoly skew;                                 // q + q^3, not symmetric for n=2, r=1
    skew.add_term(1, 1);
    skew.add_term(3, 1);
    CHECK(is_centrally_symmetric(skew, 2, 1));
    skew.add_term(2, 2);
    CHECK(is_centrally_symmetric(skew, 2, 1));
    skew.add_term(1, 1);                        // now 2q + 2q^2 + q^3
    CHECK_FALSE(is_centrally_symmetric(skew, 2, 1));

    for (const Partition& lam : oracle::partitions_in_frame(Frame(4, 4)))
        CHECK(is_centrally_symmetric(schur_hcf(lam, 4), lam.size(), 4));
}
