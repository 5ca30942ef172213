#include <doctest.h>

#include "fptk/deuring.hpp"

using namespace fptk;
using gf::FieldElement;
using poly::UniPoly;

TEST_CASE("p_digits") {
    CHECK(deuring::p_digits(0, 5).empty());
    CHECK(deuring::p_digits(7, 5) == std::vector<int64_t>{2, 1});
    CHECK(deuring::p_digits(1000000007ULL, 10) ==
          std::vector<int64_t>{7, 0, 0, 0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("binomial_row matches Pascal for small n") {
    for (int64_t p : {3, 5, 7}) {
        std::vector<int64_t> row{1};
        for (int64_t n = 0; n <= 30; ++n) {
            CHECK(deuring::binomial_row(n, p) == row);
            std::vector<int64_t> next(row.size() + 1, 1);
            for (size_t i = 1; i < row.size(); ++i) next[i] = (row[i - 1] + row[i]) % p;
            row = std::move(next);
        }
    }
}

TEST_CASE("direct polynomial examples") {
    auto f5 = gf::make_field(5);
    CHECK(deuring::deuring_direct(2, f5) == UniPoly::from_ints(f5, {1, 4, 1}));
    CHECK(deuring::deuring_direct(0, f5) == UniPoly::from_ints(f5, {1}));
    // n = p - 1 gives (lambda - 1)^{p-1}
    CHECK(deuring::deuring_direct(4, f5) == UniPoly::from_ints(f5, {1, 1, 1, 1, 1}));
    auto f7 = gf::make_field(7);
    CHECK(deuring::deuring_direct(6, f7) ==
          UniPoly::from_ints(f7, {1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("digit evaluation examples") {
    auto f5 = gf::make_field(5);
    auto a3 = FieldElement::from_int(f5, 3);
    // digits of 7 base 5 are (2, 1): (1 + 12 + 9) * 4^5 = 2 * 4 = 3 mod 5
    CHECK(deuring::deuring_eval(7, a3) == FieldElement::from_int(f5, 3));
    CHECK(deuring::deuring_eval(7, a3) ==
          deuring::deuring_direct(7, f5).eval(a3));
    CHECK(deuring::deuring_eval(0, a3) == FieldElement::one(f5));

    // n = (p^e - 1)/2 equals the e = 1 value raised to 1 + p + ... + p^{e-1}
    for (int64_t p : {5, 7, 11}) {
        auto fp = gf::make_field(p);
        for (int64_t lam = 2; lam < p; ++lam) {
            auto a = FieldElement::from_int(fp, lam);
            FieldElement base = deuring::deuring_eval(static_cast<uint64_t>((p - 1) / 2), a);
            uint64_t q = 1, exp = 0;
            for (int e = 1; e <= 3; ++e) {
                exp += q;
                q *= static_cast<uint64_t>(p);
                CHECK(deuring::deuring_eval((q - 1) / 2, a) == base.pow(exp));
            }
        }
    }
}

TEST_CASE("digit evaluation agrees with the direct polynomial for composite n") {
    for (int64_t p : {3, 7, 13}) {
        auto fp = gf::make_field(p);
        for (uint64_t n : {uint64_t(p + 1), uint64_t(3 * p + 2), uint64_t(100), uint64_t(257)})
            for (int64_t lam = 0; lam < p; ++lam) {
                auto a = FieldElement::from_int(fp, lam);
                CHECK(deuring::deuring_eval(n, a) ==
                      deuring::deuring_direct(static_cast<int64_t>(n), fp).eval(a));
            }
    }
}

TEST_CASE("antiderivative examples") {
    auto f5 = gf::make_field(5);
    // integral of 1 + lambda: lambda + inv(2) lambda^2 = lambda + 3 lambda^2 mod 5
    CHECK(deuring::antiderivative_F(1, f5) == UniPoly::from_ints(f5, {0, 1, 3}));
    CHECK(deuring::antiderivative_F(0, f5) == UniPoly::from_ints(f5, {0, 1}));
    CHECK_THROWS_AS(deuring::antiderivative_F(3, f5), RangeError);

    // derivative inverts the construction
    auto f11 = gf::make_field(11);
    for (int64_t n = 0; n <= 5; ++n)
        CHECK(deuring::antiderivative_F(n, f11).derivative() ==
              deuring::deuring_direct(n, f11));

    // (1 - lambda) F' + 2n F = H{n} with F the antiderivative of H{n-1};
    // n = 3, p = 11
    UniPoly F = deuring::antiderivative_F(2, f11);
    UniPoly one_minus = UniPoly::from_ints(f11, {1, -1});
    UniPoly lhs = one_minus * F.derivative() + F.scaled(FieldElement::from_int(f11, 6));
    CHECK(lhs == deuring::deuring_direct(3, f11));
}

TEST_CASE("legendre polynomial and the change of variable") {
    auto f7 = gf::make_field(7);
    CHECK(deuring::legendre_poly(0, f7) == UniPoly::from_ints(f7, {1}));
    CHECK(deuring::legendre_poly(1, f7) == UniPoly::from_ints(f7, {0, 1}));
    CHECK_THROWS_AS(deuring::legendre_poly(1, gf::make_field(2)), RangeError);

    // H{2}(3) = (1-3)^2 P_2((1+3)/(1-3)) mod 7
    auto lam = FieldElement::from_int(f7, 3);
    auto one = FieldElement::one(f7);
    auto lhs = deuring::deuring_direct(2, f7).eval(lam);
    auto arg = (one + lam) / (one - lam);
    auto rhs = (one - lam).pow(2) * deuring::legendre_poly(2, f7).eval(arg);
    CHECK(lhs == rhs);

    // same relation across all evaluable points and several n
    for (int64_t n = 0; n < 7; ++n) {
        UniPoly P = deuring::legendre_poly(n, f7);
        UniPoly H = deuring::deuring_direct(n, f7);
        for (int64_t l = 0; l < 7; ++l) {
            if (l == 1) continue;  // 1 - lambda = 0
            auto x = FieldElement::from_int(f7, l);
            auto t = (one + x) / (one - x);
            CHECK(H.eval(x) == (one - x).pow(static_cast<uint64_t>(n)) * P.eval(t));
        }
    }
}

TEST_CASE("root set examples") {
    auto f3 = gf::make_field(3);
    auto r1 = deuring::deuring_root_set(1, f3, f3);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0] == FieldElement::from_int(f3, 2));

    auto f7 = gf::make_field(7);
    auto r3 = deuring::deuring_root_set(3, f7, f7);
    std::vector<FieldElement> expect{FieldElement::from_int(f7, 2),
                                     FieldElement::from_int(f7, 4),
                                     FieldElement::from_int(f7, 6)};
    CHECK(r3 == expect);

    auto f5 = gf::make_field(5);
    CHECK(deuring::deuring_root_set(2, f5, f5).empty());
    CHECK(deuring::deuring_root_set(2, f5, gf::make_field(5, 2)).size() == 2);
}

TEST_CASE("mobius orbit examples") {
    auto f7 = gf::make_field(7);
    auto orbit = deuring::mobius_orbit(FieldElement::from_int(f7, 2));
    std::vector<FieldElement> expect{FieldElement::from_int(f7, 2),
                                     FieldElement::from_int(f7, 4),
                                     FieldElement::from_int(f7, 6)};
    CHECK(orbit == expect);

    // harmonic: a = -1 gives {-1, 2, 1/2}
    auto f11 = gf::make_field(11);
    auto harm = deuring::mobius_orbit(FieldElement::from_int(f11, -1));
    std::vector<FieldElement> hexp{FieldElement::from_int(f11, 2),
                                   FieldElement::from_int(f11, 6),
                                   FieldElement::from_int(f11, 10)};
    CHECK(harm == hexp);

    // equianharmonic: a^2 - a + 1 = 0 collapses the orbit to <= 2 values
    auto f13 = gf::make_field(13);
    for (int64_t a : {4, 10}) {
        auto x = FieldElement::from_int(f13, a);
        CHECK((x * x - x + FieldElement::one(f13)).is_zero());
        CHECK(deuring::mobius_orbit(x).size() <= 2);
    }

    CHECK_THROWS_AS(deuring::mobius_orbit(FieldElement::zero(f7)), DomainError);
    CHECK_THROWS_AS(deuring::mobius_orbit(FieldElement::one(f7)), DomainError);
}

TEST_CASE("legendre root orbit examples") {
    auto f11 = gf::make_field(11);
    auto z = deuring::legendre_root_orbit(FieldElement::zero(f11));
    std::vector<FieldElement> zexp{FieldElement::zero(f11), FieldElement::from_int(f11, 3),
                                   FieldElement::from_int(f11, 8)};
    CHECK(z == zexp);

    auto o3 = deuring::legendre_root_orbit(FieldElement::from_int(f11, 3));
    CHECK(o3 == zexp);  // (3+3)/(-1+3) = 3, (3-3)/(1+3) = 0

    CHECK_THROWS_AS(deuring::legendre_root_orbit(FieldElement::one(f11)), DomainError);
    CHECK_THROWS_AS(deuring::legendre_root_orbit(FieldElement::from_int(f11, -1)),
                    DomainError);

    // closure: every root of P_5 mod 11 carries its full orbit inside the root set
    auto f121 = gf::make_field(11, 2);
    UniPoly P5 = deuring::legendre_poly(5, f11);
    auto roots = poly::uni_roots(P5, f121);
    UniPoly P5l = P5.lift(f121);
    for (const auto& [r, m] : roots) {
        auto minus_one = -FieldElement::one(f121);
        if (r == FieldElement::one(f121) || r == minus_one) continue;
        for (const auto& b : deuring::legendre_root_orbit(r)) CHECK(P5l.eval(b).is_zero());
    }
}
