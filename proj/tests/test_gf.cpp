#include <doctest.h>

#include <random>

#include "fptk/gf.hpp"

using namespace fptk;
using gf::FieldElement;

TEST_CASE("make_field basics") {
    auto f5 = gf::make_field(5, 1);
    CHECK(f5->p == 5);
    CHECK(f5->k == 1);
    CHECK(f5->modulus.empty());

    // smallest monic irreducible quadratic over F_3 is t^2 + 1
    auto f9 = gf::make_field(3, 2);
    CHECK(f9->modulus == std::vector<int64_t>{1, 0, 1});

    CHECK_THROWS_AS(gf::make_field(4, 1), PrimalityError);
    CHECK_THROWS_AS(gf::make_field(1, 1), PrimalityError);
    CHECK_THROWS_AS(gf::make_field(5, 0), RangeError);
    CHECK_THROWS_AS(gf::make_field(5, 9), RangeError);
}

TEST_CASE("make_field is deterministic and memoized") {
    auto a = gf::make_field(7, 3);
    auto b = gf::make_field(7, 3);
    CHECK(a.get() == b.get());
    CHECK(a->modulus == b->modulus);
    // every monic quadratic preceding t^2 + 1 in the low-degree-first order
    // has constant term 0, hence the root 0; t^2 + 1 itself has none in F_3
    for (int64_t x = 0; x < 3; ++x) CHECK((x * x + 1) % 3 != 0);
    CHECK(gf::make_field(3, 2)->modulus == std::vector<int64_t>{1, 0, 1});
}

TEST_CASE("prime field arithmetic") {
    auto f7 = gf::make_field(7);
    auto x = FieldElement::from_int(f7, 3);
    CHECK(x.inv() == FieldElement::from_int(f7, 5));
    auto f5 = gf::make_field(5);
    CHECK(FieldElement::from_int(f5, 3) + FieldElement::from_int(f5, 4) ==
          FieldElement::from_int(f5, 2));
    CHECK_THROWS_AS(FieldElement::zero(f7).inv(), DivisionByZero);
    CHECK_THROWS_AS(FieldElement::from_int(f5, 1) + FieldElement::from_int(f7, 1),
                    FieldMismatch);
}

TEST_CASE("frobenius in F_9 sends t to -t") {
    auto f9 = gf::make_field(3, 2);
    FieldElement t(f9, {0, 1});
    FieldElement minus_t(f9, {0, 2});
    CHECK(t.frobenius() == minus_t);
}

TEST_CASE("embed is a ring homomorphism F_5 -> F_25") {
    auto f5 = gf::make_field(5);
    auto f25 = gf::make_field(5, 2);
    CHECK(gf::embed(FieldElement::from_int(f5, 2), f25) == FieldElement::from_int(f25, 2));
    CHECK(gf::embed(FieldElement::zero(f5), f25).is_zero());
    for (int64_t a = 0; a < 5; ++a)
        for (int64_t b = 0; b < 5; ++b) {
            auto ea = gf::embed(FieldElement::from_int(f5, a), f25);
            auto eb = gf::embed(FieldElement::from_int(f5, b), f25);
            CHECK(ea * eb == gf::embed(FieldElement::from_int(f5, a * b), f25));
            CHECK(ea + eb == gf::embed(FieldElement::from_int(f5, a + b), f25));
        }
    CHECK_THROWS_AS(gf::embed(FieldElement::from_int(f5, 2), gf::make_field(7, 2)),
                    FieldMismatch);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(42);
    for (auto [p, k] : {std::pair<int64_t, int>{13, 1}, {3, 4}, {7, 2}}) {
        auto f = gf::make_field(p, k);
        int64_t n = f->size();
        for (int trial = 0; trial < 200; ++trial) {
            auto x = gf::element_at(f, static_cast<int64_t>(rng() % n));
            auto y = gf::element_at(f, static_cast<int64_t>(rng() % n));
            auto z = gf::element_at(f, static_cast<int64_t>(rng() % n));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + (y + z) == (x + y) + z);
            if (!x.is_zero()) CHECK(x * x.inv() == FieldElement::one(f));
        }
    }
}

TEST_CASE("frobenius has order k and fixes exactly the prime subfield") {
    for (auto [p, k] : {std::pair<int64_t, int>{3, 4}, {5, 2}, {2, 8}, {7, 2}}) {
        auto f = gf::make_field(p, k);
        int64_t n = f->size();
        REQUIRE(n <= 10000);
        for (int64_t idx = 0; idx < n; ++idx) {
            auto x = gf::element_at(f, idx);
            auto y = x;
            for (int i = 0; i < k; ++i) y = y.frobenius();
            CHECK(y == x);
            bool fixed = x.frobenius() == x;
            bool constant = true;
            for (int i = 1; i < k; ++i) constant &= x.rep()[i] == 0;
            CHECK(fixed == constant);
        }
    }
}

TEST_CASE("pow matches repeated multiplication") {
    auto f = gf::make_field(11, 2);
    FieldElement t(f, {3, 5});
    FieldElement acc = FieldElement::one(f);
    for (uint64_t n = 0; n < 30; ++n) {
        CHECK(t.pow(n) == acc);
        acc = acc * t;
    }
}

TEST_CASE("embed_ext maps F_4 into F_16 consistently") {
    auto f4 = gf::make_field(2, 2);
    auto f16 = gf::make_field(2, 4);
    for (int64_t i = 0; i < 4; ++i)
        for (int64_t j = 0; j < 4; ++j) {
            auto a = gf::element_at(f4, i);
            auto b = gf::element_at(f4, j);
            CHECK(gf::embed_ext(a * b, f16) == gf::embed_ext(a, f16) * gf::embed_ext(b, f16));
            CHECK(gf::embed_ext(a + b, f16) == gf::embed_ext(a, f16) + gf::embed_ext(b, f16));
        }
}
