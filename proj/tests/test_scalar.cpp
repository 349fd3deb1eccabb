#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qd/scalar.hpp"

using namespace qd;

namespace {

const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec Qq = FieldSpec::rational_functions_q();

Scalar qpow(long k) { return Scalar::q_power(k); }

} // namespace

TEST_CASE("q-integers match the defining sum") {
    CHECK(q_int(0) == Scalar::zero(Qq));
    CHECK(q_int(1) == Scalar::one(Qq));
    CHECK(q_int(3) == Scalar::one(Qq) + qpow(-2) + qpow(-4));
}

TEST_CASE("q-factorials") {
    CHECK(q_factorial(0) == Scalar::one(Qq));
    CHECK(q_factorial(2) == Scalar::one(Qq) + qpow(-2));
    CHECK(q_factorial(3) == (Scalar::one(Qq) + qpow(-2)) *
                                (Scalar::one(Qq) + qpow(-2) + qpow(-4)));
}

TEST_CASE("evaluate_at") {
    // (q^2 - 1)/(q - 1) at 2 -> 3
    Scalar s = (qpow(2) - Scalar::one(Qq)) / (qpow(1) - Scalar::one(Qq));
    CHECK(s.evaluate_at(2) == Rational(3));
    // classical limit of q-integers
    CHECK(q_int(3).evaluate_at(1) == Rational(3));
    for (long n = 0; n <= 50; ++n) CHECK(q_int(n).evaluate_at(1) == Rational(n));
    // pole
    Scalar pole = Scalar::one(Qq) / (qpow(1) - Scalar::one(Qq));
    CHECK_THROWS_AS(pole.evaluate_at(1), eval_error);
}

TEST_CASE("canonical form is unique and idempotent") {
    // same value, two constructions
    Scalar a = Scalar::rational_function({Int(-1), Int(0), Int(1)}, {Int(-1), Int(1)}); // (q^2-1)/(q-1)
    Scalar b = qpow(1) + Scalar::one(Qq);
    CHECK(a == b);
    // 1/(q^-1 - q) printed in centered form
    Scalar k = Scalar::one(Qq) / (qpow(-1) - qpow(1));
    CHECK(k.to_string() == "1/(q^-1 - q)");
    CHECK((qpow(-1) - qpow(1)).inverse().inverse() == qpow(-1) - qpow(1));
}

TEST_CASE("field axioms on random triples, exactly") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> small(-6, 6);
    std::uniform_int_distribution<int> pos(1, 4);
    auto rand_q = [&]() {
        IntPoly num(static_cast<size_t>(pos(rng))), den(static_cast<size_t>(pos(rng)));
        for (auto& c : num) c = small(rng);
        for (auto& c : den) c = small(rng);
        den.back() = pos(rng);
        return Scalar::rational_function(num, den, small(rng) % 3);
    };
    auto rand_rat = [&]() { return Scalar::from_rational(Rational(small(rng), pos(rng)), QQ); };
    FieldSpec Z5 = FieldSpec::cyclotomic(5);
    auto rand_cyc = [&]() {
        Scalar s = Scalar::zero(Z5);
        for (int j = 0; j < 3; ++j)
            s += Scalar::zeta_power(5, small(rng) + 6) *
                 Scalar::from_rational(Rational(small(rng), pos(rng)), Z5);
        return s;
    };
    auto check_axioms = [&](auto make) {
        for (int i = 0; i < 60; ++i) {
            Scalar x = make(), y = make(), z = make();
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            if (!x.is_zero()) CHECK(x * x.inverse() == Scalar::one(x.field()));
        }
    };
    check_axioms(rand_rat);
    check_axioms(rand_q);
    check_axioms(rand_cyc);
}

TEST_CASE("cyclotomic identities") {
    for (int n : {2, 3, 5, 7}) {
        Scalar z = Scalar::zeta_power(n, 1);
        CHECK(z.pow(n) == Scalar::one(FieldSpec::cyclotomic(n)));
        Scalar sum = Scalar::zero(FieldSpec::cyclotomic(n));
        for (int j = 0; j < n; ++j) sum += Scalar::zeta_power(n, j);
        CHECK(sum.is_zero()); // prime n
    }
    // zeta_4^2 = -1
    Scalar i4 = Scalar::zeta_power(4, 1);
    CHECK(i4 * i4 == -Scalar::one(FieldSpec::cyclotomic(4)));
}

TEST_CASE("mixed-field arithmetic is rejected") {
    Scalar a = Scalar::one(QQ);
    Scalar b = Scalar::one(Qq);
    CHECK_THROWS_AS(a + b, config_error);
}
