#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "qd/ncalg.hpp"

using namespace qd;

namespace {

const FieldSpec Qq = FieldSpec::rational_functions_q();

Scalar qs(long k) { return Scalar::q_power(k); }
Scalar kappa() { return (qs(-1) - qs(1)).inverse(); } // 1/(q^-1 - q)

// Weyl algebra A_1 with normal form x^a d^b (d x = x d + 1).
std::unique_ptr<PresentedAlgebra> make_weyl1() {
    auto alg = std::make_unique<PresentedAlgebra>();
    alg->field = Qq;
    alg->name = "weyl(1)";
    GenId x = alg->add_generator("x", Sort::B, 0, {1}, Scalar::one(Qq));
    GenId d = alg->add_generator("d", Sort::C, 0, {1}, Scalar::one(Qq));
    alg->finalize(/*b_first=*/true);
    NCPolynomial rhs(alg.get());
    Monomial xd;
    xd.word = {x, d};
    rhs.add_term(xd, Scalar::one(Qq));
    rhs.add_term(Monomial{}, Scalar::one(Qq));
    alg->add_rule({d, x}, rhs, "cross");
    return alg;
}

// D_q(sl2) with normal form F^a K^m E^b and E F = F E + K^-1/(q^-1 - q).
std::unique_ptr<PresentedAlgebra> make_dq_sl2() {
    auto alg = std::make_unique<PresentedAlgebra>();
    alg->field = Qq;
    alg->name = "dq-sl2";
    GenId F = alg->add_generator("F", Sort::B, 0, {1}, Scalar::zero(Qq));
    GenId E = alg->add_generator("E", Sort::C, 0, {1}, Scalar::zero(Qq));
    int K = alg->add_lattice_component("K", 0);
    alg->set_cscale(K, F, qs(-2)); // K F = q^-2 F K
    alg->set_cscale(K, E, qs(2));
    alg->finalize(/*b_first=*/true);
    NCPolynomial rhs(alg.get());
    Monomial fe;
    fe.hexp = {0};
    fe.word = {F, E};
    rhs.add_term(fe, Scalar::one(Qq));
    Monomial kinv;
    kinv.hexp = {-1};
    rhs.add_term(kinv, kappa());
    alg->add_rule({E, F}, rhs, "cross");
    return alg;
}

} // namespace

TEST_CASE("Weyl algebra rewriting") {
    auto alg = make_weyl1();
    CHECK(alg->to_string(alg->normal_form(alg->parse("d*x"))) == "x*d + 1");
    CHECK(alg->normal_form(alg->parse("d*x")) == alg->parse("x*d + 1"));
    // x * d is already in normal form
    NCPolynomial xd = alg->parse("x*d");
    CHECK(alg->normal_form(xd) == xd);
    // [d, x^3] = 3 x^2
    NCPolynomial c = alg->commutator(alg->parse("d"), alg->parse("x^3"));
    CHECK(c == alg->parse("3*x^2"));
}

TEST_CASE("dq-sl2 cross relation and commutator lemma") {
    auto alg = make_dq_sl2();
    CHECK(alg->to_string(alg->normal_form(alg->parse("E*F"))) ==
          "F*E + (1/(q^-1 - q))*K^-1");
    // [E, F] = K^-1/(q^-1 - q)
    CHECK(alg->commutator(alg->parse("E"), alg->parse("F")) ==
          alg->parse("K^-1").scaled(kappa()));
    // [E, F^m] = [m]_q K^-1 F^(m-1) / (q^-1 - q), m <= 10
    for (long m = 1; m <= 10; ++m) {
        NCPolynomial lhs = alg->commutator(alg->parse("E"), alg->power(alg->parse("F"), m));
        NCPolynomial expect =
            alg->multiply(alg->parse("K^-1"), alg->power(alg->parse("F"), m - 1))
                .scaled(q_int(m) * kappa());
        CHECK(lhs == expect);
    }
    // multiply example: E * F^2 = F^2 E + [2]_q K^-1 F / (q^-1 - q)
    NCPolynomial prod = alg->multiply(alg->parse("E"), alg->parse("F^2"));
    NCPolynomial expect = alg->parse("F^2*E");
    expect += alg->multiply(alg->parse("K^-1"), alg->parse("F")).scaled(q_int(2) * kappa());
    CHECK(prod == expect);
}

TEST_CASE("lattice commutation scalars") {
    auto alg = make_dq_sl2();
    // F K = q^2 K F (as elements: multiply and compare)
    NCPolynomial fk = alg->multiply(alg->parse("F"), alg->parse("K"));
    NCPolynomial kf = alg->multiply(alg->parse("K"), alg->parse("F"));
    CHECK(fk == kf.scaled(qs(2)));
    // K^-1 F = q^2 F K^-1
    CHECK(alg->multiply(alg->parse("K^-1"), alg->parse("F")) ==
          alg->multiply(alg->parse("F"), alg->parse("K^-1")).scaled(qs(2)));
}

TEST_CASE("parser") {
    auto alg = make_dq_sl2();
    CHECK(alg->parse("E*F - F*E").term_count() == 2);
    CHECK(alg->parse("K^-1").term_count() == 1);
    CHECK_THROWS_AS(alg->parse("E^-1"), input_error);
    CHECK_THROWS_AS(alg->parse("E*"), input_error);
    CHECK_THROWS_AS(alg->parse("W"), input_error);
    CHECK(alg->parse("q^2*F") == alg->parse("F").scaled(qs(2)));
    CHECK(alg->parse("3/4") == alg->unit().scaled(Scalar::from_rational(Rational(3, 4), Qq)));
    CHECK(alg->parse("-(E - E)").is_zero());
}

TEST_CASE("normal form is idempotent and linear; multiply associative") {
    auto alg = make_dq_sl2();
    std::vector<NCPolynomial> elems = {
        alg->parse("E*F"), alg->parse("F*E + K^-1"), alg->parse("E^2*F - q^3*F*E"),
        alg->parse("K*E + F*K^-1"), alg->parse("E*F*E")};
    for (const auto& p : elems) {
        NCPolynomial n1 = alg->normal_form(p);
        CHECK(alg->normal_form(n1) == n1);
    }
    for (const auto& a : elems)
        for (const auto& b : elems) {
            CHECK(alg->normal_form(a + b) == alg->normal_form(a) + alg->normal_form(b));
            for (const auto& c : elems) {
                NCPolynomial ab_c = alg->multiply(alg->multiply(a, b), c);
                NCPolynomial a_bc = alg->multiply(a, alg->multiply(b, c));
                CHECK(ab_c == a_bc);
            }
        }
}

TEST_CASE("rules must decrease the order") {
    auto alg = make_weyl1();
    GenId x = *alg->gen_by_name("x");
    GenId d = *alg->gen_by_name("d");
    NCPolynomial bad(alg.get());
    Monomial dx;
    dx.word = {d, x};
    bad.add_term(dx, Scalar::one(Qq));
    CHECK_THROWS_AS(alg->add_rule({x, d}, bad, "increasing"), config_error);
}

TEST_CASE("local confluence detects an inconsistent system") {
    // letters a, b with a*a -> 1, b*b -> 1, b*a -> c * a*b; consistent iff c^2 = 1
    auto build = [&](long cval) {
        auto alg = std::make_unique<PresentedAlgebra>();
        alg->field = Qq;
        alg->name = "toy";
        GenId a = alg->add_generator("a", Sort::B, 0, {1}, Scalar::one(Qq));
        GenId b = alg->add_generator("b", Sort::C, 0, {1}, Scalar::one(Qq));
        alg->finalize(true);
        NCPolynomial unit_p = alg->unit();
        alg->add_rule({a, a}, unit_p, "aa");
        alg->add_rule({b, b}, unit_p, "bb");
        NCPolynomial ab(alg.get());
        Monomial mab;
        mab.word = {a, b};
        ab.add_term(mab, Scalar::from_int(cval, Qq));
        alg->add_rule({b, a}, ab, "ba");
        return alg;
    };
    auto good = build(1);
    ConfluenceReport r1 = good->check_local_confluence(4);
    CHECK(r1.ambiguities > 0);
    CHECK(r1.all_resolved());
    auto bad = build(2);
    ConfluenceReport r2 = bad->check_local_confluence(4);
    CHECK_FALSE(r2.all_resolved());
}

TEST_CASE("dq-sl2 and weyl are locally confluent to degree 4") {
    CHECK(make_dq_sl2()->check_local_confluence(4).all_resolved());
    CHECK(make_weyl1()->check_local_confluence(4).all_resolved());
}

TEST_CASE("step budget") {
    auto alg = make_dq_sl2();
    alg->set_step_budget(3);
    CHECK_THROWS_AS(alg->multiply(alg->parse("E^3"), alg->parse("F^3")), resource_error);
}

TEST_CASE("normal monomial enumeration") {
    auto alg = make_dq_sl2();
    auto monos = alg->normal_monomials(2);
    // 1, F, E, F^2, F*E, E^2  (E*F is not normal)
    CHECK(monos.size() == 6);
    for (const auto& m : monos) CHECK(alg->is_normal(m));
}

TEST_CASE("counit") {
    auto alg = make_weyl1();
    // counit of x, d is 1 here (group-like toy values); counit multiplicative
    CHECK(alg->counit(alg->parse("x*d + 1")) == Scalar::from_int(2, Qq));
}
