#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qd/pairing.hpp"

using namespace qd;

namespace {

const FieldSpec Qq = FieldSpec::rational_functions_q();
Scalar qs(long k) { return Scalar::q_power(k); }
Scalar kap() { return (qs(-1) - qs(1)).inverse(); }

// Independent pairing oracle: peels the last B letter through the C-side
// coproduct, ev(c (x) u y) = sum_p [c_p = y] kappa q^{-sum_{a<p} c_a.c_p}
// ev(c \ p (x) u). The library recursion peels the first C letter through the
// B-side coproduct instead, so the two share no code path.
Scalar pair_oracle(const GradedPair& p, const Word& c, const Word& b) {
    if (c.size() != b.size()) return Scalar::zero(p.field());
    if (c.empty()) return Scalar::one(p.field());
    int y = b.back();
    Word u(b.begin(), b.end() - 1);
    Scalar acc = Scalar::zero(p.field());
    for (size_t pos = 0; pos < c.size(); ++pos) {
        if (c[pos] != y) continue;
        Scalar f = Scalar::one(p.field());
        for (size_t a = 0; a < pos; ++a) f *= p.crossing(c[a], c[pos]);
        Word rest;
        for (size_t a = 0; a < c.size(); ++a)
            if (a != pos) rest.push_back(c[a]);
        acc += f * p.kappa(y) * pair_oracle(p, rest, u);
    }
    return acc;
}

} // namespace

TEST_CASE("generator pairing values") {
    GradedPair p = GradedPair::from_cartan(CartanDatum::sl2());
    CHECK(p.pair({0}, {0}) == kap());           // ev(E, F) = 1/(q^-1 - q)
    CHECK(p.pair(Word{}, Word{}) == Scalar::one(Qq)); // ev(1, 1) = 1
    CHECK(p.pair({0, 0}, {0, 0}) == q_factorial(2) * kap() * kap());
}

TEST_CASE("ev(E^n, F^n) = [n]_q!/(q^-1 - q)^n for n <= 8") {
    GradedPair p = GradedPair::from_cartan(CartanDatum::sl2());
    for (int n = 0; n <= 8; ++n) {
        Word w(n, 0);
        CHECK(p.pair(w, w) == q_factorial(n) * kap().pow(n));
        CHECK(pair_oracle(p, w, w) == q_factorial(n) * kap().pow(n));
    }
}

TEST_CASE("graded orthogonality") {
    GradedPair p = GradedPair::from_cartan(CartanDatum::sl3());
    CHECK(p.pair({0}, {1}).is_zero());
    CHECK(p.pair({0, 1}, {1, 1}).is_zero());
    CHECK(p.pair({0, 0, 1}, {0, 1}).is_zero());
}

TEST_CASE("the two pairing recursions agree (independent routes)") {
    GradedPair p = GradedPair::from_cartan(CartanDatum::sl3());
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> letter(0, 1), len(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        Word c, b;
        int n = len(rng), m = len(rng);
        for (int i = 0; i < n; ++i) c.push_back(letter(rng));
        for (int i = 0; i < m; ++i) b.push_back(letter(rng));
        CHECK(p.pair(c, b) == pair_oracle(p, c, b));
    }
}

TEST_CASE("Gram matrices") {
    GradedPair sl2 = GradedPair::from_cartan(CartanDatum::sl2());
    Matrix g1 = sl2.gram_matrix({1});
    REQUIRE(g1.rows() == 1);
    CHECK(g1.at(0, 0) == kap());
    Matrix g3 = sl2.gram_matrix({3});
    REQUIRE(g3.rows() == 1);
    CHECK(g3.at(0, 0) == q_factorial(3) * kap().pow(3));

    GradedPair sl3 = GradedPair::from_cartan(CartanDatum::sl3());
    Matrix g11 = sl3.gram_matrix({1, 1});
    REQUIRE(g11.rows() == 2);
    CHECK(g11.rank() == 2); // nonzero determinant
    // every entry agrees with the oracle
    auto words = sl3.words_of_degree({1, 1});
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = 0; j < words.size(); ++j)
            CHECK(g11.at((int)i, (int)j) == pair_oracle(sl3, words[i], words[j]));
}

TEST_CASE("rank-1 radical is empty up to degree 5") {
    GradedPair sl2 = GradedPair::from_cartan(CartanDatum::sl2());
    for (int d = 1; d <= 5; ++d) CHECK(sl2.radical_basis({d}).empty());
    CHECK(sl2.radical_basis({0}).size() <= 1); // degree-zero basis is the empty word
    // degree with empty word basis
    CHECK(sl2.words_of_degree({-1}).empty());
    CHECK(sl2.radical_basis({-1}).empty());
}

TEST_CASE("quantum Serre relation as the radical at degree (2,1) and (1,2)") {
    GradedPair sl3 = GradedPair::from_cartan(CartanDatum::sl3());
    for (auto deg : {std::vector<int>{2, 1}, std::vector<int>{1, 2}}) {
        auto rad = sl3.radical_basis(deg);
        REQUIRE(rad.size() == 1);
        const WordPoly& serre = rad[0];
        REQUIRE(serre.terms.size() == 3);
        // pairs to zero against all C-words of the same degree
        for (const auto& cw : sl3.words_of_degree(deg)) {
            WordPoly c;
            c.terms.emplace_back(cw, Scalar::one(Qq));
            CHECK(sl3.pair(c, serre).is_zero());
            // and via the oracle route
            Scalar acc = Scalar::zero(Qq);
            for (const auto& [bw, bc] : serre.terms) acc += bc * pair_oracle(sl3, cw, bw);
            CHECK(acc.is_zero());
        }
        // Serre shape: outer coefficients, middle -(q + q^-1) up to the
        // leading normalization
        Scalar c0 = serre.terms[0].second;
        Scalar c1 = serre.terms[1].second;
        Scalar c2 = serre.terms[2].second;
        CHECK(c0 == Scalar::one(Qq));
        CHECK(c1 * c1 == (qs(1) + qs(-1)) * (qs(1) + qs(-1)) * c0 * c2);
    }
}

TEST_CASE("truncated coevaluation for sl2 matches the closed formula") {
    GradedPair sl2 = GradedPair::from_cartan(CartanDatum::sl2());
    auto coev = sl2.truncated_coev(2);
    // 1 (x) 1 + (q^-1 - q) F (x) E + (q^-1 - q)^2/[2]_q! F^2 (x) E^2
    REQUIRE(coev.size() == 3);
    CHECK(coev[0].coeff == Scalar::one(Qq));
    CHECK(coev[1].bword == Word{0});
    CHECK(coev[1].coeff == qs(-1) - qs(1));
    CHECK(coev[2].bword == Word({0, 0}));
    CHECK(coev[2].coeff == (qs(-1) - qs(1)).pow(2) / q_factorial(2));
    // maxdeg 0
    auto c0 = sl2.truncated_coev(0);
    REQUIRE(c0.size() == 1);
    CHECK(c0[0].bword.empty());
}

TEST_CASE("snake identities at truncation") {
    GradedPair sl2 = GradedPair::from_cartan(CartanDatum::sl2());
    int maxdeg = 5;
    auto coev = sl2.truncated_coev(maxdeg);
    for (int d = 0; d <= maxdeg; ++d) {
        Word w(d, 0);
        // B-side: sum_a b_a ev(c_a (x) w) = w
        std::map<Word, Scalar> acc;
        for (const auto& t : coev) {
            Scalar v = t.coeff * sl2.pair(t.cword, w);
            if (v.is_zero()) continue;
            auto [it, ins] = acc.try_emplace(t.bword, v);
            if (!ins) it->second += v;
        }
        for (auto it = acc.begin(); it != acc.end();)
            it = it->second.is_zero() ? acc.erase(it) : std::next(it);
        REQUIRE(acc.size() == 1);
        CHECK(acc.begin()->first == w);
        CHECK(acc.begin()->second == Scalar::one(Qq));
        // C-side: sum_a ev(w (x) b_a) c_a = w
        std::map<Word, Scalar> acc2;
        for (const auto& t : coev) {
            Scalar v = t.coeff * sl2.pair(w, t.bword);
            if (v.is_zero()) continue;
            auto [it, ins] = acc2.try_emplace(t.cword, v);
            if (!ins) it->second += v;
        }
        for (auto it = acc2.begin(); it != acc2.end();)
            it = it->second.is_zero() ? acc2.erase(it) : std::next(it);
        REQUIRE(acc2.size() == 1);
        CHECK(acc2.begin()->first == w);
    }
}

TEST_CASE("degenerate pairing reported with the offending degree") {
    GradedPair sl3 = GradedPair::from_cartan(CartanDatum::sl3());
    CHECK_THROWS_AS(sl3.truncated_coev(3), degenerate_pairing_error);
}

TEST_CASE("braided antipode") {
    GradedPair sl2 = GradedPair::from_cartan(CartanDatum::sl2());
    WordPoly s1 = sl2.antipode({0});
    REQUIRE(s1.terms.size() == 1);
    CHECK(s1.terms[0].second == -Scalar::one(Qq)); // S(E) = -E
    // m(S x id) Delta(w) = 0 for every word of degree 1..4
    for (int d = 1; d <= 4; ++d) {
        Word w(d, 0);
        std::map<Word, Scalar> acc;
        for (const auto& [l, r, c] : sl2.coproduct(w)) {
            WordPoly sl = sl2.antipode(l);
            for (const auto& [lw, lc] : sl.terms) {
                Word cat = lw;
                cat.insert(cat.end(), r.begin(), r.end());
                auto [it, ins] = acc.try_emplace(cat, c * lc);
                if (!ins) it->second += c * lc;
            }
        }
        Scalar total = Scalar::zero(Qq);
        for (auto& [word, c] : acc)
            if (!c.is_zero()) total += c * c; // nonzero detector
        CHECK(total.is_zero());
    }
    // S^{-1} inverts S degreewise
    GradedPair sl3 = GradedPair::from_cartan(CartanDatum::sl3());
    for (Word w : {Word{0}, Word{0, 1}, Word{1, 0, 0}}) {
        WordPoly sinv = sl3.antipode_inv(w);
        // apply S to sinv and compare with w
        std::map<Word, Scalar> acc;
        for (const auto& [sw, sc] : sinv.terms) {
            WordPoly ss = sl3.antipode(sw);
            for (const auto& [tw, tc] : ss.terms) {
                auto [it, ins] = acc.try_emplace(tw, sc * tc);
                if (!ins) it->second += sc * tc;
            }
        }
        for (auto it = acc.begin(); it != acc.end();)
            it = it->second.is_zero() ? acc.erase(it) : std::next(it);
        REQUIRE(acc.size() == 1);
        CHECK(acc.begin()->first == w);
        CHECK(acc.begin()->second == Scalar::one(Qq));
    }
}
