/**
 * @file ncalg.hpp
 * @brief Free algebra over typed generators with a terminating rewriting
 *        engine producing PBW normal forms, plus local-confluence checking.
 *
 * A monomial is K^h * w where K^h is a multi-exponent over the lattice part
 * (commutative group-like generators, possibly with torsion) and w is a word
 * in the C/B-sorted letter generators. Moving lattice factors past letters
 * only costs a scalar, so the lattice part is stored as an exponent vector.
 *
 * Rewrite rules have pure letter words as left-hand sides and are required
 * to be strictly order-decreasing; this is asserted at insertion time, which
 * makes exhaustive rewriting terminate. Uniqueness of normal forms is
 * certified separately, up to a degree bound, by overlap analysis.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qd/scalar.hpp"

namespace qd {

enum class Sort : uint8_t { C = 0, H = 1, B = 2 };

using GenId = uint16_t;

struct WordGenerator {
    std::string name;
    Sort sort = Sort::B;            // C or B; lattice generators live separately
    int index = 0;                  // position within its sort
    std::vector<int> degree;        // multigrading
    Scalar counit;                  // epsilon(gen)
    int w1 = 1;                     // primary order weight (total degree)
    int w2 = 0;                     // secondary order weight
    int rank = 0;                   // letter precedence, assigned by finalize()
};

struct LatticeComponent {
    std::string name;
    long modulus = 0;               // 0 = free; m > 0 = order-m torsion
    std::vector<Scalar> cscale;     // K_i * x = cscale[x] * x * K_i per word generator
};

struct Monomial {
    std::vector<long> hexp;         // lattice exponents
    std::vector<GenId> word;        // letters

    bool is_unit() const {
        if (!word.empty()) return false;
        for (long e : hexp)
            if (e != 0) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return hexp == o.hexp && word == o.word; }
};

class PresentedAlgebra;

struct MonoLess {
    const PresentedAlgebra* alg = nullptr;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class NCPolynomial {
public:
    NCPolynomial() = default;
    explicit NCPolynomial(const PresentedAlgebra* a);

    const PresentedAlgebra* algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Scalar, MonoLess>& terms() const { return terms_; }

    // Adds c * m, canonicalizing torsion exponents and dropping zeros.
    void add_term(Monomial m, const Scalar& c);

    NCPolynomial& operator+=(const NCPolynomial& o);
    NCPolynomial& operator-=(const NCPolynomial& o);
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    NCPolynomial operator-() const;
    NCPolynomial scaled(const Scalar& c) const;

    bool operator==(const NCPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPolynomial& o) const { return !(*this == o); }

private:
    const PresentedAlgebra* alg_ = nullptr;
    std::map<Monomial, Scalar, MonoLess> terms_;
};

struct RewriteRule {
    std::vector<GenId> lhs;
    NCPolynomial rhs;
    std::string name;
};

struct ConfluenceEntry {
    std::string rule_a, rule_b;
    std::vector<GenId> word;
    bool resolved = false;
    std::string detail; // witness on mismatch
};

struct ConfluenceReport {
    int ambiguities = 0;
    std::vector<ConfluenceEntry> unresolved;
    bool all_resolved() const { return unresolved.empty(); }
};

class PresentedAlgebra {
public:
    FieldSpec field;
    std::string name;

    // --- construction ---
    GenId add_generator(const std::string& name, Sort sort, int index,
                        std::vector<int> degree, const Scalar& counit, int w2 = 0);
    int add_lattice_component(const std::string& name, long modulus);
    void set_cscale(int lattice_comp, GenId gen, const Scalar& s);
    // Assigns letter ranks. When b_first is true, B-letters come before
    // C-letters in normal form (Heisenberg-style b h c ordering).
    void finalize(bool b_first);
    // Explicit letter precedence: order[0] ranks first.
    void finalize_with_ranks(const std::vector<GenId>& order, bool b_first);
    // Asserts every rhs monomial is strictly below lhs in the order.
    void add_rule(std::vector<GenId> lhs, NCPolynomial rhs, const std::string& rule_name);
    // Installs p = 0 as a rule: the largest monomial (required to be a pure
    // word with unit coefficient after scaling) rewrites to minus the rest.
    void add_rule_from_poly(const NCPolynomial& p, const std::string& rule_name);

    // --- queries ---
    const std::vector<WordGenerator>& generators() const { return gens_; }
    const std::vector<LatticeComponent>& lattice() const { return lattice_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    bool b_first() const { return b_first_; }
    std::optional<GenId> gen_by_name(const std::string& n) const;
    std::optional<int> lattice_by_name(const std::string& n) const;

    Scalar zero_scalar() const { return Scalar::zero(field); }
    Scalar one_scalar() const { return Scalar::one(field); }
    NCPolynomial zero() const { return NCPolynomial(this); }
    NCPolynomial unit() const;
    NCPolynomial gen_poly(GenId g) const;
    NCPolynomial lattice_poly(const std::vector<long>& hexp) const;
    Monomial unit_monomial() const;

    void normalize_hexp(std::vector<long>& h) const;
    // Scalar picked up when K^h moves from the right of the word to its left.
    Scalar hexp_cross_scalar(const std::vector<long>& h, const std::vector<GenId>& w) const;

    // --- order ---
    int order_w1(const Monomial& m) const;
    int order_w2(const Monomial& m) const;
    bool mono_less(const Monomial& a, const Monomial& b) const;

    // --- arithmetic ---
    NCPolynomial monomial_product(const Monomial& a, const Monomial& b) const;
    NCPolynomial multiply_raw(const NCPolynomial& a, const NCPolynomial& b) const; // no NF
    NCPolynomial normal_form(const NCPolynomial& p) const;
    NCPolynomial multiply(const NCPolynomial& a, const NCPolynomial& b) const;
    NCPolynomial commutator(const NCPolynomial& a, const NCPolynomial& b) const;
    NCPolynomial power(const NCPolynomial& p, long e) const;
    Scalar counit(const NCPolynomial& p) const;
    bool is_normal(const Monomial& m) const;

    // --- confluence ---
    ConfluenceReport check_local_confluence(int maxdeg) const;

    // --- parsing / printing ---
    NCPolynomial parse(const std::string& text) const;
    std::string monomial_to_string(const Monomial& m) const;
    std::string to_string(const NCPolynomial& p) const;

    // Normal monomials with letter-degree <= maxdeg over the given lattice
    // exponent choices (one list per component; defaults to {0} each).
    std::vector<Monomial> normal_monomials(
        int maxdeg, const std::vector<std::vector<long>>& hchoices = {}) const;

    uint64_t step_budget() const;
    void set_step_budget(uint64_t b) { step_budget_ = b; }

private:
    std::vector<WordGenerator> gens_;
    std::vector<LatticeComponent> lattice_;
    std::vector<RewriteRule> rules_;
    std::vector<std::vector<int>> rules_by_first_; // gen id -> rule indices
    bool b_first_ = false;
    bool finalized_ = false;
    uint64_t step_budget_ = 0; // 0 = use default/env

    // Applies rule at position pos of m's word, accumulating into out.
    void apply_rule(const Monomial& m, const Scalar& coeff, int rule_idx, size_t pos,
                    NCPolynomial& out) const;
    std::optional<std::pair<int, size_t>> find_redex(const Monomial& m) const;
};

} // namespace qd
