/**
 * @file scalar.hpp
 * @brief Exact field arithmetic: rationals, rational functions in q, and
 *        cyclotomic extensions Q(zeta_N).
 *
 * Every Scalar is kept in a unique canonical form so that equal values have
 * identical representations:
 *  - rationals: reduced fraction (via boost cpp_rational);
 *  - rational functions: content * num(q)/den(q) with num, den primitive
 *    integer polynomials, coprime, positive leading coefficients, the
 *    rational content carrying sign and scale;
 *  - cyclotomic: coefficient vector reduced modulo the N-th cyclotomic
 *    polynomial.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "qd/error.hpp"

namespace qd {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, RationalFunctionsQ, Cyclotomic };

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    int cyclotomic_order = 1; // N, cyclotomic only

    static FieldSpec rationals() { return {FieldKind::Rationals, 1}; }
    static FieldSpec rational_functions_q() { return {FieldKind::RationalFunctionsQ, 1}; }
    static FieldSpec cyclotomic(int n);

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind &&
               (kind != FieldKind::Cyclotomic || cyclotomic_order == o.cyclotomic_order);
    }
    std::string to_string() const;
};

// Dense integer polynomial in q, ascending powers. Used internally by the
// rational-function representation; exposed for serialization.
using IntPoly = std::vector<Int>;

// N-th cyclotomic polynomial, monic over Z, via the Moebius product. Cached.
const IntPoly& cyclotomic_polynomial(int n);

class Scalar {
public:
    Scalar() = default; // zero of the rationals

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(long v, const FieldSpec& f);
    static Scalar from_rational(const Rational& v, const FieldSpec& f);

    // q^k in Q(q); k may be negative.
    static Scalar q_power(long k);
    // zeta_N^k in Q(zeta_N).
    static Scalar zeta_power(int n, long k);
    // Rational function from integer polynomials (ascending powers) and a
    // power-of-q shift; canonicalized.
    static Scalar rational_function(const IntPoly& num, const IntPoly& den, long qshift = 0);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order on canonical representations (for use as a map key).
    bool operator<(const Scalar& o) const;

    // Exact value at q = q0 (rational-function field only).
    Rational evaluate_at(const Rational& q0) const;

    // Exact rational value, when the scalar is a constant.
    Rational as_rational() const;

    std::string to_string() const;

    // --- representation accessors (serialization) ---
    const Rational& rat() const { return rat_; }
    const Rational& content() const { return content_; }
    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    const std::vector<Rational>& cyclo_coeffs() const { return cyclo_; }

private:
    FieldSpec field_;
    // Rationals
    Rational rat_ = 0;
    // Rational functions: content_ * num_/den_
    Rational content_ = 0;
    IntPoly num_{}, den_{};
    // Cyclotomic: coefficients of 1, zeta, ..., zeta^(deg-1)
    std::vector<Rational> cyclo_{};

    void canonicalize_ratfun();
    void check_same_field(const Scalar& o) const;
};

// q-integer [n]_q = sum_{j=0}^{n-1} q^{-2j}; [0]_q = 0.
Scalar q_int(long n);
// [n]_q! = [1]_q ... [n]_q; [0]_q! = 1.
Scalar q_factorial(long n);

} // namespace qd
