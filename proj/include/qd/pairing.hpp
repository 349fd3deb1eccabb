/**
 * @file pairing.hpp
 * @brief Graded dually paired free algebras: extension of a generator pairing
 *        to words by braided coproduct expansion, Gram matrices per degree,
 *        radical computation (quantum Serre relations), and truncated
 *        coevaluation.
 *
 * The pairing follows the categorical convention ev(aa' (x) bb') =
 * ev(a (x) b') ev(a' (x) b); letters crossing under the braided coproduct
 * pick up the diagonal factor q^{-(i.j)} from the Cartan datum.
 */
#pragma once

#include <map>
#include <vector>

#include "qd/linalg.hpp"
#include "qd/report.hpp"
#include "qd/scalar.hpp"

namespace qd {

struct CartanDatum {
    int rank = 1;
    std::vector<std::vector<int>> sym; // i.j, symmetric, i.i even positive

    static CartanDatum sl2();
    static CartanDatum sl3();
    static CartanDatum from_matrix(std::vector<std::vector<int>> m);
    void validate() const;
    // Cartan integer 2 (i.j)/(i.i); integrality checked by validate()
    int aij(int i, int j) const { return 2 * sym[i][j] / sym[i][i]; }
    Scalar qi(int i) const { return Scalar::q_power(sym[i][i] / 2); }
};

// A word in the letters 0..rank-1 of one side of the pair.
using Word = std::vector<int>;

// Linear combination of words (e.g. a radical element in the B letters).
struct WordPoly {
    std::vector<std::pair<Word, Scalar>> terms;
    bool is_zero() const { return terms.empty(); }
};

class GradedPair {
public:
    // Quantum-group pairing of T(E), T(F): ev(E_i, F_j) = delta_ij/(q_i^{-1}-q_i),
    // crossing factor q^{-(i.j)}.
    static GradedPair from_cartan(const CartanDatum& d);
    // Trivially braided pairing with ev(c_i, b_j) = delta_ij (Weyl-style).
    static GradedPair trivial(int rank);

    int rank() const { return rank_; }
    const FieldSpec& field() const { return field_; }
    const CartanDatum& datum() const { return datum_; }
    const Scalar& kappa(int i) const { return kappa_[i]; }

    // scalar factor when letter i crosses letter j
    Scalar crossing(int i, int j) const;

    // --- pairing ---
    Scalar pair(const Word& cword, const Word& bword) const;
    Scalar pair(const WordPoly& c, const WordPoly& b) const;

    // --- degree bookkeeping ---
    std::vector<int> degree_of(const Word& w) const; // multidegree (letter counts)
    std::vector<Word> words_of_degree(const std::vector<int>& deg) const;
    std::vector<std::vector<int>> degrees_up_to(int total) const; // nonzero degrees

    // --- Gram / radical / coevaluation ---
    Matrix gram_matrix(const std::vector<int>& deg) const;
    std::vector<WordPoly> radical_basis(const std::vector<int>& deg) const;

    struct CoevTerm {
        Word bword, cword;
        Scalar coeff;
    };
    // Dual-basis tensors for every degree with total <= maxdeg, including the
    // degree-zero term 1 (x) 1. Throws degenerate_pairing_error when a Gram
    // matrix is singular.
    std::vector<CoevTerm> truncated_coev(int maxdeg) const;

    // --- braided Hopf structure on the free algebras ---
    // Delta(word) as a list of (left word, right word, scalar).
    std::vector<std::tuple<Word, Word, Scalar>> coproduct(const Word& w) const;
    // Braided antipode of the tensor algebra and its inverse, degreewise.
    WordPoly antipode(const Word& w) const;
    WordPoly antipode_inv(const Word& w) const;

private:
    int rank_ = 0;
    CartanDatum datum_;
    FieldSpec field_;
    std::vector<Scalar> kappa_;
    std::vector<std::vector<int>> bil_; // crossing exponents

    mutable std::map<Word, WordPoly> antipode_cache_;
};

} // namespace qd
