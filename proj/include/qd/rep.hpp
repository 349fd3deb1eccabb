/**
 * @file rep.hpp
 * @brief Representation theory at desk scale: Verma modules and simples for
 *        the rank-1 doubles, weight decompositions, highest-weight search,
 *        Clebsch-Gordan decomposition, Yetter-Drinfeld and Hopf module
 *        checkers, the fundamental-theorem idempotent, and the
 *        no-finite-dimensional-modules certificate.
 *
 * Every module verifies the defining relations of its parent presentation on
 * construction, within the truncation window; the closed action formulas are
 * derived from normal forms, so the relations are the source of truth.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qd/doubles.hpp"
#include "qd/linalg.hpp"

namespace qd {

class RepModule {
public:
    FieldSpec field;
    std::string name;
    std::vector<std::string> labels;
    std::map<std::string, Matrix> action; // generator or lattice name -> matrix
    std::vector<int> heights;             // B-letter height per column (0 if unused)
    int truncation = -1;                  // -1: exact module
    std::vector<int> gdegree;             // group-degree tags (indices), optional

    int dim() const { return static_cast<int>(labels.size()); }
    const Matrix& mat(const std::string& g) const;

    // evaluates a polynomial of the parent algebra to a matrix
    Matrix evaluate(const PresentedAlgebra& alg, const NCPolynomial& p) const;
    // columns whose rule applications stay inside the stored window
    std::vector<bool> interior_columns(int margin) const;
    // checks every rule of alg on the interior columns
    Report check_relations(const PresentedAlgebra& alg, int margin) const;
};

struct WeightParam {
    Scalar lambda;
};

// --- constructions over the rank-1 pairs ---

// Verma module M(lambda) on basis F^m v, m <= N, over the drin (uq) or heis
// (dq) member of a rank-1 pair. The E action is computed from normal forms.
RepModule verma(const DoublePresentation& d, const WeightParam& lambda, int N);

// the (n+1)-dimensional simple U_q(sl2)-module of highest weight q^n
RepModule simple_uq(const DoublePair& uqdq, int n);

// tensor module M (x) N along the Drinfeld coproduct (drin-module acting on a
// module of the Heisenberg partner, or on another drin-module)
RepModule tensor_module(const DoublePresentation& drin, const RepModule& m,
                        const RepModule& n);

// --- weight analysis ---

std::map<std::string, std::vector<int>> weight_decomposition(const RepModule& m,
                                                             const std::string& kname);
struct HighestWeightVector {
    Scalar weight;
    std::vector<Scalar> coords;
};
std::vector<HighestWeightVector> highest_weight_vectors(const RepModule& m,
                                                        const std::string& ename,
                                                        const std::string& kname);

// q-exponent of a scalar equal to +-q^k (rational-function field)
std::optional<std::pair<int, long>> scalar_q_exponent(const Scalar& s);

// Highest weights of L(n) (x) M(q^m) as integer q-exponents, compared in the
// caller against {m + n - 2k : 0 <= k <= n}. N <= 0 picks the default window.
std::vector<long> clebsch_gordan(const DoublePair& uqdq, int n, int m, int N = 0);

// --- Yetter-Drinfeld / Hopf module checkers (group case) ---

struct GradedGroupModule {
    const GroupData* group = nullptr;
    FieldSpec field;
    std::vector<int> degree;            // G-degree per basis column
    std::vector<Matrix> right_action;   // one matrix per group element
};

Report yd_check(const GradedGroupModule& m);
Report hopf_module_check(const GradedGroupModule& m);

// Hopf module B (x) V for dim V = d, with the right regular action and the
// coproduct coaction; returns the module together with its coaction data.
struct HopfModule {
    const FiniteDimHopf* b = nullptr;
    int vdim = 1;
    // columns indexed by (i, a) -> i * vdim + a
    std::vector<Matrix> right_action; // per basis element of B
    // coaction delta(col) = sum (b-index, col') coefficients
    std::vector<std::vector<std::tuple<int, int, Scalar>>> coaction;
};
HopfModule hopf_ind(const FiniteDimHopf& b, int vdim);
Report hopf_module_check(const HopfModule& m);
// the fundamental-theorem idempotent e_V; returns its matrix and rank
std::pair<Matrix, int> hopf_idempotent(const HopfModule& m);

// --- category O evidence and the no-finite-dimensional-modules certificate ---

Report category_o_predicate(const RepModule& m, const std::string& ename,
                            const std::string& kname);

// Exact certificate that dq-sl2 admits no d-dimensional module for d <= dmax,
// following the highest-weight chain argument.
Report no_finite_dim_certificate(const DoublePair& uqdq, int dmax);

} // namespace qd
