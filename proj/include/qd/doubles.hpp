/**
 * @file doubles.hpp
 * @brief Constructors for braided Drinfeld and Heisenberg doubles as
 *        PBW-ordered rewriting systems, with coproduct, counit and antipode
 *        tables, restricted Heisenberg doubles, and twisted group doubles.
 *
 * Presentation orientation: Drinfeld-kind presentations normalize words to
 * c h b order (C letters leftmost); Heisenberg-kind presentations display in
 * b h c order, which is the direction the Heisenberg cross relation rewrites
 * naturally. Every Heisenberg presentation also carries a chb-oriented twin
 * used to express elements in the shared triangular coordinates (this is
 * what the cocycle-twist comparison needs).
 */
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qd/hopf.hpp"
#include "qd/ncalg.hpp"
#include "qd/pairing.hpp"
#include "qd/report.hpp"

namespace qd {

enum class DoubleKind {
    Drinfeld,
    Heisenberg,
    RestrictedHeisenberg,
    QuasiDrinfeld,
    QuasiHeisenberg
};

class DoublePresentation {
public:
    DoubleKind kind = DoubleKind::Drinfeld;
    std::string name;

    std::shared_ptr<PresentedAlgebra> alg;     // display orientation
    std::shared_ptr<PresentedAlgebra> alg_chb; // chb orientation (= alg for drin kinds)
    std::shared_ptr<PresentedAlgebra> tsq;     // tensor square of alg

    // generator tables (keyed by generator id in alg)
    std::map<GenId, NCPolynomial> cop_table;  // values in tsq
    std::map<GenId, NCPolynomial> s_table;    // values in alg (drin kinds)
    std::map<GenId, NCPolynomial> sinv_table;

    // finite-dimensional snapshot (group cases), for tensor verifiers
    std::optional<FiniteDimHopf> snapshot;

    bool is_drinfeld_kind() const {
        return kind == DoubleKind::Drinfeld || kind == DoubleKind::QuasiDrinfeld;
    }

    // --- embeddings into the tensor square ---
    NCPolynomial embed(const NCPolynomial& p, bool left_leg) const;
    // split a tensor-square polynomial into (left monomial, right monomial, c)
    std::vector<std::tuple<Monomial, Monomial, Scalar>>
    split_tensor(const NCPolynomial& p) const;

    // --- structure maps ---
    NCPolynomial coproduct_of(const NCPolynomial& p) const; // kind error on heis
    // Coaction Heis -> Drin (x) Heis shares the drin tables; heis presentations
    // may call this to obtain the drin-side coproduct of a chb-expressed element.
    NCPolynomial antipode_of(const NCPolynomial& p) const;
    NCPolynomial antipode_inv_of(const NCPolynomial& p) const;
    Scalar counit_of(const NCPolynomial& p) const { return alg->counit(p); }

    // --- structural self-checks ---
    Report check_counit_compatibility() const;   // eps(lhs) = eps(rhs) per rule
    Report check_coproduct_multiplicative() const;
    Report check_antipode_axioms() const;

    std::vector<GenId> tsq_left_, tsq_right_; // alg gen -> tsq gen
};

struct DoublePair {
    DoublePresentation drin;
    DoublePresentation heis;
    std::shared_ptr<GradedPair> gpair; // null for group pairs
};

// --- named constructions ---

// Heis = n-th Weyl algebra, Drin = polynomial ring on 2n variables.
DoublePair weyl_pair(int n);

// U_q(g) (drin) and D_q(g) (heis) over the lattice of a Cartan datum.
// serre_b / serre_c are radical elements in the F- respectively E-letters,
// installed as extra rewrite rules (empty for rank 1).
DoublePair uqdq_pair(const CartanDatum& d, const std::vector<WordPoly>& serre_b = {},
                     const std::vector<WordPoly>& serre_c = {});

// S(V) or Lambda(V) with its dual over H = Drin(C2); dim V = n.
DoublePair super_pair(int n, bool exterior);

// Drin_k(k[G]^cop, kG^op) and its Heisenberg analogue, as presentations.
DoublePair group_pair(const GroupData& g, const FieldSpec& f);

// Twisted group doubles Drin^omega(G) / Heis^omega(G); both carry
// finite-dimensional snapshots, the Drinfeld one with quasi-Hopf data.
DoublePair quasi_group_pair(const GroupData& g, const GroupCocycle3& omega);

// Restricted braided Heisenberg double over kC2 on n primitive pairs with a
// diagonal YD datum: action sign chi(s) and coaction degree (0 -> trivial,
// 1 -> s). Rejects YD-inconsistent data.
DoublePresentation restricted_heisenberg_kc2(int n, int action_sign, int coaction_deg);

// Serre relations of a datum at the given degree, from the pairing radical.
std::vector<WordPoly> serre_relations(const CartanDatum& d, const std::vector<int>& deg,
                                      bool b_side);

// Converts a WordPoly over B- or C-letters into a polynomial of the algebra.
NCPolynomial wordpoly_to_poly(const PresentedAlgebra& alg, const WordPoly& wp, bool b_side);

} // namespace qd
