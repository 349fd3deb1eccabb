/**
 * @file twist.hpp
 * @brief Cocycle machinery: right 2-cocycle verification, twisted products,
 *        the Heisenberg-equals-twist-of-Drinfeld identity, Drinfeld twists of
 *        (quasi-)Hopf algebras, group-cohomology transgression for twisted
 *        group doubles, and twisted-representation checks.
 */
#pragma once

#include "qd/doubles.hpp"
#include "qd/hopf.hpp"
#include "qd/rep.hpp"

namespace qd {

// ---------------------------------------------------------------------------
// finite-dimensional (structure-constant) side
// ---------------------------------------------------------------------------

// sigma as a dense bilinear table sigma(e_i (x) e_j)
using CocycleTable = Matrix;

// The Heisenberg twisting cocycle of Drin(G^op):
// sigma(d_a x (x) d_b y) = [a = 1][b = x^{-1}].
CocycleTable heis_cocycle_group(const FiniteDimHopf& drin, const GroupData& g);

// 2-cocycle identity + normalization, exhaustively over basis triples.
Report is_right_2cocycle(const FiniteDimHopf& b, const CocycleTable& sigma);

// Algebra with product m_sigma = m^2 (Delta (x) Delta (x) sigma); coalgebra
// data is carried over unchanged.
FiniteDimHopf twisted_product(const FiniteDimHopf& b, const CocycleTable& sigma);

// Delta: B_sigma -> B (x) B_sigma is an algebra map.
Report comodule_algebra_check(const FiniteDimHopf& b, const CocycleTable& sigma);

// ---------------------------------------------------------------------------
// presented doubles
// ---------------------------------------------------------------------------

// sigma(u (x) v) = eps(m_heis(u, v)) on triangular-coordinate monomials
Scalar sigma_of_pair(const DoublePair& pair, const Monomial& u, const Monomial& v);
// the closed formula eps(c)eps(h) ev(S^{-1}c' (x) b) eps(h')eps(b'), evaluated
// through the pairing module (primitively generated pairs only)
std::optional<Scalar> sigma_closed_form(const DoublePair& pair, const Monomial& u,
                                        const Monomial& v);

// PBW monomials of the Drinfeld member with letter degree <= maxdeg and
// lattice exponents in {-1, 0, 1} (all residues for torsion components).
std::vector<Monomial> pbw_monomials(const DoublePair& pair, int maxdeg);

// m_sigma computed from the Drinfeld coproduct equals the Heisenberg product,
// monomial pair by monomial pair, in shared triangular coordinates.
Report verify_heis_is_twist(const DoublePair& pair, int maxdeg);

// 2-cocycle identity for sigma on PBW monomial triples up to maxdeg.
Report is_right_2cocycle_presented(const DoublePair& pair, int maxdeg);

// module action of the Drinfeld member on a module of the Heisenberg member
// (the coproduct coaction); relations re-checked on the result
RepModule tensor_action(const DoublePair& pair, const RepModule& drin_module,
                        const RepModule& heis_module, int margin = 2);

// ---------------------------------------------------------------------------
// Drinfeld twist
// ---------------------------------------------------------------------------

// H_F with Delta_F = F Delta F^{-1}, twisted coassociator and antipode
// elements, R_F = F_21 R F^{-1} when R is present. Rejects non-invertible F.
FiniteDimHopf drinfeld_twist(const FiniteDimHopf& h, const FiniteDimHopf::Elem& f);

// ---------------------------------------------------------------------------
// transgression and twisted representations
// ---------------------------------------------------------------------------

struct Transgressed2Cocycle {
    GroupData group;
    FieldSpec field;
    std::vector<Scalar> adj, reg; // [g][h][k], flattened
    const Scalar& adjoint(int g, int h, int k) const {
        return adj[(static_cast<size_t>(g) * group.order + h) * group.order + k];
    }
    const Scalar& regular(int g, int h, int k) const {
        return reg[(static_cast<size_t>(g) * group.order + h) * group.order + k];
    }
};

Transgressed2Cocycle transgress(const GroupData& g, const GroupCocycle3& omega);

enum class TwistMode { Adjoint, Regular };

// exhaustive groupoid-cocycle (composition associativity) check
Report composition_law_check(const Transgressed2Cocycle& tau, TwistMode mode);

struct TwistedGroupModule {
    const GroupData* group = nullptr;
    FieldSpec field;
    std::vector<int> degree;          // G-degree per column
    std::vector<Matrix> left_action;  // one matrix per group element
};

// composition law g(h v) = tau(g,h)(deg) (gh) v and grading equivariance
// (adjoint: deg(g v) = g d g^{-1}; regular: deg(g v) = g d)
Report verify_twisted_rep(const GroupData& g, const GroupCocycle3& omega,
                          const TwistedGroupModule& m, TwistMode mode);

// ---------------------------------------------------------------------------
// twisted group doubles as quasi-Hopf algebras
// ---------------------------------------------------------------------------

// Structure constants of Drin^omega(G) on the basis {d_a x}: the product is
// read off the presented algebra of quasi_group_pair; the quasi-coalgebra
// data (gamma-corrected coproduct, phi = sum omega^{-1}, quasi-antipode) is
// attached and certified by verify_quasi_axioms in the test suite.
FiniteDimHopf quasi_drin_snapshot(const GroupData& g, const GroupCocycle3& omega);

// basis-coordinates helper for finite-dimensional presented algebras
struct PresentedBasis {
    const PresentedAlgebra* alg = nullptr;
    std::vector<Monomial> monomials; // normal monomials, fixed order
    std::vector<Scalar> coords(const NCPolynomial& p) const;
    int index_of(const Monomial& m) const;
};
PresentedBasis make_presented_basis(const PresentedAlgebra& alg, int maxdeg);

} // namespace qd
