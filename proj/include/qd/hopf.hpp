/**
 * @file hopf.hpp
 * @brief Finite-dimensional (quasi-)Hopf algebras as structure-constant data,
 *        group-derived constructors, and exhaustive axiom verification.
 *
 * Tensors are stored sparsely; elements of H^{otimes k} are sparse maps from
 * flat base-dim^k indices to scalars. All verifiers are exhaustive over basis
 * tuples; failures are report entries with a witness, never exceptions.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qd/report.hpp"
#include "qd/scalar.hpp"

namespace qd {

struct GroupData {
    int order = 1;
    std::vector<std::vector<int>> mult; // mult[g][h] = g*h
    std::vector<int> inverse;
    int identity = 0;
    std::vector<std::string> names;

    static GroupData trivial();
    static GroupData cyclic(int n);
    static GroupData symmetric3();
    static GroupData klein4(); // C2 x C2, elements 1, s, t, st
    static GroupData from_tables(std::vector<std::vector<int>> mult,
                                 std::vector<std::string> names);

    void validate() const; // group axioms; throws config_error
    int conj(int g, int h) const { return mult[mult[g][h]][inverse[g]]; } // g h g^{-1}
};

// Normalized 3-cocycle on a finite group with values in the units of k.
struct GroupCocycle3 {
    GroupData group;
    FieldSpec field;
    std::vector<Scalar> table; // [g][h][k] flattened

    const Scalar& at(int g, int h, int k) const {
        return table[(static_cast<size_t>(g) * group.order + h) * group.order + k];
    }
    Scalar& at(int g, int h, int k) {
        return table[(static_cast<size_t>(g) * group.order + h) * group.order + k];
    }

    static GroupCocycle3 trivial(const GroupData& g, const FieldSpec& f);
    // omega_s(a, b, c) = zeta_n^{s a floor((b+c)/n)} on Z_n; field must contain
    // an n-th root of unity (cyclotomic(n), or rationals for n <= 2).
    static GroupCocycle3 cyclic_family(int n, int s, const FieldSpec& f);

    // Multiplies by the coboundary of a normalized 2-cochain beta.
    GroupCocycle3 twisted_by_coboundary(const std::vector<Scalar>& beta2 /* [g][h] */) const;

    Report check() const; // normalization + the 3-cocycle identity

    // Transgressed 2-cocycle on the adjoint action groupoid (the displayed
    // tau(omega) formula) and on the regular one (canonical coboundary
    // primitive for the transport d -> g d).
    Scalar tau_adjoint(int g, int h, int k) const;
    Scalar tau_regular(int g, int h, int d) const;
};

class FiniteDimHopf {
public:
    // sparse element of H^{otimes legs}; key = flat index, leg 0 most significant
    using Elem = std::map<uint64_t, Scalar>;

    std::string name;
    FieldSpec field;
    int dim = 0;
    std::vector<std::string> basis;

    // structure tensors, sparse
    std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> mul; // [i][j] -> (k, c)
    std::vector<std::vector<std::tuple<int, int, Scalar>>> cop;        // [k] -> (i, j, c)
    std::vector<Scalar> unit_v, counit_v;
    std::vector<std::vector<std::pair<int, Scalar>>> antipode; // [i] -> (j, c); empty = none
    // quasi data (empty = absent)
    Elem phi, phi_inv;
    std::vector<Scalar> qa_a, qa_b;
    // R-matrix (legs 2; empty = absent)
    Elem rmat;

    bool has_antipode() const { return !antipode.empty(); }
    bool has_phi() const { return !phi.empty(); }
    bool has_R() const { return !rmat.empty(); }
    bool phi_is_trivial() const;

    void init(int n, const FieldSpec& f, const std::string& algebra_name);

    // --- element helpers ---
    uint64_t flat(const std::vector<int>& idx) const;
    std::vector<int> unflat(uint64_t t, int legs) const;
    Scalar s0() const { return Scalar::zero(field); }
    Scalar s1() const { return Scalar::one(field); }

    Elem elem_basis(int i) const { return Elem{{static_cast<uint64_t>(i), s1()}}; }
    Elem elem_unit(int legs) const;
    static void elem_add(Elem& a, uint64_t key, const Scalar& c);
    static Elem elem_scale(const Elem& a, const Scalar& c);
    static Elem elem_sum(const Elem& a, const Elem& b);
    Elem elem_tensor(const Elem& a, int legs_b, const Elem& b) const; // a (x) b
    Elem elem_product(int legs, const Elem& a, const Elem& b) const;
    Elem apply_cop_leg(const Elem& a, int legs, int leg) const;    // legs -> legs+1
    Elem apply_antipode_leg(const Elem& a, int legs, int leg) const;
    Elem apply_counit_leg(const Elem& a, int legs, int leg) const; // legs -> legs-1
    Elem permute_legs(const Elem& a, const std::vector<int>& perm) const; // out[l]=in[perm[l]]
    Elem insert_unit_leg(const Elem& a, int legs, int pos) const;
    // multiply all legs together down to one (m^{legs-1})
    Elem collapse_product(const Elem& a, int legs) const;
    std::optional<Elem> invert_elem(const Elem& a, int legs) const; // linear solve
    Elem element_of_vector(const std::vector<Scalar>& v) const;
    std::string elem_to_string(const Elem& a, int legs) const;

    Elem delta_of(int basis_idx) const;
    Elem antipode_of(int basis_idx) const;

    // --- verifiers ---
    Report verify_hopf_axioms() const;
    Report verify_quasi_axioms() const;
    Report verify_rmatrix() const;
};

// --- constructors ---
FiniteDimHopf group_algebra(const GroupData& g, const FieldSpec& f);
FiniteDimHopf function_algebra(const GroupData& g, const FieldSpec& f);
FiniteDimHopf twisted_function_algebra(const GroupData& g, const GroupCocycle3& omega);
FiniteDimHopf drinfeld_double_group(const GroupData& g, const FieldSpec& f);
FiniteDimHopf dual_hopf(const FiniteDimHopf& h);

} // namespace qd
