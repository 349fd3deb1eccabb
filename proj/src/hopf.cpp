#include "qd/hopf.hpp"

#include <algorithm>
#include <functional>

#include "qd/linalg.hpp"

namespace qd {

// ---------------------------------------------------------------------------
// GroupData
// ---------------------------------------------------------------------------

GroupData GroupData::trivial() {
    GroupData g;
    g.order = 1;
    g.mult = {{0}};
    g.inverse = {0};
    g.identity = 0;
    g.names = {"1"};
    return g;
}

GroupData GroupData::from_tables(std::vector<std::vector<int>> mult,
                                 std::vector<std::string> names) {
    GroupData g;
    g.order = static_cast<int>(mult.size());
    g.mult = std::move(mult);
    g.names = std::move(names);
    // locate identity
    g.identity = -1;
    for (int e = 0; e < g.order; ++e) {
        bool id = true;
        for (int x = 0; x < g.order; ++x)
            if (g.mult[e][x] != x || g.mult[x][e] != x) {
                id = false;
                break;
            }
        if (id) {
            g.identity = e;
            break;
        }
    }
    if (g.identity < 0) throw config_error("group table has no identity");
    g.inverse.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (g.mult[x][y] == g.identity) g.inverse[x] = y;
    g.validate();
    return g;
}

GroupData GroupData::cyclic(int n) {
    if (n < 1) throw config_error("cyclic group order must be >= 1");
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = (i + j) % n;
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        if (i == 0)
            names[i] = "1";
        else if (n == 2)
            names[i] = "s";
        else
            names[i] = i == 1 ? "g" : "g" + std::to_string(i);
    }
    return from_tables(std::move(m), std::move(names));
}

GroupData GroupData::klein4() {
    // elements 1, s, t, st with s^2 = t^2 = 1, st = ts
    std::vector<std::vector<int>> m(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = i ^ j;
    return from_tables(std::move(m), {"1", "s", "t", "st"});
}

GroupData GroupData::symmetric3() {
    // permutations of {0,1,2}; product g*h acts as "h first, then g".
    // r = (123), r2 = (132), t = (12), rt = (13), r2t = (23); names are kept
    // identifier-friendly so presented algebras can parse them.
    std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
    std::vector<std::string> names = {"1", "r", "r2", "t", "rt", "r2t"};
    int n = 6;
    auto compose = [&](int g, int h) {
        std::vector<int> r(3);
        for (int x = 0; x < 3; ++x) r[x] = perms[g][perms[h][x]];
        for (int k = 0; k < n; ++k)
            if (perms[k] == r) return k;
        throw config_error("S3 composition table broken");
    };
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = compose(i, j);
    return from_tables(std::move(m), std::move(names));
}

void GroupData::validate() const {
    if (order < 1 || (int)mult.size() != order) throw config_error("bad group table size");
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y) {
            int v = mult[x][y];
            if (v < 0 || v >= order) throw config_error("group table entry out of range");
        }
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y)
            for (int z = 0; z < order; ++z)
                if (mult[mult[x][y]][z] != mult[x][mult[y][z]])
                    throw config_error("group table not associative");
    for (int x = 0; x < order; ++x) {
        if (inverse[x] < 0) throw config_error("group element without inverse");
        if (mult[x][inverse[x]] != identity || mult[inverse[x]][x] != identity)
            throw config_error("bad inverse table");
    }
}

// ---------------------------------------------------------------------------
// GroupCocycle3
// ---------------------------------------------------------------------------

GroupCocycle3 GroupCocycle3::trivial(const GroupData& g, const FieldSpec& f) {
    GroupCocycle3 w;
    w.group = g;
    w.field = f;
    w.table.assign(static_cast<size_t>(g.order) * g.order * g.order, Scalar::one(f));
    return w;
}

GroupCocycle3 GroupCocycle3::cyclic_family(int n, int s, const FieldSpec& f) {
    GroupData g = GroupData::cyclic(n);
    // zeta_n inside f
    Scalar zeta = Scalar::one(f);
    if (f.kind == FieldKind::Cyclotomic) {
        if (f.cyclotomic_order % n != 0)
            throw config_error("field has no primitive n-th root of unity");
        zeta = Scalar::zeta_power(f.cyclotomic_order, f.cyclotomic_order / n);
    } else if (f.kind == FieldKind::Rationals || f.kind == FieldKind::RationalFunctionsQ) {
        if (n == 1)
            zeta = Scalar::one(f);
        else if (n == 2)
            zeta = -Scalar::one(f);
        else
            throw config_error("need a cyclotomic field for n > 2");
    }
    GroupCocycle3 w = trivial(g, f);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                long e = static_cast<long>(s) * a * ((b + c) / n);
                w.at(a, b, c) = zeta.pow(e);
            }
    return w;
}

GroupCocycle3 GroupCocycle3::twisted_by_coboundary(const std::vector<Scalar>& beta2) const {
    const int n = group.order;
    auto beta = [&](int g, int h) -> const Scalar& {
        return beta2[static_cast<size_t>(g) * n + h];
    };
    GroupCocycle3 w = *this;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                Scalar d = beta(h, k) * beta(g, group.mult[h][k]) /
                           (beta(group.mult[g][h], k) * beta(g, h));
                w.at(g, h, k) *= d;
            }
    return w;
}

Report GroupCocycle3::check() const {
    Report rep;
    rep.subject = "3-cocycle on group of order " + std::to_string(group.order);
    const int n = group.order;
    bool norm = true, nonzero = true;
    std::string wit_n, wit_z;
    for (int g = 0; g < n && (norm || nonzero); ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                if (at(g, h, k).is_zero()) {
                    nonzero = false;
                    wit_z = group.names[g] + "," + group.names[h] + "," + group.names[k];
                }
                if ((g == group.identity || h == group.identity || k == group.identity) &&
                    !at(g, h, k).is_one()) {
                    norm = false;
                    wit_n = group.names[g] + "," + group.names[h] + "," + group.names[k];
                }
            }
    rep.add("values nonzero", nonzero, wit_z);
    rep.add("normalized", norm, wit_n);
    bool ident = true;
    std::string wit;
    for (int g = 0; g < n && ident; ++g)
        for (int h = 0; h < n && ident; ++h)
            for (int k = 0; k < n && ident; ++k)
                for (int l = 0; l < n; ++l) {
                    Scalar lhs = at(h, k, l) * at(g, group.mult[h][k], l) * at(g, h, k);
                    Scalar rhs = at(g, h, group.mult[k][l]) * at(group.mult[g][h], k, l);
                    if (lhs != rhs) {
                        ident = false;
                        wit = "(" + group.names[g] + "," + group.names[h] + "," +
                              group.names[k] + "," + group.names[l] + ")";
                        break;
                    }
                }
    rep.add("3-cocycle identity", ident, wit);
    return rep;
}

Scalar GroupCocycle3::tau_adjoint(int g, int h, int k) const {
    const GroupData& G = group;
    int gh = G.mult[g][h];
    int conj = G.conj(G.inverse[gh], k); // (gh)^{-1} k (gh)
    return at(g, h, conj) * at(k, g, h) / at(g, G.conj(G.inverse[g], k), h);
}

Scalar GroupCocycle3::tau_regular(int g, int h, int d) const {
    const GroupData& G = group;
    int gh = G.mult[g][h];
    Scalar num = at(gh, G.inverse[gh], d);
    Scalar den = at(h, G.inverse[h], d) * at(g, G.inverse[g], G.mult[h][d]);
    return num / den;
}

// ---------------------------------------------------------------------------
// FiniteDimHopf: element helpers
// ---------------------------------------------------------------------------

void FiniteDimHopf::init(int n, const FieldSpec& f, const std::string& algebra_name) {
    dim = n;
    field = f;
    name = algebra_name;
    basis.assign(n, "");
    mul.assign(n, std::vector<std::vector<std::pair<int, Scalar>>>(n));
    cop.assign(n, {});
    unit_v.assign(n, s0());
    counit_v.assign(n, s0());
}

bool FiniteDimHopf::phi_is_trivial() const {
    if (phi.empty()) return true;
    Elem u = elem_unit(3);
    return phi == u;
}

uint64_t FiniteDimHopf::flat(const std::vector<int>& idx) const {
    uint64_t t = 0;
    for (int i : idx) t = t * dim + static_cast<uint64_t>(i);
    return t;
}

std::vector<int> FiniteDimHopf::unflat(uint64_t t, int legs) const {
    std::vector<int> idx(legs);
    for (int l = legs - 1; l >= 0; --l) {
        idx[l] = static_cast<int>(t % dim);
        t /= dim;
    }
    return idx;
}

FiniteDimHopf::Elem FiniteDimHopf::elem_unit(int legs) const {
    Elem u = element_of_vector(unit_v);
    Elem out{{0, s1()}};
    for (int l = 0; l < legs; ++l) out = elem_tensor(out, 1, u);
    return out;
}

void FiniteDimHopf::elem_add(Elem& a, uint64_t key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, ins] = a.try_emplace(key, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}

FiniteDimHopf::Elem FiniteDimHopf::elem_scale(const Elem& a, const Scalar& c) {
    Elem out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : a) out.emplace(k, v * c);
    return out;
}

FiniteDimHopf::Elem FiniteDimHopf::elem_sum(const Elem& a, const Elem& b) {
    Elem out = a;
    for (const auto& [k, v] : b) elem_add(out, k, v);
    return out;
}

// a (x) b where b has legs_b legs
FiniteDimHopf::Elem FiniteDimHopf::elem_tensor(const Elem& a, int legs_b, const Elem& b) const {
    uint64_t shift = 1;
    for (int l = 0; l < legs_b; ++l) shift *= dim;
    Elem out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) elem_add(out, ka * shift + kb, ca * cb);
    return out;
}

FiniteDimHopf::Elem FiniteDimHopf::elem_product(int legs, const Elem& a, const Elem& b) const {
    Elem out;
    for (const auto& [ta, ca] : a) {
        std::vector<int> ia = unflat(ta, legs);
        for (const auto& [tb, cb] : b) {
            std::vector<int> ib = unflat(tb, legs);
            std::vector<std::pair<uint64_t, Scalar>> acc{{0, ca * cb}};
            for (int l = 0; l < legs && !acc.empty(); ++l) {
                std::vector<std::pair<uint64_t, Scalar>> next;
                for (const auto& [pf, pc] : acc)
                    for (const auto& [k, mc] : mul[ia[l]][ib[l]])
                        next.emplace_back(pf * dim + k, pc * mc);
                acc = std::move(next);
            }
            for (const auto& [f, c] : acc) elem_add(out, f, c);
        }
    }
    return out;
}

FiniteDimHopf::Elem FiniteDimHopf::apply_cop_leg(const Elem& a, int legs, int leg) const {
    Elem out;
    for (const auto& [t, c] : a) {
        std::vector<int> idx = unflat(t, legs);
        for (const auto& [i, j, cc] : cop[idx[leg]]) {
            std::vector<int> nidx;
            nidx.reserve(legs + 1);
            for (int l = 0; l < legs; ++l) {
                if (l == leg) {
                    nidx.push_back(i);
                    nidx.push_back(j);
                } else {
                    nidx.push_back(idx[l]);
                }
            }
            elem_add(out, flat(nidx), c * cc);
        }
    }
    return out;
}

FiniteDimHopf::Elem FiniteDimHopf::apply_antipode_leg(const Elem& a, int legs, int leg) const {
    Elem out;
    for (const auto& [t, c] : a) {
        std::vector<int> idx = unflat(t, legs);
        for (const auto& [j, cc] : antipode[idx[leg]]) {
            std::vector<int> nidx = idx;
            nidx[leg] = j;
            elem_add(out, flat(nidx), c * cc);
        }
    }
    return out;
}

FiniteDimHopf::Elem FiniteDimHopf::apply_counit_leg(const Elem& a, int legs, int leg) const {
    Elem out;
    for (const auto& [t, c] : a) {
        std::vector<int> idx = unflat(t, legs);
        Scalar cc = c * counit_v[idx[leg]];
        if (cc.is_zero()) continue;
        std::vector<int> nidx;
        for (int l = 0; l < legs; ++l)
            if (l != leg) nidx.push_back(idx[l]);
        elem_add(out, flat(nidx), cc);
    }
    return out;
}

FiniteDimHopf::Elem FiniteDimHopf::permute_legs(const Elem& a, const std::vector<int>& perm) const {
    int legs = static_cast<int>(perm.size());
    Elem out;
    for (const auto& [t, c] : a) {
        std::vector<int> idx = unflat(t, legs);
        std::vector<int> nidx(legs);
        for (int l = 0; l < legs; ++l) nidx[l] = idx[perm[l]];
        elem_add(out, flat(nidx), c);
    }
    return out;
}

FiniteDimHopf::Elem FiniteDimHopf::insert_unit_leg(const Elem& a, int legs, int pos) const {
    Elem out;
    for (const auto& [t, c] : a) {
        std::vector<int> idx = unflat(t, legs);
        for (int u = 0; u < dim; ++u) {
            if (unit_v[u].is_zero()) continue;
            std::vector<int> nidx;
            nidx.reserve(legs + 1);
            for (int l = 0; l <= legs; ++l) {
                if (l == pos) nidx.push_back(u);
                if (l < legs) nidx.push_back(idx[l]);
            }
            elem_add(out, flat(nidx), c * unit_v[u]);
        }
    }
    return out;
}

FiniteDimHopf::Elem FiniteDimHopf::collapse_product(const Elem& a, int legs) const {
    Elem out;
    for (const auto& [t, c] : a) {
        std::vector<int> idx = unflat(t, legs);
        std::vector<std::pair<int, Scalar>> acc{{idx[0], c}};
        for (int l = 1; l < legs && !acc.empty(); ++l) {
            std::vector<std::pair<int, Scalar>> next;
            for (const auto& [i, pc] : acc)
                for (const auto& [k, mc] : mul[i][idx[l]]) next.emplace_back(k, pc * mc);
            acc = std::move(next);
        }
        for (const auto& [k, cc] : acc) elem_add(out, static_cast<uint64_t>(k), cc);
    }
    return out;
}

std::optional<FiniteDimHopf::Elem> FiniteDimHopf::invert_elem(const Elem& a, int legs) const {
    uint64_t n = 1;
    for (int l = 0; l < legs; ++l) n *= dim;
    if (n > 4096) throw config_error("element inversion dimension too large");
    Matrix m(static_cast<int>(n), static_cast<int>(n), field);
    for (uint64_t col = 0; col < n; ++col) {
        Elem e{{col, s1()}};
        Elem prod = elem_product(legs, a, e);
        for (const auto& [k, c] : prod) m.at(static_cast<int>(k), static_cast<int>(col)) = c;
    }
    Elem unit = elem_unit(legs);
    std::vector<Scalar> b(n, s0());
    for (const auto& [k, c] : unit) b[k] = c;
    auto x = m.solve(b);
    if (!x) return std::nullopt;
    Elem inv;
    for (uint64_t i = 0; i < n; ++i)
        if (!(*x)[i].is_zero()) inv.emplace(i, (*x)[i]);
    // confirm two-sided
    if (elem_product(legs, a, inv) != unit || elem_product(legs, inv, a) != unit)
        return std::nullopt;
    return inv;
}

FiniteDimHopf::Elem FiniteDimHopf::element_of_vector(const std::vector<Scalar>& v) const {
    Elem e;
    for (int i = 0; i < dim; ++i)
        if (!v[i].is_zero()) e.emplace(static_cast<uint64_t>(i), v[i]);
    return e;
}

std::string FiniteDimHopf::elem_to_string(const Elem& a, int legs) const {
    if (a.empty()) return "0";
    std::string s;
    int count = 0;
    for (const auto& [t, c] : a) {
        if (count++) s += " + ";
        if (count > 6) {
            s += "...";
            break;
        }
        std::vector<int> idx = unflat(t, legs);
        s += "(" + c.to_string() + ")";
        for (int l = 0; l < legs; ++l) s += (l ? "(x)" : "*") + basis[idx[l]];
    }
    return s;
}

FiniteDimHopf::Elem FiniteDimHopf::delta_of(int k) const {
    Elem e;
    for (const auto& [i, j, c] : cop[k]) elem_add(e, flat({i, j}), c);
    return e;
}

FiniteDimHopf::Elem FiniteDimHopf::antipode_of(int i) const {
    Elem e;
    for (const auto& [j, c] : antipode[i]) elem_add(e, static_cast<uint64_t>(j), c);
    return e;
}

// ---------------------------------------------------------------------------
// verifiers
// ---------------------------------------------------------------------------

Report FiniteDimHopf::verify_hopf_axioms() const {
    Report rep;
    rep.subject = name;
    rep.add("strict (coassociator absent or trivial)", phi_is_trivial());

    bool ok = true;
    std::string wit;
    for (int i = 0; i < dim && ok; ++i)
        for (int j = 0; j < dim && ok; ++j)
            for (int k = 0; k < dim; ++k) {
                Elem ei = elem_basis(i), ej = elem_basis(j), ek = elem_basis(k);
                Elem l = elem_product(1, elem_product(1, ei, ej), ek);
                Elem r = elem_product(1, ei, elem_product(1, ej, ek));
                if (l != r) {
                    ok = false;
                    wit = basis[i] + ", " + basis[j] + ", " + basis[k];
                    break;
                }
            }
    rep.add("associativity", ok, wit);

    Elem one = element_of_vector(unit_v);
    ok = true;
    wit = "";
    for (int i = 0; i < dim; ++i) {
        Elem ei = elem_basis(i);
        if (elem_product(1, one, ei) != ei || elem_product(1, ei, one) != ei) {
            ok = false;
            wit = basis[i];
            break;
        }
    }
    rep.add("unit", ok, wit);

    ok = true;
    wit = "";
    for (int k = 0; k < dim; ++k) {
        Elem d = delta_of(k);
        if (apply_cop_leg(d, 2, 0) != apply_cop_leg(d, 2, 1)) {
            ok = false;
            wit = basis[k];
            break;
        }
    }
    rep.add("coassociativity", ok, wit);

    ok = true;
    wit = "";
    for (int k = 0; k < dim; ++k) {
        Elem d = delta_of(k);
        Elem ek = elem_basis(k);
        if (apply_counit_leg(d, 2, 0) != ek || apply_counit_leg(d, 2, 1) != ek) {
            ok = false;
            wit = basis[k];
            break;
        }
    }
    rep.add("counit", ok, wit);

    // counit of the unit
    {
        Scalar e1 = s0();
        for (int i = 0; i < dim; ++i) e1 += unit_v[i] * counit_v[i];
        rep.add("counit normalized (eps(1) = 1)", e1 == s1());
    }

    ok = true;
    wit = "";
    for (int i = 0; i < dim && ok; ++i)
        for (int j = 0; j < dim; ++j) {
            Elem prod = elem_product(1, elem_basis(i), elem_basis(j));
            Elem lhs; // Delta(e_i e_j)
            for (const auto& [k, c] : prod) lhs = elem_sum(lhs, elem_scale(delta_of((int)k), c));
            Elem rhs = elem_product(2, delta_of(i), delta_of(j));
            if (lhs != rhs) {
                ok = false;
                wit = basis[i] + ", " + basis[j];
                break;
            }
        }
    rep.add("bialgebra compatibility (Delta multiplicative)", ok, wit);

    {
        Elem d1; // Delta(1)
        for (int i = 0; i < dim; ++i)
            if (!unit_v[i].is_zero()) d1 = elem_sum(d1, elem_scale(delta_of(i), unit_v[i]));
        rep.add("Delta(1) = 1 (x) 1", d1 == elem_unit(2));
    }

    if (has_antipode()) {
        ok = true;
        wit = "";
        for (int k = 0; k < dim; ++k) {
            Elem d = delta_of(k);
            Elem lhs = collapse_product(apply_antipode_leg(d, 2, 0), 2);
            Elem rhs = collapse_product(apply_antipode_leg(d, 2, 1), 2);
            Elem target = elem_scale(one, counit_v[k]);
            if (lhs != target || rhs != target) {
                ok = false;
                wit = basis[k];
                break;
            }
        }
        rep.add("antipode identities", ok, wit);
    } else {
        rep.add("antipode present", false, "no antipode data");
    }
    return rep;
}

Report FiniteDimHopf::verify_quasi_axioms() const {
    Report rep;
    rep.subject = name;
    if (!has_phi() || qa_a.empty() || qa_b.empty()) {
        rep.add("quasi data (phi, a, b) present", false, "missing coassociator or antipode elements");
        return rep;
    }
    rep.add("quasi data (phi, a, b) present", true);

    bool ok = true;
    std::string wit;
    for (int i = 0; i < dim && ok; ++i)
        for (int j = 0; j < dim && ok; ++j)
            for (int k = 0; k < dim; ++k) {
                Elem l = elem_product(1, elem_product(1, elem_basis(i), elem_basis(j)),
                                      elem_basis(k));
                Elem r = elem_product(1, elem_basis(i),
                                      elem_product(1, elem_basis(j), elem_basis(k)));
                if (l != r) {
                    ok = false;
                    wit = basis[i] + ", " + basis[j] + ", " + basis[k];
                    break;
                }
            }
    rep.add("associativity", ok, wit);

    ok = true;
    wit = "";
    for (int i = 0; i < dim && ok; ++i)
        for (int j = 0; j < dim; ++j) {
            Elem prod = elem_product(1, elem_basis(i), elem_basis(j));
            Elem lhs;
            for (const auto& [k, c] : prod) lhs = elem_sum(lhs, elem_scale(delta_of((int)k), c));
            Elem rhs = elem_product(2, delta_of(i), delta_of(j));
            if (lhs != rhs) {
                ok = false;
                wit = basis[i] + ", " + basis[j];
                break;
            }
        }
    rep.add("Delta multiplicative", ok, wit);

    // quasi-coassociativity: ((id x Delta)Delta x) phi = phi ((Delta x id)Delta x)
    ok = true;
    wit = "";
    for (int k = 0; k < dim; ++k) {
        Elem d = delta_of(k);
        Elem lhs = elem_product(3, apply_cop_leg(d, 2, 1), phi);
        Elem rhs = elem_product(3, phi, apply_cop_leg(d, 2, 0));
        if (lhs != rhs) {
            ok = false;
            wit = basis[k];
            break;
        }
    }
    rep.add("quasi-coassociativity", ok, wit);

    // pentagon / 3-cycle identity
    {
        Elem l1 = insert_unit_leg(phi, 3, 0);                  // 1 (x) phi
        Elem l2 = apply_cop_leg(phi, 3, 1);                    // (id x Delta x id) phi
        Elem l3 = insert_unit_leg(phi, 3, 3);                  // phi (x) 1
        Elem lhs = elem_product(4, elem_product(4, l1, l2), l3);
        Elem r1 = apply_cop_leg(phi, 3, 2);                    // (id x id x Delta) phi
        Elem r2 = apply_cop_leg(phi, 3, 0);                    // (Delta x id x id) phi
        Elem rhs = elem_product(4, r1, r2);
        rep.add("3-cycle (pentagon) identity", lhs == rhs,
                lhs == rhs ? "" : elem_to_string(lhs, 4) + " vs " + elem_to_string(rhs, 4));
    }

    rep.add("counital coassociator ((id x eps x id) phi = 1 (x) 1)",
            apply_counit_leg(phi, 3, 1) == elem_unit(2));

    {
        Elem inv = phi_inv;
        bool have = !inv.empty();
        if (!have) {
            auto solved = invert_elem(phi, 3);
            have = solved.has_value();
            if (have) inv = *solved;
        } else {
            have = elem_product(3, phi, inv) == elem_unit(3) &&
                   elem_product(3, inv, phi) == elem_unit(3);
        }
        rep.add("coassociator invertible", have);
    }

    ok = true;
    wit = "";
    for (int k = 0; k < dim; ++k) {
        Elem d = delta_of(k);
        Elem ek = elem_basis(k);
        if (apply_counit_leg(d, 2, 0) != ek || apply_counit_leg(d, 2, 1) != ek) {
            ok = false;
            wit = basis[k];
            break;
        }
    }
    rep.add("counit axiom", ok, wit);

    // quasi-antipode: sum S(x1) a x2 = eps(x) a ; sum x1 b S(x2) = eps(x) b
    Elem ea = element_of_vector(qa_a), eb = element_of_vector(qa_b);
    ok = true;
    wit = "";
    for (int k = 0; k < dim; ++k) {
        Elem d = delta_of(k);
        Elem lhs;
        for (const auto& [t, c] : d) {
            std::vector<int> ij = unflat(t, 2);
            Elem term = elem_product(1, antipode_of(ij[0]), ea);
            term = elem_product(1, term, elem_basis(ij[1]));
            lhs = elem_sum(lhs, elem_scale(term, c));
        }
        if (lhs != elem_scale(ea, counit_v[k])) {
            ok = false;
            wit = "S-a axiom at " + basis[k];
            break;
        }
        Elem rhs;
        for (const auto& [t, c] : d) {
            std::vector<int> ij = unflat(t, 2);
            Elem term = elem_product(1, elem_basis(ij[0]), eb);
            term = elem_product(1, term, antipode_of(ij[1]));
            rhs = elem_sum(rhs, elem_scale(term, c));
        }
        if (rhs != elem_scale(eb, counit_v[k])) {
            ok = false;
            wit = "b-S axiom at " + basis[k];
            break;
        }
    }
    rep.add("quasi-antipode axioms", ok, wit);

    // phi compatibilities: sum phi1 b S(phi2) a phi3 = 1 and
    // sum S(phi^-1) a phi^-2 b S(phi^-3) = 1
    {
        Elem acc;
        for (const auto& [t, c] : phi) {
            std::vector<int> idx = unflat(t, 3);
            Elem term = elem_product(1, elem_basis(idx[0]), eb);
            term = elem_product(1, term, antipode_of(idx[1]));
            term = elem_product(1, term, ea);
            term = elem_product(1, term, elem_basis(idx[2]));
            acc = elem_sum(acc, elem_scale(term, c));
        }
        rep.add("phi compatibility (m(id,b,S,a,id) phi = 1)", acc == elem_unit(1),
                acc == elem_unit(1) ? "" : elem_to_string(acc, 1));
    }
    {
        Elem inv = phi_inv;
        if (inv.empty()) {
            auto solved = invert_elem(phi, 3);
            if (solved) inv = *solved;
        }
        if (!inv.empty()) {
            Elem acc;
            for (const auto& [t, c] : inv) {
                std::vector<int> idx = unflat(t, 3);
                Elem term = elem_product(1, antipode_of(idx[0]), ea);
                term = elem_product(1, term, elem_basis(idx[1]));
                term = elem_product(1, term, eb);
                term = elem_product(1, term, antipode_of(idx[2]));
                acc = elem_sum(acc, elem_scale(term, c));
            }
            rep.add("phi compatibility (m(S,a,id,b,S) phi^-1 = 1)", acc == elem_unit(1),
                    acc == elem_unit(1) ? "" : elem_to_string(acc, 1));
        } else {
            rep.add("phi compatibility (m(S,a,id,b,S) phi^-1 = 1)", false,
                    "coassociator not invertible");
        }
    }
    return rep;
}

Report FiniteDimHopf::verify_rmatrix() const {
    Report rep;
    rep.subject = name;
    if (!has_R()) {
        rep.add("R-matrix present", false);
        return rep;
    }
    rep.add("R-matrix present", true);

    // convolution invertibility: try (S x id) R as candidate, else solve
    Elem rinv;
    {
        bool have = false;
        if (has_antipode()) {
            Elem cand = apply_antipode_leg(rmat, 2, 0);
            if (elem_product(2, rmat, cand) == elem_unit(2) &&
                elem_product(2, cand, rmat) == elem_unit(2)) {
                rinv = cand;
                have = true;
            }
        }
        if (!have && static_cast<uint64_t>(dim) * dim <= 4096) {
            auto solved = invert_elem(rmat, 2);
            if (solved) {
                rinv = *solved;
                have = true;
            }
        }
        rep.add("R convolution invertible", have);
    }

    bool ok = true;
    std::string wit;
    for (int k = 0; k < dim; ++k) {
        Elem d = delta_of(k);
        Elem dcop = permute_legs(d, {1, 0});
        if (elem_product(2, rmat, d) != elem_product(2, dcop, rmat)) {
            ok = false;
            wit = basis[k];
            break;
        }
    }
    rep.add("intertwining R Delta = Delta^cop R", ok, wit);

    Elem r13 = insert_unit_leg(rmat, 2, 1);
    Elem r23 = insert_unit_leg(rmat, 2, 0);
    Elem r12 = insert_unit_leg(rmat, 2, 2);
    if (phi_is_trivial()) {
        Elem lhs = apply_cop_leg(rmat, 2, 0); // (Delta x id) R
        Elem rhs = elem_product(3, r13, r23);
        rep.add("hexagon (Delta x id)R = R13 R23", lhs == rhs,
                lhs == rhs ? "" : elem_to_string(lhs, 3) + " vs " + elem_to_string(rhs, 3));
        lhs = apply_cop_leg(rmat, 2, 1); // (id x Delta) R
        rhs = elem_product(3, r13, r12);
        rep.add("hexagon (id x Delta)R = R13 R12", lhs == rhs,
                lhs == rhs ? "" : elem_to_string(lhs, 3) + " vs " + elem_to_string(rhs, 3));
    } else {
        Elem pinv = phi_inv;
        if (pinv.empty()) {
            auto solved = invert_elem(phi, 3);
            if (!solved) {
                rep.add("hexagons with coassociator insertions", false,
                        "coassociator not invertible");
                return rep;
            }
            pinv = *solved;
        }
        auto perm = [&](const Elem& e, std::vector<int> p) { return permute_legs(e, p); };
        // Drinfeld's conventions: phi_{312} R13 phi_{132}^{-1} R23 phi_{123}
        Elem lhs = apply_cop_leg(rmat, 2, 0);
        Elem rhs = elem_product(3, perm(phi, {2, 0, 1}), r13);
        rhs = elem_product(3, rhs, perm(pinv, {0, 2, 1}));
        rhs = elem_product(3, rhs, r23);
        rhs = elem_product(3, rhs, phi);
        rep.add("hexagon (Delta x id)R with phi insertions", lhs == rhs);
        lhs = apply_cop_leg(rmat, 2, 1);
        rhs = elem_product(3, perm(pinv, {1, 2, 0}), r13);
        rhs = elem_product(3, rhs, perm(phi, {1, 0, 2}));
        rhs = elem_product(3, rhs, r12);
        rhs = elem_product(3, rhs, pinv);
        rep.add("hexagon (id x Delta)R with phi insertions", lhs == rhs);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// constructors
// ---------------------------------------------------------------------------

FiniteDimHopf group_algebra(const GroupData& g, const FieldSpec& f) {
    g.validate();
    FiniteDimHopf h;
    h.init(g.order, f, "k[" + std::to_string(g.order) + "-group]");
    h.name = "group algebra";
    for (int i = 0; i < g.order; ++i) h.basis[i] = g.names[i];
    for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j) h.mul[i][j] = {{g.mult[i][j], h.s1()}};
    for (int k = 0; k < g.order; ++k) h.cop[k] = {{k, k, h.s1()}};
    h.unit_v[g.identity] = h.s1();
    for (int i = 0; i < g.order; ++i) h.counit_v[i] = h.s1();
    h.antipode.assign(g.order, {});
    for (int i = 0; i < g.order; ++i) h.antipode[i] = {{g.inverse[i], h.s1()}};
    return h;
}

FiniteDimHopf function_algebra(const GroupData& g, const FieldSpec& f) {
    g.validate();
    FiniteDimHopf h;
    h.init(g.order, f, "function algebra");
    for (int i = 0; i < g.order; ++i) h.basis[i] = "d_" + g.names[i];
    for (int i = 0; i < g.order; ++i) h.mul[i][i] = {{i, h.s1()}};
    for (int k = 0; k < g.order; ++k) {
        for (int u = 0; u < g.order; ++u) {
            // u * v = k
            int v = g.mult[g.inverse[u]][k];
            h.cop[k].emplace_back(u, v, h.s1());
        }
    }
    for (int i = 0; i < g.order; ++i) h.unit_v[i] = h.s1();
    h.counit_v[g.identity] = h.s1();
    h.antipode.assign(g.order, {});
    for (int i = 0; i < g.order; ++i) h.antipode[i] = {{g.inverse[i], h.s1()}};
    return h;
}

FiniteDimHopf twisted_function_algebra(const GroupData& g, const GroupCocycle3& omega) {
    Report chk = omega.check();
    if (!chk.ok()) throw input_error("invalid 3-cocycle:\n" + chk.to_string());
    FiniteDimHopf h = function_algebra(g, omega.field);
    h.name = "twisted function algebra";
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int c = 0; c < g.order; ++c) {
                const Scalar& w = omega.at(a, b, c);
                FiniteDimHopf::elem_add(h.phi, h.flat({a, b, c}), w);
                FiniteDimHopf::elem_add(h.phi_inv, h.flat({a, b, c}), w.inverse());
            }
    h.qa_a.assign(g.order, h.s0());
    for (int a = 0; a < g.order; ++a)
        h.qa_a[a] = omega.at(a, g.inverse[a], a).inverse();
    h.qa_b = h.unit_v;
    return h;
}

FiniteDimHopf drinfeld_double_group(const GroupData& g, const FieldSpec& f) {
    g.validate();
    const int n = g.order;
    FiniteDimHopf h;
    h.init(n * n, f, "Drin(" + std::to_string(n) + "-group^op)");
    auto id2 = [&](int a, int x) { return a * n + x; };
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x) h.basis[id2(a, x)] = "d_" + g.names[a] + "*" + g.names[x];
    // (d_a x)(d_b y) = [a = x b x^{-1}] d_a (xy)
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x)
            for (int b = 0; b < n; ++b)
                for (int y = 0; y < n; ++y) {
                    if (a != g.conj(x, b)) continue;
                    h.mul[id2(a, x)][id2(b, y)] = {{id2(a, g.mult[x][y]), h.s1()}};
                }
    // Delta(d_a x) = sum_{uv=a} (d_u x)(x)(d_v x)
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x)
            for (int u = 0; u < n; ++u) {
                int v = g.mult[g.inverse[u]][a];
                h.cop[id2(a, x)].emplace_back(id2(u, x), id2(v, x), h.s1());
            }
    for (int a = 0; a < n; ++a) h.unit_v[id2(a, g.identity)] = h.s1();
    for (int x = 0; x < n; ++x) h.counit_v[id2(g.identity, x)] = h.s1();
    h.antipode.assign(n * n, {});
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x) {
            int sa = g.conj(g.inverse[x], g.inverse[a]); // x^{-1} a^{-1} x
            h.antipode[id2(a, x)] = {{id2(sa, g.inverse[x]), h.s1()}};
        }
    // R = tau coev: sum_x (d_x 1) (x) (sum_a d_a x)
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < n; ++a)
            FiniteDimHopf::elem_add(h.rmat,
                                    h.flat({id2(x, g.identity), id2(a, x)}), h.s1());
    return h;
}

FiniteDimHopf dual_hopf(const FiniteDimHopf& h) {
    if (h.has_phi() && !h.phi_is_trivial())
        throw config_error("dual of a quasi-Hopf algebra is out of scope");
    FiniteDimHopf d;
    d.init(h.dim, h.field, h.name + "^*");
    for (int i = 0; i < h.dim; ++i) d.basis[i] = h.basis[i] + "^";
    for (int k = 0; k < h.dim; ++k)
        for (const auto& [i, j, c] : h.cop[k]) d.mul[i][j].emplace_back(k, c);
    for (int i = 0; i < h.dim; ++i)
        for (int j = 0; j < h.dim; ++j)
            for (const auto& [k, c] : h.mul[i][j]) d.cop[k].emplace_back(i, j, c);
    d.unit_v = h.counit_v;
    d.counit_v = h.unit_v;
    if (h.has_antipode()) {
        d.antipode.assign(h.dim, {});
        for (int j = 0; j < h.dim; ++j)
            for (const auto& [i, c] : h.antipode[j]) d.antipode[i].emplace_back(j, c);
    }
    return d;
}

} // namespace qd
