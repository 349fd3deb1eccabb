#include "qd/doubles.hpp"

#include <algorithm>
#include <functional>

namespace qd {

namespace {

Scalar qs(long k) { return Scalar::q_power(k); }

// Builds the tensor square of alg: a left and a right copy of every letter
// and lattice component, legs commuting, leg-major letter precedence.
std::shared_ptr<PresentedAlgebra> make_tensor_square(const PresentedAlgebra& alg,
                                                     std::vector<GenId>& left_map,
                                                     std::vector<GenId>& right_map) {
    auto tsq = std::make_shared<PresentedAlgebra>();
    tsq->field = alg.field;
    tsq->name = alg.name + " (x) " + alg.name;
    const auto& gens = alg.generators();
    const auto& lats = alg.lattice();
    left_map.resize(gens.size());
    right_map.resize(gens.size());
    for (size_t g = 0; g < gens.size(); ++g)
        left_map[g] = tsq->add_generator(gens[g].name + "_l", gens[g].sort, gens[g].index,
                                         gens[g].degree, gens[g].counit, gens[g].w2);
    for (size_t g = 0; g < gens.size(); ++g)
        right_map[g] = tsq->add_generator(gens[g].name + "_r", gens[g].sort, gens[g].index,
                                          gens[g].degree, gens[g].counit, gens[g].w2);
    for (size_t i = 0; i < lats.size(); ++i) {
        tsq->add_lattice_component(lats[i].name + "_l", lats[i].modulus);
        for (size_t g = 0; g < gens.size(); ++g)
            tsq->set_cscale((int)i, left_map[g], lats[i].cscale[g]);
    }
    for (size_t i = 0; i < lats.size(); ++i) {
        tsq->add_lattice_component(lats[i].name + "_r", lats[i].modulus);
        for (size_t g = 0; g < gens.size(); ++g)
            tsq->set_cscale((int)(lats.size() + i), right_map[g], lats[i].cscale[g]);
    }
    // leg-major precedence, preserving the in-leg order
    std::vector<GenId> by_rank(gens.size());
    for (size_t g = 0; g < gens.size(); ++g) by_rank[gens[g].rank] = (GenId)g;
    std::vector<GenId> order;
    for (GenId g : by_rank) order.push_back(left_map[g]);
    for (GenId g : by_rank) order.push_back(right_map[g]);
    tsq->finalize_with_ranks(order, alg.b_first());

    auto convert = [&](const NCPolynomial& p, const std::vector<GenId>& gmap,
                       size_t lat_off) {
        NCPolynomial out(tsq.get());
        for (const auto& [m, c] : p.terms()) {
            Monomial nm;
            nm.hexp.assign(2 * lats.size(), 0);
            for (size_t i = 0; i < m.hexp.size(); ++i) nm.hexp[lat_off + i] = m.hexp[i];
            for (GenId g : m.word) nm.word.push_back(gmap[g]);
            out.add_term(std::move(nm), c);
        }
        return out;
    };
    // per-leg copies of the original rules
    for (const auto& r : alg.rules()) {
        std::vector<GenId> lhs_l, lhs_r;
        for (GenId g : r.lhs) {
            lhs_l.push_back(left_map[g]);
            lhs_r.push_back(right_map[g]);
        }
        tsq->add_rule(lhs_l, convert(r.rhs, left_map, 0), r.name + "@l");
        tsq->add_rule(lhs_r, convert(r.rhs, right_map, lats.size()), r.name + "@r");
    }
    // legs commute: x_r y_l -> y_l x_r
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = 0; b < gens.size(); ++b) {
            NCPolynomial rhs(tsq.get());
            Monomial m;
            m.hexp.assign(2 * lats.size(), 0);
            m.word = {left_map[b], right_map[a]};
            rhs.add_term(std::move(m), Scalar::one(alg.field));
            tsq->add_rule({right_map[a], left_map[b]}, std::move(rhs),
                          "legswap " + gens[a].name + "|" + gens[b].name);
        }
    return tsq;
}

} // namespace

// ---------------------------------------------------------------------------
// DoublePresentation
// ---------------------------------------------------------------------------

NCPolynomial DoublePresentation::embed(const NCPolynomial& p, bool left_leg) const {
    NCPolynomial out(tsq.get());
    size_t lats = alg->lattice().size();
    const auto& gmap = left_leg ? tsq_left_ : tsq_right_;
    size_t off = left_leg ? 0 : lats;
    for (const auto& [m, c] : p.terms()) {
        Monomial nm;
        nm.hexp.assign(2 * lats, 0);
        for (size_t i = 0; i < m.hexp.size(); ++i) nm.hexp[off + i] = m.hexp[i];
        for (GenId g : m.word) nm.word.push_back(gmap[g]);
        out.add_term(std::move(nm), c);
    }
    return out;
}

std::vector<std::tuple<Monomial, Monomial, Scalar>>
DoublePresentation::split_tensor(const NCPolynomial& p) const {
    size_t lats = alg->lattice().size();
    size_t ngens = alg->generators().size();
    std::vector<int> leg_of(tsq->generators().size(), -1);
    std::vector<GenId> back(tsq->generators().size(), 0);
    for (size_t g = 0; g < ngens; ++g) {
        leg_of[tsq_left_[g]] = 0;
        back[tsq_left_[g]] = (GenId)g;
        leg_of[tsq_right_[g]] = 1;
        back[tsq_right_[g]] = (GenId)g;
    }
    std::vector<std::tuple<Monomial, Monomial, Scalar>> out;
    for (const auto& [m, c] : p.terms()) {
        Monomial l, r;
        l.hexp.assign(lats, 0);
        r.hexp.assign(lats, 0);
        for (size_t i = 0; i < lats; ++i) {
            l.hexp[i] = m.hexp[i];
            r.hexp[i] = m.hexp[lats + i];
        }
        bool seen_right = false;
        for (GenId g : m.word) {
            if (leg_of[g] == 0) {
                if (seen_right) throw config_error("tensor term not leg-ordered; normalize first");
                l.word.push_back(back[g]);
            } else {
                seen_right = true;
                r.word.push_back(back[g]);
            }
        }
        out.emplace_back(std::move(l), std::move(r), c);
    }
    return out;
}

NCPolynomial DoublePresentation::coproduct_of(const NCPolynomial& p) const {
    if (!is_drinfeld_kind())
        throw kind_error("Heisenberg doubles have no coproduct into themselves; "
                         "their coaction goes through the Drinfeld partner");
    size_t lats = alg->lattice().size();
    NCPolynomial out(tsq.get());
    for (const auto& [m, c] : p.terms()) {
        // Delta(K^h) = K_l^h K_r^h
        Monomial km;
        km.hexp.assign(2 * lats, 0);
        for (size_t i = 0; i < lats; ++i) km.hexp[i] = km.hexp[lats + i] = m.hexp[i];
        NCPolynomial acc(tsq.get());
        acc.add_term(std::move(km), c);
        for (GenId g : m.word) acc = tsq->multiply(acc, cop_table.at(g));
        out += acc;
    }
    return tsq->normal_form(out);
}

NCPolynomial DoublePresentation::antipode_of(const NCPolynomial& p) const {
    if (!is_drinfeld_kind()) throw kind_error("antipode requires a Drinfeld-kind double");
    NCPolynomial out(alg.get());
    for (const auto& [m, c] : p.terms()) {
        // S(K^h x1..xk) = S(xk)...S(x1) K^{-h}
        NCPolynomial acc = alg->unit().scaled(c);
        for (auto it = m.word.rbegin(); it != m.word.rend(); ++it)
            acc = alg->multiply(acc, s_table.at(*it));
        std::vector<long> mh(m.hexp);
        for (long& e : mh) e = -e;
        acc = alg->multiply(acc, alg->lattice_poly(mh));
        out += acc;
    }
    return alg->normal_form(out);
}

NCPolynomial DoublePresentation::antipode_inv_of(const NCPolynomial& p) const {
    if (!is_drinfeld_kind()) throw kind_error("antipode requires a Drinfeld-kind double");
    NCPolynomial out(alg.get());
    for (const auto& [m, c] : p.terms()) {
        NCPolynomial acc = alg->unit().scaled(c);
        for (auto it = m.word.rbegin(); it != m.word.rend(); ++it)
            acc = alg->multiply(acc, sinv_table.at(*it));
        std::vector<long> mh(m.hexp);
        for (long& e : mh) e = -e;
        acc = alg->multiply(acc, alg->lattice_poly(mh));
        out += acc;
    }
    return alg->normal_form(out);
}

Report DoublePresentation::check_counit_compatibility() const {
    Report rep;
    rep.subject = name + " counit/rule compatibility";
    for (const auto& r : alg->rules()) {
        NCPolynomial lhs(alg.get());
        Monomial m = alg->unit_monomial();
        m.word = r.lhs;
        lhs.add_term(std::move(m), alg->one_scalar());
        Scalar el = alg->counit(lhs), er = alg->counit(r.rhs);
        bool same = el == er;
        // Heisenberg cross relations carry the twist defect by design: the
        // counit is not an algebra map there, so only report those.
        rep.add("eps(" + r.name + ")", same,
                same ? "" : el.to_string() + " vs " + er.to_string());
    }
    return rep;
}

Report DoublePresentation::check_coproduct_multiplicative() const {
    Report rep;
    rep.subject = name + " coproduct multiplicativity";
    const auto& gens = alg->generators();
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = 0; b < gens.size(); ++b) {
            NCPolynomial xy = alg->multiply(alg->gen_poly((GenId)a), alg->gen_poly((GenId)b));
            NCPolynomial lhs = coproduct_of(xy);
            NCPolynomial rhs = tsq->multiply(cop_table.at((GenId)a), cop_table.at((GenId)b));
            bool same = lhs == rhs;
            rep.add("Delta(" + gens[a].name + " " + gens[b].name + ")", same,
                    same ? "" : tsq->to_string(lhs) + " vs " + tsq->to_string(rhs));
        }
    return rep;
}

Report DoublePresentation::check_antipode_axioms() const {
    Report rep;
    rep.subject = name + " antipode axioms";
    const auto& gens = alg->generators();
    for (size_t g = 0; g < gens.size(); ++g) {
        NCPolynomial d = tsq->normal_form(cop_table.at((GenId)g));
        NCPolynomial acc1 = alg->zero(), acc2 = alg->zero();
        for (const auto& [l, r, c] : split_tensor(d)) {
            NCPolynomial lp(alg.get()), rp(alg.get());
            lp.add_term(l, alg->one_scalar());
            rp.add_term(r, alg->one_scalar());
            acc1 += alg->multiply(antipode_of(lp), rp).scaled(c);
            acc2 += alg->multiply(lp, antipode_of(rp)).scaled(c);
        }
        acc1 = alg->normal_form(acc1);
        acc2 = alg->normal_form(acc2);
        NCPolynomial target = alg->unit().scaled(gens[g].counit);
        bool ok1 = acc1 == target, ok2 = acc2 == target;
        rep.add("m(S x id)Delta(" + gens[g].name + ")", ok1,
                ok1 ? "" : alg->to_string(acc1));
        rep.add("m(id x S)Delta(" + gens[g].name + ")", ok2,
                ok2 ? "" : alg->to_string(acc2));
        // S and S^{-1} mutually inverse on generators
        NCPolynomial gp = alg->gen_poly((GenId)g);
        bool inv_ok = antipode_inv_of(antipode_of(gp)) == gp &&
                      antipode_of(antipode_inv_of(gp)) == gp;
        rep.add("S^-1 S = id at " + gens[g].name, inv_ok);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// shared builder machinery
// ---------------------------------------------------------------------------

namespace {

struct TermSketch {
    Scalar coeff;
    std::vector<long> hexp;              // lattice exponents
    std::vector<std::string> word;       // generator names
};
struct RuleSketch {
    std::vector<std::string> lhs;
    std::vector<TermSketch> rhs;
    std::string name;
};
struct GenSketch {
    std::string name;
    Sort sort;
    int index;
    std::vector<int> degree;
    Scalar counit;
    int w2 = 0;
    std::vector<Scalar> cscale; // per lattice component
};
struct LatSketch {
    std::string name;
    long modulus;
};

std::shared_ptr<PresentedAlgebra> realize(const FieldSpec& field, const std::string& name,
                                          const std::vector<LatSketch>& lats,
                                          const std::vector<GenSketch>& gens,
                                          const std::vector<RuleSketch>& rules,
                                          bool b_first) {
    auto alg = std::make_shared<PresentedAlgebra>();
    alg->field = field;
    alg->name = name;
    std::map<std::string, GenId> ids;
    for (const auto& g : gens)
        ids[g.name] = alg->add_generator(g.name, g.sort, g.index, g.degree, g.counit, g.w2);
    for (size_t i = 0; i < lats.size(); ++i) {
        alg->add_lattice_component(lats[i].name, lats[i].modulus);
        for (const auto& g : gens)
            if (!g.cscale.empty()) alg->set_cscale((int)i, ids[g.name], g.cscale[i]);
    }
    alg->finalize(b_first);
    for (const auto& r : rules) {
        std::vector<GenId> lhs;
        for (const auto& n : r.lhs) lhs.push_back(ids.at(n));
        NCPolynomial rhs(alg.get());
        for (const auto& t : r.rhs) {
            Monomial m;
            m.hexp = t.hexp;
            m.hexp.resize(lats.size(), 0);
            for (const auto& n : t.word) m.word.push_back(ids.at(n));
            rhs.add_term(std::move(m), t.coeff);
        }
        alg->add_rule(lhs, std::move(rhs), r.name);
    }
    return alg;
}

} // namespace

// ---------------------------------------------------------------------------
// Weyl pair
// ---------------------------------------------------------------------------

DoublePair weyl_pair(int n) {
    if (n < 1) throw config_error("weyl(n) needs n >= 1");
    FieldSpec f = FieldSpec::rational_functions_q();
    Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    std::vector<GenSketch> gens;
    auto xname = [&](int i) { return "x" + std::to_string(i + 1); };
    auto dname = [&](int i) { return "d" + std::to_string(i + 1); };
    for (int i = 0; i < n; ++i) {
        std::vector<int> deg(n, 0);
        deg[i] = 1;
        gens.push_back({xname(i), Sort::B, i, deg, zero, 0, {}});
        gens.push_back({dname(i), Sort::C, i, deg, zero, 0, {}});
    }
    auto sorted_rules = [&](bool) {
        std::vector<RuleSketch> rules;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) {
                rules.push_back({{xname(i), xname(j)},
                                 {{one, {}, {xname(j), xname(i)}}},
                                 "x-sort"});
                rules.push_back({{dname(i), dname(j)},
                                 {{one, {}, {dname(j), dname(i)}}},
                                 "d-sort"});
            }
        return rules;
    };
    // Drin(O_X): everything commutes
    std::vector<RuleSketch> drin_rules = sorted_rules(false);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            drin_rules.push_back({{xname(j), dname(i)},
                                  {{one, {}, {dname(i), xname(j)}}},
                                  "cross"});
    // Heis = Weyl: d x = x d + delta
    std::vector<RuleSketch> heis_rules = sorted_rules(true);
    std::vector<RuleSketch> heis_chb_rules = sorted_rules(false);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RuleSketch r{{dname(i), xname(j)}, {{one, {}, {xname(j), dname(i)}}}, "cross"};
            if (i == j) r.rhs.push_back({one, {}, {}});
            heis_rules.push_back(std::move(r));
            RuleSketch rc{{xname(j), dname(i)}, {{one, {}, {dname(i), xname(j)}}}, "cross"};
            if (i == j) rc.rhs.push_back({-one, {}, {}});
            heis_chb_rules.push_back(std::move(rc));
        }

    DoublePair pair;
    pair.gpair = std::make_shared<GradedPair>(GradedPair::trivial(n));
    pair.drin.kind = DoubleKind::Drinfeld;
    pair.drin.name = "drin-ox(" + std::to_string(n) + ")";
    pair.drin.alg = realize(f, pair.drin.name, {}, gens, drin_rules, false);
    pair.drin.alg_chb = pair.drin.alg;
    pair.drin.tsq = make_tensor_square(*pair.drin.alg, pair.drin.tsq_left_,
                                       pair.drin.tsq_right_);
    pair.heis.kind = DoubleKind::Heisenberg;
    pair.heis.name = "weyl(" + std::to_string(n) + ")";
    pair.heis.alg = realize(f, pair.heis.name, {}, gens, heis_rules, true);
    pair.heis.alg_chb = realize(f, pair.heis.name + " [chb]", {}, gens, heis_chb_rules, false);
    pair.heis.tsq = make_tensor_square(*pair.heis.alg, pair.heis.tsq_left_,
                                       pair.heis.tsq_right_);

    // primitive coproducts and antipodes on the Drinfeld member
    for (const auto& g : pair.drin.alg->generators()) {
        GenId id = *pair.drin.alg->gen_by_name(g.name);
        NCPolynomial cop = pair.drin.embed(pair.drin.alg->gen_poly(id), true);
        cop += pair.drin.embed(pair.drin.alg->gen_poly(id), false);
        pair.drin.cop_table.emplace(id, std::move(cop));
        pair.drin.s_table.emplace(id, -pair.drin.alg->gen_poly(id));
        pair.drin.sinv_table.emplace(id, -pair.drin.alg->gen_poly(id));
    }
    return pair;
}

// ---------------------------------------------------------------------------
// quantum groups
// ---------------------------------------------------------------------------

std::vector<WordPoly> serre_relations(const CartanDatum& d, const std::vector<int>& deg,
                                      bool b_side) {
    GradedPair p = GradedPair::from_cartan(d);
    if (b_side) return p.radical_basis(deg);
    // left radical: kernel of the transposed Gram matrix, in the C letters
    auto words = p.words_of_degree(deg);
    if (words.empty()) return {};
    Matrix g = p.gram_matrix(deg).transposed();
    auto ker = g.kernel();
    std::vector<WordPoly> out;
    for (auto& v : ker) {
        Scalar lead = Scalar::zero(p.field());
        for (const auto& c : v)
            if (!c.is_zero()) {
                lead = c;
                break;
            }
        WordPoly wp;
        for (size_t j = 0; j < words.size(); ++j)
            if (!v[j].is_zero()) wp.terms.emplace_back(words[j], v[j] / lead);
        out.push_back(std::move(wp));
    }
    return out;
}

NCPolynomial wordpoly_to_poly(const PresentedAlgebra& alg, const WordPoly& wp, bool b_side) {
    NCPolynomial out(&alg);
    for (const auto& [w, c] : wp.terms) {
        Monomial m;
        m.hexp.assign(alg.lattice().size(), 0);
        for (int letter : w) {
            std::string nm = (b_side ? "F" : "E");
            if (alg.gen_by_name(nm))
                m.word.push_back(*alg.gen_by_name(nm));
            else
                m.word.push_back(*alg.gen_by_name(nm + std::to_string(letter + 1)));
        }
        // rank > 1 names carry the letter index; rank 1 resolved above
        out.add_term(std::move(m), c);
    }
    return out;
}

DoublePair uqdq_pair(const CartanDatum& d, const std::vector<WordPoly>& serre_b,
                     const std::vector<WordPoly>& serre_c) {
    d.validate();
    int n = d.rank;
    FieldSpec f = FieldSpec::rational_functions_q();
    Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    auto ename = [&](int i) { return n == 1 ? std::string("E") : "E" + std::to_string(i + 1); };
    auto fname = [&](int i) { return n == 1 ? std::string("F") : "F" + std::to_string(i + 1); };
    auto kname = [&](int i) { return n == 1 ? std::string("K") : "K" + std::to_string(i + 1); };

    std::vector<LatSketch> lats;
    for (int i = 0; i < n; ++i) lats.push_back({kname(i), 0});
    std::vector<GenSketch> gens;
    for (int i = 0; i < n; ++i) {
        std::vector<int> deg(n, 0);
        deg[i] = 1;
        std::vector<Scalar> cse, csf;
        for (int k = 0; k < n; ++k) {
            cse.push_back(qs(d.aij(k, i)));  // K_k E_i = q^{2(k.i)/(k.k)} E_i K_k
            csf.push_back(qs(-d.aij(k, i)));
        }
        gens.push_back({ename(i), Sort::C, i, deg, zero, 0, cse});
        gens.push_back({fname(i), Sort::B, i, deg, zero, 0, csf});
    }

    auto cross_rules = [&](bool heis, bool chb_direction) {
        std::vector<RuleSketch> rules;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                // heis display rewrites E_i F_j; chb direction rewrites F_j E_i
                std::vector<std::string> lhs =
                    chb_direction ? std::vector<std::string>{fname(j), ename(i)}
                                  : std::vector<std::string>{ename(i), fname(j)};
                std::vector<std::string> flipped =
                    chb_direction ? std::vector<std::string>{ename(i), fname(j)}
                                  : std::vector<std::string>{fname(j), ename(i)};
                RuleSketch r{lhs, {{one, {}, flipped}}, "cross"};
                if (i == j) {
                    long half = d.sym[i][i] / 2;
                    Scalar qi = d.qi(i);
                    // flip = +1 when the commutator term is added (E F -> F E + [E,F]),
                    // -1 when subtracted (F E -> E F - [E,F])
                    Scalar flip = chb_direction ? -one : one;
                    if (heis) {
                        // [E_i, F_i] = K_i^{-ii/2}/(q_i^{-1} - q_i)
                        Scalar kap = (qi.inverse() - qi).inverse();
                        std::vector<long> h(n, 0);
                        h[i] = -half;
                        r.rhs.push_back({flip * kap, h, {}});
                    } else {
                        // [E_i, F_i] = (K_i^{ii/2} - K_i^{-ii/2})/(q_i - q_i^{-1})
                        Scalar c = (qi - qi.inverse()).inverse();
                        std::vector<long> hp(n, 0), hm(n, 0);
                        hp[i] = half;
                        hm[i] = -half;
                        r.rhs.push_back({flip * c, hp, {}});
                        r.rhs.push_back({-(flip * c), hm, {}});
                    }
                }
                rules.push_back(std::move(r));
            }
        return rules;
    };

    DoublePair pair;
    pair.gpair = std::make_shared<GradedPair>(GradedPair::from_cartan(d));

    std::string uqn = n == 1 ? "uq-sl2" : "uq(rank " + std::to_string(n) + ")";
    std::string dqn = n == 1 ? "dq-sl2" : "dq(rank " + std::to_string(n) + ")";
    pair.drin.kind = DoubleKind::Drinfeld;
    pair.drin.name = uqn;
    pair.drin.alg = realize(f, uqn, lats, gens, cross_rules(false, true), false);
    pair.drin.alg_chb = pair.drin.alg;
    pair.heis.kind = DoubleKind::Heisenberg;
    pair.heis.name = dqn;
    pair.heis.alg = realize(f, dqn, lats, gens, cross_rules(true, false), true);
    pair.heis.alg_chb = realize(f, dqn + " [chb]", lats, gens, cross_rules(true, true), false);

    // install Serre relations on every materialized algebra
    auto install = [&](PresentedAlgebra& a) {
        int idx = 0;
        for (const auto& wp : serre_b)
            a.add_rule_from_poly(wordpoly_to_poly(a, wp, true),
                                 "serre-b" + std::to_string(idx++));
        idx = 0;
        for (const auto& wp : serre_c)
            a.add_rule_from_poly(wordpoly_to_poly(a, wp, false),
                                 "serre-c" + std::to_string(idx++));
    };
    install(*pair.drin.alg);
    install(*pair.heis.alg);
    install(*pair.heis.alg_chb);

    pair.drin.tsq = make_tensor_square(*pair.drin.alg, pair.drin.tsq_left_,
                                       pair.drin.tsq_right_);
    pair.heis.tsq = make_tensor_square(*pair.heis.alg, pair.heis.tsq_left_,
                                       pair.heis.tsq_right_);

    // coproducts: Delta(F) = F (x) K^{-ii/2} + 1 (x) F,
    //             Delta(E) = E (x) 1 + K^{ii/2} (x) E
    PresentedAlgebra& ua = *pair.drin.alg;
    for (int i = 0; i < n; ++i) {
        long half = d.sym[i][i] / 2;
        GenId fe = *ua.gen_by_name(ename(i)), ff = *ua.gen_by_name(fname(i));
        std::vector<long> hp(n, 0), hm(n, 0);
        hp[i] = half;
        hm[i] = -half;
        NCPolynomial copF = pair.drin.embed(ua.gen_poly(ff), true);
        copF = pair.drin.tsq->multiply(copF, pair.drin.embed(ua.lattice_poly(hm), false));
        copF += pair.drin.embed(ua.gen_poly(ff), false);
        pair.drin.cop_table.emplace(ff, std::move(copF));
        NCPolynomial copE = pair.drin.embed(ua.gen_poly(fe), true);
        copE += pair.drin.tsq->multiply(pair.drin.embed(ua.lattice_poly(hp), true),
                                        pair.drin.embed(ua.gen_poly(fe), false));
        pair.drin.cop_table.emplace(fe, std::move(copE));
        // S(F) = -F K^{ii/2}, S(E) = -K^{-ii/2} E, certified by axiom checks
        pair.drin.s_table.emplace(ff, -ua.multiply(ua.gen_poly(ff), ua.lattice_poly(hp)));
        pair.drin.s_table.emplace(fe, -ua.multiply(ua.lattice_poly(hm), ua.gen_poly(fe)));
    }
    // inverse antipode: S^{-1}(x) solves S(y) = x with y = c K^b x
    for (auto& [g, sval] : pair.drin.s_table) {
        (void)sval;
        NCPolynomial target = ua.gen_poly(g);
        bool found = false;
        for (long b = -3; b <= 3 && !found; ++b) {
            std::vector<long> h(n, 0);
            const auto& gen = ua.generators()[g];
            // K-exponent touches only the generator's own component
            h[gen.index] = b;
            NCPolynomial cand = ua.multiply(ua.lattice_poly(h), ua.gen_poly(g));
            // apply S: S(K^h x) = S(x) K^{-h}
            std::vector<long> mh(h);
            for (long& e : mh) e = -e;
            NCPolynomial s_cand = ua.multiply(pair.drin.s_table.at(g), ua.lattice_poly(mh));
            // s_cand = lambda * target means S(cand/lambda) = target
            if (s_cand.term_count() == 1 && target.term_count() == 1 &&
                s_cand.terms().begin()->first == target.terms().begin()->first) {
                Scalar lambda = s_cand.terms().begin()->second;
                pair.drin.sinv_table[g] = cand.scaled(lambda.inverse());
                found = true;
            }
        }
        if (!found) throw config_error("could not solve for the inverse antipode");
    }
    return pair;
}

// ---------------------------------------------------------------------------
// super pairs over Drin(C2)
// ---------------------------------------------------------------------------

DoublePair super_pair(int n, bool exterior) {
    if (n < 1) throw config_error("super pair needs n >= 1");
    FieldSpec f = FieldSpec::rationals();
    Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    auto vname = [&](int i) { return "v" + std::to_string(i + 1); };
    auto fnm = [&](int i) { return "f" + std::to_string(i + 1); };
    std::vector<LatSketch> lats = {{"s", 2}, {"e", 2}};
    std::vector<GenSketch> gens;
    Scalar ssign = exterior ? -one : one;
    for (int i = 0; i < n; ++i) {
        std::vector<int> deg(n, 0);
        deg[i] = 1;
        gens.push_back({vname(i), Sort::B, i, deg, zero, 0, {ssign, -one}});
        gens.push_back({fnm(i), Sort::C, i, deg, zero, 0, {ssign, -one}});
    }
    Scalar sign = exterior ? -one : one;
    auto internal_rules = [&]() {
        std::vector<RuleSketch> rules;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) {
                rules.push_back({{vname(i), vname(j)}, {{sign, {}, {vname(j), vname(i)}}},
                                 "v-sort"});
                rules.push_back({{fnm(i), fnm(j)}, {{sign, {}, {fnm(j), fnm(i)}}}, "f-sort"});
            }
        if (exterior)
            for (int i = 0; i < n; ++i) {
                rules.push_back({{vname(i), vname(i)}, {}, "v-square"});
                rules.push_back({{fnm(i), fnm(i)}, {}, "f-square"});
            }
        return rules;
    };
    // drin cross: [f_i, v_j] = delta_ij (s - 1) ev   (symmetric case)
    //             [f_i, v_j] = delta_ij (s - e) ev   (exterior case)
    auto drin_rules = [&]() {
        auto rules = internal_rules();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                RuleSketch r{{vname(j), fnm(i)}, {{one, {}, {fnm(i), vname(j)}}}, "cross"};
                if (i == j) {
                    r.rhs.push_back({-one, {1, 0}, {}}); // -s
                    if (exterior)
                        r.rhs.push_back({one, {0, 1}, {}}); // +e
                    else
                        r.rhs.push_back({one, {0, 0}, {}}); // +1
                }
                rules.push_back(std::move(r));
            }
        return rules;
    };
    // heis cross: [f_i, v_j] = delta_ij s ev, both cases
    auto heis_rules = [&](bool chb) {
        auto rules = internal_rules();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                RuleSketch r = chb ? RuleSketch{{vname(j), fnm(i)},
                                                {{one, {}, {fnm(i), vname(j)}}},
                                                "cross"}
                                   : RuleSketch{{fnm(i), vname(j)},
                                                {{one, {}, {vname(j), fnm(i)}}},
                                                "cross"};
                if (i == j) r.rhs.push_back({chb ? -one : one, {1, 0}, {}});
                rules.push_back(std::move(r));
            }
        return rules;
    };

    DoublePair pair;
    pair.gpair = std::make_shared<GradedPair>(GradedPair::trivial(n));
    std::string base = (exterior ? "super-ext(" : "super-sym(") + std::to_string(n) + ")";
    pair.drin.kind = DoubleKind::Drinfeld;
    pair.drin.name = base + " drin";
    pair.drin.alg = realize(f, pair.drin.name, lats, gens, drin_rules(), false);
    pair.drin.alg_chb = pair.drin.alg;
    pair.heis.kind = DoubleKind::Heisenberg;
    pair.heis.name = base;
    pair.heis.alg = realize(f, base, lats, gens, heis_rules(false), true);
    pair.heis.alg_chb = realize(f, base + " [chb]", lats, gens, heis_rules(true), false);
    pair.drin.tsq = make_tensor_square(*pair.drin.alg, pair.drin.tsq_left_,
                                       pair.drin.tsq_right_);
    pair.heis.tsq = make_tensor_square(*pair.heis.alg, pair.heis.tsq_left_,
                                       pair.heis.tsq_right_);

    // Delta(v) = v (x) s + 1 (x) v;  Delta(f) = f (x) 1 + d (x) f where
    // d = 1 (symmetric) or e (exterior); antipodes certified by axioms.
    PresentedAlgebra& da = *pair.drin.alg;
    for (int i = 0; i < n; ++i) {
        GenId v = *da.gen_by_name(vname(i)), fg = *da.gen_by_name(fnm(i));
        NCPolynomial copv = pair.drin.tsq->multiply(
            pair.drin.embed(da.gen_poly(v), true),
            pair.drin.embed(da.lattice_poly({1, 0}), false));
        copv += pair.drin.embed(da.gen_poly(v), false);
        pair.drin.cop_table.emplace(v, std::move(copv));
        NCPolynomial copf = pair.drin.embed(da.gen_poly(fg), true);
        NCPolynomial right = pair.drin.embed(da.gen_poly(fg), false);
        if (exterior)
            right = pair.drin.tsq->multiply(pair.drin.embed(da.lattice_poly({0, 1}), true),
                                            right);
        copf += right;
        pair.drin.cop_table.emplace(fg, std::move(copf));
        // forced by the antipode axioms against the coproducts above:
        // S(v) = -v s (both cases); S(f) = -f (symmetric), -e f (exterior)
        NCPolynomial sv = -da.multiply(da.gen_poly(v), da.lattice_poly({1, 0}));
        NCPolynomial sf = exterior
                              ? -da.multiply(da.lattice_poly({0, 1}), da.gen_poly(fg))
                              : -da.gen_poly(fg);
        pair.drin.s_table.emplace(v, sv);
        pair.drin.s_table.emplace(fg, sf);
        // S^{-1}: in the exterior case S has order 4 on v and f
        NCPolynomial sinv_v =
            exterior ? da.multiply(da.gen_poly(v), da.lattice_poly({1, 0})) : sv;
        NCPolynomial sinv_f =
            exterior ? da.multiply(da.lattice_poly({0, 1}), da.gen_poly(fg)) : sf;
        pair.drin.sinv_table.emplace(v, sinv_v);
        pair.drin.sinv_table.emplace(fg, sinv_f);
    }
    return pair;
}

// ---------------------------------------------------------------------------
// strict group pairs
// ---------------------------------------------------------------------------

namespace {

// delta_1 = 1 - sum_{h != 1} delta_h, as term sketches with coefficient c
void push_delta(std::vector<TermSketch>& out, const GroupData& g, int h, const Scalar& c,
                const std::vector<std::string>& left_word,
                const std::vector<std::string>& right_word) {
    auto dn = [&](int a) { return "d_" + g.names[a]; };
    auto with = [&](const std::vector<std::string>& mid) {
        std::vector<std::string> w = left_word;
        w.insert(w.end(), mid.begin(), mid.end());
        w.insert(w.end(), right_word.begin(), right_word.end());
        return w;
    };
    if (h != g.identity) {
        out.push_back({c, {}, with({dn(h)})});
        return;
    }
    out.push_back({c, {}, with({})});
    for (int a = 0; a < g.order; ++a)
        if (a != g.identity) out.push_back({-c, {}, with({dn(a)})});
}

} // namespace

DoublePair group_pair(const GroupData& g, const FieldSpec& f) {
    g.validate();
    Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    auto dn = [&](int a) { return "d_" + g.names[a]; };
    std::vector<GenSketch> gens;
    for (int h = 0; h < g.order; ++h)
        if (h != g.identity) gens.push_back({dn(h), Sort::C, h, {1}, zero, 0, {}});
    for (int x = 0; x < g.order; ++x)
        if (x != g.identity) gens.push_back({g.names[x], Sort::B, x, {1}, one, 0, {}});

    auto internal_rules = [&]() {
        std::vector<RuleSketch> rules;
        // group letters: x y -> (xy) or 1
        for (int x = 0; x < g.order; ++x)
            for (int y = 0; y < g.order; ++y) {
                if (x == g.identity || y == g.identity) continue;
                int xy = g.mult[x][y];
                RuleSketch r{{g.names[x], g.names[y]}, {}, "group"};
                if (xy == g.identity)
                    r.rhs.push_back({one, {}, {}});
                else
                    r.rhs.push_back({one, {}, {g.names[xy]}});
                rules.push_back(std::move(r));
            }
        // delta letters: d_a d_b -> [a=b] d_a
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b) {
                if (a == g.identity || b == g.identity) continue;
                RuleSketch r{{dn(a), dn(b)}, {}, "delta"};
                if (a == b) r.rhs.push_back({one, {}, {dn(a)}});
                rules.push_back(std::move(r));
            }
        return rules;
    };

    DoublePair pair;
    pair.drin.kind = DoubleKind::Drinfeld;
    pair.drin.name = "drin-group";
    {
        auto rules = internal_rules();
        // x d_h -> d_{x h x^{-1}} x
        for (int x = 0; x < g.order; ++x)
            for (int h = 0; h < g.order; ++h) {
                if (x == g.identity || h == g.identity) continue;
                RuleSketch r{{g.names[x], dn(h)}, {}, "cross"};
                push_delta(r.rhs, g, g.conj(x, h), one, {}, {g.names[x]});
                rules.push_back(std::move(r));
            }
        pair.drin.alg = realize(f, "drin-group", {}, gens, rules, false);
        pair.drin.alg_chb = pair.drin.alg;
    }
    pair.heis.kind = DoubleKind::Heisenberg;
    pair.heis.name = "heis-group";
    {
        auto rules = internal_rules();
        // display: d_j x -> x d_{x^{-1} j}; left multiplication composes with
        // the leftmost-first rewriting order (checked by overlap analysis)
        for (int x = 0; x < g.order; ++x)
            for (int j = 0; j < g.order; ++j) {
                if (x == g.identity || j == g.identity) continue;
                RuleSketch r{{dn(j), g.names[x]}, {}, "cross"};
                push_delta(r.rhs, g, g.mult[g.inverse[x]][j], one, {g.names[x]}, {});
                rules.push_back(std::move(r));
            }
        pair.heis.alg = realize(f, "heis-group", {}, gens, rules, true);
        auto rules_chb = internal_rules();
        // chb: x d_k -> d_{x k} x
        for (int x = 0; x < g.order; ++x)
            for (int k = 0; k < g.order; ++k) {
                if (x == g.identity || k == g.identity) continue;
                RuleSketch r{{g.names[x], dn(k)}, {}, "cross"};
                push_delta(r.rhs, g, g.mult[x][k], one, {}, {g.names[x]});
                rules_chb.push_back(std::move(r));
            }
        pair.heis.alg_chb = realize(f, "heis-group [chb]", {}, gens, rules_chb, false);
    }
    pair.drin.tsq = make_tensor_square(*pair.drin.alg, pair.drin.tsq_left_,
                                       pair.drin.tsq_right_);
    pair.heis.tsq = make_tensor_square(*pair.heis.alg, pair.heis.tsq_left_,
                                       pair.heis.tsq_right_);

    // coproducts: Delta(x) = x (x) x; Delta(d_h) = sum_{uv=h} d_v (x) d_u
    PresentedAlgebra& da = *pair.drin.alg;
    auto embed_delta = [&](int a, bool left) {
        // delta_a as a polynomial in the chosen leg, expanding delta_1
        NCPolynomial p(&da);
        Monomial m = da.unit_monomial();
        if (a != g.identity) {
            m.word.push_back(*da.gen_by_name(dn(a)));
            p.add_term(m, one);
        } else {
            p.add_term(m, one);
            for (int b = 0; b < g.order; ++b)
                if (b != g.identity) {
                    Monomial mb = da.unit_monomial();
                    mb.word.push_back(*da.gen_by_name(dn(b)));
                    p.add_term(mb, -one);
                }
        }
        return pair.drin.embed(p, left);
    };
    for (int x = 0; x < g.order; ++x) {
        if (x == g.identity) continue;
        GenId id = *da.gen_by_name(g.names[x]);
        NCPolynomial cop = pair.drin.tsq->multiply(pair.drin.embed(da.gen_poly(id), true),
                                                   pair.drin.embed(da.gen_poly(id), false));
        pair.drin.cop_table.emplace(id, std::move(cop));
        // S(x) = x^{-1}
        int xi = g.inverse[x];
        pair.drin.s_table.emplace(id, da.gen_poly(*da.gen_by_name(g.names[xi])));
        pair.drin.sinv_table.emplace(id, da.gen_poly(*da.gen_by_name(g.names[xi])));
    }
    for (int h = 0; h < g.order; ++h) {
        if (h == g.identity) continue;
        GenId id = *da.gen_by_name(dn(h));
        NCPolynomial cop(pair.drin.tsq.get());
        for (int u = 0; u < g.order; ++u) {
            int v = g.mult[g.inverse[u]][h]; // uv = h
            cop += pair.drin.tsq->multiply(embed_delta(v, true), embed_delta(u, false));
        }
        pair.drin.cop_table.emplace(id, pair.drin.tsq->normal_form(cop));
        int hi = g.inverse[h];
        pair.drin.s_table.emplace(id, da.gen_poly(*da.gen_by_name(dn(hi))));
        pair.drin.sinv_table.emplace(id, da.gen_poly(*da.gen_by_name(dn(hi))));
    }
    pair.drin.snapshot = drinfeld_double_group(g, f);
    return pair;
}

// ---------------------------------------------------------------------------
// twisted group doubles
// ---------------------------------------------------------------------------

DoublePair quasi_group_pair(const GroupData& g, const GroupCocycle3& omega) {
    Report chk = omega.check();
    if (!chk.ok()) throw input_error("invalid 3-cocycle:\n" + chk.to_string());
    const FieldSpec& f = omega.field;
    Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    auto dn = [&](int a) { return "d_" + g.names[a]; };
    std::vector<GenSketch> gens;
    for (int h = 0; h < g.order; ++h)
        if (h != g.identity) gens.push_back({dn(h), Sort::C, h, {1}, zero, 0, {}});
    for (int x = 0; x < g.order; ++x)
        if (x != g.identity) gens.push_back({g.names[x], Sort::B, x, {1}, one, 1, {}});

    auto delta_rules = [&]() {
        std::vector<RuleSketch> rules;
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b) {
                if (a == g.identity || b == g.identity) continue;
                RuleSketch r{{dn(a), dn(b)}, {}, "delta"};
                if (a == b) r.rhs.push_back({one, {}, {dn(a)}});
                rules.push_back(std::move(r));
            }
        return rules;
    };
    auto product_rules = [&](bool adjoint) {
        std::vector<RuleSketch> rules;
        for (int x = 0; x < g.order; ++x)
            for (int y = 0; y < g.order; ++y) {
                if (x == g.identity || y == g.identity) continue;
                int xy = g.mult[x][y];
                RuleSketch r{{g.names[x], g.names[y]}, {}, "c-product"};
                for (int d = 0; d < g.order; ++d) {
                    Scalar tau = adjoint ? omega.tau_adjoint(x, y, d)
                                         : omega.tau_regular(x, y, d);
                    std::vector<std::string> gx =
                        xy == g.identity ? std::vector<std::string>{}
                                         : std::vector<std::string>{g.names[xy]};
                    push_delta(r.rhs, g, d, tau, gx, {});
                }
                rules.push_back(std::move(r));
            }
        return rules;
    };
    auto cross_rules = [&](bool adjoint) {
        std::vector<RuleSketch> rules;
        for (int x = 0; x < g.order; ++x)
            for (int a = 0; a < g.order; ++a) {
                if (x == g.identity || a == g.identity) continue;
                RuleSketch r{{dn(a), g.names[x]}, {}, "cross"};
                int target =
                    adjoint ? g.conj(g.inverse[x], a) : g.mult[g.inverse[x]][a];
                push_delta(r.rhs, g, target, one, {g.names[x]}, {});
                rules.push_back(std::move(r));
            }
        return rules;
    };

    DoublePair pair;
    pair.drin.kind = DoubleKind::QuasiDrinfeld;
    pair.drin.name = "quasi-drin-group";
    {
        auto rules = delta_rules();
        auto pr = product_rules(true);
        rules.insert(rules.end(), pr.begin(), pr.end());
        // adjoint cross in the drin display (delta first): x d_m -> d_{xmx^-1} x
        for (int x = 0; x < g.order; ++x)
            for (int m = 0; m < g.order; ++m) {
                if (x == g.identity || m == g.identity) continue;
                RuleSketch r{{g.names[x], dn(m)}, {}, "cross"};
                push_delta(r.rhs, g, g.conj(x, m), one, {}, {g.names[x]});
                rules.push_back(std::move(r));
            }
        pair.drin.alg = realize(f, pair.drin.name, {}, gens, rules, false);
        pair.drin.alg_chb = pair.drin.alg;
    }
    pair.heis.kind = DoubleKind::QuasiHeisenberg;
    pair.heis.name = "quasi-heis-group";
    {
        auto rules = delta_rules();
        auto pr = product_rules(false);
        auto cr = cross_rules(false); // d_a x -> x d_{xa}
        rules.insert(rules.end(), pr.begin(), pr.end());
        rules.insert(rules.end(), cr.begin(), cr.end());
        pair.heis.alg = realize(f, pair.heis.name, {}, gens, rules, true);
        pair.heis.alg_chb = pair.heis.alg;
    }
    pair.drin.tsq = make_tensor_square(*pair.drin.alg, pair.drin.tsq_left_,
                                       pair.drin.tsq_right_);
    pair.heis.tsq = make_tensor_square(*pair.heis.alg, pair.heis.tsq_left_,
                                       pair.heis.tsq_right_);
    return pair;
}

// ---------------------------------------------------------------------------
// restricted Heisenberg over kC2
// ---------------------------------------------------------------------------

DoublePresentation restricted_heisenberg_kc2(int n, int action_sign, int coaction_deg) {
    if (n < 1) throw config_error("restricted Heisenberg needs n >= 1");
    if (action_sign != 1 && action_sign != -1)
        throw config_error("action sign must be +1 or -1");
    if (coaction_deg != 0 && coaction_deg != 1)
        throw config_error("coaction degree must be 0 (trivial) or 1 (s)");
    // braiding sign on V (x) V: chi(deg) when the coaction is s, else +1
    int braid = coaction_deg == 1 ? action_sign : 1;
    bool exterior = braid == -1;

    FieldSpec f = FieldSpec::rationals();
    Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    auto vname = [&](int i) { return "v" + std::to_string(i + 1); };
    auto fnm = [&](int i) { return "f" + std::to_string(i + 1); };
    std::vector<LatSketch> lats = {{"s", 2}};
    std::vector<GenSketch> gens;
    Scalar ssign = action_sign == -1 ? -one : one;
    for (int i = 0; i < n; ++i) {
        std::vector<int> deg(n, 0);
        deg[i] = 1;
        gens.push_back({vname(i), Sort::B, i, deg, zero, 0, {ssign}});
        gens.push_back({fnm(i), Sort::C, i, deg, zero, 0, {ssign}});
    }
    std::vector<RuleSketch> rules;
    Scalar sign = exterior ? -one : one;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            rules.push_back({{vname(i), vname(j)}, {{sign, {}, {vname(j), vname(i)}}},
                             "v-sort"});
            rules.push_back({{fnm(i), fnm(j)}, {{sign, {}, {fnm(j), fnm(i)}}}, "f-sort"});
        }
    if (exterior)
        for (int i = 0; i < n; ++i) {
            rules.push_back({{vname(i), vname(i)}, {}, "v-square"});
            rules.push_back({{fnm(i), fnm(i)}, {}, "f-square"});
        }
    // cross: [f_i, v_j] = delta_ij * (coaction monomial)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RuleSketch r{{fnm(i), vname(j)}, {{one, {}, {vname(j), fnm(i)}}}, "cross"};
            if (i == j) r.rhs.push_back({one, {coaction_deg}, {}});
            rules.push_back(std::move(r));
        }
    DoublePresentation d;
    d.kind = DoubleKind::RestrictedHeisenberg;
    d.name = "restricted-heis-kc2";
    d.alg = realize(f, d.name, lats, gens, rules, true);
    // chb twin
    std::vector<RuleSketch> rules_chb(rules.begin(), rules.end() - n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RuleSketch r{{vname(j), fnm(i)}, {{one, {}, {fnm(i), vname(j)}}}, "cross"};
            if (i == j) r.rhs.push_back({-one, {coaction_deg}, {}});
            rules_chb.push_back(std::move(r));
        }
    d.alg_chb = realize(f, d.name + " [chb]", lats, gens, rules_chb, false);
    d.tsq = make_tensor_square(*d.alg, d.tsq_left_, d.tsq_right_);
    return d;
}

} // namespace qd
