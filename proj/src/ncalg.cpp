#include "qd/ncalg.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace qd {

// ---------------------------------------------------------------------------
// monomial order
// ---------------------------------------------------------------------------

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
    return alg->mono_less(a, b);
}

int PresentedAlgebra::order_w1(const Monomial& m) const {
    int s = 0;
    for (GenId g : m.word) s += gens_[g].w1;
    return s;
}

int PresentedAlgebra::order_w2(const Monomial& m) const {
    int s = 0;
    for (GenId g : m.word) s += gens_[g].w2;
    return s;
}

bool PresentedAlgebra::mono_less(const Monomial& a, const Monomial& b) const {
    int wa = order_w1(a), wb = order_w1(b);
    if (wa != wb) return wa < wb;
    wa = order_w2(a);
    wb = order_w2(b);
    if (wa != wb) return wa < wb;
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    for (size_t i = 0; i < a.word.size(); ++i) {
        int ra = gens_[a.word[i]].rank, rb = gens_[b.word[i]].rank;
        if (ra != rb) return ra < rb;
    }
    if (a.hexp != b.hexp)
        return std::lexicographical_compare(a.hexp.begin(), a.hexp.end(), b.hexp.begin(),
                                            b.hexp.end());
    return false;
}

// ---------------------------------------------------------------------------
// NCPolynomial
// ---------------------------------------------------------------------------

NCPolynomial::NCPolynomial(const PresentedAlgebra* a) : alg_(a), terms_(MonoLess{a}) {}

void NCPolynomial::add_term(Monomial m, const Scalar& c) {
    if (c.is_zero()) return;
    m.hexp.resize(alg_->lattice().size(), 0);
    alg_->normalize_hexp(m.hexp);
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

NCPolynomial NCPolynomial::operator-() const {
    NCPolynomial r(alg_);
    for (const auto& [m, c] : terms_) r.add_term(m, -c);
    return r;
}

NCPolynomial NCPolynomial::scaled(const Scalar& c) const {
    NCPolynomial r(alg_);
    if (c.is_zero()) return r;
    for (const auto& [m, s] : terms_) r.add_term(m, s * c);
    return r;
}

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

GenId PresentedAlgebra::add_generator(const std::string& gname, Sort sort, int index,
                                      std::vector<int> degree, const Scalar& cu, int w2) {
    if (finalized_) throw config_error("algebra already finalized");
    if (sort == Sort::H) throw config_error("lattice generators go in add_lattice_component");
    if (gen_by_name(gname) || lattice_by_name(gname))
        throw config_error("duplicate generator name " + gname);
    WordGenerator g;
    g.name = gname;
    g.sort = sort;
    g.index = index;
    g.degree = std::move(degree);
    g.counit = cu;
    g.w2 = w2;
    gens_.push_back(std::move(g));
    for (auto& lc : lattice_) lc.cscale.resize(gens_.size(), one_scalar());
    return static_cast<GenId>(gens_.size() - 1);
}

int PresentedAlgebra::add_lattice_component(const std::string& lname, long modulus) {
    if (finalized_) throw config_error("algebra already finalized");
    if (gen_by_name(lname) || lattice_by_name(lname))
        throw config_error("duplicate generator name " + lname);
    LatticeComponent lc;
    lc.name = lname;
    lc.modulus = modulus;
    lc.cscale.assign(gens_.size(), one_scalar());
    lattice_.push_back(std::move(lc));
    return static_cast<int>(lattice_.size() - 1);
}

void PresentedAlgebra::set_cscale(int comp, GenId gen, const Scalar& s) {
    lattice_.at(comp).cscale.at(gen) = s;
}

void PresentedAlgebra::finalize(bool b_first) {
    b_first_ = b_first;
    std::vector<size_t> idx(gens_.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    auto sort_rank = [b_first](Sort s) {
        if (s == Sort::C) return b_first ? 1 : 0;
        return b_first ? 0 : 1; // Sort::B
    };
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        int sa = sort_rank(gens_[a].sort), sb = sort_rank(gens_[b].sort);
        if (sa != sb) return sa < sb;
        if (gens_[a].index != gens_[b].index) return gens_[a].index < gens_[b].index;
        return gens_[a].name < gens_[b].name;
    });
    for (size_t r = 0; r < idx.size(); ++r) gens_[idx[r]].rank = static_cast<int>(r);
    // torsion consistency: cscale^m must be 1
    for (const auto& lc : lattice_) {
        if (lc.modulus <= 0) continue;
        for (size_t g = 0; g < gens_.size(); ++g) {
            if (!lc.cscale[g].pow(lc.modulus).is_one())
                throw config_error("commutation scalar of " + lc.name + " with " +
                                   gens_[g].name + " incompatible with torsion order");
        }
    }
    finalized_ = true;
}

void PresentedAlgebra::finalize_with_ranks(const std::vector<GenId>& order, bool b_first) {
    if (order.size() != gens_.size()) throw config_error("rank order must list every generator");
    b_first_ = b_first;
    for (size_t r = 0; r < order.size(); ++r) gens_[order[r]].rank = static_cast<int>(r);
    for (const auto& lc : lattice_) {
        if (lc.modulus <= 0) continue;
        for (size_t g = 0; g < gens_.size(); ++g)
            if (!lc.cscale[g].pow(lc.modulus).is_one())
                throw config_error("commutation scalar of " + lc.name + " with " +
                                   gens_[g].name + " incompatible with torsion order");
    }
    finalized_ = true;
}

void PresentedAlgebra::add_rule_from_poly(const NCPolynomial& p, const std::string& rule_name) {
    if (p.is_zero()) throw config_error("cannot install the zero relation");
    auto lead = std::prev(p.terms().end());
    const Monomial& lm = lead->first;
    for (long e : lm.hexp)
        if (e != 0) throw config_error("leading monomial of " + rule_name +
                                       " must be a pure word");
    Scalar inv = lead->second.inverse();
    NCPolynomial rhs(this);
    for (const auto& [m, c] : p.terms()) {
        if (m == lm) continue;
        rhs.add_term(m, -(c * inv));
    }
    add_rule(lm.word, std::move(rhs), rule_name);
}

void PresentedAlgebra::add_rule(std::vector<GenId> lhs, NCPolynomial rhs,
                                const std::string& rule_name) {
    if (!finalized_) throw config_error("finalize() before adding rules");
    if (lhs.empty()) throw config_error("empty rule left-hand side");
    Monomial lm;
    lm.hexp.assign(lattice_.size(), 0);
    lm.word = lhs;
    for (const auto& [m, c] : rhs.terms()) {
        (void)c;
        if (!mono_less(m, lm))
            throw config_error("rule " + rule_name + " is not order-decreasing at monomial " +
                               monomial_to_string(m));
    }
    int ri = static_cast<int>(rules_.size());
    rules_.push_back(RewriteRule{std::move(lhs), std::move(rhs), rule_name});
    rules_by_first_.resize(gens_.size());
    rules_by_first_[rules_.back().lhs[0]].push_back(ri);
}

std::optional<GenId> PresentedAlgebra::gen_by_name(const std::string& n) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == n) return static_cast<GenId>(i);
    return std::nullopt;
}

std::optional<int> PresentedAlgebra::lattice_by_name(const std::string& n) const {
    for (size_t i = 0; i < lattice_.size(); ++i)
        if (lattice_[i].name == n) return static_cast<int>(i);
    return std::nullopt;
}

Monomial PresentedAlgebra::unit_monomial() const {
    Monomial m;
    m.hexp.assign(lattice_.size(), 0);
    return m;
}

NCPolynomial PresentedAlgebra::unit() const {
    NCPolynomial p(this);
    p.add_term(unit_monomial(), one_scalar());
    return p;
}

NCPolynomial PresentedAlgebra::gen_poly(GenId g) const {
    NCPolynomial p(this);
    Monomial m = unit_monomial();
    m.word.push_back(g);
    p.add_term(std::move(m), one_scalar());
    return p;
}

NCPolynomial PresentedAlgebra::lattice_poly(const std::vector<long>& hexp) const {
    NCPolynomial p(this);
    Monomial m = unit_monomial();
    m.hexp = hexp;
    m.hexp.resize(lattice_.size(), 0);
    p.add_term(std::move(m), one_scalar());
    return p;
}

void PresentedAlgebra::normalize_hexp(std::vector<long>& h) const {
    for (size_t i = 0; i < lattice_.size(); ++i) {
        long m = lattice_[i].modulus;
        if (m > 0) h[i] = ((h[i] % m) + m) % m;
    }
}

Scalar PresentedAlgebra::hexp_cross_scalar(const std::vector<long>& h,
                                           const std::vector<GenId>& w) const {
    Scalar s = one_scalar();
    for (size_t i = 0; i < lattice_.size(); ++i) {
        if (h.size() <= i || h[i] == 0) continue;
        for (GenId g : w) {
            const Scalar& cs = lattice_[i].cscale[g];
            if (!cs.is_one()) s *= cs.pow(-h[i]);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// arithmetic
// ---------------------------------------------------------------------------

NCPolynomial PresentedAlgebra::monomial_product(const Monomial& a, const Monomial& b) const {
    Scalar s = hexp_cross_scalar(b.hexp, a.word);
    Monomial m;
    m.hexp.resize(lattice_.size(), 0);
    for (size_t i = 0; i < lattice_.size(); ++i)
        m.hexp[i] = (i < a.hexp.size() ? a.hexp[i] : 0) + (i < b.hexp.size() ? b.hexp[i] : 0);
    m.word = a.word;
    m.word.insert(m.word.end(), b.word.begin(), b.word.end());
    NCPolynomial p(this);
    p.add_term(std::move(m), s);
    return p;
}

NCPolynomial PresentedAlgebra::multiply_raw(const NCPolynomial& a, const NCPolynomial& b) const {
    NCPolynomial out(this);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            NCPolynomial t = monomial_product(ma, mb);
            out += t.scaled(ca * cb);
        }
    return out;
}

uint64_t PresentedAlgebra::step_budget() const {
    if (step_budget_ != 0) return step_budget_;
    if (const char* env = std::getenv("QD_STEP_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1'000'000;
}

std::optional<std::pair<int, size_t>> PresentedAlgebra::find_redex(const Monomial& m) const {
    for (size_t pos = 0; pos < m.word.size(); ++pos) {
        if (m.word[pos] >= rules_by_first_.size()) continue;
        for (int ri : rules_by_first_[m.word[pos]]) {
            const auto& lhs = rules_[ri].lhs;
            if (pos + lhs.size() > m.word.size()) continue;
            if (std::equal(lhs.begin(), lhs.end(), m.word.begin() + pos))
                return std::make_pair(ri, pos);
        }
    }
    return std::nullopt;
}

bool PresentedAlgebra::is_normal(const Monomial& m) const { return !find_redex(m).has_value(); }

void PresentedAlgebra::apply_rule(const Monomial& m, const Scalar& coeff, int rule_idx,
                                  size_t pos, NCPolynomial& out) const {
    const RewriteRule& rule = rules_[rule_idx];
    std::vector<GenId> prefix(m.word.begin(), m.word.begin() + pos);
    std::vector<GenId> suffix(m.word.begin() + pos + rule.lhs.size(), m.word.end());
    for (const auto& [mr, cr] : rule.rhs.terms()) {
        Scalar s = coeff * cr * hexp_cross_scalar(mr.hexp, prefix);
        Monomial nm;
        nm.hexp.resize(lattice_.size(), 0);
        for (size_t i = 0; i < lattice_.size(); ++i)
            nm.hexp[i] = (i < m.hexp.size() ? m.hexp[i] : 0) +
                         (i < mr.hexp.size() ? mr.hexp[i] : 0);
        nm.word = prefix;
        nm.word.insert(nm.word.end(), mr.word.begin(), mr.word.end());
        nm.word.insert(nm.word.end(), suffix.begin(), suffix.end());
        out.add_term(std::move(nm), s);
    }
}

NCPolynomial PresentedAlgebra::normal_form(const NCPolynomial& p) const {
    NCPolynomial result(this);
    std::map<Monomial, Scalar, MonoLess> work{MonoLess{this}};
    for (const auto& [m, c] : p.terms()) work.emplace(m, c);
    uint64_t steps = 0;
    const uint64_t budget = step_budget();
    while (!work.empty()) {
        auto it = std::prev(work.end());
        Monomial m = it->first;
        Scalar c = it->second;
        work.erase(it);
        if (c.is_zero()) continue;
        auto redex = find_redex(m);
        if (!redex) {
            result.add_term(m, c);
            continue;
        }
        if (++steps > budget)
            throw resource_error("rewriting step budget exceeded in " + name);
        NCPolynomial repl(this);
        apply_rule(m, c, redex->first, redex->second, repl);
        for (const auto& [m2, c2] : repl.terms()) {
            auto [wit, ins] = work.try_emplace(m2, c2);
            if (!ins) {
                wit->second += c2;
                if (wit->second.is_zero()) work.erase(wit);
            }
        }
    }
    return result;
}

NCPolynomial PresentedAlgebra::multiply(const NCPolynomial& a, const NCPolynomial& b) const {
    return normal_form(multiply_raw(a, b));
}

NCPolynomial PresentedAlgebra::commutator(const NCPolynomial& a, const NCPolynomial& b) const {
    NCPolynomial d = multiply_raw(a, b);
    d -= multiply_raw(b, a);
    return normal_form(d);
}

NCPolynomial PresentedAlgebra::power(const NCPolynomial& p, long e) const {
    if (e < 0) throw input_error("negative power of a non-lattice element");
    NCPolynomial r = unit();
    for (long i = 0; i < e; ++i) r = multiply_raw(r, p);
    return r;
}

Scalar PresentedAlgebra::counit(const NCPolynomial& p) const {
    Scalar s = zero_scalar();
    for (const auto& [m, c] : p.terms()) {
        Scalar t = c;
        for (GenId g : m.word) {
            if (gens_[g].counit.is_zero()) {
                t = zero_scalar();
                break;
            }
            t *= gens_[g].counit;
        }
        s += t;
    }
    return s;
}

// ---------------------------------------------------------------------------
// confluence
// ---------------------------------------------------------------------------

ConfluenceReport PresentedAlgebra::check_local_confluence(int maxdeg) const {
    ConfluenceReport rep;
    auto check = [&](int ri, int rj, const std::vector<GenId>& word, size_t pos_j) {
        int deg = 0;
        for (GenId g : word) deg += gens_[g].w1;
        if (deg > maxdeg) return;
        rep.ambiguities++;
        Monomial m;
        m.hexp.assign(lattice_.size(), 0);
        m.word = word;
        NCPolynomial a(this), b(this);
        apply_rule(m, one_scalar(), ri, 0, a);
        apply_rule(m, one_scalar(), rj, pos_j, b);
        a = normal_form(a);
        b = normal_form(b);
        if (a != b) {
            ConfluenceEntry e;
            e.rule_a = rules_[ri].name;
            e.rule_b = rules_[rj].name;
            e.word = word;
            e.resolved = false;
            Monomial w;
            w.hexp.assign(lattice_.size(), 0);
            w.word = word;
            e.detail = monomial_to_string(w) + " -> " + to_string(a) + "  vs  " + to_string(b);
            rep.unresolved.push_back(std::move(e));
        }
    };
    for (size_t i = 0; i < rules_.size(); ++i) {
        const auto& li = rules_[i].lhs;
        for (size_t j = 0; j < rules_.size(); ++j) {
            const auto& lj = rules_[j].lhs;
            // proper overlaps: a nonempty proper suffix of li equals a prefix of lj
            for (size_t o = 1; o < std::min(li.size(), lj.size()); ++o) {
                if (!std::equal(li.end() - o, li.end(), lj.begin())) continue;
                std::vector<GenId> word = li;
                word.insert(word.end(), lj.begin() + o, lj.end());
                check((int)i, (int)j, word, li.size() - o);
            }
            // inclusions: lj a subword of li
            if (lj.size() <= li.size()) {
                for (size_t p = 0; p + lj.size() <= li.size(); ++p) {
                    if (i == j && p == 0 && lj.size() == li.size()) continue;
                    if (std::equal(lj.begin(), lj.end(), li.begin() + p))
                        check((int)i, (int)j, li, p);
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum Kind { Num, Ident, Op, End } kind;
    std::string text;   // ident or op
    Rational value;     // number
    size_t pos;
};

struct Lexer {
    const std::string& s;
    size_t i = 0;
    explicit Lexer(const std::string& str) : s(str) {}

    Token next() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size()) return {Token::End, "", 0, i};
        size_t start = i;
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            Int num(s.substr(i, j - i));
            Int den(1);
            if (j < s.size() && s[j] == '/' && j + 1 < s.size() &&
                std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
                size_t k = j + 1;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                den = Int(s.substr(j + 1, k - j - 1));
                j = k;
            }
            i = j;
            if (den == 0) throw input_error("zero denominator in literal at position " +
                                            std::to_string(start));
            return {Token::Num, "", Rational(num, den), start};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            std::string id = s.substr(i, j - i);
            i = j;
            return {Token::Ident, id, 0, start};
        }
        if (std::string("^*+-()").find(c) != std::string::npos) {
            ++i;
            return {Token::Op, std::string(1, c), 0, start};
        }
        throw input_error("unexpected character '" + std::string(1, c) + "' at position " +
                          std::to_string(i));
    }
};

struct Parser {
    const PresentedAlgebra& alg;
    Lexer lex;
    Token tok;

    Parser(const PresentedAlgebra& a, const std::string& text) : alg(a), lex(text) {
        tok = lex.next();
    }
    void advance() { tok = lex.next(); }
    bool is_op(const char* o) const { return tok.kind == Token::Op && tok.text == o; }

    long parse_exponent() {
        bool neg = false;
        if (is_op("-")) {
            neg = true;
            advance();
        }
        if (tok.kind != Token::Num || boost::multiprecision::denominator(tok.value) != 1)
            throw input_error("integer exponent expected at position " +
                              std::to_string(tok.pos));
        long e = static_cast<long>(boost::multiprecision::numerator(tok.value));
        advance();
        return neg ? -e : e;
    }

    NCPolynomial parse_primary() {
        if (tok.kind == Token::Num) {
            Scalar c = Scalar::from_rational(tok.value, alg.field);
            advance();
            return alg.unit().scaled(c);
        }
        if (tok.kind == Token::Ident) {
            std::string id = tok.text;
            size_t pos = tok.pos;
            advance();
            if (id == "q" && alg.field.kind == FieldKind::RationalFunctionsQ)
                return alg.unit().scaled(Scalar::q_power(1));
            if (auto g = alg.gen_by_name(id)) return alg.gen_poly(*g);
            if (auto lc = alg.lattice_by_name(id)) {
                std::vector<long> h(alg.lattice().size(), 0);
                h[*lc] = 1;
                return alg.lattice_poly(h);
            }
            throw input_error("unknown identifier '" + id + "' at position " +
                              std::to_string(pos));
        }
        if (is_op("(")) {
            advance();
            NCPolynomial e = parse_expr();
            if (!is_op(")"))
                throw input_error("expected ')' at position " + std::to_string(tok.pos));
            advance();
            return e;
        }
        throw input_error("unexpected token at position " + std::to_string(tok.pos));
    }

    NCPolynomial parse_factor() {
        if (is_op("-")) {
            advance();
            return -parse_factor();
        }
        NCPolynomial base = parse_primary();
        if (is_op("^")) {
            size_t pos = tok.pos;
            advance();
            long e = parse_exponent();
            return power_of(base, e, pos);
        }
        return base;
    }

    NCPolynomial power_of(const NCPolynomial& base, long e, size_t pos) {
        if (e >= 0) {
            // scalar shortcut keeps q^large cheap
            if (base.term_count() == 1 && base.terms().begin()->first.is_unit()) {
                Scalar c = base.terms().begin()->second.pow(e);
                return alg.unit().scaled(c);
            }
            NCPolynomial r = alg.unit();
            for (long k = 0; k < e; ++k) r = alg.multiply_raw(r, base);
            return r;
        }
        // negative exponents: scalars and lattice monomials only
        if (base.term_count() == 1) {
            const auto& [m, c] = *base.terms().begin();
            if (m.word.empty()) {
                std::vector<long> h(m.hexp);
                for (long& x : h) x *= e;
                return alg.lattice_poly(h).scaled(c.pow(e));
            }
        }
        throw input_error("negative power applies only to lattice generators and scalars"
                          " (position " + std::to_string(pos) + ")");
    }

    NCPolynomial parse_term() {
        NCPolynomial p = parse_factor();
        while (is_op("*")) {
            advance();
            p = alg.multiply_raw(p, parse_factor());
        }
        return p;
    }

    NCPolynomial parse_expr() {
        NCPolynomial p = parse_term();
        while (is_op("+") || is_op("-")) {
            bool plus = tok.text == "+";
            advance();
            NCPolynomial t = parse_term();
            if (plus)
                p += t;
            else
                p -= t;
        }
        return p;
    }
};

} // namespace

NCPolynomial PresentedAlgebra::parse(const std::string& text) const {
    Parser p(*this, text);
    NCPolynomial e = p.parse_expr();
    if (p.tok.kind != Token::End)
        throw input_error("trailing input at position " + std::to_string(p.tok.pos));
    return e;
}

// ---------------------------------------------------------------------------
// printing
// ---------------------------------------------------------------------------

std::string PresentedAlgebra::monomial_to_string(const Monomial& m) const {
    std::vector<std::string> parts;
    for (size_t i = 0; i < lattice_.size(); ++i) {
        long e = i < m.hexp.size() ? m.hexp[i] : 0;
        if (e == 0) continue;
        if (e == 1)
            parts.push_back(lattice_[i].name);
        else
            parts.push_back(lattice_[i].name + "^" + std::to_string(e));
    }
    for (GenId g : m.word) parts.push_back(gens_[g].name);
    if (parts.empty()) return "1";
    std::string s = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
    return s;
}

namespace {

bool scalar_print_negative(const Scalar& c) {
    switch (c.field().kind) {
        case FieldKind::Rationals: return c.rat() < 0;
        case FieldKind::RationalFunctionsQ:
            // fractions fold their sign into the denominator when printed
            return c.content() < 0 && c.den().size() == 1 && c.den()[0] == 1;
        case FieldKind::Cyclotomic: return false;
    }
    return false;
}

std::string scalar_wrapped(const Scalar& c) {
    std::string s = c.to_string();
    if (s.find(' ') != std::string::npos || s.find('/') != std::string::npos ||
        s.find('*') != std::string::npos)
        return "(" + s + ")";
    return s;
}

} // namespace

std::string PresentedAlgebra::to_string(const NCPolynomial& p) const {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    // descending monomial order
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Monomial& m = it->first;
        Scalar c = it->second;
        bool neg = scalar_print_negative(c);
        if (neg) c = -c;
        std::string piece;
        std::string ms = monomial_to_string(m);
        if (ms == "1")
            piece = scalar_wrapped(c);
        else if (c.is_one())
            piece = ms;
        else
            piece = scalar_wrapped(c) + "*" + ms;
        if (first) {
            out += (neg ? "-" : "") + piece;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + piece;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// normal monomial enumeration
// ---------------------------------------------------------------------------

std::vector<Monomial> PresentedAlgebra::normal_monomials(
    int maxdeg, const std::vector<std::vector<long>>& hchoices) const {
    std::vector<std::vector<GenId>> words;
    std::vector<GenId> cur;
    // DFS; a word stays normal iff no rule lhs matches a suffix ending at the
    // last letter.
    auto suffix_redex = [&](const std::vector<GenId>& w) {
        for (const auto& r : rules_) {
            if (r.lhs.size() > w.size()) continue;
            if (std::equal(r.lhs.begin(), r.lhs.end(), w.end() - r.lhs.size())) return true;
        }
        return false;
    };
    std::function<void(int)> dfs = [&](int deg) {
        words.push_back(cur);
        for (GenId g = 0; g < gens_.size(); ++g) {
            int nd = deg + gens_[g].w1;
            if (nd > maxdeg) continue;
            cur.push_back(g);
            if (!suffix_redex(cur)) dfs(nd);
            cur.pop_back();
        }
    };
    dfs(0);

    std::vector<std::vector<long>> hch = hchoices;
    hch.resize(lattice_.size());
    for (auto& v : hch)
        if (v.empty()) v = {0};
    std::vector<Monomial> out;
    std::vector<long> h(lattice_.size(), 0);
    std::function<void(size_t)> emit = [&](size_t i) {
        if (i == lattice_.size()) {
            for (const auto& w : words) {
                Monomial m;
                m.hexp = h;
                normalize_hexp(m.hexp);
                m.word = w;
                out.push_back(std::move(m));
            }
            return;
        }
        for (long e : hch[i]) {
            h[i] = e;
            emit(i + 1);
        }
        h[i] = 0;
    };
    emit(0);
    return out;
}

} // namespace qd
