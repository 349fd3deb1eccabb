#include "qd/pairing.hpp"

#include <algorithm>
#include <functional>

namespace qd {

// ---------------------------------------------------------------------------
// CartanDatum
// ---------------------------------------------------------------------------

CartanDatum CartanDatum::sl2() { return from_matrix({{2}}); }

CartanDatum CartanDatum::sl3() { return from_matrix({{2, -1}, {-1, 2}}); }

CartanDatum CartanDatum::from_matrix(std::vector<std::vector<int>> m) {
    CartanDatum d;
    d.rank = static_cast<int>(m.size());
    d.sym = std::move(m);
    d.validate();
    return d;
}

void CartanDatum::validate() const {
    if (rank < 1 || (int)sym.size() != rank) throw config_error("bad Cartan datum size");
    for (int i = 0; i < rank; ++i) {
        if ((int)sym[i].size() != rank) throw config_error("Cartan datum not square");
        if (sym[i][i] <= 0 || sym[i][i] % 2 != 0)
            throw config_error("i.i must be even and positive");
    }
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            if (sym[i][j] != sym[j][i]) throw config_error("Cartan datum not symmetric");
            if ((2 * sym[i][j]) % sym[i][i] != 0)
                throw config_error("2(i.j)/(i.i) must be an integer");
        }
}

// ---------------------------------------------------------------------------
// GradedPair
// ---------------------------------------------------------------------------

GradedPair GradedPair::from_cartan(const CartanDatum& d) {
    d.validate();
    GradedPair p;
    p.rank_ = d.rank;
    p.datum_ = d;
    p.field_ = FieldSpec::rational_functions_q();
    p.bil_ = d.sym;
    p.kappa_.reserve(d.rank);
    for (int i = 0; i < d.rank; ++i) {
        Scalar qi = d.qi(i);
        p.kappa_.push_back((qi.inverse() - qi).inverse());
    }
    return p;
}

GradedPair GradedPair::trivial(int rank) {
    GradedPair p;
    p.rank_ = rank;
    p.datum_.rank = rank;
    p.datum_.sym.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) p.datum_.sym[i][i] = 2; // placeholder, not used
    p.field_ = FieldSpec::rational_functions_q();
    p.bil_.assign(rank, std::vector<int>(rank, 0));
    p.kappa_.assign(rank, Scalar::one(p.field_));
    return p;
}

Scalar GradedPair::crossing(int i, int j) const { return Scalar::q_power(-bil_[i][j]); }

Scalar GradedPair::pair(const Word& cword, const Word& bword) const {
    if (cword.size() != bword.size()) return Scalar::zero(field_);
    if (cword.empty()) return Scalar::one(field_);
    // peel the first C letter x: ev(x w (x) u) =
    //   sum_p [u_p = x] kappa_x q^{-sum_{r>p} u_p.u_r} ev(w (x) u \ p)
    int x = cword.front();
    Word w(cword.begin() + 1, cword.end());
    Scalar acc = Scalar::zero(field_);
    for (size_t p = 0; p < bword.size(); ++p) {
        if (bword[p] != x) continue;
        long e = 0;
        for (size_t r = p + 1; r < bword.size(); ++r) e += bil_[bword[p]][bword[r]];
        Word rest;
        rest.reserve(bword.size() - 1);
        for (size_t r = 0; r < bword.size(); ++r)
            if (r != p) rest.push_back(bword[r]);
        acc += Scalar::q_power(-e) * kappa_[x] * pair(w, rest);
    }
    return acc;
}

Scalar GradedPair::pair(const WordPoly& c, const WordPoly& b) const {
    Scalar acc = Scalar::zero(field_);
    for (const auto& [cw, cc] : c.terms)
        for (const auto& [bw, bc] : b.terms) acc += cc * bc * pair(cw, bw);
    return acc;
}

std::vector<int> GradedPair::degree_of(const Word& w) const {
    std::vector<int> d(rank_, 0);
    for (int l : w) d[l]++;
    return d;
}

std::vector<Word> GradedPair::words_of_degree(const std::vector<int>& deg) const {
    std::vector<Word> out;
    Word cur;
    std::vector<int> rem = deg;
    int total = 0;
    for (int d : deg) {
        if (d < 0) return out;
        total += d;
    }
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int l = 0; l < rank_; ++l) {
            if (rem[l] == 0) continue;
            rem[l]--;
            cur.push_back(l);
            rec(left - 1);
            cur.pop_back();
            rem[l]++;
        }
    };
    rec(total);
    return out;
}

std::vector<std::vector<int>> GradedPair::degrees_up_to(int total) const {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(rank_, 0);
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == rank_) {
            if (used > 0) out.push_back(cur);
            return;
        }
        for (int v = 0; used + v <= total; ++v) {
            cur[pos] = v;
            rec(pos + 1, used + v);
        }
        cur[pos] = 0;
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int sa = 0, sb = 0;
        for (int x : a) sa += x;
        for (int x : b) sb += x;
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

Matrix GradedPair::gram_matrix(const std::vector<int>& deg) const {
    std::vector<Word> words = words_of_degree(deg);
    Matrix g(static_cast<int>(words.size()), static_cast<int>(words.size()), field_);
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = 0; j < words.size(); ++j)
            g.at((int)i, (int)j) = pair(words[i], words[j]);
    return g;
}

std::vector<WordPoly> GradedPair::radical_basis(const std::vector<int>& deg) const {
    std::vector<Word> words = words_of_degree(deg);
    if (words.empty()) return {};
    Matrix g = gram_matrix(deg);
    auto ker = g.kernel();
    std::vector<WordPoly> out;
    for (auto& v : ker) {
        // normalize: first nonzero coefficient 1
        Scalar lead = Scalar::zero(field_);
        for (const auto& c : v)
            if (!c.is_zero()) {
                lead = c;
                break;
            }
        WordPoly p;
        for (size_t j = 0; j < words.size(); ++j)
            if (!v[j].is_zero()) p.terms.emplace_back(words[j], v[j] / lead);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<GradedPair::CoevTerm> GradedPair::truncated_coev(int maxdeg) const {
    std::vector<CoevTerm> out;
    out.push_back({{}, {}, Scalar::one(field_)}); // 1 (x) 1
    for (const auto& deg : degrees_up_to(maxdeg)) {
        std::vector<Word> words = words_of_degree(deg);
        if (words.empty()) continue;
        Matrix g = gram_matrix(deg);
        auto inv = g.inverse();
        if (!inv) {
            std::string ds;
            for (int d : deg) ds += (ds.empty() ? "" : ",") + std::to_string(d);
            throw degenerate_pairing_error("singular Gram matrix at degree (" + ds + ")");
        }
        // coev_deg = sum_j b_j (x) sum_i (G^{-1})_{ji} c_i
        for (size_t j = 0; j < words.size(); ++j)
            for (size_t i = 0; i < words.size(); ++i) {
                const Scalar& c = inv->at((int)j, (int)i);
                if (!c.is_zero()) out.push_back({words[j], words[i], c});
            }
    }
    return out;
}

std::vector<std::tuple<Word, Word, Scalar>> GradedPair::coproduct(const Word& w) const {
    std::vector<std::tuple<Word, Word, Scalar>> out;
    size_t n = w.size();
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        Word left, right;
        long e = 0;
        for (size_t b = 0; b < n; ++b) {
            if (mask & (uint64_t(1) << b)) {
                left.push_back(w[b]);
            } else {
                right.push_back(w[b]);
                // this letter goes right and crosses every later left-letter
                for (size_t bb = b + 1; bb < n; ++bb)
                    if (mask & (uint64_t(1) << bb)) e += bil_[w[b]][w[bb]];
            }
        }
        out.emplace_back(std::move(left), std::move(right), Scalar::q_power(-e));
    }
    return out;
}

WordPoly GradedPair::antipode(const Word& w) const {
    if (w.empty()) {
        WordPoly p;
        p.terms.emplace_back(Word{}, Scalar::one(field_));
        return p;
    }
    auto it = antipode_cache_.find(w);
    if (it != antipode_cache_.end()) return it->second;
    // sum over splits: S(w_left) * w_right with braiding factor; the full-left
    // split isolates S(w)
    std::map<Word, Scalar> acc;
    for (const auto& [left, right, c] : coproduct(w)) {
        if (right.empty()) continue; // the S(w) * 1 term
        WordPoly sl = antipode(left);
        for (const auto& [lw, lc] : sl.terms) {
            Word concat = lw;
            concat.insert(concat.end(), right.begin(), right.end());
            Scalar v = c * lc;
            auto [a, ins] = acc.try_emplace(concat, v);
            if (!ins) {
                a->second += v;
                if (a->second.is_zero()) acc.erase(a);
            }
        }
    }
    WordPoly p;
    for (auto& [word, c] : acc) {
        Scalar nc = -c;
        if (!nc.is_zero()) p.terms.emplace_back(word, nc);
    }
    antipode_cache_.emplace(w, p);
    return p;
}

WordPoly GradedPair::antipode_inv(const Word& w) const {
    // invert the degreewise matrix of S on the word basis of w's degree
    std::vector<Word> words = words_of_degree(degree_of(w));
    int n = static_cast<int>(words.size());
    Matrix s(n, n, field_);
    for (int j = 0; j < n; ++j) {
        WordPoly sj = antipode(words[j]);
        for (const auto& [sw, c] : sj.terms) {
            auto pos = std::find(words.begin(), words.end(), sw);
            s.at((int)(pos - words.begin()), j) = c;
        }
    }
    auto inv = s.inverse();
    if (!inv) throw config_error("braided antipode not invertible at this degree");
    auto self = std::find(words.begin(), words.end(), w);
    int col = static_cast<int>(self - words.begin());
    WordPoly p;
    for (int i = 0; i < n; ++i)
        if (!inv->at(i, col).is_zero()) p.terms.emplace_back(words[i], inv->at(i, col));
    return p;
}

} // namespace qd
