#include "qcartan/uq.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qc {

namespace {

IVec zero_ivec(int n) { return IVec(static_cast<std::size_t>(n), 0); }

Word erase_at(const Word& w, std::size_t p) {
    Word r = w;
    r.erase(p, 1);
    return r;
}

Element from_map(std::unordered_map<Term, QRat, TermHash>& m) {
    Element r;
    r.terms.reserve(m.size());
    for (auto& [t, c] : m)
        if (!c.is_zero()) r.terms.emplace_back(t, std::move(c));
    std::sort(r.terms.begin(), r.terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    m.clear();
    return r;
}

}  // namespace

// ---------------------------------------------------------------- Element

QRat Element::coeff(const Term& t) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), t,
                               [](const auto& x, const Term& key) { return x.first < key; });
    if (it != terms.end() && it->first == t) return it->second;
    return QRat(0);
}

Element operator+(const Element& a, const Element& b) {
    Element r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
            r.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
            r.terms.push_back(b.terms[j++]);
        } else {
            QRat s = a.terms[i].second + b.terms[j].second;
            if (!s.is_zero()) r.terms.emplace_back(a.terms[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return r;
}

Element operator-(const Element& a) {
    Element r = a;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const QRat& c, const Element& a) {
    Element r;
    if (c.is_zero()) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& [t, x] : a.terms) r.terms.emplace_back(t, c * x);
    return r;
}

void Accumulator::add(const Term& t, const QRat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m_.try_emplace(t, c);
    if (!fresh) it->second += c;
}

void Accumulator::add(Term&& t, const QRat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m_.try_emplace(std::move(t), c);
    if (!fresh) it->second += c;
}

void Accumulator::add(const Element& a, const QRat& c) {
    if (c.is_zero()) return;
    for (const auto& [t, x] : a.terms) add(t, c.is_one() ? x : c * x);
}

Element Accumulator::take() { return from_map(m_); }

int TermIndex::id(const Term& t) {
    auto [it, fresh] = ids_.try_emplace(t, static_cast<int>(terms_.size()));
    if (fresh) terms_.push_back(t);
    return it->second;
}

int TermIndex::find(const Term& t) const {
    auto it = ids_.find(t);
    return it == ids_.end() ? -1 : it->second;
}

SparseVec TermIndex::vec(const Element& a) {
    SparseVec v;
    v.reserve(a.terms.size());
    for (const auto& [t, c] : a.terms) v.emplace_back(id(t), c);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
}

Element TermIndex::element(const SparseVec& v) const {
    Accumulator acc;
    for (const auto& [i, c] : v) acc.add(term(i), c);
    return acc.take();
}

// ---------------------------------------------------------------- weight spaces

Uq::Uq(RootData rd) : rd_(std::move(rd)) {}

IVec Uq::weight(const Word& w) const {
    IVec r = zero_ivec(rank());
    for (char c : w) ++r[static_cast<std::size_t>(c)];
    return r;
}

long Uq::q_exp(const IVec& k_num, const Word& w) const {
    long s = 0;
    for (char c : w) s += rd_.inner_simple(c, k_num);
    return s;
}

namespace {

// q^{num / wden} as a power of v.
QRat q_frac(long num, int wden) {
    long v = num * session_N();
    if (v % wden != 0)
        throw std::domain_error("K exponent requires a larger session N");
    return QRat::v_pow(static_cast<int>(v / wden));
}

}  // namespace

const Uq::WSpace& Uq::space_locked(const IVec& beta) const {
    auto it = spaces_.find(beta);
    if (it != spaces_.end()) return it->second;
    for (int x : beta)
        if (x < 0) throw std::invalid_argument("weight space outside Q^+");
    WSpace ws;
    if (is_zero_vec(beta)) {
        ws.basis.emplace_back();
        ws.cand.emplace(Word(), SparseVec{{0, QRat(1)}});
    } else {
        std::vector<Word> cands;
        for (int i = 0; i < rank(); ++i) {
            if (beta[static_cast<std::size_t>(i)] == 0) continue;
            IVec sub = beta;
            --sub[static_cast<std::size_t>(i)];
            const WSpace& s = space_locked(sub);
            for (const auto& b : s.basis) cands.push_back(b + static_cast<char>(i));
        }
        std::sort(cands.begin(), cands.end());
        Echelon ech(true);
        for (const auto& w : cands) {
            SparseVec d = derivations_locked(w, beta);
            SparseVec combo;
            SparseVec r = ech.reduce(d, &combo);
            if (!r.empty()) {
                int idx = static_cast<int>(ws.basis.size());
                ech.insert(d, idx);
                ws.basis.push_back(w);
                ws.cand.emplace(w, SparseVec{{idx, QRat(1)}});
            } else {
                ws.cand.emplace(w, std::move(combo));
            }
        }
    }
    return spaces_.emplace(beta, std::move(ws)).first->second;
}

// The vector (r_i(w))_i of twisted derivations, r_i(xy) = x r_i(y) + q^{(a_i, wt y)} r_i(x) y,
// in basis coordinates of the lower weight spaces. Injective on each weight space.
SparseVec Uq::derivations_locked(const Word& w, const IVec& beta) const {
    std::vector<int> offset(static_cast<std::size_t>(rank()), -1);
    int total = 0;
    for (int i = 0; i < rank(); ++i) {
        if (beta[static_cast<std::size_t>(i)] == 0) continue;
        IVec sub = beta;
        --sub[static_cast<std::size_t>(i)];
        offset[static_cast<std::size_t>(i)] = total;
        total += static_cast<int>(space_locked(sub).basis.size());
    }
    SparseVec out;
    for (std::size_t p = 0; p < w.size(); ++p) {
        int i = w[p];
        long ex = 0;
        for (std::size_t t = p + 1; t < w.size(); ++t) ex += rd_.sym(i, w[t]);
        const SparseVec& cu = reduce_locked(erase_at(w, p));
        SparseVec shifted;
        shifted.reserve(cu.size());
        for (const auto& [k, c] : cu) shifted.emplace_back(k + offset[static_cast<std::size_t>(i)], c);
        out = sv_axpy(out, QRat::q_pow(ex), shifted);
    }
    return out;
}

const SparseVec& Uq::reduce_locked(const Word& w) const {
    auto it = reduce_memo_.find(w);
    if (it != reduce_memo_.end()) return it->second;
    IVec beta = weight(w);
    const WSpace& ws = space_locked(beta);
    auto c = ws.cand.find(w);
    if (c != ws.cand.end()) return reduce_memo_.emplace(w, c->second).first->second;
    Word u = w.substr(0, w.size() - 1);
    char last = w.back();
    const SparseVec& cu = reduce_locked(u);
    const WSpace& su = space_locked(weight(u));
    SparseVec r;
    for (const auto& [idx, coef] : cu)
        r = sv_axpy(r, coef, ws.cand.at(su.basis[static_cast<std::size_t>(idx)] + last));
    return reduce_memo_.emplace(w, std::move(r)).first->second;
}

std::vector<Word> Uq::basis(const IVec& beta) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return space_locked(beta).basis;
}

SparseVec Uq::reduce(const Word& w) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return reduce_locked(w);
}

Element Uq::word_element(Sign s, const Word& w, const QRat& c) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const SparseVec& r = reduce_locked(w);
    const WSpace& ws = space_locked(weight(w));
    Accumulator acc;
    for (const auto& [idx, x] : r) {
        const Word& b = ws.basis[static_cast<std::size_t>(idx)];
        Term t = s == Sign::Minus ? Term{b, zero_ivec(rank()), Word()} : Term{Word(), zero_ivec(rank()), b};
        acc.add(std::move(t), c * x);
    }
    return acc.take();
}

std::vector<std::pair<Word, QRat>> Uq::serre_relation(int i, int j) const {
    int r = 1 - rd_.cartan()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    int di = rd_.d()[static_cast<std::size_t>(i)];
    std::vector<std::pair<Word, QRat>> out;
    for (int s = 0; s <= r; ++s) {
        Word w = Word(static_cast<std::size_t>(r - s), static_cast<char>(i)) + static_cast<char>(j) +
                 Word(static_cast<std::size_t>(s), static_cast<char>(i));
        QRat c = gauss_binomial(r, s, di);
        out.emplace_back(w, s % 2 ? -c : c);
    }
    return out;
}

// ---------------------------------------------------------------- construction

Element Uq::scalar(const QRat& c) const {
    Element r;
    if (!c.is_zero()) r.terms.emplace_back(Term{Word(), zero_ivec(rank()), Word()}, c);
    return r;
}

Element Uq::E(int i) const { return monomial(Word(), zero_ivec(rank()), Word(1, static_cast<char>(i))); }
Element Uq::F(int i) const { return monomial(Word(1, static_cast<char>(i)), zero_ivec(rank()), Word()); }

IVec Uq::k_num(const Weight& mu) const {
    if (static_cast<int>(mu.size()) != rank()) throw std::invalid_argument("K exponent has wrong length");
    IVec r(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        mpq_class x = mu[i] * wden();
        if (x.get_den() != 1) throw std::invalid_argument("K exponent outside the weight lattice");
        r[i] = static_cast<int>(x.get_num().get_si());
    }
    return r;
}

IVec Uq::k_num_root(const IVec& mu) const { return scaled(mu, wden()); }

Weight Uq::k_weight(const IVec& k) const {
    Weight w(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) w[i] = mpq_class(k[i], wden());
    for (auto& x : w) x.canonicalize();
    return w;
}

Element Uq::K(const Weight& mu) const { return monomial(Word(), k_num(mu), Word()); }
Element Uq::K_root(const IVec& mu) const { return monomial(Word(), k_num_root(mu), Word()); }
Element Uq::Ki(int i, int power) const { return K_root(scaled(rd_.simple(i), power)); }

Element Uq::monomial(const Word& f, const IVec& k, const Word& e, const QRat& c) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const SparseVec& rf = reduce_locked(f);
    const SparseVec& re = reduce_locked(e);
    const auto& bf = space_locked(weight(f)).basis;
    const auto& be = space_locked(weight(e)).basis;
    Accumulator acc;
    for (const auto& [i, x] : rf)
        for (const auto& [j, y] : re)
            acc.add(Term{bf[static_cast<std::size_t>(i)], k, be[static_cast<std::size_t>(j)]}, c * x * y);
    return acc.take();
}

// ---------------------------------------------------------------- products

// E_b F_c as a combination of F_x K_k E_y with free words x, y.
const std::vector<Uq::RawTerm>& Uq::exchange_locked(const Word& b, const Word& c) const {
    std::string key = b;
    key += '\x7f';
    key += c;
    auto it = exchange_memo_.find(key);
    if (it != exchange_memo_.end()) return it->second;
    std::vector<RawTerm> out;
    const IVec z = zero_ivec(rank());
    if (b.empty() || c.empty()) {
        out.push_back({c, z, b, QRat(1)});
        return exchange_memo_.emplace(key, std::move(out)).first->second;
    }
    const int e = b.back();
    const Word b1 = b.substr(0, b.size() - 1);
    const int de = rd_.d()[static_cast<std::size_t>(e)];
    const QRat inv = (QRat::q_pow(de) - QRat::q_pow(-de)).inverse();
    const IVec ke = k_num_root(rd_.simple(e));

    // E_e F_c = F_c E_e + sum over letters of c equal to e.
    std::vector<RawTerm> step;
    step.push_back({c, z, Word(1, static_cast<char>(e)), QRat(1)});
    for (std::size_t p = 0; p < c.size(); ++p) {
        if (c[p] != e) continue;
        long ex = 0;
        for (std::size_t t = p + 1; t < c.size(); ++t) ex += rd_.sym(e, c[t]);
        Word x = erase_at(c, p);
        step.push_back({x, ke, Word(), QRat::q_pow(-ex) * inv});
        step.push_back({x, -ke, Word(), -(QRat::q_pow(ex) * inv)});
    }

    std::unordered_map<Term, QRat, TermHash> acc;
    for (const auto& st : step) {
        const auto& ex = exchange_locked(b1, st.f);
        for (const auto& zt : ex) {
            // E_w K_k = q^{-(k, wt w)} K_k E_w
            QRat coef = zt.c * st.c * q_frac(-q_exp(st.k, zt.e), wden());
            Term t{zt.f, zt.k + st.k, zt.e + st.e};
            auto [pos, fresh] = acc.try_emplace(std::move(t), coef);
            if (!fresh) pos->second += coef;
        }
    }
    for (auto& [t, x] : acc)
        if (!x.is_zero()) out.push_back({t.f, t.k, t.e, x});
    return exchange_memo_.emplace(key, std::move(out)).first->second;
}

Element Uq::multiply(const Element& a, const Element& b) const {
    if (a.is_zero() || b.is_zero()) return Element();
    std::lock_guard<std::recursive_mutex> lock(mu_);
    std::unordered_map<Term, QRat, TermHash> raw;
    for (const auto& [t1, c1] : a.terms) {
        for (const auto& [t2, c2] : b.terms) {
            const auto& ex = exchange_locked(t1.e, t2.f);
            QRat c12 = c1 * c2;
            for (const auto& x : ex) {
                long num = -q_exp(t1.k, x.f) - q_exp(t2.k, x.e);
                QRat coef = c12 * x.c;
                if (num != 0) coef *= q_frac(num, wden());
                Term t{t1.f + x.f, t1.k + x.k + t2.k, x.e + t2.e};
                auto [pos, fresh] = raw.try_emplace(std::move(t), coef);
                if (!fresh) pos->second += coef;
            }
        }
    }
    Accumulator acc;
    for (const auto& [t, c] : raw) {
        if (c.is_zero()) continue;
        const SparseVec& rf = reduce_locked(t.f);
        const SparseVec& re = reduce_locked(t.e);
        const auto& bf = space_locked(weight(t.f)).basis;
        const auto& be = space_locked(weight(t.e)).basis;
        for (const auto& [i, x] : rf) {
            QRat cx = c * x;
            for (const auto& [j, y] : re)
                acc.add(Term{bf[static_cast<std::size_t>(i)], t.k, be[static_cast<std::size_t>(j)]}, cx * y);
        }
    }
    return acc.take();
}

Element Uq::commutator(const Element& a, const Element& b, const QRat& scale) const {
    return multiply(a, b) - scale * multiply(b, a);
}

Element Uq::power(const Element& a, int m) const {
    Element r = one();
    for (int k = 0; k < m; ++k) r = multiply(r, a);
    return r;
}

// ---------------------------------------------------------------- adjoint action

Element Uq::ad_E(int i, const Element& a) const {
    return multiply(E(i), a) - multiply(multiply(Ki(i, 1), a), multiply(Ki(i, -1), E(i)));
}

Element Uq::ad_F(int i, const Element& a) const {
    Element fk = multiply(F(i), Ki(i, 1));
    return multiply(multiply(F(i), a), Ki(i, 1)) - multiply(a, fk);
}

Element Uq::ad_K(int i, int power, const Element& a) const {
    return multiply(multiply(Ki(i, power), a), Ki(i, -power));
}

Element Uq::ad_word(const std::vector<std::pair<char, int>>& word, const Element& a) const {
    Element r = a;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (it->first == 'E') r = ad_E(it->second, r);
        else if (it->first == 'F') r = ad_F(it->second, r);
        else throw std::invalid_argument("ad word letters must be E or F");
    }
    return r;
}

// ---------------------------------------------------------------- symmetries

Element Uq::apply_map(const Element& a, const std::function<Element(int)>& img_e,
                      const std::function<Element(int)>& img_f,
                      const std::function<Element(const IVec&)>& img_k, bool anti, bool invert_q) const {
    std::unordered_map<Word, Element> fmemo, ememo;
    auto word_img = [&](const Word& w, bool is_e) -> const Element& {
        auto& memo = is_e ? ememo : fmemo;
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        Element r = one();
        for (std::size_t p = 0; p < w.size(); ++p) {
            char l = anti ? w[w.size() - 1 - p] : w[p];
            r = multiply(r, is_e ? img_e(l) : img_f(l));
        }
        return memo.emplace(w, std::move(r)).first->second;
    };
    Accumulator acc;
    for (const auto& [t, c] : a.terms) {
        Element fi = word_img(t.f, false);
        Element ei = word_img(t.e, true);
        Element ki = img_k(t.k);
        Element prod = anti ? multiply(multiply(ei, ki), fi) : multiply(multiply(fi, ki), ei);
        acc.add(prod, invert_q ? c.substitute_inverse() : c);
    }
    return acc.take();
}

Element Uq::kappa(const Element& a) const {
    return apply_map(
        a, [&](int i) { return multiply(F(i), Ki(i, 1)); },
        [&](int i) { return multiply(Ki(i, -1), E(i)); },
        [&](const IVec& k) { return monomial(Word(), k, Word()); }, true, false);
}

Element Uq::sigma(const Element& a) const {
    return apply_map(
        a, [&](int i) { return E(i); }, [&](int i) { return F(i); },
        [&](const IVec& k) { return monomial(Word(), -k, Word()); }, true, false);
}

Element Uq::phi(const Element& a) const {
    return apply_map(
        a, [&](int i) { return E(i); }, [&](int i) { return F(i); },
        [&](const IVec& k) { return monomial(Word(), -k, Word()); }, false, true);
}

Element Uq::phi_prime(const Element& a) const {
    return apply_map(
        a, [&](int i) { return multiply(Ki(i, -2), E(i)); },
        [&](int i) { return multiply(F(i), Ki(i, 2)); },
        [&](const IVec& k) { return monomial(Word(), -k, Word()); }, false, true);
}

Element Uq::divided_power(Sign s, int i, int m) const {
    int di = rd_.d()[static_cast<std::size_t>(i)];
    QRat fact(1);
    for (int k = 2; k <= m; ++k) fact *= q_integer(k, di);
    return word_element(s, Word(static_cast<std::size_t>(m), static_cast<char>(i)), fact.inverse());
}

// Generator images under T_i (dir = +1) and T_i^{-1} (dir = -1).
Element Uq::T_gen(int i, int dir, char kind, int j) const {
    auto key = std::make_tuple(i, dir, kind, j);
    {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = t_memo_.find(key);
        if (it != t_memo_.end()) return it->second;
    }
    Element r;
    if (i == j) {
        if (kind == 'E') r = dir > 0 ? -multiply(F(i), Ki(i, 1)) : -multiply(Ki(i, -1), F(i));
        else r = dir > 0 ? -multiply(Ki(i, -1), E(i)) : -multiply(E(i), Ki(i, 1));
    } else {
        int rr = -rd_.cartan()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        int di = rd_.d()[static_cast<std::size_t>(i)];
        Sign sg = kind == 'E' ? Sign::Plus : Sign::Minus;
        Element x = kind == 'E' ? E(j) : F(j);
        for (int s = 0; s <= rr; ++s) {
            QRat c = QRat::q_pow(static_cast<long>(kind == 'E' ? -s : s) * di);
            if (s % 2) c = -c;
            // E: T uses E^{(r-s)} x E^{(s)}, T^{-1} the mirror; F: T uses F^{(s)} x F^{(r-s)}.
            bool left_is_rs = (kind == 'E') == (dir > 0);
            Element left = divided_power(sg, i, left_is_rs ? rr - s : s);
            Element right = divided_power(sg, i, left_is_rs ? s : rr - s);
            r = r + c * multiply(multiply(left, x), right);
        }
    }
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return t_memo_.emplace(key, std::move(r)).first->second;
}

Element Uq::lusztig_T(int i, int dir, const Element& a) const {
    return apply_map(
        a, [&](int j) { return T_gen(i, dir, 'E', j); }, [&](int j) { return T_gen(i, dir, 'F', j); },
        [&](const IVec& k) { return monomial(Word(), rd_.reflect(i, k), Word()); }, false, false);
}

Element Uq::lusztig_T_inv_word(const std::vector<int>& w, const Element& a) const {
    Element r = a;
    for (int i : w) r = lusztig_T(i, -1, r);
    return r;
}

// ---------------------------------------------------------------- structure

std::map<Biweight, Element> Uq::biweights(const Element& a) const {
    std::map<Biweight, Element> out;
    for (const auto& t : a.terms) out[{weight(t.first.f), weight(t.first.e)}].terms.push_back(t);
    return out;
}

std::pair<IVec, Element> Uq::l_weight_min(const Element& a) const {
    if (a.is_zero()) throw std::invalid_argument("l_weight_min of zero");
    std::set<IVec> ws;
    for (const auto& t : a.terms) ws.insert(weight(t.first.f));
    // Minimal l-weights -lambda correspond to maximal F-weights lambda.
    std::vector<IVec> maximal;
    for (const auto& l : ws) {
        bool dominated = false;
        for (const auto& m : ws)
            if (m != l && is_nonneg(m - l)) dominated = true;
        if (!dominated) maximal.push_back(l);
    }
    // Lex-least l-weight, i.e. lex-greatest lambda.
    IVec best = *std::max_element(maximal.begin(), maximal.end());
    Element comp;
    for (const auto& t : a.terms)
        if (weight(t.first.f) == best) comp.terms.push_back(t);
    return {best, comp};
}

mpq_class Uq::filtration_degree(const Element& a) const {
    if (a.is_zero()) throw std::invalid_argument("filtration degree of zero");
    std::optional<mpq_class> best;
    for (const auto& [t, c] : a.terms) {
        long ht = 0;
        for (int x : t.k) ht += x;
        mpq_class d = mpq_class(static_cast<long>(t.f.size())) - mpq_class(ht, wden());
        d.canonicalize();
        if (!best || d > *best) best = d;
    }
    return *best;
}

Element Uq::project_P(const Element& a, const std::vector<bool>& pi_theta,
                      const std::vector<std::vector<mpq_class>>& theta) const {
    Element r;
    const auto n = static_cast<std::size_t>(rank());
    for (const auto& t : a.terms) {
        bool keep = true;
        for (char l : t.first.e)
            if (!pi_theta[static_cast<std::size_t>(l)]) keep = false;
        if (!keep) continue;
        for (std::size_t row = 0; row < n && keep; ++row) {
            mpq_class s = 0;
            for (std::size_t col = 0; col < n; ++col) s += theta[row][col] * t.first.k[col];
            if (s != t.first.k[row]) keep = false;
        }
        if (keep) r.terms.push_back(t);
    }
    return r;
}

// ---------------------------------------------------------------- subspaces

std::vector<Element> Uq::centralizer_basis(Sign s, const IVec& beta, const std::vector<int>& pi) const {
    for (int i : pi)
        if (rd_.inner(rd_.simple(i), beta) != 0) return {};
    std::vector<Word> bs = basis(beta);
    std::vector<Element> xs;
    for (const auto& b : bs) xs.push_back(word_element(s, b));
    // One term index per condition; columns are concatenated with offsets.
    const std::size_t nc = 2 * pi.size();
    std::vector<TermIndex> idx(nc);
    std::vector<std::vector<SparseVec>> parts(bs.size(), std::vector<SparseVec>(nc));
    for (std::size_t b = 0; b < bs.size(); ++b) {
        for (std::size_t k = 0; k < pi.size(); ++k) {
            parts[b][2 * k] = idx[2 * k].vec(ad_E(pi[k], xs[b]));
            parts[b][2 * k + 1] = idx[2 * k + 1].vec(ad_F(pi[k], xs[b]));
        }
    }
    std::vector<SparseVec> cols(bs.size());
    for (std::size_t b = 0; b < bs.size(); ++b) {
        int off = 0;
        for (std::size_t c = 0; c < nc; ++c) {
            for (const auto& [i, x] : parts[b][c]) cols[b].emplace_back(i + off, x);
            off += static_cast<int>(idx[c].size());
        }
    }
    std::vector<Element> out;
    for (const auto& v : null_space(cols, static_cast<int>(bs.size()))) {
        QRat lead = v.front().second.inverse();
        Element x;
        for (const auto& [b, c] : v) x = x + (c * lead) * xs[static_cast<std::size_t>(b)];
        out.push_back(x);
    }
    return out;
}

bool Uq::ad_submodule_membership(const Element& x, int nu, Sign s) const {
    if (x.is_zero()) return true;
    const int sg = s == Sign::Minus ? 1 : -1;
    auto wt = [&](const Term& t) { return scaled(weight(t.f) - weight(t.e), sg); };
    const IVec beta = wt(x.terms.front().first);
    for (const auto& t : x.terms)
        if (wt(t.first) != beta)
            throw std::invalid_argument("ad-submodule membership needs a homogeneous element");
    if (!is_nonneg(beta)) return false;
    Weight two_nu = rd_.fundamental_weights()[static_cast<std::size_t>(nu)];
    for (auto& c : two_nu) c *= -2;
    const IVec kb = k_num_root(beta) + k_num(two_nu);
    Element target = multiply(x, monomial(Word(), kb, Word()));

    // Spanning sets of (ad U^\mp_{\mp gamma}) K_{-2nu} for gamma <= beta, by height.
    std::map<IVec, std::vector<Element>> span;
    span[zero_ivec(rank())] = {K(two_nu)};
    std::vector<IVec> order;
    for (const auto& g : rd_.positive_cone(rd_.height(beta)))
        if (is_nonneg(beta - g) && !is_zero_vec(g)) order.push_back(g);
    std::sort(order.begin(), order.end(),
              [&](const IVec& a, const IVec& b) { return rd_.height(a) < rd_.height(b); });
    for (const auto& g : order) {
        TermIndex ti;
        Echelon ech;
        std::vector<Element> keep;
        for (int i = 0; i < rank(); ++i) {
            if (g[static_cast<std::size_t>(i)] == 0) continue;
            IVec sub = g;
            --sub[static_cast<std::size_t>(i)];
            auto it = span.find(sub);
            if (it == span.end()) continue;
            for (const auto& sp : it->second) {
                Element y = sg > 0 ? ad_F(i, sp) : ad_E(i, sp);
                if (ech.insert(ti.vec(y))) keep.push_back(std::move(y));
            }
        }
        span[g] = std::move(keep);
    }
    const auto& top = span[beta];
    TermIndex ti;
    std::vector<SparseVec> cols;
    for (const auto& y : top) cols.push_back(ti.vec(y));
    return solve_in_span(cols, ti.vec(target)).has_value();
}

// ---------------------------------------------------------------- output

std::string word_str(const Word& w, char letter) {
    std::string s;
    for (char c : w) {
        if (!s.empty()) s += ' ';
        s += letter;
        s += std::to_string(c + 1);
    }
    return s;
}

std::string Uq::str(const Element& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [t, c] : a.terms) {
        std::string mono = word_str(t.f, 'F');
        if (!is_zero_vec(t.k)) {
            if (!mono.empty()) mono += ' ';
            mono += "K[";
            Weight w = k_weight(t.k);
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) mono += ',';
                mono += w[i].get_str();
            }
            mono += ']';
        }
        std::string es = word_str(t.e, 'E');
        if (!es.empty()) {
            if (!mono.empty()) mono += ' ';
            mono += es;
        }
        std::string cs = c.str();
        bool neg = false;
        if (cs.find(' ') == std::string::npos && cs[0] == '-') {
            neg = true;
            cs = cs.substr(1);
        }
        if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
        std::string piece;
        if (cs == "1" && !mono.empty()) piece = mono;
        else if (mono.empty()) piece = cs;
        else piece = cs + " " + mono;
        if (out.empty()) out = neg ? "-" + piece : piece;
        else out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

namespace {

nlohmann::json mpz_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

nlohmann::json qrat_to_json(const QRat& c) {
    nlohmann::json j;
    j["num"] = nlohmann::json::array();
    j["den"] = nlohmann::json::array();
    const Poly num = c.full_num(), den = c.full_den();
    for (const auto& x : num.coeffs()) j["num"].push_back(mpz_json(x));
    for (const auto& x : den.coeffs()) j["den"].push_back(mpz_json(x));
    j["var"] = "v";
    j["N"] = session_N();
    return j;
}

}  // namespace

std::string qrat_json(const QRat& c) { return qrat_to_json(c).dump(); }

std::string Uq::json(const Element& a) const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [t, c] : a.terms) {
        nlohmann::json jt;
        jt["f"] = nlohmann::json::array();
        jt["e"] = nlohmann::json::array();
        jt["k"] = nlohmann::json::array();
        for (char x : t.f) jt["f"].push_back(x + 1);
        for (char x : t.e) jt["e"].push_back(x + 1);
        for (const auto& w : k_weight(t.k)) {
            if (w.get_den() == 1) jt["k"].push_back(w.get_num().get_si());
            else jt["k"].push_back(w.get_str());
        }
        jt["c"] = qrat_to_json(c);
        terms.push_back(std::move(jt));
    }
    nlohmann::json j;
    j["terms"] = std::move(terms);
    return j.dump();
}

}  // namespace qc
