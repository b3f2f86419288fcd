#include "qcartan/classical.hpp"

#include <stdexcept>

namespace qc {

namespace {

// Scalar c with a = c b, or nullopt-like flag.
bool proportional(const LieMatrix& a, const LieMatrix& b, mpq_class& c) {
    int piv = -1;
    for (std::size_t k = 0; k < b.v.size(); ++k)
        if (b.v[k] != 0) {
            piv = static_cast<int>(k);
            break;
        }
    if (piv < 0) return false;
    c = a.v[static_cast<std::size_t>(piv)] / b.v[static_cast<std::size_t>(piv)];
    return a == b.scaled(c);
}

}  // namespace

Chevalley chevalley_matrices(char type, int n) {
    int m;
    switch (type) {
        case 'A': m = n + 1; break;
        case 'B': m = 2 * n + 1; break;
        case 'C': m = 2 * n; break;
        case 'D': m = 2 * n; break;
        default: throw std::invalid_argument(std::string("chevalley_matrices: unsupported type ") + type);
    }
    if (n < 1 || (type == 'B' && n < 2) || (type == 'C' && n < 2) || (type == 'D' && n < 4))
        throw std::invalid_argument("chevalley_matrices: invalid rank");
    Chevalley ch{type, n, m, {}, {}, {}, LieMatrix::identity(m)};
    if (type != 'A') {
        ch.form = LieMatrix(m);
        for (int a = 0; a < m; ++a) ch.form(a, m - 1 - a) = (type == 'C' && a >= n) ? -1 : 1;
    }
    auto U = [&](int i, int j) { return LieMatrix::unit(m, i, j); };
    for (int i = 0; i < n; ++i) {
        LieMatrix e;
        if (type == 'A') {
            e = U(i, i + 1);
        } else if (i < n - 1) {
            e = U(i, i + 1) - U(m - 2 - i, m - 1 - i);
        } else if (type == 'B') {
            e = U(n - 1, n) - U(n, n + 1);
        } else if (type == 'C') {
            e = U(n - 1, n);
        } else {
            e = U(n - 2, n) - U(n - 1, n + 1);
        }
        // f = c e^T normalized so that [[e,f],e] = 2e.
        LieMatrix et = e.transpose();
        LieMatrix h0 = bracket(e, et);
        mpq_class lambda;
        if (!proportional(bracket(h0, e), e, lambda) || lambda == 0)
            throw std::logic_error("chevalley_matrices: degenerate triple");
        LieMatrix f = et.scaled(mpq_class(2) / lambda);
        ch.e.push_back(e);
        ch.f.push_back(f);
        ch.h.push_back(bracket(e, f));
    }
    return ch;
}

namespace {

LieMatrix root_vector(const Chevalley& ch, const RootData& rd, const IVec& beta, bool neg) {
    if (!rd.is_positive_root(beta)) throw std::invalid_argument("matrix_root_vector: not a positive root");
    int n = rd.rank();
    for (int i = 0; i < n; ++i)
        if (beta == rd.simple(i)) return neg ? ch.f[static_cast<std::size_t>(i)] : ch.e[static_cast<std::size_t>(i)];
    for (int k = n - 1; k >= 0; --k) {
        IVec rest = beta - rd.simple(k);
        if (!rd.is_positive_root(rest)) continue;
        const auto& g = neg ? ch.f[static_cast<std::size_t>(k)] : ch.e[static_cast<std::size_t>(k)];
        return bracket(g, root_vector(ch, rd, rest, neg));
    }
    throw std::logic_error("matrix_root_vector: no decomposition");
}

}  // namespace

LieMatrix matrix_root_vector(const Chevalley& ch, const RootData& rd, const IVec& beta) {
    return root_vector(ch, rd, beta, false);
}

LieMatrix matrix_root_vector_neg(const Chevalley& ch, const RootData& rd, const IVec& beta) {
    return root_vector(ch, rd, beta, true);
}

LieMatrix classical_nested(const Chevalley& ch, const std::vector<int>& word) {
    if (word.empty()) throw std::invalid_argument("classical_nested: empty word");
    auto gen = [&](int s) -> const LieMatrix& {
        int i = std::abs(s) - 1;
        if (s == 0 || i >= ch.rank) throw std::invalid_argument("classical_nested: bad index");
        return s > 0 ? ch.e[static_cast<std::size_t>(i)] : ch.f[static_cast<std::size_t>(i)];
    };
    LieMatrix acc = gen(word[0]);
    for (std::size_t k = 1; k < word.size(); ++k) acc = bracket(gen(word[k]), acc);
    return acc;
}

LieMatrix h_combination(const Chevalley& ch, const IVec& c) {
    LieMatrix r(ch.size);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k]) r = r + ch.h[k].scaled(mpq_class(c[k]));
    return r;
}

bool has_matrix_theta(const Involution& inv) {
    return inv.rd.type() == 'A' && (inv.label == "AI" || inv.label == "AIII");
}

LieMatrix matrix_theta(const Involution& inv, const LieMatrix& x) {
    if (inv.label == "AI") return x.transpose().scaled(mpq_class(-1));
    if (inv.label == "AIII") {
        int m = x.n;
        LieMatrix J(m);
        for (int a = 0; a < m; ++a) {
            bool outer = a < inv.r || a >= m - inv.r;
            int b = outer ? m - 1 - a : a;
            J(a, b) = 1;
        }
        return J * x * J;
    }
    throw std::invalid_argument("matrix_theta: no matrix model for " + inv.label);
}

int matrix_rank(const std::vector<LieMatrix>& ms) {
    if (ms.empty()) return 0;
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& m : ms) rows.push_back(m.v);
    std::size_t cols = rows[0].size();
    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
        const auto pr = rows[static_cast<std::size_t>(rank)];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == static_cast<std::size_t>(rank) || rows[i][c] == 0) continue;
            mpq_class f = rows[i][c] / pr[c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * pr[k];
        }
        ++rank;
    }
    return rank;
}

Report verify_classical_cartan(const ThetaSystem& ts) {
    Report rep;
    const Involution& inv = ts.inv;
    const RootData& rd = inv.rd;
    char type = rd.type();
    if (type != 'A' && type != 'B' && type != 'C' && type != 'D') {
        rep.add("classical_type", false, "exceptional types are checked at root level only");
        return rep;
    }
    Chevalley ch = chevalley_matrices(type, rd.rank());
    bool theta_model = has_matrix_theta(inv);
    std::vector<LieMatrix> basis;
    for (const auto& h : inv.h_theta) basis.push_back(h_combination(ch, h));
    for (std::size_t j = 0; j < ts.betas.size(); ++j) {
        LieMatrix e = matrix_root_vector(ch, rd, ts.betas[j]);
        LieMatrix f = matrix_root_vector_neg(ch, rd, ts.betas[j]);
        if (theta_model) {
            // theta(e_beta) = s f_{-beta}; the recorded sign s fixes the normalization.
            mpq_class s;
            bool ok = proportional(matrix_theta(inv, e), f, s) && (s == 1 || s == -1);
            rep.add("theta_pairs_root_vectors[" + std::to_string(j + 1) + "]", ok, ok ? "sign " + s.get_str() : "");
            if (ok) f = f.scaled(s);
        }
        basis.push_back(e + f);
    }
    bool commute = true;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) commute = commute && bracket(basis[a], basis[b]).is_zero();
    rep.add("pairwise_commute", commute);
    int expect = static_cast<int>(inv.h_theta.size() + ts.betas.size());
    int got = matrix_rank(basis);
    rep.add("dimension", got == expect, "span " + std::to_string(got) + ", expected " + std::to_string(expect));
    if (theta_model) {
        bool fixed = true;
        for (const auto& x : basis) fixed = fixed && matrix_theta(inv, x) == x;
        rep.add("theta_fixed", fixed);
    }
    return rep;
}

Report cayley_on_triple(int n, const IVec& gamma) {
    Report rep;
    RootData rd('A', n);
    if (!rd.is_positive_root(gamma)) {
        rep.add("positive_root", false);
        return rep;
    }
    auto supp = rd.support(gamma);
    int a = supp.front(), b = supp.back() + 1, m = n + 1;
    using M = Mat<QSqrt2>;
    M e = M::unit(m, a, b), f = M::unit(m, b, a);
    M h = M::unit(m, a, a) - M::unit(m, b, b);
    // exp(t(f - e)) at t = pi/4: cos t on the (a,b) block plus sin t (f - e).
    QSqrt2 c(0, mpq_class(1, 2));
    M R = M::identity(m);
    R(a, a) = c;
    R(b, b) = c;
    R(a, b) = -c;
    R(b, a) = c;
    M Rinv = R.transpose();
    auto Ad = [&](const M& x) { return R * x * Rinv; };
    rep.add("orthogonal", R * Rinv == M::identity(m));
    // R^2 is the quarter turn exp(pi/2 (f - e)) = identity off the block plus (f - e).
    M quarter = M::identity(m) - M::unit(m, a, a) - M::unit(m, b, b) + f - e;
    rep.add("square_is_quarter_turn", R * R == quarter);
    rep.add("h_to_e_plus_f", Ad(h) == e + f);
    rep.add("fixes_e_minus_f", Ad(e - f) == e - f);
    M ef = e + f;
    rep.add("trace_preserved", (Ad(h) * Ad(h)).trace() == (h * h).trace() && (ef * ef).trace() == QSqrt2(2));
    // A generic traceless diagonal element annihilated by gamma.
    M z(m);
    mpq_class tr = 0;
    for (int k = 0; k < m; ++k) {
        mpq_class val = (k == a || k == b) ? mpq_class(0) : mpq_class(k * k + 1);
        z(k, k) = QSqrt2(val);
        tr += val;
    }
    for (int k = 0; k < m; ++k) z(k, k) -= QSqrt2(tr / m);
    bool in_ker = z(a, a) == z(b, b) && z.trace().is_zero();
    rep.add("kernel_element_fixed", in_ker && Ad(z) == z);
    return rep;
}

}  // namespace qc
