#include "qcartan/involutions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qc {

namespace {

// Table transcription helpers, all 1-based.
struct Builder {
    int n;
    IVec zero() const { return IVec(static_cast<std::size_t>(n), 0); }
    IVec a(int i, int c = 1) const {
        IVec v = zero();
        v[static_cast<std::size_t>(i - 1)] = c;
        return v;
    }
    // sum_{k=lo}^{hi} c alpha_k
    IVec run(int lo, int hi, int c = 1) const {
        IVec v = zero();
        for (int k = lo; k <= hi; ++k) v[static_cast<std::size_t>(k - 1)] += c;
        return v;
    }
    IVec coords(std::initializer_list<int> cs) const {
        IVec v = zero();
        int i = 0;
        for (int c : cs) {
            if (i < n) v[static_cast<std::size_t>(i)] = c;
            ++i;
        }
        return v;
    }
    IVec h(int i) const { return a(i); }
    IVec hdiff(int i, int j) const { return a(i) - a(j); }
};

char type_of(const std::string& label) { return label.empty() ? '?' : label[0]; }

std::string canonical(const std::string& label) {
    if (label == "AIV") return "AIII";
    if (label == "BII") return "BI";
    if (label == "DII" || label == "DI") return "DI-1";
    if (label == "CII") return "CII-1";
    return label;
}

int exceptional_rank(const std::string& l) {
    if (l == "EI" || l == "EII" || l == "EIII" || l == "EIV") return 6;
    if (l == "EV" || l == "EVI" || l == "EVII") return 7;
    if (l == "EVIII" || l == "EIX") return 8;
    if (l == "FI" || l == "FII") return 4;
    if (l == "G") return 2;
    return 0;
}

[[noreturn]] void bad(const std::string& label, int n, int r, const std::string& why) {
    std::ostringstream os;
    os << "invalid parameters for " << label << " (n=" << n << ", r=" << r << "): " << why;
    throw InvolutionError(os.str());
}

// E8 coordinates of the gamma roots used by EI, EV, EVIII, EVII, EIX.
const std::vector<IVec>& e8_gammas() {
    static const std::vector<IVec> g = {
        {2, 3, 4, 6, 5, 4, 3, 2}, {2, 2, 3, 4, 3, 2, 1, 0}, {0, 1, 1, 2, 2, 2, 1, 0}, {0, 0, 0, 0, 0, 0, 1, 0},
        {0, 1, 1, 2, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0},
    };
    return g;
}

IVec truncate(const IVec& v, int n) { return IVec(v.begin(), v.begin() + n); }

struct Table {
    std::vector<IVec> theta;  // 1-based meaning, stored 0-based
    std::vector<int> p;       // 1-based values
    std::vector<IVec> h;
    int rank = 0;
    struct Entry {
        IVec beta;
        int alpha, alpha_prime, tag;  // 1-based
    };
    std::vector<Entry> gamma;
};

Table make_table(const std::string& label, int n, int r) {
    Builder B{n};
    Table t;
    t.theta.assign(static_cast<std::size_t>(n), B.zero());
    t.p.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) t.p[static_cast<std::size_t>(i - 1)] = i;
    auto th = [&](int i) -> IVec& { return t.theta[static_cast<std::size_t>(i - 1)]; };
    auto fix = [&](int i) { th(i) = B.a(i); };
    auto neg = [&](int i) { th(i) = B.a(i, -1); };
    auto add = [&](IVec beta, int al, int alp, int tag) { t.gamma.push_back({std::move(beta), al, alp, tag}); };
    auto all_neg = [&] {
        for (int i = 1; i <= n; ++i) neg(i);
    };
    // alpha_a + 2 alpha_{a+1} + ... + 2 alpha_{n-2} + alpha_{n-1} + alpha_n  (type D)
    auto u = [&](int a) {
        IVec v = B.a(a) + B.run(a + 1, n - 2, 2);
        return v + B.a(n - 1) + B.a(n);
    };
    // alpha_a + 2 alpha_{a+1} + ... + 2 alpha_n  (type B)
    auto vB = [&](int a) { return B.a(a) + B.run(a + 1, n, 2); };
    // alpha_a + 2 alpha_{a+1} + ... + 2 alpha_{n-1} + alpha_n  (type C)
    auto vC = [&](int a) { return B.a(a) + B.run(a + 1, n - 1, 2) + B.a(n); };

    if (label == "AI") {
        if (n < 1) bad(label, n, r, "n >= 1");
        all_neg();
        t.rank = (n + 1) / 2;
        for (int j = 1; 2 * j - 1 <= n; ++j) add(B.a(2 * j - 1), 2 * j - 1, 2 * j - 1, 1);
    } else if (label == "AII") {
        if (n < 3 || n % 2 == 0) bad(label, n, r, "n odd >= 3");
        for (int i = 1; i <= n; ++i) {
            if (i % 2) {
                fix(i);
                t.h.push_back(B.h(i));
            } else {
                th(i) = -B.run(i - 1, i + 1);
            }
        }
        t.rank = (n + 1) / 2;
    } else if (label == "AIII") {
        if (n < 1 || r < 1 || 2 * r > n + 1) bad(label, n, r, "1 <= r <= (n+1)/2");
        for (int i = 1; i <= n; ++i) {
            t.p[static_cast<std::size_t>(i - 1)] = n - i + 1;
            if (i >= r + 1 && i <= n - r) {
                fix(i);
                t.h.push_back(B.h(i));
            } else if (i <= r - 1 || i >= n - r + 2) {
                th(i) = B.a(n - i + 1, -1);
            }
        }
        if (r == n - r + 1) {
            neg(r);
        } else {
            th(r) = -B.run(r + 1, n - r + 1);
            th(n - r + 1) = -B.run(r, n - r);
        }
        for (int i = 1; i <= r; ++i)
            if (i != n - i + 1) t.h.push_back(B.hdiff(i, n - i + 1));
        t.rank = n;
        for (int j = 1; j <= r; ++j) add(B.run(j, n - j + 1), j, n - j + 1, j == n - j + 1 ? 1 : 3);
    } else if (label == "BI") {
        if (n < 2 || r < 1 || r > n) bad(label, n, r, "n >= 2, 1 <= r <= n");
        for (int i = 1; i <= n; ++i) {
            if (i > r) {
                fix(i);
                t.h.push_back(B.h(i));
            } else {
                neg(i);
            }
        }
        if (r < n) th(r) = -vB(r);
        t.rank = n;
        for (int j = 1; 2 * j <= r; ++j) {
            add(vB(2 * j - 1), 2 * j, 2 * j, 2);
            add(B.a(2 * j - 1), 2 * j - 1, 2 * j - 1, 1);
        }
        if (r % 2) {
            if (r < n)
                add(B.run(r, n), r, n, 4);
            else
                add(B.a(n), n, n, 1);
        }
    } else if (label == "CI") {
        if (n < 2) bad(label, n, r, "n >= 2");
        all_neg();
        t.rank = n;
        for (int j = 1; j < n; ++j) add(B.run(j, n - 1, 2) + B.a(n), j, j, 2);
        add(B.a(n), n, n, 1);
    } else if (label == "CII-1") {
        if (r < 2 || r % 2 || r > n - 1) bad(label, n, r, "r even, 2 <= r <= n-1");
        for (int i = 1; i <= n; ++i) {
            if ((i < r && i % 2) || i > r) {
                fix(i);
                t.h.push_back(B.h(i));
            } else if (i < r) {
                th(i) = -B.run(i - 1, i + 1);
            }
        }
        th(r) = -(B.a(r - 1) + B.a(r) + B.run(r + 1, n - 1, 2) + B.a(n));
        t.rank = n;
        for (int j = 1; 2 * j <= r; ++j) add(vC(2 * j - 1), 2 * j, 2 * j - 1, 5);
    } else if (label == "CII-2") {
        if (n < 2 || n % 2) bad(label, n, r, "n even >= 2");
        for (int i = 1; i <= n; ++i) {
            if (i % 2) {
                fix(i);
                t.h.push_back(B.h(i));
            } else if (i < n) {
                th(i) = -B.run(i - 1, i + 1);
            }
        }
        th(n) = -(B.a(n - 1, 2) + B.a(n));
        t.rank = n;
        int tt = n / 2;
        for (int j = 1; j < tt; ++j) add(vC(2 * j - 1), 2 * j, 2 * j - 1, 5);
        add(B.a(n - 1) + B.a(n), n, n - 1, 4);
    } else if (label == "DI-1") {
        if (n < 4 || r < 1 || r > n - 2) bad(label, n, r, "n >= 4, 1 <= r <= n-2");
        for (int i = 1; i <= n; ++i) {
            if (i > r) {
                fix(i);
                t.h.push_back(B.h(i));
            } else {
                neg(i);
            }
        }
        th(r) = -u(r);
        t.rank = r % 2 ? n - 1 : n;
        if (r % 2) {
            for (int j = 1; 2 * j <= r - 1; ++j) {
                add(u(2 * j), 2 * j + 1, 2 * j + 1, 2);
                add(B.a(2 * j), 2 * j, 2 * j, 1);
            }
        } else {
            for (int j = 1; 2 * j <= r; ++j) {
                add(u(2 * j - 1), 2 * j, 2 * j, 2);
                add(B.a(2 * j - 1), 2 * j - 1, 2 * j - 1, 1);
            }
        }
    } else if (label == "DI-2") {
        if (n < 4) bad(label, n, r, "n >= 4");
        for (int i = 1; i <= n - 2; ++i) neg(i);
        th(n - 1) = B.a(n, -1);
        th(n) = B.a(n - 1, -1);
        t.p[static_cast<std::size_t>(n - 2)] = n;
        t.p[static_cast<std::size_t>(n - 1)] = n - 1;
        t.h.push_back(B.hdiff(n - 1, n));
        t.rank = n % 2 ? n : n - 1;
        if (n % 2) {
            int tt = (n - 1) / 2;
            for (int j = 1; j <= tt; ++j) {
                if (j < tt)
                    add(u(2 * j - 1), 2 * j, 2 * j, 2);
                else
                    add(u(2 * j - 1), n - 1, n, 3);
                add(B.a(2 * j - 1), 2 * j - 1, 2 * j - 1, 1);
            }
        } else {
            int tt = (n - 2) / 2;
            for (int j = 1; j <= tt; ++j) {
                if (j < tt)
                    add(u(2 * j), 2 * j + 1, 2 * j + 1, 2);
                else
                    add(u(2 * j), n - 1, n, 3);
                add(B.a(2 * j), 2 * j, 2 * j, 1);
            }
        }
    } else if (label == "DI-3") {
        if (n < 4) bad(label, n, r, "n >= 4");
        all_neg();
        t.rank = n % 2 ? n - 1 : n;
        if (n % 2) {
            int tt = (n - 1) / 2;
            for (int j = 1; j < tt; ++j) {
                add(u(2 * j), 2 * j + 1, 2 * j + 1, 2);
                add(B.a(2 * j), 2 * j, 2 * j, 1);
            }
            add(B.a(n), n, n, 1);
            add(B.a(n - 1), n - 1, n - 1, 1);
        } else {
            int tt = n / 2;
            for (int j = 1; j < tt; ++j) {
                add(u(2 * j - 1), 2 * j, 2 * j, 2);
                add(B.a(2 * j - 1), 2 * j - 1, 2 * j - 1, 1);
            }
            add(B.a(n - 1), n - 1, n - 1, 1);
            add(B.a(n), n, n, 1);
        }
    } else if (label == "DIII-1") {
        if (n < 4 || n % 2) bad(label, n, r, "n even >= 4");
        for (int i = 1; i <= n; ++i) {
            if (i % 2) {
                fix(i);
                t.h.push_back(B.h(i));
            } else if (i < n) {
                th(i) = -B.run(i - 1, i + 1);
            }
        }
        neg(n);
        t.rank = n;
        for (int j = 1; j < n / 2; ++j) add(u(2 * j - 1), 2 * j, 2 * j, 2);
        add(B.a(n), n, n, 1);
    } else if (label == "DIII-2") {
        if (n < 5 || n % 2 == 0) bad(label, n, r, "n odd >= 5");
        for (int i = 1; i <= n - 2; ++i) {
            if (i % 2) {
                fix(i);
                t.h.push_back(B.h(i));
            } else {
                th(i) = -B.run(i - 1, i + 1);
            }
        }
        th(n - 1) = -(B.a(n - 2) + B.a(n));
        th(n) = -(B.a(n - 2) + B.a(n - 1));
        t.p[static_cast<std::size_t>(n - 2)] = n;
        t.p[static_cast<std::size_t>(n - 1)] = n - 1;
        t.h.push_back(B.hdiff(n - 1, n));
        t.rank = n;
        int tt = (n - 1) / 2;
        for (int j = 1; j < tt; ++j) add(u(2 * j - 1), 2 * j, 2 * j, 2);
        add(B.run(n - 2, n), n - 1, n, 3);
    } else if (label == "EI" || label == "EV" || label == "EVIII") {
        all_neg();
        const auto& g = e8_gammas();
        int first = label == "EI" ? 4 : label == "EV" ? 1 : 0;
        const int alphas[8] = {8, 1, 6, 7, 4, 5, 3, 2};
        const int tags[8] = {2, 2, 2, 1, 2, 1, 1, 1};
        for (int k = first; k < 8; ++k) add(truncate(g[static_cast<std::size_t>(k)], n), alphas[k], alphas[k], tags[k]);
        t.rank = label == "EI" ? 4 : label == "EV" ? 7 : 8;
    } else if (label == "EII") {
        const int pp[6] = {6, 2, 5, 4, 3, 1};
        for (int i = 1; i <= 6; ++i) {
            t.p[static_cast<std::size_t>(i - 1)] = pp[i - 1];
            th(i) = B.a(pp[i - 1], -1);
        }
        t.h = {B.hdiff(1, 6), B.hdiff(3, 5)};
        t.rank = 6;
        add(B.coords({1, 0, 1, 1, 1, 1}), 1, 6, 3);
        add(B.coords({0, 0, 1, 1, 1, 0}), 3, 5, 3);
        add(B.a(4), 4, 4, 1);
    } else if (label == "EIII") {
        for (int i : {3, 4, 5}) fix(i);
        th(1) = -B.coords({0, 0, 1, 1, 1, 1});
        th(6) = -B.coords({1, 0, 1, 1, 1, 0});
        th(2) = -B.coords({0, 1, 1, 2, 1, 0});
        t.p = {6, 2, 5, 4, 3, 1};
        t.h = {B.h(3), B.h(4), B.h(5), B.hdiff(1, 6)};
        t.rank = 6;
        add(B.coords({1, 2, 2, 3, 2, 1}), 2, 2, 2);
        add(B.coords({1, 0, 1, 1, 1, 1}), 1, 6, 3);
    } else if (label == "EIV") {
        for (int i = 2; i <= 5; ++i) {
            fix(i);
            t.h.push_back(B.h(i));
        }
        th(1) = -B.coords({1, 1, 2, 2, 1, 0});
        th(6) = -B.coords({0, 1, 1, 2, 2, 1});
        t.rank = 4;
    } else if (label == "EVI") {
        for (int i : {2, 5, 7}) {
            fix(i);
            t.h.push_back(B.h(i));
        }
        th(6) = -B.coords({0, 0, 0, 0, 1, 1, 1});
        th(4) = -B.coords({0, 1, 0, 1, 1, 0, 0});
        neg(1);
        neg(3);
        t.rank = 7;
        add(B.a(1), 1, 1, 1);
    } else if (label == "EVII" || label == "EIX") {
        for (int i = 2; i <= 5; ++i) {
            fix(i);
            t.h.push_back(B.h(i));
        }
        th(1) = -B.coords({1, 1, 2, 2, 1, 0, 0, 0});
        th(6) = -B.coords({0, 1, 1, 2, 2, 1, 0, 0});
        for (int i = 7; i <= n; ++i) neg(i);
        const auto& g = e8_gammas();
        if (label == "EVII") {
            t.rank = 7;
            add(truncate(g[1], 7), 1, 1, 2);
            add(truncate(g[2], 7), 6, 6, 2);
            add(B.a(7), 7, 7, 1);
        } else {
            t.rank = 8;
            add(g[0], 8, 8, 2);
            add(g[1], 1, 1, 2);
            add(g[2], 6, 6, 2);
            add(B.a(7), 7, 7, 1);
        }
    } else if (label == "FI") {
        all_neg();
        t.rank = 4;
        add(B.coords({2, 3, 4, 2}), 1, 1, 2);
        add(B.coords({0, 1, 2, 2}), 4, 4, 2);
        add(B.coords({0, 1, 2, 0}), 3, 3, 2);
        add(B.a(2), 2, 2, 1);
    } else if (label == "FII") {
        for (int i = 1; i <= 3; ++i) {
            fix(i);
            t.h.push_back(B.h(i));
        }
        th(4) = -B.coords({1, 2, 3, 1});
        t.rank = 4;
        add(B.coords({1, 2, 3, 2}), 4, 4, 2);
    } else if (label == "G") {
        all_neg();
        t.rank = 2;
        add(B.coords({2, 1}), 1, 1, 2);
        add(B.a(2), 2, 2, 1);
    } else {
        throw InvolutionError("unknown pair label: " + label);
    }
    return t;
}

std::pair<Involution, Table> build(const std::string& label_in, int n, int r) {
    std::string label = canonical(label_in);
    int er = exceptional_rank(label);
    if (er) n = er;
    char type = type_of(label);
    if (type != 'A' && type != 'B' && type != 'C' && type != 'D' && !er)
        throw InvolutionError("unknown pair label: " + label_in);
    Table t = make_table(label, n, r);
    Involution inv{RootData(type, n), label, r, {}, {}, {}, {}, 0};
    inv.theta = t.theta;
    for (int i = 0; i < n; ++i) {
        if (inv.theta[static_cast<std::size_t>(i)] == inv.rd.simple(i)) inv.pi_theta.push_back(i);
        inv.p.push_back(t.p[static_cast<std::size_t>(i)] - 1);
    }
    inv.h_theta = t.h;
    inv.rank_g_theta = t.rank;
    return {std::move(inv), std::move(t)};
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::all_of(a.begin(), a.end(), [&](int x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

std::vector<int> minus(std::vector<int> a, std::initializer_list<int> rm) {
    a.erase(std::remove_if(a.begin(), a.end(),
                           [&](int x) { return std::find(rm.begin(), rm.end(), x) != rm.end(); }),
            a.end());
    return a;
}

bool contains(const std::vector<int>& a, int x) { return std::find(a.begin(), a.end(), x) != a.end(); }

// Rank of an integer matrix given by rows, over Q.
int rank_rows(std::vector<std::vector<mpq_class>> m) {
    int rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        auto& pr = m[static_cast<std::size_t>(rank)];
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == static_cast<std::size_t>(rank) || m[i][c] == 0) continue;
            mpq_class f = m[i][c] / pr[c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * pr[k];
        }
        ++rank;
    }
    return rank;
}

bool type_a_support(const RootData& rd, const std::vector<int>& s) {
    int edges = 0;
    for (int i : s) {
        int deg = 0;
        for (int j : s)
            if (i != j && rd.sym(i, j) != 0) ++deg;
        if (deg > 2) return false;
        edges += deg;
        if (rd.d()[static_cast<std::size_t>(i)] != rd.d()[static_cast<std::size_t>(s[0])]) return false;
    }
    return edges / 2 == static_cast<int>(s.size()) - 1;
}

std::string h_str(const IVec& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        int c = v[i];
        if (!c) continue;
        if (c < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        if (std::abs(c) != 1) os << std::abs(c);
        os << 'h' << i + 1;
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace

IVec Involution::apply(const IVec& v) const {
    IVec out(v.size(), 0);
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j]) out = out + scaled(theta[j], v[j]);
    return out;
}

bool Involution::fixed(int i) const { return contains(pi_theta, i); }

std::vector<std::vector<mpq_class>> Involution::matrix() const {
    std::size_t n = theta.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) m[r][c] = theta[c][r];
    return m;
}

std::vector<bool> Involution::pi_mask() const {
    std::vector<bool> m(theta.size(), false);
    for (int i : pi_theta) m[static_cast<std::size_t>(i)] = true;
    return m;
}

void Report::add(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
}

bool Report::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::vector<std::string> Report::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.ok) out.push_back(c.detail.empty() ? c.name : c.name + ": " + c.detail);
    return out;
}

Involution build_involution(const std::string& label, int n, int r) { return build(label, n, r).first; }

ThetaSystem gamma_theta(const std::string& label, int n, int r) {
    auto [inv, t] = build(label, n, r);
    ThetaSystem ts{std::move(inv), {}, {}, {}, {}};
    for (const auto& e : t.gamma) {
        ts.betas.push_back(e.beta);
        ts.alpha.push_back(e.alpha - 1);
        ts.alpha_prime.push_back(e.alpha_prime - 1);
        ts.case_tag.push_back(e.tag);
    }
    return ts;
}

std::vector<IVec> delta_theta(const Involution& inv) {
    std::vector<IVec> out;
    for (const auto& b : inv.rd.positive_roots())
        if (inv.apply(b) == -b) out.push_back(b);
    return out;
}

int fixed_dimension(const Involution& inv) {
    auto m = inv.matrix();
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= 1;
    return static_cast<int>(m.size()) - rank_rows(m);
}

Report verify_involution(const Involution& inv) {
    Report rep;
    const RootData& rd = inv.rd;
    int n = rd.rank();
    bool sq = true;
    for (int i = 0; i < n; ++i) sq = sq && inv.apply(inv.theta[static_cast<std::size_t>(i)]) == rd.simple(i);
    rep.add("theta_squared_identity", sq);

    bool ip = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            ip = ip && rd.inner(inv.theta[static_cast<std::size_t>(i)], inv.theta[static_cast<std::size_t>(j)]) ==
                           rd.sym(i, j);
    rep.add("inner_product_preserved", ip);

    std::vector<int> perm = inv.p;
    std::sort(perm.begin(), perm.end());
    bool is_perm = true;
    for (int i = 0; i < n; ++i) is_perm = is_perm && perm[static_cast<std::size_t>(i)] == i;
    rep.add("p_is_permutation", is_perm);

    bool pc = true;
    std::string pdetail;
    for (int i = 0; i < n; ++i) {
        if (inv.fixed(i)) continue;
        IVec v = -inv.theta[static_cast<std::size_t>(i)] - rd.simple(inv.p[static_cast<std::size_t>(i)]);
        bool good = is_nonneg(v);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] && !inv.fixed(static_cast<int>(k))) good = false;
        if (!good) {
            pc = false;
            pdetail += "i=" + std::to_string(i + 1) + " ";
        }
    }
    rep.add("p_condition", pc, pdetail);

    // h_theta spanning set: theta-fixed on coroots and of the right dimension.
    bool hf = true;
    for (const auto& h : inv.h_theta) {
        // theta(alpha_j^vee) = sum_k theta[j]_k (d_k / d_j) alpha_k^vee
        std::vector<mpq_class> img(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            if (!h[static_cast<std::size_t>(j)]) continue;
            for (int k = 0; k < n; ++k)
                img[static_cast<std::size_t>(k)] +=
                    mpq_class(h[static_cast<std::size_t>(j)] *
                              inv.theta[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
                              rd.d()[static_cast<std::size_t>(k)]) /
                    rd.d()[static_cast<std::size_t>(j)];
        }
        for (int k = 0; k < n; ++k) hf = hf && img[static_cast<std::size_t>(k)] == h[static_cast<std::size_t>(k)];
    }
    rep.add("h_theta_fixed", hf);
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& h : inv.h_theta) rows.emplace_back(h.begin(), h.end());
    int fd = fixed_dimension(inv);
    bool dim_ok = static_cast<int>(inv.h_theta.size()) == fd && (rows.empty() || rank_rows(rows) == fd);
    rep.add("h_theta_dimension", dim_ok,
            "encoded " + std::to_string(inv.h_theta.size()) + ", fixed space " + std::to_string(fd));
    return rep;
}

std::vector<int> w_beta(const ThetaSystem& ts, int j) {
    const RootData& rd = ts.inv.rd;
    auto js = static_cast<std::size_t>(j);
    auto s = minus(rd.support(ts.betas[js]), {ts.alpha[js], ts.alpha_prime[js]});
    return rd.longest_word(s);
}

int classify_case(const ThetaSystem& ts, int j) {
    if (j < 0 || j >= static_cast<int>(ts.betas.size())) throw std::out_of_range("classify_case: index");
    const Involution& inv = ts.inv;
    const RootData& rd = inv.rd;
    auto js = static_cast<std::size_t>(j);
    const IVec& beta = ts.betas[js];
    int a = ts.alpha[js], ap = ts.alpha_prime[js];
    IVec sa = rd.simple(a), sap = rd.simple(ap);
    auto supp = rd.support(beta);
    auto wb = w_beta(ts, j);
    IVec wa = rd.apply_word(wb, sa);
    if (!contains(supp, a) || !contains(supp, ap)) throw InvolutionError("classify_case: alpha outside support");

    if (a == ap && beta == sa) return 1;
    if (a == ap && beta == sa + wa) return 2;
    if (a != ap) {
        if (ap == inv.p[static_cast<std::size_t>(a)] && beta == sap + wa &&
            beta == rd.longest_action(minus(supp, {a}), sa) && type_a_support(rd, supp))
            return 3;
        auto non_fixed = supp;
        non_fixed.erase(std::remove_if(non_fixed.begin(), non_fixed.end(), [&](int i) { return inv.fixed(i); }),
                        non_fixed.end());
        int dmin = rd.d()[static_cast<std::size_t>(ap)];
        int n_short = 0;
        bool ap_short = true;
        for (int i : supp) {
            int di = rd.d()[static_cast<std::size_t>(i)];
            if (di < dmin) ap_short = false;
            if (di == dmin) ++n_short;
        }
        bool typeB = n_short == 1 && ap_short && type_a_support(rd, minus(supp, {ap}));
        if (beta == sap + wa && beta == rd.longest_action(minus(supp, {ap}), sap) && non_fixed == std::vector<int>{a} &&
            typeB)
            return 4;
        bool so_rest = true;
        for (int i : minus(supp, {a, ap})) so_rest = so_rest && rd.is_strongly_orthogonal(sap, rd.simple(i));
        if (beta == sap + sa + wa && inv.fixed(ap) && so_rest && rd.inner(sap, beta) == 0 &&
            !rd.is_strongly_orthogonal(sap, beta))
            return 5;
    }
    throw InvolutionError("classify_case: no case matches beta_" + std::to_string(j + 1) + " = " + root_str(beta));
}

Report verify_theta_system(const ThetaSystem& ts) {
    Report rep = verify_involution(ts.inv);
    const Involution& inv = ts.inv;
    const RootData& rd = inv.rd;
    std::size_t m = ts.betas.size();
    auto tag = [](const char* name, std::size_t j) { return std::string(name) + "[" + std::to_string(j + 1) + "]"; };

    for (std::size_t j = 0; j < m; ++j) {
        const IVec& b = ts.betas[j];
        rep.add(tag("positive_root", j), rd.is_positive_root(b), root_str(b));
        rep.add(tag("theta_negates", j), inv.apply(b) == -b);
        for (std::size_t k = j + 1; k < m; ++k)
            rep.add("strongly_orthogonal[" + std::to_string(j + 1) + "," + std::to_string(k + 1) + "]",
                    rd.is_strongly_orthogonal(b, ts.betas[k]));
    }
    for (std::size_t j = 0; j < m; ++j) {
        const IVec& b = ts.betas[j];
        auto so = rd.str_orth(b);
        auto supp = rd.support(b);
        int a = ts.alpha[j], ap = ts.alpha_prime[j];

        bool c1 = true;
        for (std::size_t i = j + 1; i < m; ++i) c1 = c1 && subset_of(rd.support(ts.betas[i]), so);
        rep.add(tag("(i)", j), c1);

        rep.add(tag("(ii)", j), subset_of(minus(supp, {a, ap}), so));

        bool c3 = true;
        for (int i : supp) c3 = c3 && subset_of(rd.support(inv.theta[static_cast<std::size_t>(i)]), supp);
        rep.add(tag("(iii)", j), c3);

        // -w_beta acts on the Dynkin diagram of Supp(beta) \ {alpha, alpha'}.
        auto wb = w_beta(ts, static_cast<int>(j));
        auto rest = minus(supp, {a, ap});
        std::vector<int> src, img;
        bool c4 = true;
        for (int i : rest) {
            if (!inv.fixed(i)) continue;
            src.push_back(i);
            IVec v = -rd.apply_word(wb, rd.simple(i));
            int k = -1;
            for (int t : rest)
                if (v == rd.simple(t)) k = t;
            if (k < 0 || !inv.fixed(k)) c4 = false;
            img.push_back(k);
        }
        std::sort(src.begin(), src.end());
        std::sort(img.begin(), img.end());
        rep.add(tag("(iv)", j), c4 && src == img);

        int mult = b[static_cast<std::size_t>(a)];
        rep.add(tag("mult_alpha_beta", j), mult == 1 || mult == 2, std::to_string(mult));

        int cls = 0;
        std::string err;
        try {
            cls = classify_case(ts, static_cast<int>(j));
        } catch (const std::exception& e) {
            err = e.what();
        }
        rep.add(tag("case_shape", j), cls == ts.case_tag[j],
                err.empty() ? "computed " + std::to_string(cls) + ", tagged " + std::to_string(ts.case_tag[j]) : err);
    }
    return rep;
}

bool is_maximal(const ThetaSystem& ts) {
    return static_cast<int>(ts.betas.size()) + fixed_dimension(ts.inv) == ts.inv.rank_g_theta;
}

int max_strongly_orthogonal_size(const Involution& inv) {
    auto d = delta_theta(inv);
    const RootData& rd = inv.rd;
    std::size_t n = d.size();
    std::vector<std::vector<bool>> ok(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ok[i][j] = rd.is_strongly_orthogonal(d[i], d[j]);
    int best = 0;
    int bound = rd.rank();
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        best = std::max(best, static_cast<int>(chosen.size()));
        if (best >= bound) return;
        for (std::size_t i = start; i < n; ++i) {
            if (static_cast<int>(chosen.size() + (n - i)) <= best) return;
            bool fits = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return ok[c][i]; });
            if (!fits) continue;
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
            if (best >= bound) return;
        }
    };
    rec(0);
    return best;
}

std::vector<std::string> classical_cartan_symbolic(const ThetaSystem& ts) {
    std::vector<std::string> out;
    for (const auto& h : ts.inv.h_theta) out.push_back(h_str(h));
    for (const auto& b : ts.betas) {
        std::string s = root_str(b);
        out.push_back("e_{" + s + "} + f_{-(" + s + ")}");
    }
    return out;
}

std::vector<PairKey> pair_catalog(int max_rank) {
    std::vector<PairKey> out;
    for (int n = 1; n <= max_rank; ++n) {
        out.push_back({"AI", n, 0});
        if (n >= 3 && n % 2) out.push_back({"AII", n, 0});
        for (int r = 1; 2 * r <= n + 1; ++r) out.push_back({"AIII", n, r});
        if (n >= 2) {
            for (int r = 1; r <= n; ++r) out.push_back({"BI", n, r});
            out.push_back({"CI", n, 0});
            for (int r = 2; r <= n - 1; r += 2) out.push_back({"CII-1", n, r});
            if (n % 2 == 0) out.push_back({"CII-2", n, 0});
        }
        if (n >= 4) {
            for (int r = 1; r <= n - 2; ++r) out.push_back({"DI-1", n, r});
            out.push_back({"DI-2", n, 0});
            out.push_back({"DI-3", n, 0});
            if (n % 2 == 0) out.push_back({"DIII-1", n, 0});
            if (n >= 5 && n % 2) out.push_back({"DIII-2", n, 0});
        }
    }
    for (const char* l : {"EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX", "FI", "FII", "G"}) {
        int er = exceptional_rank(l);
        if (er <= max_rank) out.push_back({l, er, 0});
    }
    return out;
}

}  // namespace qc
