#include "qcartan/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qc {

Weight to_weight(const IVec& v) {
    Weight w;
    w.reserve(v.size());
    for (int x : v) w.emplace_back(x);
    return w;
}

bool is_integral(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](const mpq_class& x) { return x.get_den() == 1; });
}

IVec to_ivec(const Weight& w) {
    IVec v;
    v.reserve(w.size());
    for (const auto& x : w) {
        if (x.get_den() != 1) throw RootError("weight is not in the root lattice");
        v.push_back(static_cast<int>(x.get_num().get_si()));
    }
    return v;
}

IVec operator+(const IVec& a, const IVec& b) {
    IVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

IVec operator-(const IVec& a, const IVec& b) {
    IVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

IVec operator-(const IVec& a) {
    IVec r(a);
    for (int& x : r) x = -x;
    return r;
}

IVec scaled(const IVec& a, int k) {
    IVec r(a);
    for (int& x : r) x *= k;
    return r;
}

bool is_nonneg(const IVec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

bool is_zero_vec(const IVec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

namespace {

void add_edge(std::vector<IVec>& s, int i, int j, int v) {
    s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    s[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
}

bool valid_rank(char t, int n) {
    switch (t) {
        case 'A': return n >= 1;
        case 'B': return n >= 2;
        case 'C': return n >= 2;
        case 'D': return n >= 4;
        case 'E': return n >= 6 && n <= 8;
        case 'F': return n == 4;
        case 'G': return n == 2;
        default: return false;
    }
}

}  // namespace

RootData::RootData(char type, int rank) : type_(type), n_(rank) {
    if (!valid_rank(type, rank)) {
        throw RootError(std::string("invalid finite type ") + type + std::to_string(rank));
    }
    const auto n = static_cast<std::size_t>(rank);
    d_.assign(n, 1);
    s_.assign(n, IVec(n, 0));
    switch (type) {
        case 'A':
            for (int i = 0; i + 1 < rank; ++i) add_edge(s_, i, i + 1, -1);
            break;
        case 'B':
            for (int i = 0; i + 1 < rank; ++i) d_[static_cast<std::size_t>(i)] = 2;
            for (int i = 0; i + 1 < rank; ++i) add_edge(s_, i, i + 1, -2);
            break;
        case 'C':
            d_[n - 1] = 2;
            for (int i = 0; i + 2 < rank; ++i) add_edge(s_, i, i + 1, -1);
            add_edge(s_, rank - 2, rank - 1, -2);
            break;
        case 'D':
            for (int i = 0; i + 2 < rank; ++i) add_edge(s_, i, i + 1, -1);
            add_edge(s_, rank - 3, rank - 1, -1);
            break;
        case 'E':
            add_edge(s_, 0, 2, -1);
            add_edge(s_, 1, 3, -1);
            for (int i = 2; i + 1 < rank; ++i) add_edge(s_, i, i + 1, -1);
            break;
        case 'F':
            d_ = {2, 2, 1, 1};
            add_edge(s_, 0, 1, -2);
            add_edge(s_, 1, 2, -2);
            add_edge(s_, 2, 3, -1);
            break;
        case 'G':
            d_ = {1, 3};
            add_edge(s_, 0, 1, -3);
            break;
        default: break;
    }
    for (std::size_t i = 0; i < n; ++i) s_[i][i] = 2 * d_[i];
    a_.assign(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a_[i][j] = s_[i][j] / d_[i];

    // Positive roots by reflection closure from the simple roots.
    std::vector<IVec> frontier;
    for (int i = 0; i < rank; ++i) {
        IVec e = simple(i);
        pos_index_.emplace(e, static_cast<int>(pos_.size()));
        pos_.push_back(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const auto& b : frontier) {
            for (int i = 0; i < rank; ++i) {
                IVec r = reflect(i, b);
                if (is_nonneg(r) && !is_zero_vec(r) && !pos_index_.count(r)) {
                    pos_index_.emplace(r, static_cast<int>(pos_.size()));
                    pos_.push_back(r);
                    next.push_back(r);
                }
            }
        }
        frontier = std::move(next);
    }
    std::stable_sort(pos_.begin(), pos_.end(), [this](const IVec& x, const IVec& y) {
        int hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return x > y;
    });
    pos_index_.clear();
    for (std::size_t k = 0; k < pos_.size(); ++k) pos_index_.emplace(pos_[k], static_cast<int>(k));

    // Fundamental weights: (nu_i, alpha_j) = d_j delta_ij; solve S c = d_i e_i.
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) m[r][c] = s_[r][c];
            m[r][n] = (r == i) ? d_[i] : 0;
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (m[p][c] == 0) ++p;
            std::swap(m[p], m[c]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c || m[r][c] == 0) continue;
                mpq_class f = m[r][c] / m[c][c];
                for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
            }
        }
        Weight w(n);
        for (std::size_t r = 0; r < n; ++r) w[r] = m[r][n] / m[r][r];
        fund_.push_back(w);
    }
    mpz_class den = 1, nn = 1;
    for (const auto& w : fund_) {
        for (const auto& x : w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        for (int j = 0; j < rank; ++j) {
            mpq_class ip = inner(w, to_weight(simple(j)));
            mpz_lcm(nn.get_mpz_t(), nn.get_mpz_t(), ip.get_den().get_mpz_t());
        }
    }
    wden_ = static_cast<int>(den.get_si());
    N_ = static_cast<int>(nn.get_si());
}

std::string RootData::label() const { return std::string(1, type_) + std::to_string(n_); }

mpq_class RootData::inner(const Weight& a, const Weight& b) const {
    mpq_class r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] != 0) r += a[i] * b[j] * s_[i][j];
        }
    }
    return r;
}

int RootData::inner(const IVec& a, const IVec& b) const {
    if (a.size() != b.size() || a.size() != static_cast<std::size_t>(n_)) throw RootError("dimension mismatch");
    int r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r += a[i] * b[j] * s_[i][j];
    }
    return r;
}

int RootData::inner_simple(int i, const IVec& lambda) const {
    int r = 0;
    const auto& row = s_[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < lambda.size(); ++j) r += row[j] * lambda[j];
    return r;
}

bool RootData::is_positive_root(const IVec& v) const { return pos_index_.count(v) > 0; }

bool RootData::is_root(const IVec& v) const { return is_positive_root(v) || is_positive_root(-v); }

int RootData::root_index(const IVec& v) const {
    auto it = pos_index_.find(v);
    return it == pos_index_.end() ? -1 : it->second;
}

bool RootData::is_strongly_orthogonal(const IVec& b, const IVec& g) const {
    if (!is_root(b) || !is_root(g)) throw RootError("strong orthogonality needs roots");
    return inner(b, g) == 0 && !is_root(b + g);
}

IVec RootData::simple(int i) const {
    IVec e(static_cast<std::size_t>(n_), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return e;
}

IVec RootData::reflect(int i, const IVec& v) const {
    int c = inner_simple(i, v) / d_[static_cast<std::size_t>(i)];
    IVec r(v);
    r[static_cast<std::size_t>(i)] -= c;
    return r;
}

Weight RootData::reflect(int i, const Weight& v) const {
    mpq_class ip = 0;
    for (std::size_t j = 0; j < v.size(); ++j) ip += v[j] * s_[static_cast<std::size_t>(i)][j];
    Weight r(v);
    r[static_cast<std::size_t>(i)] -= ip / d_[static_cast<std::size_t>(i)];
    return r;
}

std::vector<int> RootData::longest_word(const std::vector<int>& subset) const {
    // Descent from a regular dominant weight of the subsystem to the antidominant chamber.
    Weight lam(static_cast<std::size_t>(n_), mpq_class(0));
    for (int i : subset)
        for (std::size_t k = 0; k < lam.size(); ++k) lam[k] += fund_[static_cast<std::size_t>(i)][k];
    std::vector<int> trace;
    for (;;) {
        int pick = -1;
        for (int i : subset) {
            mpq_class ip = 0;
            for (std::size_t j = 0; j < lam.size(); ++j) ip += lam[j] * s_[static_cast<std::size_t>(i)][j];
            if (ip > 0) {
                pick = i;
                break;
            }
        }
        if (pick < 0) break;
        lam = reflect(pick, lam);
        trace.push_back(pick);
    }
    std::reverse(trace.begin(), trace.end());
    return trace;
}

IVec RootData::apply_word(const std::vector<int>& word, const IVec& v) const {
    IVec r(v);
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = reflect(*it, r);
    return r;
}

Weight RootData::apply_word(const std::vector<int>& word, const Weight& v) const {
    Weight r(v);
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = reflect(*it, r);
    return r;
}

IVec RootData::longest_action(const std::vector<int>& subset, const IVec& v) const {
    return apply_word(longest_word(subset), v);
}

Weight RootData::longest_action(const std::vector<int>& subset, const Weight& v) const {
    return apply_word(longest_word(subset), v);
}

std::vector<int> RootData::support(const IVec& v) const {
    std::vector<int> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(static_cast<int>(i));
    return s;
}

int RootData::height(const IVec& v) const { return std::accumulate(v.begin(), v.end(), 0); }

std::vector<int> RootData::orth(const IVec& beta) const {
    std::vector<int> r;
    for (int i = 0; i < n_; ++i)
        if (inner_simple(i, beta) == 0) r.push_back(i);
    return r;
}

std::vector<int> RootData::str_orth(const IVec& beta) const {
    std::vector<int> r;
    for (int i = 0; i < n_; ++i)
        if (is_strongly_orthogonal(simple(i), beta)) r.push_back(i);
    return r;
}

long long RootData::kostant_partition(const IVec& beta) const {
    // p(beta, k): partitions using positive roots with index >= k.
    struct Rec {
        const RootData& rd;
        long long go(const IVec& b, std::size_t k) {
            if (is_zero_vec(b)) return 1;
            if (k >= rd.pos_.size()) return 0;
            auto key = std::make_pair(b, k);
            auto it = rd.kostant_memo_.find(key);
            if (it != rd.kostant_memo_.end()) return it->second;
            long long total = go(b, k + 1);
            IVec rest = b - rd.pos_[k];
            if (is_nonneg(rest)) total += go(rest, k);
            rd.kostant_memo_[key] = total;
            return total;
        }
    };
    if (!is_nonneg(beta)) return 0;
    Rec rec{*this};
    return rec.go(beta, 0);
}

std::vector<IVec> RootData::positive_cone(int max_height) const {
    std::vector<IVec> out;
    IVec cur(static_cast<std::size_t>(n_), 0);
    struct Gen {
        std::vector<IVec>& out;
        IVec& cur;
        int n;
        void go(int i, int left) {
            if (i == n) {
                if (!is_zero_vec(cur)) out.push_back(cur);
                return;
            }
            for (int k = 0; k <= left; ++k) {
                cur[static_cast<std::size_t>(i)] = k;
                go(i + 1, left - k);
            }
            cur[static_cast<std::size_t>(i)] = 0;
        }
    };
    Gen g{out, cur, n_};
    g.go(0, max_height);
    return out;
}

WeightStats weight_stats(const RootData& rd, const Weight& w, const std::vector<int>& tau) {
    WeightStats s;
    s.height = 0;
    s.ht_tau = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0) s.support.push_back(static_cast<int>(i));
        s.height += w[i];
        if (std::find(tau.begin(), tau.end(), static_cast<int>(i)) != tau.end()) s.ht_tau += w[i];
    }
    (void)rd;
    return s;
}

std::string ivec_str(const IVec& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

std::string root_str(const IVec& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        int c = v[i];
        if (!first) os << (c < 0 ? "-" : "+");
        else if (c < 0) os << "-";
        if (std::abs(c) != 1) os << std::abs(c);
        os << "a" << (i + 1);
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace qc
