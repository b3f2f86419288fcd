#include "qcartan/qrat.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace qc {

namespace {
std::atomic<int> g_session_N{1};
}

int session_N() { return g_session_N.load(std::memory_order_relaxed); }

void set_session_N(int n) {
    if (n < 1) throw std::invalid_argument("N must be a positive integer");
    g_session_N.store(n, std::memory_order_relaxed);
}

// ---------------------------------------------------------------- Poly

Poly Poly::constant(const mpz_class& a) {
    Poly p;
    if (a != 0) p.c_.push_back(a);
    return p;
}

Poly Poly::monomial(const mpz_class& a, int deg) {
    Poly p;
    if (a != 0) {
        p.c_.assign(static_cast<std::size_t>(deg) + 1, mpz_class(0));
        p.c_.back() = a;
    }
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    const auto& a = c_.size() >= o.c_.size() ? c_ : o.c_;
    const auto& b = c_.size() >= o.c_.size() ? o.c_ : c_;
    r.c_ = a;
    for (std::size_t i = 0; i < b.size(); ++i) r.c_[i] += b[i];
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            mpz_addmul(r.c_[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
        }
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const mpz_class& a) const {
    if (a == 0) return {};
    Poly r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(static_cast<std::size_t>(k), mpz_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::reversed() const {
    Poly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitive() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (lc() < 0) g = -g;
    if (g == 1) return *this;
    Poly r = *this;
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return r;
}

int Poly::low_order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

mpz_class Poly::value_at_one() const {
    mpz_class s = 0;
    for (const auto& x : c_) s += x;
    return s;
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + mpq_class(*it);
    return s;
}

std::size_t Poly::hash() const {
    std::size_t h = c_.size();
    for (const auto& x : c_) {
        h ^= static_cast<std::size_t>(mpz_get_si(x.get_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Poly Poly::prem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    Poly r = a;
    const int db = b.degree();
    const mpz_class& lb = b.lc();
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        mpz_class lr = r.lc();
        for (auto& x : r.c_) x *= lb;
        for (int j = 0; j <= db; ++j) {
            mpz_submul(r.c_[static_cast<std::size_t>(shift + j)].get_mpz_t(), lr.get_mpz_t(),
                       b.c_[static_cast<std::size_t>(j)].get_mpz_t());
        }
        r.trim();
    }
    return r;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.primitive().scaled(b.is_zero() ? 0 : b.content());
    if (b.is_zero()) return a.primitive().scaled(a.content());
    mpz_class g;
    mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Poly x = a.primitive(), y = b.primitive();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) {
            x = Poly::constant(1);
            break;
        }
        Poly r = prem(x, y);
        x = std::move(y);
        y = r.primitive();
    }
    return x.primitive().scaled(g);
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return {};
    if (b.degree() == 0) {
        Poly r = a;
        for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), b.c_[0].get_mpz_t());
        return r;
    }
    const int db = b.degree();
    const int dq = a.degree() - db;
    if (dq < 0) throw std::logic_error("divexact: inexact polynomial division");
    std::vector<mpz_class> rem = a.c_;
    std::vector<mpz_class> quo(static_cast<std::size_t>(dq) + 1);
    for (int k = dq; k >= 0; --k) {
        mpz_class& t = rem[static_cast<std::size_t>(k + db)];
        if (t != 0) {
            mpz_divexact(quo[static_cast<std::size_t>(k)].get_mpz_t(), t.get_mpz_t(), b.lc().get_mpz_t());
            for (int j = 0; j <= db; ++j) {
                mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(),
                           quo[static_cast<std::size_t>(k)].get_mpz_t(),
                           b.c_[static_cast<std::size_t>(j)].get_mpz_t());
            }
        }
    }
    return Poly(std::move(quo));
}

// ---------------------------------------------------------------- QRat

QRat::QRat(long n) : num_(Poly::constant(n)), den_(Poly::constant(1)) {}
QRat::QRat(const mpz_class& n) : num_(Poly::constant(n)), den_(Poly::constant(1)) {}
QRat::QRat(const mpq_class& r) {
    canonicalize(Poly::constant(r.get_num()), Poly::constant(r.get_den()), 0);
}

QRat QRat::from_polys(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero();
    QRat r;
    r.canonicalize(num, den, 0);
    return r;
}

QRat QRat::v_pow(int k) {
    QRat r;
    r.num_ = Poly::constant(1);
    r.shift_ = k;
    return r;
}

QRat QRat::q_pow(long k) { return v_pow(static_cast<int>(k * session_N())); }

void QRat::canonicalize(Poly num, Poly den, int shift) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
        shift_ = 0;
        num_ = Poly();
        den_ = Poly::constant(1);
        return;
    }
    int ln = num.low_order();
    int ld = den.low_order();
    if (ln) num = Poly(std::vector<mpz_class>(num.coeffs().begin() + ln, num.coeffs().end()));
    if (ld) den = Poly(std::vector<mpz_class>(den.coeffs().begin() + ld, den.coeffs().end()));
    shift += ln - ld;
    if (!den.is_one()) {
        if (den.degree() == 0) {
            mpz_class g;
            mpz_class cn = num.content();
            mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), den[0].get_mpz_t());
            if (den[0] < 0) g = -g;
            if (g != 1) {
                num = Poly::divexact(num, Poly::constant(g));
                den = Poly::divexact(den, Poly::constant(g));
            }
        } else {
            Poly g = Poly::gcd(num, den);
            if (g.lc() < 0) g = -g;
            if (!g.is_one()) {
                num = Poly::divexact(num, g);
                den = Poly::divexact(den, g);
            }
            if (den.lc() < 0) {
                num = -num;
                den = -den;
            }
        }
    }
    shift_ = shift;
    num_ = std::move(num);
    den_ = std::move(den);
}

Poly QRat::full_num() const { return shift_ > 0 ? num_.shifted(shift_) : num_; }
Poly QRat::full_den() const { return shift_ < 0 ? den_.shifted(-shift_) : den_; }

QRat QRat::operator+(const QRat& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const int s = std::min(shift_, o.shift_);
    QRat r;
    if (den_ == o.den_) {
        Poly n = num_.shifted(shift_ - s) + o.num_.shifted(o.shift_ - s);
        if (den_.is_one()) {
            if (n.is_zero()) return r;
            int ln = n.low_order();
            if (ln) n = Poly(std::vector<mpz_class>(n.coeffs().begin() + ln, n.coeffs().end()));
            r.shift_ = s + ln;
            r.num_ = std::move(n);
            return r;
        }
        r.canonicalize(std::move(n), den_, s);
        return r;
    }
    Poly n = (num_ * o.den_).shifted(shift_ - s) + (o.num_ * den_).shifted(o.shift_ - s);
    r.canonicalize(std::move(n), den_ * o.den_, s);
    return r;
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat QRat::operator-(const QRat& o) const { return *this + (-o); }

QRat QRat::operator*(const QRat& o) const {
    if (is_zero() || o.is_zero()) return {};
    QRat r;
    if (den_.is_one() && o.den_.is_one()) {
        r.num_ = num_ * o.num_;
        r.shift_ = shift_ + o.shift_;
        return r;
    }
    Poly n1 = num_, d2 = o.den_, n2 = o.num_, d1 = den_;
    if (!d2.is_one()) {
        Poly g = Poly::gcd(n1, d2);
        if (g.degree() > 0 || g[0] != 1) {
            if (g.lc() < 0) g = -g;
            n1 = Poly::divexact(n1, g);
            d2 = Poly::divexact(d2, g);
        }
    }
    if (!d1.is_one()) {
        Poly g = Poly::gcd(n2, d1);
        if (g.degree() > 0 || g[0] != 1) {
            if (g.lc() < 0) g = -g;
            n2 = Poly::divexact(n2, g);
            d1 = Poly::divexact(d1, g);
        }
    }
    Poly n = n1 * n2;
    Poly d = d1 * d2;
    if (d.lc() < 0) {
        n = -n;
        d = -d;
    }
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    r.shift_ = shift_ + o.shift_;
    if (r.den_.degree() == 0 && !r.den_.is_one()) r.canonicalize(r.num_, r.den_, r.shift_);
    return r;
}

QRat QRat::inverse() const {
    if (is_zero()) throw DivisionByZero();
    QRat r;
    Poly n = den_, d = num_;
    if (d.lc() < 0) {
        n = -n;
        d = -d;
    }
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    r.shift_ = -shift_;
    if (r.den_.degree() == 0 && !r.den_.is_one()) r.canonicalize(r.num_, r.den_, r.shift_);
    return r;
}

QRat QRat::operator/(const QRat& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return *this * o.inverse();
}

std::size_t QRat::hash() const {
    return num_.hash() * 31 + den_.hash() * 17 + static_cast<std::size_t>(shift_);
}

QRat QRat::substitute_inverse() const {
    if (is_zero()) return {};
    QRat r;
    Poly n = num_.reversed(), d = den_.reversed();
    if (d.lc() < 0) {
        n = -n;
        d = -d;
    }
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    r.shift_ = -shift_ - num_.degree() + den_.degree();
    return r;
}

mpq_class QRat::eval(const mpq_class& v) const {
    mpq_class d = den_.eval(v);
    if (d == 0) throw DivisionByZero();
    mpq_class p = 1;
    if (shift_ != 0) {
        if (v == 0) {
            if (shift_ < 0) throw DivisionByZero();
            return 0;
        }
        mpq_class base = shift_ > 0 ? v : mpq_class(1) / v;
        for (int i = 0; i < std::abs(shift_); ++i) p *= base;
    }
    return p * num_.eval(v) / d;
}

namespace {
// Strip factors (v - 1); returns the multiplicity.
int strip_v_minus_one(Poly& p) {
    int k = 0;
    while (!p.is_zero() && p.value_at_one() == 0) {
        const auto& c = p.coeffs();
        std::vector<mpz_class> q(c.size() - 1);
        mpz_class acc = 0;
        for (std::size_t i = c.size() - 1; i >= 1; --i) {
            acc += c[i];
            q[i - 1] = acc;
        }
        p = Poly(std::move(q));
        ++k;
    }
    return k;
}
}  // namespace

QRat::AtOne QRat::eval_at_one() const {
    if (is_zero()) return {0, true, 0};
    Poly n = num_, d = den_;
    int on = strip_v_minus_one(n);
    int od = strip_v_minus_one(d);
    AtOne r{on - od, false, 0};
    if (r.order > 0) {
        r.defined = true;
        r.value = 0;
    } else if (r.order == 0) {
        r.defined = true;
        r.value = mpq_class(n.value_at_one(), d.value_at_one());
        r.value.canonicalize();
    }
    return r;
}

std::string poly_str(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        mpz_class c = p[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        mpz_class a = abs(c);
        if (i == 0) os << a;
        else {
            if (a != 1) os << a << " ";
            os << var;
            if (i != 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {
// Laurent polynomial v^shift * p rendered in descending powers.
std::string laurent_str(const Poly& p, int shift, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        mpz_class c = p[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        int e = i + shift;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        mpz_class a = abs(c);
        if (e == 0) os << a;
        else {
            if (a != 1) os << a << " ";
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}
}  // namespace

std::string QRat::str() const {
    const int n = session_N();
    std::string var = "v";
    Poly num = num_, den = den_;
    int shift = shift_;
    // Render in q when every exponent is a multiple of N.
    auto divisible = [n](const Poly& p) {
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0 && i % static_cast<std::size_t>(n) != 0) return false;
        return true;
    };
    if (n == 1 || (divisible(num) && divisible(den) && shift % n == 0)) {
        var = "q";
        if (n > 1) {
            auto compress = [n](const Poly& p) {
                std::vector<mpz_class> c;
                for (std::size_t i = 0; i < p.size(); i += static_cast<std::size_t>(n)) c.push_back(p[i]);
                return Poly(std::move(c));
            };
            num = compress(num);
            den = compress(den);
            shift /= n;
        }
    }
    if (den.is_one()) return laurent_str(num, shift, var);
    std::string ns = laurent_str(num, std::max(shift, 0), var);
    std::string ds = laurent_str(den, std::max(-shift, 0), var);
    return "(" + ns + ")/(" + ds + ")";
}

QRat q_integer(int m, int d) {
    // (t^m - t^-m)/(t - t^-1) = t^{-(m-1)} (1 + t^2 + ... + t^{2(m-1)})
    if (m == 0) return {};
    if (m < 0) return -q_integer(-m, d);
    const int n = session_N() * d;
    std::vector<mpz_class> c(static_cast<std::size_t>(2 * (m - 1) * n) + 1, mpz_class(0));
    for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(2 * i * n)] = 1;
    return QRat::from_polys(Poly(std::move(c)), Poly::constant(1)) * QRat::v_pow(-(m - 1) * n);
}

QRat gauss_binomial(int m, int k, int d) {
    if (k < 0 || k > m || d < 1) throw std::out_of_range("gauss_binomial: need 0 <= k <= m and d >= 1");
    // Pascal recurrence [m,k] = t^k [m-1,k] + t^{-(m-k)} [m-1,k-1], t = q^d.
    std::vector<QRat> row{QRat(1)};
    for (int mm = 1; mm <= m; ++mm) {
        std::vector<QRat> next(static_cast<std::size_t>(mm) + 1);
        for (int kk = 0; kk <= mm; ++kk) {
            QRat s;
            if (kk < mm) s += QRat::q_pow(static_cast<long>(kk) * d) * row[static_cast<std::size_t>(kk)];
            if (kk > 0) s += QRat::q_pow(-static_cast<long>(mm - kk) * d) * row[static_cast<std::size_t>(kk - 1)];
            next[static_cast<std::size_t>(kk)] = s;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace qc
