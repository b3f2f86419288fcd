#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qc {

// Dense integer polynomial in v, ascending coefficients, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }
    static Poly constant(const mpz_class& a);
    static Poly monomial(const mpz_class& a, int deg);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& lc() const { return c_.back(); }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }
    std::size_t size() const { return c_.size(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const mpz_class& a) const;
    Poly shifted(int k) const;  // multiply by v^k, k >= 0
    Poly reversed() const;

    mpz_class content() const;
    Poly primitive() const;  // content removed, positive leading coefficient
    int low_order() const;   // index of the first nonzero coefficient
    mpz_class value_at_one() const;
    mpq_class eval(const mpq_class& x) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(c_ == o.c_); }
    std::size_t hash() const;

    static Poly gcd(const Poly& a, const Poly& b);
    // Exact quotient a/b; b must divide a in Z[v].
    static Poly divexact(const Poly& a, const Poly& b);
    // Pseudo-remainder of a by b.
    static Poly prem(const Poly& a, const Poly& b);

private:
    void trim();
    std::vector<mpz_class> c_;
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero in Q(v)") {}
};

// Session exponent N with q = v^N.
int session_N();
void set_session_N(int n);

// Exact element of Q(v): v^shift * num / den with num(0) != 0, den(0) != 0,
// gcd(num, den) = 1 and lc(den) > 0. Zero is num = 0, den = 1, shift = 0.
class QRat {
public:
    QRat() : den_(Poly::constant(1)) {}
    QRat(long n);  // NOLINT(google-explicit-constructor)
    QRat(const mpz_class& n);  // NOLINT(google-explicit-constructor)
    QRat(const mpq_class& r);  // NOLINT(google-explicit-constructor)
    static QRat from_polys(const Poly& num, const Poly& den);
    static QRat v_pow(int k);
    static QRat q_pow(long k);  // v^{kN}
    static QRat q() { return q_pow(1); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    int shift() const { return shift_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    // Numerator and denominator as plain polynomials (powers of v folded in).
    Poly full_num() const;
    Poly full_den() const;

    QRat operator+(const QRat& o) const;
    QRat operator-(const QRat& o) const;
    QRat operator*(const QRat& o) const;
    QRat operator/(const QRat& o) const;
    QRat operator-() const;
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }
    QRat inverse() const;

    bool operator==(const QRat& o) const {
        return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const QRat& o) const { return !(*this == o); }
    std::size_t hash() const;

    QRat substitute_inverse() const;
    mpq_class eval(const mpq_class& v) const;  // throws DivisionByZero at a pole

    // Order of vanishing at v = 1 and the value of the limit when order >= 0.
    struct AtOne {
        int order;
        bool defined;
        mpq_class value;
    };
    AtOne eval_at_one() const;

    // Rendering in q (N = 1) or v; parseable by the CLI scalar grammar.
    std::string str() const;

private:
    void canonicalize(Poly num, Poly den, int shift);
    int shift_ = 0;
    Poly num_;
    Poly den_;
};

QRat gauss_binomial(int m, int k, int d);
// Symmetric quantum integer [m]_{q^d}.
QRat q_integer(int m, int d);

std::string poly_str(const Poly& p, const std::string& var);

}  // namespace qc

template <>
struct std::hash<qc::QRat> {
    std::size_t operator()(const qc::QRat& a) const noexcept { return a.hash(); }
};
