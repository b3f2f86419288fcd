#include <doctest.h>

#include "expr.hpp"
#include "qcartan/qrat.hpp"

#include <random>

using qc::Poly;
using qc::QRat;

namespace {

QRat random_qrat(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 4), c(-5, 5), sh(-3, 3);
    auto poly = [&] {
        std::vector<mpz_class> v(static_cast<std::size_t>(deg(rng) + 1));
        for (auto& x : v) x = c(rng);
        if (v.back() == 0) v.back() = 1;
        return Poly(v);
    };
    return QRat::from_polys(poly(), poly()) * QRat::v_pow(sh(rng));
}

// Sample points away from the roots of small integer polynomials.
const std::vector<mpq_class> kPoints{mpq_class(7, 3), mpq_class(-5, 11), mpq_class(13, 2)};

bool eval_ok(const QRat& a, const mpq_class& v, mpq_class& out) {
    try {
        out = a.eval(v);
        return true;
    } catch (const qc::DivisionByZero&) {
        return false;
    }
}

}  // namespace

TEST_CASE("field operations agree with evaluation at rational points") {
    std::mt19937 rng(1);
    for (int t = 0; t < 200; ++t) {
        QRat a = random_qrat(rng), b = random_qrat(rng);
        for (const auto& v : kPoints) {
            mpq_class av, bv, r;
            if (!eval_ok(a, v, av) || !eval_ok(b, v, bv)) continue;
            REQUIRE(eval_ok(a + b, v, r));
            CHECK(r == av + bv);
            REQUIRE(eval_ok(a - b, v, r));
            CHECK(r == av - bv);
            REQUIRE(eval_ok(a * b, v, r));
            CHECK(r == av * bv);
            if (!b.is_zero() && bv != 0) {
                REQUIRE(eval_ok(a / b, v, r));
                CHECK(r == av / bv);
            }
        }
    }
}

TEST_CASE("canonical form is unique") {
    std::mt19937 rng(2);
    for (int t = 0; t < 100; ++t) {
        QRat a = random_qrat(rng), b = random_qrat(rng);
        if (b.is_zero()) continue;
        CHECK((a * b) / b == a);
        CHECK((a + b) - b == a);
        CHECK(a * b == b * a);
        CHECK(((a / b) * b).hash() == a.hash());
        if (!a.is_zero()) CHECK((a / a).is_one());
    }
    CHECK(QRat::from_polys(Poly({-1, 0, 1}), Poly({-1, 1})) == QRat::from_polys(Poly({1, 1}), Poly({1})));
}

TEST_CASE("rendering parses back to the same value") {
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        QRat a = random_qrat(rng);
        CHECK(qc::cli::evaluate_scalar(*qc::cli::parse_expr(a.str())) == a);
    }
}

TEST_CASE("order and value at q = 1") {
    QRat q = QRat::q(), one(1);
    auto r = (q - one).eval_at_one();
    CHECK(r.order == 1);
    r = ((q - one) * (q - one)).inverse().eval_at_one();
    CHECK(r.order == -2);
    CHECK_FALSE(r.defined);
    r = ((q * q - one) / (q - one)).eval_at_one();
    CHECK(r.order == 0);
    CHECK(r.value == 2);
}

TEST_CASE("quantum integers and binomials") {
    for (int m = 0; m <= 6; ++m) {
        auto at1 = qc::q_integer(m, 1).eval_at_one();
        CHECK(at1.value == m);
        CHECK(qc::q_integer(m, 1) == qc::q_integer(m, 1).substitute_inverse());
        for (int k = 0; k <= m; ++k) {
            CHECK(qc::gauss_binomial(m, k, 1) == qc::gauss_binomial(m, m - k, 1));
            if (k > 0 && k < m) {
                // [m,k] = q^{k-m}[m-1,k-1] + q^k[m-1,k]
                QRat rhs = QRat::q_pow(k - m) * qc::gauss_binomial(m - 1, k - 1, 1) +
                           QRat::q_pow(k) * qc::gauss_binomial(m - 1, k, 1);
                CHECK(qc::gauss_binomial(m, k, 1) == rhs);
            }
        }
    }
    CHECK(qc::q_integer(2, 1) == QRat::q() + QRat::q_pow(-1));
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(QRat(0).inverse(), qc::DivisionByZero);
    CHECK_THROWS_AS((QRat::q() - QRat(1)).inverse().eval(1), qc::DivisionByZero);
}
