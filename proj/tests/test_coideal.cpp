#include <doctest.h>

#include "qcartan/coideal.hpp"

#include <memory>
#include <random>

using namespace qc;

namespace {

struct Pair {
    Involution inv;
    Uq uq;
    Coideal co;
    ThetaSystem ts;
    Pair(const std::string& label, int n, int r)
        : inv(build_involution(label, n, r)), uq(inv.rd), co(uq, integral_params(uq, inv)), ts(gamma_theta(label, n, r)) {}
};

Word random_word(std::mt19937& rng, int n, int len) {
    Word w;
    for (int k = 0; k < len; ++k) w += static_cast<char>(std::uniform_int_distribution<int>(0, n - 1)(rng));
    return w;
}

}  // namespace

TEST_CASE("B_J is F_J plus terms of lower F-degree") {
    std::mt19937 rng(11);
    for (int n = 2; n <= 4; ++n) {
        Pair p("AIII", n, (n + 1) / 2);
        for (int t = 0; t < 20; ++t) {
            Word w = random_word(rng, n, std::uniform_int_distribution<int>(1, 4)(rng));
            Element b = p.co.B_word(w);
            Element top = p.uq.word_element(Sign::Minus, w);
            Element rest = b - top;
            for (const auto& [term, c] : rest.terms) CHECK(term.f.size() < w.size());
            for (const auto& [term, c] : top.terms) CHECK(b.coeff(term) == c);
        }
    }
}

TEST_CASE("generators and products of generators are members") {
    for (const auto& [label, n, r] : std::vector<std::tuple<std::string, int, int>>{{"AIII", 3, 1}, {"AIII", 4, 2}, {"AI", 2, 0}, {"CII-1", 3, 2}}) {
        CAPTURE(label);
        Pair p(label, n, r);
        for (int i = 0; i < n; ++i) {
            CHECK(p.co.member(p.co.B(i)));
            for (int j = 0; j < n; ++j) CHECK(p.co.member(p.uq.multiply(p.co.B(i), p.co.B(j))));
        }
        for (const auto& mu : p.co.t_theta()) CHECK(p.co.member(p.uq.K_root(mu)));
        for (int i = 0; i < n; ++i) CHECK(p.co.member(p.uq.E(i)) == p.inv.fixed(i));
    }
}

TEST_CASE("completion is a right inverse of the projection") {
    std::mt19937 rng(12);
    Pair p("AIII", 3, 2);
    for (int t = 0; t < 15; ++t) {
        Word w = random_word(rng, 3, std::uniform_int_distribution<int>(0, 3)(rng));
        Element target = p.uq.word_element(Sign::Minus, w);
        if (target.is_zero()) continue;
        Element x = p.co.complete_to_projection(target);
        CHECK(p.co.project(x) == target);
        CHECK(p.co.member(x));
        // projection of a member is recovered by completion
        CHECK(p.co.complete_to_projection(p.co.project(x)) == x);
    }
}

TEST_CASE("lifts span the centralizer lines") {
    for (const auto& [label, n, r] : std::vector<std::tuple<std::string, int, int>>{{"AIII", 4, 2}, {"AIII", 3, 2}, {"AI", 3, 0}, {"CI", 2, 0}}) {
        CAPTURE(label);
        Pair p(label, n, r);
        for (int j = 0; j < static_cast<int>(p.ts.betas.size()); ++j) {
            Element y = p.co.lift_Y(p.ts, j);
            CHECK_FALSE(y.is_zero());
            CHECK(p.co.verify_lift(p.ts, j, y).ok());
        }
    }
}

TEST_CASE("Cartan elements commute and pair under kappa") {
    for (int n = 2; n <= 4; ++n)
        for (int r = 1; r <= (n + 1) / 2; ++r) {
            CAPTURE(n);
            CAPTURE(r);
            Pair p("AIII", n, r);
            std::vector<Element> hs;
            for (int j = 0; j < static_cast<int>(p.ts.betas.size()); ++j) {
                CartanReport rep = p.co.cartan_element(p.ts, j);
                CHECK_FALSE(rep.kappa_ratio.is_zero());
                CHECK(p.co.member(rep.H));
                hs.push_back(rep.H);
            }
            for (std::size_t a = 0; a < hs.size(); ++a)
                for (std::size_t b = a + 1; b < hs.size(); ++b) CHECK(p.uq.commutator(hs[a], hs[b]).is_zero());
        }
}

TEST_CASE("proportionality") {
    Uq uq(RootData('A', 2));
    Element a = uq.F(0) + uq.E(1);
    QRat c = QRat::q() + QRat(3);
    CHECK(proportionality(c * a, a) == c);
    CHECK(proportionality(a + uq.F(1), a).is_zero());
}

TEST_CASE("parameter validation") {
    Involution inv = build_involution("AIII", 3, 2);
    CoidealParams p = default_params(inv);
    p.c[0] = QRat(0);
    CHECK_THROWS(validate_params(p));
}
