#include <doctest.h>

#include "qcartan/classical.hpp"
#include "qcartan/involutions.hpp"

using namespace qc;

TEST_CASE("catalog involutions") {
    for (const auto& key : pair_catalog(6)) {
        CAPTURE(key.label);
        CAPTURE(key.n);
        CAPTURE(key.r);
        Involution inv = build_involution(key.label, key.n, key.r);
        const int n = inv.rd.rank();
        // theta^2 = id and theta preserves the form
        for (int i = 0; i < n; ++i) {
            IVec a = inv.rd.simple(i);
            CHECK(inv.apply(inv.apply(a)) == a);
            for (int j = 0; j < n; ++j) CHECK(inv.rd.inner(inv.apply(a), inv.apply(inv.rd.simple(j))) == inv.rd.sym(i, j));
        }
        for (int i : inv.pi_theta) CHECK(inv.apply(inv.rd.simple(i)) == inv.rd.simple(i));
        CHECK(verify_involution(inv).ok());
    }
}

TEST_CASE("theta-systems") {
    for (const auto& key : pair_catalog(5)) {
        CAPTURE(key.label);
        CAPTURE(key.n);
        ThetaSystem ts = gamma_theta(key.label, key.n, key.r);
        const auto& rd = ts.inv.rd;
        for (std::size_t a = 0; a < ts.betas.size(); ++a) {
            const IVec& b = ts.betas[a];
            CHECK(rd.is_positive_root(b));
            CHECK(ts.inv.apply(b) == -b);
            for (std::size_t c = a + 1; c < ts.betas.size(); ++c) CHECK(rd.is_strongly_orthogonal(b, ts.betas[c]));
            CHECK(classify_case(ts, static_cast<int>(a)) == ts.case_tag[a]);
        }
        CHECK(static_cast<int>(ts.betas.size()) <= max_strongly_orthogonal_size(ts.inv));
        if (key.label != "EII" && key.label != "EVI" && key.label != "FII") CHECK(is_maximal(ts));
    }
}

TEST_CASE("theta-system size for AIII") {
    for (int n = 1; n <= 6; ++n)
        for (int r = 1; r <= (n + 1) / 2; ++r) CHECK(static_cast<int>(gamma_theta("AIII", n, r).betas.size()) == r);
}

TEST_CASE("classical Cartan subalgebras") {
    for (const auto& key : pair_catalog(4)) {
        if (std::string("ABCD").find(key.label[0]) == std::string::npos) continue;
        CAPTURE(key.label);
        CHECK(verify_classical_cartan(gamma_theta(key.label, key.n, key.r)).ok());
    }
    for (int n = 2; n <= 4; ++n) CHECK(cayley_on_triple(n, IVec(static_cast<std::size_t>(n), 1)).ok());
}

TEST_CASE("Chevalley matrices satisfy the Serre presentation") {
    for (const auto& [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}}) {
        Chevalley ch = chevalley_matrices(t, n);
        RootData rd(t, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                LieMatrix ef = bracket(ch.e[static_cast<std::size_t>(i)], ch.f[static_cast<std::size_t>(j)]);
                CHECK(ef == (i == j ? ch.h[static_cast<std::size_t>(i)] : LieMatrix(ch.size)));
                LieMatrix he = bracket(ch.h[static_cast<std::size_t>(i)], ch.e[static_cast<std::size_t>(j)]);
                CHECK(he == ch.e[static_cast<std::size_t>(j)].scaled(rd.cartan()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
            }
    }
}

TEST_CASE("bad labels") {
    CHECK_THROWS_AS(build_involution("ZZ", 3), InvolutionError);
    CHECK_THROWS_AS(build_involution("AIII", 4, 3), InvolutionError);
}
