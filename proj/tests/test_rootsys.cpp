#include <doctest.h>

#include "oracles.hpp"
#include "qcartan/rootsys.hpp"

#include <algorithm>
#include <set>

using qc::IVec;
using qc::RootData;
using qc::operator-;

namespace {

const std::vector<std::pair<char, int>> kTypes{{'A', 1}, {'A', 4}, {'B', 3}, {'C', 3}, {'D', 4}, {'D', 5},
                                               {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};

int expected_positive(char t, int n) {
    switch (t) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
        case 'F': return 24;
        default: return 6;
    }
}

}  // namespace

TEST_CASE("positive roots") {
    for (const auto& [t, n] : kTypes) {
        CAPTURE(t);
        CAPTURE(n);
        RootData rd(t, n);
        CHECK(static_cast<int>(rd.positive_roots().size()) == expected_positive(t, n));
        auto mine = oracle::positive_roots_from_cartan(rd.cartan());
        std::set<IVec> a(mine.begin(), mine.end()), b(rd.positive_roots().begin(), rd.positive_roots().end());
        CHECK(a == b);
    }
}

TEST_CASE("longest element") {
    for (const auto& [t, n] : kTypes) {
        RootData rd(t, n);
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        auto w = rd.longest_word(all);
        CHECK(w.size() == rd.positive_roots().size());
        // w0 sends every positive root to a negative root.
        for (const auto& b : rd.positive_roots()) CHECK(rd.is_positive_root(-rd.apply_word(w, b)));
    }
}

TEST_CASE("reflections preserve the form and the root set") {
    for (const auto& [t, n] : kTypes) {
        RootData rd(t, n);
        for (int i = 0; i < n; ++i)
            for (const auto& b : rd.positive_roots()) {
                IVec s = rd.reflect(i, b);
                CHECK(rd.is_root(s));
                CHECK(rd.inner(s, s) == rd.inner(b, b));
                CHECK(rd.reflect(i, s) == b);
            }
    }
}

TEST_CASE("strong orthogonality") {
    RootData b2('B', 2);
    // e1 and e2 are orthogonal but e1 + e2 is a root.
    IVec e1{1, 1}, e2{0, 1};
    CHECK(b2.is_orthogonal(e1, e2));
    CHECK_FALSE(b2.is_strongly_orthogonal(e1, e2));
    RootData a3('A', 3);
    CHECK(a3.is_strongly_orthogonal({1, 0, 0}, {0, 0, 1}));
}

TEST_CASE("Kostant partition function matches the brute-force count") {
    for (const auto& [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
        RootData rd(t, n);
        for (const auto& beta : rd.positive_cone(5)) CHECK(rd.kostant_partition(beta) == oracle::kostant(rd.positive_roots(), beta));
    }
}

TEST_CASE("bad input") {
    CHECK_THROWS(RootData('A', 0));
    CHECK_THROWS(RootData('E', 5));
    CHECK_THROWS(RootData('X', 2));
}
