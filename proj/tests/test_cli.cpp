#include <doctest.h>

#include "config.hpp"
#include "expr.hpp"

#include <json.hpp>

#include <random>

using namespace qc;
using namespace qc::cli;

namespace {

int count_leaves(const Node& n) {
    if (n.kids.empty()) return 1;
    int s = 0;
    for (const auto& k : n.kids) s += count_leaves(*k);
    return s;
}

// Random AST over the full grammar, built as text and parsed once.
std::string random_text(std::mt19937& rng, int depth) {
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    auto idx = [&] { return std::to_string(pick(3) + 1); };
    if (depth == 0) {
        switch (pick(8)) {
            case 0: return std::to_string(pick(5) + 1);
            case 1: return "q";
            case 2: return "E" + idx();
            case 3: return "F" + idx();
            case 4: return "B" + idx();
            case 5: return "Ki" + idx();
            case 6: return "Ki-" + idx();
            default: return "K[1/2,-1," + std::to_string(pick(3)) + "]";
        }
    }
    std::string a = random_text(rng, depth - 1), b = random_text(rng, depth - 1);
    switch (pick(8)) {
        case 0: return a + " + " + b;
        case 1: return a + " - " + b;
        case 2: return a + " " + b;
        case 3: return "(" + a + ")^" + std::to_string(pick(3));
        case 4: return "[" + a + ", " + b + "]_q";
        case 5: return "kappa(" + a + ")";
        case 6: return "T2(" + a + ")";
        default: return "ad(E1 F2, " + a + ")";
    }
}

}  // namespace

TEST_CASE("parse shapes") {
    NodePtr n = parse_expr("B2 B1 - q B1 B2");
    CHECK(n->kind == Node::Kind::Sum);
    CHECK(count_leaves(*n) == 5);
    n = parse_expr("[B3,[B2,B1]_q]_q");
    CHECK(n->kind == Node::Kind::QComm);
    CHECK(n->kids[1]->kind == Node::Kind::QComm);
    n = parse_expr("kappa(E1)");
    CHECK(n->kind == Node::Kind::Func);
    CHECK(n->name == "kappa");
    n = parse_expr("Ki-2");
    CHECK(n->gen == 'i');
    CHECK(n->index == 2);
    CHECK_THROWS_AS(parse_expr("Ki - 2"), SyntaxError);
}

TEST_CASE("syntax errors carry positions") {
    auto pos = [](const std::string& s) -> std::pair<int, int> {
        try {
            parse_expr(s);
        } catch (const SyntaxError& e) {
            return {e.line, e.column};
        }
        return {0, 0};
    };
    CHECK(pos("E1 + ") == std::pair{1, 6});
    CHECK(pos("E1 +\n  F2 )") == std::pair{2, 6});
    CHECK(pos("[E1, F1") == std::pair{1, 8});
    CHECK(pos("E") == std::pair{1, 2});
    CHECK(pos("E1 $ F1") == std::pair{1, 4});
}

TEST_CASE("render round trip") {
    std::mt19937 rng(13);
    for (int t = 0; t < 100; ++t) {
        std::string text = random_text(rng, 3);
        CAPTURE(text);
        NodePtr n = parse_expr(text);
        std::string r = render(*n);
        CHECK(*parse_expr(r) == *n);
        CHECK(render(*parse_expr(r)) == r);
    }
}

TEST_CASE("evaluation") {
    Involution inv = build_involution("AIII", 2, 1);
    Uq uq(inv.rd);
    Coideal co(uq, default_params(inv));
    Context ctx{uq, &co};
    auto ev = [&](const std::string& s) { return evaluate(*parse_expr(s), ctx); };
    CHECK(ev("E1 F1 - F1 E1") == ev("(q - q^-1)^-1 (Ki1 - Ki-1)"));
    CHECK(ev("[E1, F1]") == ev("E1 F1 - F1 E1"));
    CHECK(ev("[E1, F2]_q") == ev("E1 F2 - q F2 E1"));
    CHECK(ev("B1") == ev("F1 + E2 Ki-1"));
    CHECK(ev("Ki1 / Ki1") == uq.one());
    CHECK(ev("K[1,0]^-2") == ev("Ki-1 Ki-1"));
    CHECK(ev("kappa(E1)") == uq.kappa(uq.E(0)));
    CHECK(ev("ad(E1, F2)") == uq.ad_E(0, uq.F(1)));
    CHECK(ev("T[1,-1]") == uq.K_root({1, -1}));
    CHECK_THROWS_AS(ev("E3"), EvalError);
    CHECK_THROWS_AS(ev("E1 / E1"), EvalError);
    CHECK_THROWS_AS(ev("T[1,0]"), EvalError);
    CHECK_THROWS_AS(evaluate(*parse_expr("B1"), {uq, nullptr}), EvalError);
}

TEST_CASE("config") {
    Config c = parse_config("# session\npair = AIII\nn=4\n\nr = 2\nc = 1, q, (q+1)/2, 1\n");
    CHECK(c.pair == "AIII");
    CHECK(c.n == 4);
    CHECK(c.r == 2);
    REQUIRE(c.c.size() == 4);
    CHECK(c.c[2] == "(q+1)/2");
    CHECK_THROWS_AS(parse_config("N = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("colour = red\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("n\n"), ConfigError);
    CHECK(split_list("K[1,2], q, (a,b)") == std::vector<std::string>{"K[1,2]", "q", "(a,b)"});

    Involution inv = build_involution("AIII", 4, 2);
    Uq uq(inv.rd);
    CoidealParams p = session_params(uq, inv, c);
    CHECK(p.c[1] == QRat::q());
    CHECK_THROWS(session_params(uq, inv, parse_config("c = 1, 2\n")));
}

TEST_CASE("json output") {
    Uq uq(RootData('A', 2));
    Element a = (QRat(1) / (QRat::q() + QRat(1))) * uq.multiply(uq.F(0), uq.multiply(uq.K(uq.roots().fundamental_weights()[1]), uq.E(1)));
    auto j = nlohmann::json::parse(uq.json(a));
    REQUIRE(j["terms"].size() == 1);
    const auto& t = j["terms"][0];
    CHECK(t["f"] == nlohmann::json::array({1}));
    CHECK(t["e"] == nlohmann::json::array({2}));
    CHECK(t["k"] == nlohmann::json::array({"1/3", "2/3"}));
    CHECK(t["c"]["num"] == nlohmann::json::array({1}));
    CHECK(t["c"]["den"] == nlohmann::json::array({1, 1}));
    auto c = nlohmann::json::parse(qrat_json(QRat::q() - QRat::q_pow(-1)));
    CHECK(c["num"] == nlohmann::json::array({-1, 0, 1}));
    CHECK(c["den"] == nlohmann::json::array({0, 1}));
}
