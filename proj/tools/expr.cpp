#include "expr.hpp"

#include <cctype>
#include <sstream>

namespace qc::cli {

bool Node::operator==(const Node& o) const {
    if (kind != o.kind || number != o.number || gen != o.gen || index != o.index || weight != o.weight ||
        name != o.name || ops != o.ops || word != o.word || kids.size() != o.kids.size())
        return false;
    for (std::size_t i = 0; i < kids.size(); ++i)
        if (!(*kids[i] == *o.kids[i])) return false;
    return true;
}

namespace {

struct Token {
    enum class T { Int, Ident, Sym, End } t;
    std::string text;
    int line, col;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') ++line, col = 1;
            else ++col;
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        int l = line, cl = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::T::Int, s.substr(i, j - i), l, cl});
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
            std::string id = s.substr(i, j - i);
            // "Ki-" directly followed by a digit is the inverse generator.
            if (id == "Ki" && j + 1 < s.size() && s[j] == '-' && std::isdigit(static_cast<unsigned char>(s[j + 1])))
                id += '-', ++j;
            out.push_back({Token::T::Ident, id, l, cl});
            advance(j - i);
        } else if (std::string("+-*/^()[],_").find(c) != std::string::npos) {
            out.push_back({Token::T::Sym, std::string(1, c), l, cl});
            advance(1);
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", l, cl);
        }
    }
    out.push_back({Token::T::End, "", line, col});
    return out;
}

NodePtr make(Node::Kind k, const Token& at) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->line = at.line;
    n->column = at.col;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& s) : toks_(lex(s)) {}

    NodePtr parse() {
        NodePtr e = expr();
        if (peek().t != Token::T::End) fail("unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool is_sym(const char* s) const { return peek().t == Token::T::Sym && peek().text == s; }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw SyntaxError(t.t == Token::T::End ? msg + " at end of input" : msg, t.line, t.col);
    }
    void expect(const char* s) {
        if (!is_sym(s)) fail(std::string("expected '") + s + "'");
        ++pos_;
    }
    int integer() {
        if (peek().t != Token::T::Int) fail("expected integer");
        const Token& t = next();
        if (t.text.size() > 9) throw SyntaxError("integer too large", t.line, t.col);
        return std::stoi(t.text);
    }
    mpq_class rational() {
        bool neg = false;
        if (is_sym("-")) ++pos_, neg = true;
        if (peek().t != Token::T::Int) fail("expected integer");
        mpq_class r(mpz_class(next().text));
        if (is_sym("/")) {
            ++pos_;
            if (peek().t != Token::T::Int) fail("expected integer");
            const Token& t = next();
            mpz_class d(t.text);
            if (d == 0) throw SyntaxError("zero denominator", t.line, t.col);
            r /= mpq_class(d);
            r.canonicalize();
        }
        return neg ? mpq_class(-r) : r;
    }

    NodePtr expr() {
        auto n = make(Node::Kind::Sum, peek());
        char op = '+';
        if (is_sym("-")) ++pos_, op = '-';
        else if (is_sym("+")) ++pos_;
        n->ops.push_back(op);
        n->kids.push_back(term());
        while (is_sym("+") || is_sym("-")) {
            n->ops.push_back(next().text[0]);
            n->kids.push_back(term());
        }
        if (n->kids.size() == 1 && n->ops[0] == '+') return n->kids[0];
        return n;
    }

    bool starts_atom() const {
        const Token& t = peek();
        if (t.t == Token::T::Int || t.t == Token::T::Ident) return true;
        return is_sym("(") || is_sym("[");
    }

    NodePtr term() {
        auto n = make(Node::Kind::Product, peek());
        n->ops.push_back('*');
        n->kids.push_back(power());
        for (;;) {
            if (is_sym("*") || is_sym("/")) {
                n->ops.push_back(next().text[0]);
                n->kids.push_back(power());
            } else if (starts_atom()) {
                n->ops.push_back('*');
                n->kids.push_back(power());
            } else {
                break;
            }
        }
        if (n->kids.size() == 1) return n->kids[0];
        return n;
    }

    NodePtr power() {
        NodePtr base = atom();
        if (!is_sym("^")) return base;
        auto n = make(Node::Kind::Power, peek());
        ++pos_;
        bool neg = false;
        if (is_sym("-")) ++pos_, neg = true;
        n->index = neg ? -integer() : integer();
        n->kids.push_back(base);
        return n;
    }

    NodePtr atom() {
        const Token& t = peek();
        if (t.t == Token::T::Int) {
            auto n = make(Node::Kind::Number, t);
            n->number = mpq_class(mpz_class(next().text));
            return n;
        }
        if (is_sym("(")) {
            ++pos_;
            NodePtr e = expr();
            expect(")");
            return e;
        }
        if (is_sym("[")) {
            auto n = make(Node::Kind::QComm, t);
            ++pos_;
            n->kids.push_back(expr());
            expect(",");
            n->kids.push_back(expr());
            expect("]");
            if (is_sym("_")) {
                ++pos_;
                n->kids.push_back(atom());
            }
            return n;
        }
        if (t.t != Token::T::Ident) fail("expected an operand");
        const std::string id = next().text;
        if (id == "q") return make(Node::Kind::Q, t);
        if (id == "v") return make(Node::Kind::V, t);
        if (id == "E" || id == "F" || id == "B" || id == "Ki" || id == "Ki-") {
            auto n = make(Node::Kind::Gen, t);
            n->gen = id == "Ki" ? 'k' : id == "Ki-" ? 'i' : id[0];
            n->index = integer();
            return n;
        }
        if (id == "K" || (id == "T" && is_sym("["))) {
            auto n = make(Node::Kind::Gen, t);
            n->gen = id[0];
            expect("[");
            n->weight.push_back(rational());
            while (is_sym(",")) {
                ++pos_;
                n->weight.push_back(rational());
            }
            expect("]");
            if (n->gen == 'T')
                for (const auto& w : n->weight)
                    if (w.get_den() != 1) throw SyntaxError("T_theta exponents must be integers", t.line, t.col);
            return n;
        }
        if (id == "kappa" || id == "sigma" || id == "phi" || id == "phiP" || id == "T" || id == "Tinv") {
            auto n = make(Node::Kind::Func, t);
            n->name = id;
            if (id == "T" || id == "Tinv") n->index = integer();
            expect("(");
            n->kids.push_back(expr());
            expect(")");
            return n;
        }
        if (id == "ad") {
            auto n = make(Node::Kind::Ad, t);
            expect("(");
            do {
                if (peek().t != Token::T::Ident || (peek().text != "E" && peek().text != "F"))
                    fail("expected E or F in ad word");
                char k = next().text[0];
                n->word.emplace_back(k, integer());
            } while (!is_sym(","));
            ++pos_;
            n->kids.push_back(expr());
            expect(")");
            return n;
        }
        throw SyntaxError("unknown identifier '" + id + "'", t.line, t.col);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

bool is_atomic(const Node& n) {
    switch (n.kind) {
        case Node::Kind::Sum:
        case Node::Kind::Product:
        case Node::Kind::Power:
            return false;
        default:
            return true;
    }
}

std::string paren(const Node& n, bool need) {
    std::string s = render(n);
    return need ? "(" + s + ")" : s;
}

}  // namespace

NodePtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string render(const Node& n) {
    switch (n.kind) {
        case Node::Kind::Number:
            return n.number.get_str();
        case Node::Kind::Q:
            return "q";
        case Node::Kind::V:
            return "v";
        case Node::Kind::Gen: {
            if (n.gen == 'k') return "Ki" + std::to_string(n.index);
            if (n.gen == 'i') return "Ki-" + std::to_string(n.index);
            if (n.gen == 'K' || n.gen == 'T') {
                std::string s(1, n.gen);
                s += '[';
                for (std::size_t i = 0; i < n.weight.size(); ++i) {
                    if (i) s += ',';
                    s += n.weight[i].get_str();
                }
                return s + ']';
            }
            return std::string(1, n.gen) + std::to_string(n.index);
        }
        case Node::Kind::Sum: {
            std::string s;
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                // A nested sum keeps its parentheses so the tree shape survives.
                std::string k = paren(*n.kids[i], n.kids[i]->kind == Node::Kind::Sum);
                if (i == 0) s = n.ops[0] == '-' ? "-" + k : k;
                else s += (n.ops[i] == '-' ? " - " : " + ") + k;
            }
            return s;
        }
        case Node::Kind::Product: {
            std::string s;
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                const Node& k = *n.kids[i];
                bool need = k.kind == Node::Kind::Sum || k.kind == Node::Kind::Product;
                if (i == 0) s = paren(k, need);
                else s += (n.ops[i] == '/' ? " / " : " * ") + paren(k, need);
            }
            return s;
        }
        case Node::Kind::Power:
            return paren(*n.kids[0], !is_atomic(*n.kids[0])) + "^" + std::to_string(n.index);
        case Node::Kind::QComm: {
            std::string s = "[" + render(*n.kids[0]) + ", " + render(*n.kids[1]) + "]";
            if (n.kids.size() == 3) s += "_" + paren(*n.kids[2], !is_atomic(*n.kids[2]));
            return s;
        }
        case Node::Kind::Func:
            return n.name + (n.name == "T" || n.name == "Tinv" ? std::to_string(n.index) : "") + "(" +
                   render(*n.kids[0]) + ")";
        case Node::Kind::Ad: {
            std::string s = "ad(";
            for (std::size_t i = 0; i < n.word.size(); ++i) {
                if (i) s += ' ';
                s += n.word[i].first + std::to_string(n.word[i].second);
            }
            return s + ", " + render(*n.kids[0]) + ")";
        }
    }
    return {};
}

namespace {

[[noreturn]] void eval_fail(const Node& n, const std::string& msg) { throw EvalError(msg, n.line, n.column); }

// c K_mu as (c, k numerators), if `a` is a single group-like term.
bool as_grouplike(const Element& a, QRat& c, IVec& k) {
    if (a.terms.size() != 1) return false;
    const auto& [t, coef] = a.terms[0];
    if (!t.f.empty() || !t.e.empty()) return false;
    c = coef;
    k = t.k;
    return true;
}

Element invert(const Node& at, const Element& a, const Context& ctx) {
    QRat c;
    IVec k;
    if (!as_grouplike(a, c, k)) eval_fail(at, "only nonzero scalar multiples of K may be inverted");
    return ctx.uq.monomial(Word(), -k, Word(), c.inverse());
}

int check_index(const Node& n, int i, const Context& ctx) {
    if (i < 1 || i > ctx.uq.rank())
        eval_fail(n, "index " + std::to_string(i) + " out of range 1.." + std::to_string(ctx.uq.rank()));
    return i - 1;
}

const Coideal& need_coideal(const Node& n, const Context& ctx) {
    if (!ctx.coideal) eval_fail(n, "B_i and T[...] need a symmetric pair (--pair)");
    return *ctx.coideal;
}

}  // namespace

Element evaluate(const Node& n, const Context& ctx) {
    const Uq& uq = ctx.uq;
    switch (n.kind) {
        case Node::Kind::Number:
            return uq.scalar(QRat(n.number));
        case Node::Kind::Q:
            return uq.scalar(QRat::q());
        case Node::Kind::V:
            return uq.scalar(QRat::v_pow(1));
        case Node::Kind::Gen: {
            switch (n.gen) {
                case 'E':
                    return uq.E(check_index(n, n.index, ctx));
                case 'F':
                    return uq.F(check_index(n, n.index, ctx));
                case 'k':
                    return uq.Ki(check_index(n, n.index, ctx), 1);
                case 'i':
                    return uq.Ki(check_index(n, n.index, ctx), -1);
                case 'B':
                    return need_coideal(n, ctx).B(check_index(n, n.index, ctx));
                case 'K': {
                    if (static_cast<int>(n.weight.size()) != uq.rank())
                        eval_fail(n, "K exponent needs " + std::to_string(uq.rank()) + " coordinates");
                    try {
                        return uq.K(n.weight);
                    } catch (const std::exception& e) {
                        eval_fail(n, e.what());
                    }
                }
                case 'T': {
                    const Coideal& co = need_coideal(n, ctx);
                    if (static_cast<int>(n.weight.size()) != uq.rank())
                        eval_fail(n, "T exponent needs " + std::to_string(uq.rank()) + " coordinates");
                    Element k = uq.K(n.weight);
                    if (co.project(k) != k) eval_fail(n, "exponent is not fixed by theta");
                    return k;
                }
                default:
                    break;
            }
            eval_fail(n, "bad generator");
        }
        case Node::Kind::Sum: {
            Element acc;
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                Element k = evaluate(*n.kids[i], ctx);
                acc = n.ops[i] == '-' ? acc - k : acc + k;
            }
            return acc;
        }
        case Node::Kind::Product: {
            Element acc = evaluate(*n.kids[0], ctx);
            for (std::size_t i = 1; i < n.kids.size(); ++i) {
                Element k = evaluate(*n.kids[i], ctx);
                if (n.ops[i] == '/') k = invert(*n.kids[i], k, ctx);
                acc = uq.multiply(acc, k);
            }
            return acc;
        }
        case Node::Kind::Power: {
            Element base = evaluate(*n.kids[0], ctx);
            if (n.index < 0) return uq.power(invert(n, base, ctx), -n.index);
            return uq.power(base, n.index);
        }
        case Node::Kind::QComm: {
            Element a = evaluate(*n.kids[0], ctx);
            Element b = evaluate(*n.kids[1], ctx);
            QRat scale(1);
            if (n.kids.size() == 3) {
                Element s = evaluate(*n.kids[2], ctx);
                IVec k;
                if (s.is_zero()) scale = QRat();
                else if (!as_grouplike(s, scale, k) || !is_zero_vec(k)) eval_fail(*n.kids[2], "subscript must be a scalar");
            }
            return uq.commutator(a, b, scale);
        }
        case Node::Kind::Func: {
            Element a = evaluate(*n.kids[0], ctx);
            if (n.name == "kappa") return uq.kappa(a);
            if (n.name == "sigma") return uq.sigma(a);
            if (n.name == "phi") return uq.phi(a);
            if (n.name == "phiP") return uq.phi_prime(a);
            int i = check_index(n, n.index, ctx);
            return uq.lusztig_T(i, n.name == "T" ? 1 : -1, a);
        }
        case Node::Kind::Ad: {
            std::vector<std::pair<char, int>> w;
            for (const auto& [k, i] : n.word) w.emplace_back(k, check_index(n, i, ctx));
            return uq.ad_word(w, evaluate(*n.kids[0], ctx));
        }
    }
    eval_fail(n, "bad node");
}

QRat evaluate_scalar(const Node& n) {
    switch (n.kind) {
        case Node::Kind::Number:
            return QRat(n.number);
        case Node::Kind::Q:
            return QRat::q();
        case Node::Kind::V:
            return QRat::v_pow(1);
        case Node::Kind::Sum: {
            QRat acc;
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                QRat k = evaluate_scalar(*n.kids[i]);
                acc = n.ops[i] == '-' ? acc - k : acc + k;
            }
            return acc;
        }
        case Node::Kind::Product: {
            QRat acc = evaluate_scalar(*n.kids[0]);
            for (std::size_t i = 1; i < n.kids.size(); ++i) {
                QRat k = evaluate_scalar(*n.kids[i]);
                if (n.ops[i] == '/') {
                    if (k.is_zero()) eval_fail(*n.kids[i], "division by zero");
                    acc /= k;
                } else {
                    acc *= k;
                }
            }
            return acc;
        }
        case Node::Kind::Power: {
            QRat b = evaluate_scalar(*n.kids[0]);
            if (n.index < 0 && b.is_zero()) eval_fail(n, "division by zero");
            QRat base = n.index < 0 ? b.inverse() : b;
            QRat r(1);
            for (int i = 0; i < std::abs(n.index); ++i) r *= base;
            return r;
        }
        default:
            eval_fail(n, "expected a scalar expression");
    }
}

}  // namespace qc::cli
