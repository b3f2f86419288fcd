#pragma once

#include "qcartan/coideal.hpp"
#include "qcartan/uq.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qc::cli {

// Grammar, whitespace-insensitive:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := power (('*'|'/')? power)*
//   power  := atom ('^' ['-'] int)?
//   atom   := number | 'q' | 'v' | gen | '(' expr ')'
//           | '[' expr ',' expr ']' ('_' atom)?
//           | func '(' expr ')' | 'ad' '(' genword ',' expr ')'
//   gen    := ('E'|'F'|'B') int | 'Ki' int | 'Ki-' int
//           | 'K' '[' rational (',' rational)* ']' | 'T' '[' int (',' int)* ']'
//   func   := 'kappa' | 'sigma' | 'phi' | 'phiP' | 'T' int | 'Tinv' int
// Juxtaposition is multiplication. Indices are 1-based.

struct SyntaxError : std::runtime_error {
    int line, column;
    SyntaxError(const std::string& msg, int l, int c)
        : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg),
          line(l),
          column(c) {}
};

// Semantic failure during evaluation (bad index, missing coideal, ...).
struct EvalError : SyntaxError {
    using SyntaxError::SyntaxError;
};

struct Node {
    enum class Kind { Number, Q, V, Gen, Sum, Product, Power, QComm, Func, Ad };
    Kind kind;
    int line = 1, column = 1;

    mpq_class number;                  // Number
    char gen = 0;                      // Gen: 'E' 'F' 'B' 'k' (Ki) 'i' (Ki-) 'K' 'T'
    int index = 0;                     // Gen index, Func Lusztig index, Power exponent
    std::vector<mpq_class> weight;     // Gen 'K' and 'T'
    std::string name;                  // Func
    std::vector<char> ops;             // Sum: '+'/'-' per child; Product: '*'/'/' per child
    std::vector<std::pair<char, int>> word;  // Ad: ('E'|'F', 1-based index)
    std::vector<std::shared_ptr<Node>> kids;

    bool operator==(const Node& o) const;
};
using NodePtr = std::shared_ptr<Node>;

NodePtr parse_expr(const std::string& text);
// Canonical text; parse_expr(render(n)) is structurally equal to n.
std::string render(const Node& n);

struct Context {
    const Uq& uq;
    const Coideal* coideal = nullptr;  // needed for B_i and T[...]
};

Element evaluate(const Node& n, const Context& ctx);
// Scalar-only evaluation (numbers, q, v and arithmetic).
QRat evaluate_scalar(const Node& n);

}  // namespace qc::cli
