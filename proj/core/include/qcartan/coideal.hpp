#pragma once

#include "qcartan/classical.hpp"
#include "qcartan/involutions.hpp"
#include "qcartan/uq.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace qc {

// Parameters of B_theta. c[i] is the literal coefficient of
// theta_q(F_iK_i)K_i^{-1} in B_i, so c = 1 reproduces B_i = F_i + E_{n-i+1}K_i^{-1}
// in type AIII. Indices are 0-based.
struct CoidealParams {
    Involution inv;
    std::vector<QRat> c;
    std::vector<QRat> s;
};

// Simple roots allowed to carry s_i != 0.
std::vector<int> s_table(const Involution& inv);

// c = 1, s = 0. Throws InvolutionError if c, s violate the invariants.
CoidealParams default_params(const Involution& inv);
class Uq;
// s = 0 and c_i = (q - q^{-1})^{k_i}, k_i the least order at q = 1 among the
// coefficients of theta_q(F_iK_i), so every B_i specializes. Agrees with
// default_params whenever theta_q(F_iK_i) = E_{p(i)}.
CoidealParams integral_params(const Uq& uq, const Involution& inv);
void validate_params(const CoidealParams& p);

struct CartanParts {
    Element Y, C, X;
    QRat s;
};

struct CartanReport {
    int j = 0;  // 0-based index into the theta-system
    IVec beta;
    Element H;
    CartanParts parts;
    QRat kappa_ratio;  // kappa(Y) = kappa_ratio * X when the pairing holds
    int order = 0;     // least order at q = 1 among the coefficients of H
    Report checks;
};

class Coideal {
public:
    Coideal(const Uq& uq, CoidealParams params);

    const Uq& uq() const { return uq_; }
    const CoidealParams& params() const { return p_; }
    const Involution& inv() const { return p_.inv; }

    // Highest weight vector of (ad M)E_{p(i)}, of weight theta(-alpha_i),
    // normalized so its lex-least term has coefficient 1.
    const Element& theta_q_FK(int i) const;
    // B_i, with B_i = F_i for alpha_i in pi_theta.
    const Element& B(int i) const;
    // B_{w[0]} B_{w[1]} ...
    Element B_word(const Word& w) const;
    // Exponents spanning Q(pi)^theta.
    std::vector<IVec> t_theta() const;

    Element project(const Element& a) const;
    // The unique element of B_theta whose projection is `target`, which must
    // lie in U^- M^+ T_theta.
    Element complete_to_projection(const Element& target) const;
    bool member(const Element& x) const;

    // AIII with pi_theta empty; j is 0-based, so h_prime(j) is H'_{j+1}.
    Element h_prime(int j) const;
    // Lowest term of h_prime(j): the same nested q-commutator in the F_i.
    Element w_lowest(int j) const;

    // Lift of f_{-beta_j}, normalized so the lex-least term has coefficient 1.
    Element lift_Y(const ThetaSystem& ts, int j) const;
    Report verify_lift(const ThetaSystem& ts, int j, const Element& Y) const;

    // X, Y pair for a type-B support chain. Y follows the defining formula;
    // X carries the scalar that makes X + Y an element of B_theta.
    struct TypeBPair {
        Element X, Y;
        QRat x_ratio;  // X = x_ratio * [(ad E_{g_s}..E_{g_2})E_{g_1}]K_{-beta}
    };
    TypeBPair type_b_pair(const IVec& beta) const;

    CartanReport cartan_element(const ThetaSystem& ts, int j) const;

private:
    const Uq& uq_;
    CoidealParams p_;
    std::vector<bool> mask_;
    std::vector<std::vector<mpq_class>> theta_mat_;
    mutable std::vector<Element> theta_q_;
    mutable std::vector<Element> b_;
    mutable std::mutex mu_;
    mutable std::map<Word, Element> bword_memo_;
    mutable std::map<int, Element> hprime_memo_;
};

// a b - scale b a
Element q_commutator(const Uq& uq, const Element& a, const Element& b, const QRat& scale);

// Ratio r with a = r b, or zero if a is not a multiple of b.
QRat proportionality(const Element& a, const Element& b);

// Value at q = 1 with every K set to 1, in the matrix realization. The
// element is first rescaled by (v-1)^{-m}, m the least order of a coefficient
// at v = 1, so the result is the leading specialization of the line it spans.
LieMatrix specialize_matrix(const Uq& uq, const Chevalley& ch, const Element& a);

// Value at q = 1 in the PBW-type word basis, with every K set to 1: the
// element is rescaled by (v-1)^{-m} as above and each coefficient evaluated.
// Keys are (F-word, E-word).
using Specialization = std::map<std::pair<Word, Word>, mpq_class>;
Specialization specialize_basis(const Element& a);

// Classical root vector in U(n^-) (Sign::Minus) or U(n^+) (Sign::Plus):
// x_beta = [x_k, x_{beta - alpha_k}] with k the largest admissible index,
// brackets taken at q = 1.
Element classical_root_element(const Uq& uq, Sign s, const IVec& beta);
// Left-nested commutator [x_last, [..., [x_2, x_1]]] at q = 1; +i -> E_i, -i -> F_i (1-based).
Element classical_nested_element(const Uq& uq, const std::vector<int>& word);
// r with a = r b at q = 1, or zero if the specializations are not proportional.
mpq_class specialization_ratio(const Element& a, const Element& b);

// Results of the AIII suite.
struct SuiteResult {
    Report report;
    std::vector<CartanReport> cartans;
    // For n even: H_{r-1} = H'_{r-1} + u H'_r + v with u, v in C(q)[T_theta].
    std::string hrminus1;
};
SuiteResult verify_cartan_suite(const Coideal& co, const ThetaSystem& ts);

// Specialization of a single element: order of every coefficient at q = 1.
bool nonnegative_valuation(const Element& a);

}  // namespace qc
