#pragma once

#include "qcartan/linalg.hpp"
#include "qcartan/qrat.hpp"
#include "qcartan/rootsys.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <tuple>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qc {

// Words are strings whose characters are 0-based simple-root indices.
using Word = std::string;

// F_f K_k E_e. The K exponent is stored as integer numerators over
// RootData::weight_den(), in simple-root coordinates.
struct Term {
    Word f;
    IVec k;
    Word e;

    bool operator==(const Term& o) const { return f == o.f && k == o.k && e == o.e; }
    bool operator<(const Term& o) const {
        if (f != o.f) return f < o.f;
        if (k != o.k) return k < o.k;
        return e < o.e;
    }
};

struct TermHash {
    std::size_t operator()(const Term& t) const noexcept {
        std::size_t h = std::hash<std::string>()(t.f);
        h = h * 31 + IVecHash()(t.k);
        h = h * 31 + std::hash<std::string>()(t.e);
        return h;
    }
};

// Element in triangular normal form: sorted terms, nonzero coefficients.
struct Element {
    std::vector<std::pair<Term, QRat>> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const Element& o) const { return terms == o.terms; }
    bool operator!=(const Element& o) const { return !(*this == o); }
    std::size_t size() const { return terms.size(); }
    // Coefficient of a term, zero if absent.
    QRat coeff(const Term& t) const;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator*(const QRat& c, const Element& a);

// Sums terms with equal keys, drops zeros and sorts.
class Accumulator {
public:
    void add(const Term& t, const QRat& c);
    void add(Term&& t, const QRat& c);
    void add(const Element& a, const QRat& c = QRat(1));
    Element take();

private:
    std::unordered_map<Term, QRat, TermHash> m_;
};

// Assigns column indices to terms, for linear algebra on elements.
class TermIndex {
public:
    int id(const Term& t);
    int find(const Term& t) const;  // -1 if absent
    const Term& term(int i) const { return terms_[static_cast<std::size_t>(i)]; }
    std::size_t size() const { return terms_.size(); }
    SparseVec vec(const Element& a);
    Element element(const SparseVec& v) const;

private:
    std::unordered_map<Term, int, TermHash> ids_;
    std::vector<Term> terms_;
};

enum class Sign { Plus, Minus };

// Biweight of a term: (weight of the F-word, weight of the E-word). The
// conventional label is (-lambda, mu) with lambda the first entry.
using Biweight = std::pair<IVec, IVec>;

// U_q(g) for a fixed root datum. Holds the compute-once caches for
// weight-space bases and E-past-F exchanges; all methods are thread safe.
class Uq {
public:
    explicit Uq(RootData rd);

    const RootData& roots() const { return rd_; }
    int rank() const { return rd_.rank(); }
    int wden() const { return rd_.weight_den(); }

    // --- weight spaces of U^+ (identically U^-) ---
    IVec weight(const Word& w) const;
    // Lex-least basis of the weight space modulo the quantum Serre relations.
    std::vector<Word> basis(const IVec& beta) const;
    // Coordinates of a free word in the basis of its weight space.
    SparseVec reduce(const Word& w) const;
    // Reduced word as an element of U^- (as F-word) or U^+ (as E-word).
    Element word_element(Sign s, const Word& w, const QRat& c = QRat(1)) const;
    // Quantum Serre relation for (i,j) as a free combination of words.
    std::vector<std::pair<Word, QRat>> serre_relation(int i, int j) const;

    // --- construction ---
    Element one() const { return scalar(QRat(1)); }
    Element scalar(const QRat& c) const;
    Element E(int i) const;
    Element F(int i) const;
    // K_mu with mu in simple-root coordinates (rational allowed).
    Element K(const Weight& mu) const;
    Element K_root(const IVec& mu) const;  // integer simple-root coordinates
    Element Ki(int i, int power = 1) const;
    Element monomial(const Word& f, const IVec& k_num, const Word& e, const QRat& c = QRat(1)) const;
    Weight k_weight(const IVec& k_num) const;
    IVec k_num(const Weight& mu) const;
    IVec k_num_root(const IVec& mu) const;

    // --- products ---
    Element multiply(const Element& a, const Element& b) const;
    Element commutator(const Element& a, const Element& b, const QRat& scale = QRat(1)) const;
    Element power(const Element& a, int m) const;

    // --- adjoint action ---
    Element ad_E(int i, const Element& a) const;
    Element ad_F(int i, const Element& a) const;
    Element ad_K(int i, int power, const Element& a) const;
    // ad of a generator word, rightmost letter acting first. Letters are
    // (kind, index) with kind 'E' or 'F'.
    Element ad_word(const std::vector<std::pair<char, int>>& word, const Element& a) const;

    // --- symmetries ---
    Element kappa(const Element& a) const;
    Element sigma(const Element& a) const;
    Element phi(const Element& a) const;
    Element phi_prime(const Element& a) const;
    Element lusztig_T(int i, int dir, const Element& a) const;
    // T_w^{-1} for w = s_{w[0]} s_{w[1]} ...
    Element lusztig_T_inv_word(const std::vector<int>& w, const Element& a) const;

    // --- structure ---
    std::map<Biweight, Element> biweights(const Element& a) const;
    // Minimal l-weight (as the F-weight lambda; the l-weight is -lambda) and its component.
    std::pair<IVec, Element> l_weight_min(const Element& a) const;
    mpq_class filtration_degree(const Element& a) const;
    // Projection onto U^- M^+ T_theta: keeps terms whose E-letters lie in
    // pi_theta and whose K exponent is fixed by theta (rational matrix acting
    // on simple-root coordinates, column j = theta(alpha_j)).
    Element project_P(const Element& a, const std::vector<bool>& pi_theta,
                      const std::vector<std::vector<mpq_class>>& theta) const;

    // --- subspaces ---
    std::vector<Element> centralizer_basis(Sign s, const IVec& beta, const std::vector<int>& pi) const;
    // Membership of x K_{beta-2nu} in (ad U^-)K_{-2nu} (Sign::Minus, x in U^-_{-beta})
    // or in (ad U^+)K_{-2nu} (Sign::Plus, x in U^+_beta K_{-beta}).
    bool ad_submodule_membership(const Element& x, int nu, Sign s = Sign::Minus) const;

    // --- output ---
    std::string str(const Element& a) const;
    std::string json(const Element& a) const;

private:
    struct RawTerm {
        Word f;
        IVec k;
        Word e;
        QRat c;
    };
    struct WSpace {
        std::vector<Word> basis;
        std::unordered_map<Word, SparseVec> cand;  // candidate word -> basis coordinates
    };

    const WSpace& space_locked(const IVec& beta) const;
    const SparseVec& reduce_locked(const Word& w) const;
    SparseVec derivations_locked(const Word& w, const IVec& beta) const;
    const std::vector<RawTerm>& exchange_locked(const Word& b, const Word& c) const;
    long q_exp(const IVec& k_num, const Word& w) const;
    Element apply_map(const Element& a, const std::function<Element(int)>& img_e,
                      const std::function<Element(int)>& img_f,
                      const std::function<Element(const IVec&)>& img_k, bool anti, bool invert_q) const;
    Element divided_power(Sign s, int i, int m) const;
    Element T_gen(int i, int dir, char kind, int j) const;

    RootData rd_;
    mutable std::recursive_mutex mu_;
    mutable std::unordered_map<IVec, WSpace, IVecHash> spaces_;
    mutable std::unordered_map<Word, SparseVec> reduce_memo_;
    mutable std::unordered_map<std::string, std::vector<RawTerm>> exchange_memo_;
    mutable std::map<std::tuple<int, int, char, int>, Element> t_memo_;
};

std::string word_str(const Word& w, char letter);
std::string qrat_json(const QRat& c);

}  // namespace qc
