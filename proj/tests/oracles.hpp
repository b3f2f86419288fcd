#pragma once

// Reference computations that do not go through the normal-form engine.

#include "qcartan/classical.hpp"
#include "qcartan/uq.hpp"

#include <random>
#include <vector>

namespace oracle {

using qc::IVec;
using RMat = qc::Mat<mpq_class>;

// Number of ways to write beta as an unordered sum of positive roots.
long long kostant(const std::vector<IVec>& positive_roots, const IVec& beta);

// Positive roots generated from the Cartan matrix by root strings, without
// the RootData tables.
std::vector<IVec> positive_roots_from_cartan(const std::vector<IVec>& cartan);

// dim of the weight-beta part of the free algebra on E_1..E_n modulo the
// two-sided ideal of the q-Serre relations, computed by spanning the ideal
// with u S w for every relation S and words u, w. Coefficients are taken at
// q = q0, which gives the generic dimension unless q0 is special.
std::size_t serre_quotient_dim(const qc::RootData& rd, const IVec& beta, const mpq_class& q0 = 3);

// U_q(sl_{n+1}) acting on the vector representation V, or on V^{(x) copies}
// through D(E) = E(x)1 + K(x)E, D(F) = F(x)K^{-1} + 1(x)F, D(K) = K(x)K, at a
// rational value of q.
class VectorRep {
public:
    VectorRep(int rank, int copies, mpq_class q);
    int dim() const { return dim_; }
    const RMat& E(int i) const { return e_[static_cast<std::size_t>(i)]; }
    const RMat& F(int i) const { return f_[static_cast<std::size_t>(i)]; }
    // K_mu for integral mu in simple-root coordinates.
    RMat K(const IVec& mu) const;
    // Image of an engine element (every K exponent must be integral).
    RMat image(const qc::Uq& uq, const qc::Element& a) const;
    mpq_class q() const { return q_; }

private:
    int rank_, copies_, dim_;
    mpq_class q_;
    std::vector<RMat> e_, f_;
    std::vector<RMat> k1_;  // K_i on one factor
};

RMat kron(const RMat& a, const RMat& b);

// Random element of U_q: sum of `terms` monomials F_w K_mu E_w' with letters
// in 0..rank-1, word lengths <= max_len, K exponents in [-1, 1] and small
// Laurent coefficients.
qc::Element random_element(const qc::Uq& uq, std::mt19937& rng, int terms, int max_len);

}  // namespace oracle
