#pragma once

#include "qcartan/rootsys.hpp"

#include <string>
#include <vector>

namespace qc {

// Maximally split involution acting on Q(pi). Indices are 0-based.
struct Involution {
    RootData rd;
    std::string label;
    int r = 0;
    std::vector<IVec> theta;        // theta[j] = theta(alpha_j)
    std::vector<int> pi_theta;      // simple roots fixed by theta
    std::vector<int> p;             // diagram permutation
    std::vector<IVec> h_theta;      // spanning set of h^theta, coefficients over h_1..h_n
    int rank_g_theta = 0;           // rank of the fixed subalgebra

    IVec apply(const IVec& v) const;
    bool fixed(int i) const;
    // [row][col] = coefficient of alpha_row in theta(alpha_col).
    std::vector<std::vector<mpq_class>> matrix() const;
    std::vector<bool> pi_mask() const;
};

struct ThetaSystem {
    Involution inv;
    std::vector<IVec> betas;
    std::vector<int> alpha;        // alpha_beta
    std::vector<int> alpha_prime;  // alpha'_beta
    std::vector<int> case_tag;     // 1..5
};

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;
    void add(std::string name, bool ok, std::string detail = {});
    bool ok() const;
    std::vector<std::string> failures() const;
};

class InvolutionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Labels: AI AII AIII(AIV) BI(BII) CI CII-1 CII-2 DI-1(DII) DI-2 DI-3 DIII-1
// DIII-2 EI EII EIII EIV EV EVI EVII EVIII EIX FI FII G. `r` is used by
// AIII, BI, CII-1 and DI-1; exceptional labels ignore n.
Involution build_involution(const std::string& label, int n, int r = 0);
ThetaSystem gamma_theta(const std::string& label, int n, int r = 0);

std::vector<IVec> delta_theta(const Involution& inv);
Report verify_involution(const Involution& inv);
Report verify_theta_system(const ThetaSystem& ts);
// Case recomputed from the shape equations; throws if none matches.
int classify_case(const ThetaSystem& ts, int j);
std::vector<std::string> classical_cartan_symbolic(const ThetaSystem& ts);

// dim h^theta computed from the matrix, and the maximality relation
// |Gamma| + dim h_theta = rank(g^theta).
int fixed_dimension(const Involution& inv);
bool is_maximal(const ThetaSystem& ts);
// Largest pairwise strongly orthogonal subset of Delta_theta, by search.
int max_strongly_orthogonal_size(const Involution& inv);

struct PairKey {
    std::string label;
    int n;
    int r;
};
// Every encoded pair with rank <= max_rank (exceptional types at their rank).
std::vector<PairKey> pair_catalog(int max_rank);

// w(Supp(beta) \ {alpha, alpha'})_0 as a reduced word.
std::vector<int> w_beta(const ThetaSystem& ts, int j);

}  // namespace qc
