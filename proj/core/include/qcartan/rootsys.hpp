#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qc {

using IVec = std::vector<int>;
using Weight = std::vector<mpq_class>;  // simple-root coordinates

Weight to_weight(const IVec& v);
bool is_integral(const Weight& w);
IVec to_ivec(const Weight& w);  // throws unless integral

IVec operator+(const IVec& a, const IVec& b);
IVec operator-(const IVec& a, const IVec& b);
IVec operator-(const IVec& a);
IVec scaled(const IVec& a, int k);
bool is_nonneg(const IVec& a);
bool is_zero_vec(const IVec& a);

struct IVecHash {
    std::size_t operator()(const IVec& v) const noexcept {
        std::size_t h = v.size();
        for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 512);
        return h;
    }
};

class RootError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Finite root system, Bourbaki numbering. Short roots have (a,a) = 2.
class RootData {
public:
    RootData(char type, int rank);

    char type() const { return type_; }
    int rank() const { return n_; }
    std::string label() const;
    const std::vector<IVec>& cartan() const { return a_; }
    const IVec& d() const { return d_; }
    int sym(int i, int j) const { return s_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<IVec>& positive_roots() const { return pos_; }
    const std::vector<Weight>& fundamental_weights() const { return fund_; }
    int N() const { return N_; }
    // Common denominator of fundamental-weight coordinates.
    int weight_den() const { return wden_; }

    mpq_class inner(const Weight& a, const Weight& b) const;
    int inner(const IVec& a, const IVec& b) const;
    // (alpha_i, lambda) for integer lambda.
    int inner_simple(int i, const IVec& lambda) const;

    bool is_root(const IVec& v) const;
    bool is_positive_root(const IVec& v) const;
    int root_index(const IVec& v) const;  // -1 if not a positive root
    bool is_orthogonal(const IVec& b, const IVec& g) const { return inner(b, g) == 0; }
    bool is_strongly_orthogonal(const IVec& b, const IVec& g) const;

    IVec simple(int i) const;
    IVec reflect(int i, const IVec& v) const;
    Weight reflect(int i, const Weight& v) const;

    // Reduced word (s_{w[0]} s_{w[1]} ...) of the longest element of W(subset).
    std::vector<int> longest_word(const std::vector<int>& subset) const;
    IVec apply_word(const std::vector<int>& word, const IVec& v) const;
    Weight apply_word(const std::vector<int>& word, const Weight& v) const;
    IVec longest_action(const std::vector<int>& subset, const IVec& v) const;
    Weight longest_action(const std::vector<int>& subset, const Weight& v) const;

    // Simple roots (0-based) in the support of v.
    std::vector<int> support(const IVec& v) const;
    int height(const IVec& v) const;
    std::vector<int> orth(const IVec& beta) const;      // simple roots orthogonal to beta
    std::vector<int> str_orth(const IVec& beta) const;  // simple roots strongly orthogonal to beta

    // Number of ways to write beta as a sum of positive roots.
    long long kostant_partition(const IVec& beta) const;

    // Weights of all Q^+ elements with height <= h.
    std::vector<IVec> positive_cone(int max_height) const;

private:
    char type_;
    int n_;
    std::vector<IVec> a_;
    std::vector<IVec> s_;
    IVec d_;
    std::vector<IVec> pos_;
    std::unordered_map<IVec, int, IVecHash> pos_index_;
    std::vector<Weight> fund_;
    int N_ = 1;
    int wden_ = 1;
    mutable std::map<std::pair<IVec, std::size_t>, long long> kostant_memo_;
};

struct WeightStats {
    std::vector<int> support;
    mpq_class height;
    mpq_class ht_tau;
};
WeightStats weight_stats(const RootData& rd, const Weight& w, const std::vector<int>& tau);

std::string ivec_str(const IVec& v);
std::string root_str(const IVec& v);  // e.g. "a1+2a2"

}  // namespace qc
