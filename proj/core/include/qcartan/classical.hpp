#pragma once

#include "qcartan/involutions.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qc {

// a + b sqrt(2)
struct QSqrt2 {
    mpq_class a, b;
    QSqrt2(mpq_class x = 0, mpq_class y = 0) : a(std::move(x)), b(std::move(y)) {}
    QSqrt2 operator+(const QSqrt2& o) const { return {a + o.a, b + o.b}; }
    QSqrt2 operator-(const QSqrt2& o) const { return {a - o.a, b - o.b}; }
    QSqrt2 operator-() const { return {-a, -b}; }
    QSqrt2 operator*(const QSqrt2& o) const { return {a * o.a + 2 * b * o.b, a * o.b + b * o.a}; }
    QSqrt2& operator+=(const QSqrt2& o) { return *this = *this + o; }
    QSqrt2& operator-=(const QSqrt2& o) { return *this = *this - o; }
    bool operator==(const QSqrt2& o) const { return a == o.a && b == o.b; }
    bool is_zero() const { return a == 0 && b == 0; }
};

template <class T>
struct Mat {
    int n = 0;
    std::vector<T> v;

    Mat() = default;
    explicit Mat(int size) : n(size), v(static_cast<std::size_t>(size * size), T(0)) {}
    static Mat unit(int size, int i, int j) {
        Mat m(size);
        m(i, j) = T(1);
        return m;
    }
    static Mat identity(int size) {
        Mat m(size);
        for (int i = 0; i < size; ++i) m(i, i) = T(1);
        return m;
    }
    T& operator()(int i, int j) { return v[static_cast<std::size_t>(i * n + j)]; }
    const T& operator()(int i, int j) const { return v[static_cast<std::size_t>(i * n + j)]; }

    Mat operator+(const Mat& o) const {
        Mat r(*this);
        for (std::size_t k = 0; k < v.size(); ++k) r.v[k] += o.v[k];
        return r;
    }
    Mat operator-(const Mat& o) const {
        Mat r(*this);
        for (std::size_t k = 0; k < v.size(); ++k) r.v[k] -= o.v[k];
        return r;
    }
    Mat operator*(const Mat& o) const {
        Mat r(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const T& x = (*this)(i, k);
                if (x == T(0)) continue;
                for (int j = 0; j < n; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }
    Mat scaled(const T& c) const {
        Mat r(*this);
        for (auto& x : r.v) x = x * c;
        return r;
    }
    Mat transpose() const {
        Mat r(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    bool is_zero() const {
        for (const auto& x : v)
            if (!(x == T(0))) return false;
        return true;
    }
    bool operator==(const Mat& o) const { return n == o.n && v == o.v; }
    T trace() const {
        T t(0);
        for (int i = 0; i < n; ++i) t += (*this)(i, i);
        return t;
    }
};

using LieMatrix = Mat<mpq_class>;

inline LieMatrix bracket(const LieMatrix& x, const LieMatrix& y) { return x * y - y * x; }

struct Chevalley {
    char type;
    int rank;
    int size;
    std::vector<LieMatrix> e, f, h;
    LieMatrix form;  // invariant bilinear form J (identity for type A)
};

// Realizations: sl_{n+1}, so_{2n+1}, sp_{2n}, so_{2n} (antidiagonal forms).
Chevalley chevalley_matrices(char type, int rank);

// e_beta := [e_k, e_{beta - alpha_k}] with k the largest index such that
// beta - alpha_k is a root; f_{-beta} built the same way from the f_i.
LieMatrix matrix_root_vector(const Chevalley& ch, const RootData& rd, const IVec& beta);
LieMatrix matrix_root_vector_neg(const Chevalley& ch, const RootData& rd, const IVec& beta);

// Left-nested bracket [x_last, [..., [x_2, x_1]]]; +i -> e_i, -i -> f_i (1-based).
LieMatrix classical_nested(const Chevalley& ch, const std::vector<int>& word);

// Cartan element sum_k c_k h_k.
LieMatrix h_combination(const Chevalley& ch, const IVec& c);

// Matrix realization of theta for AI (X -> -X^T) and AIII (conjugation by the
// block reversal matrix); empty optional elsewhere.
bool has_matrix_theta(const Involution& inv);
LieMatrix matrix_theta(const Involution& inv, const LieMatrix& x);

Report verify_classical_cartan(const ThetaSystem& ts);

// d_gamma = Ad(exp(pi/4 (f - e))) on the sl_2 triple of gamma in type A_n.
Report cayley_on_triple(int n, const IVec& gamma);

int matrix_rank(const std::vector<LieMatrix>& ms);

}  // namespace qc
