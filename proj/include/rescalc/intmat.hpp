#pragma once

#include "rescalc/rational.hpp"

#include <optional>
#include <vector>

namespace rescalc {

using IVec = std::vector<BigInt>;
using QVec = std::vector<Rational>;

/// Dense integer matrix, row-major.
struct IMat {
    long rows = 0, cols = 0;
    std::vector<BigInt> a;

    IMat() = default;
    IMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, BigInt(0)) {}
    BigInt& operator()(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
    const BigInt& operator()(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IMat identity(long n);
    IMat transposed() const;
    IVec col(long j) const;
    IVec row(long i) const;
    friend IMat operator*(const IMat& x, const IMat& y);
    friend bool operator==(const IMat& x, const IMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator<(const IMat& x, const IMat& y) {
        if (x.rows != y.rows) return x.rows < y.rows;
        if (x.cols != y.cols) return x.cols < y.cols;
        return x.a < y.a;
    }
};

IVec mat_vec(const IMat& m, const IVec& v);
/// Row vector times matrix: v^T m.
IVec vec_mat(const IVec& v, const IMat& m);
BigInt dot(const IVec& a, const IVec& b);
Rational dot_q(const QVec& a, const QVec& b);
QVec mat_vec_q(const IMat& m, const QVec& v);
QVec vec_mat_q(const QVec& v, const IMat& m);
BigInt content(const IVec& v);
IVec primitive(const IVec& v);
/// +1 if the first nonzero entry is positive, -1 if negative, 0 if zero.
int lex_sign(const IVec& v);

/// Smith normal form: u * m * v = d with u, v unimodular and d diagonal
/// with nonnegative entries d_1 | d_2 | ...
struct SmithResult {
    IMat u, d, v;
    long rank = 0;
};
SmithResult smith_normal_form(const IMat& m);

/// Column-style Hermite normal form of the column lattice (canonical basis).
IMat hermite_column_basis(const IMat& m);

/// Saturated integer kernel of the row action x -> m x; columns span
/// { x in Z^cols : m x = 0 }.
IMat integer_kernel(const IMat& m);

/// Dense rational matrix.
struct QMat {
    long rows = 0, cols = 0;
    std::vector<Rational> a;

    QMat() = default;
    QMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    static QMat from_int(const IMat& m);
    Rational& operator()(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& operator()(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }
    friend QMat operator*(const QMat& x, const QMat& y);
    QMat transposed() const;
};

QVec mat_vec(const QMat& m, const QVec& v);
/// Solve m x = b exactly; nullopt if inconsistent. m need not be square;
/// returns one particular solution.
std::optional<QVec> solve_linear(QMat m, QVec b);
QMat invert(const QMat& m);
long rank_q(QMat m);

/// An integer left inverse y (d x n) with y b = identity, for a saturated
/// full-column-rank integer matrix b (n x d).
IMat integer_left_inverse(const IMat& b);

} // namespace rescalc
