#include "rescalc/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace rescalc {

IMat IMat::identity(long n) {
    IMat m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IMat IMat::transposed() const {
    IMat t(cols, rows);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IVec IMat::col(long j) const {
    IVec v(rows);
    for (long i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
}

IVec IMat::row(long i) const {
    IVec v(cols);
    for (long j = 0; j < cols; ++j) v[j] = (*this)(i, j);
    return v;
}

IMat operator*(const IMat& x, const IMat& y) {
    if (x.cols != y.rows) throw std::logic_error("IMat: shape mismatch");
    IMat r(x.rows, y.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (long j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

IVec mat_vec(const IMat& m, const IVec& v) {
    if (static_cast<long>(v.size()) != m.cols) throw std::logic_error("mat_vec: shape");
    IVec r(m.rows, BigInt(0));
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j) r[i] += m(i, j) * v[j];
    return r;
}

IVec vec_mat(const IVec& v, const IMat& m) {
    if (static_cast<long>(v.size()) != m.rows) throw std::logic_error("vec_mat: shape");
    IVec r(m.cols, BigInt(0));
    for (long j = 0; j < m.cols; ++j)
        for (long i = 0; i < m.rows; ++i) r[j] += v[i] * m(i, j);
    return r;
}

BigInt dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw std::logic_error("dot: shape");
    BigInt s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot_q(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::logic_error("dot_q: shape");
    Rational s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec mat_vec_q(const IMat& m, const QVec& v) {
    QVec r(m.rows);
    for (long i = 0; i < m.rows; ++i) {
        Rational s;
        for (long j = 0; j < m.cols; ++j) s += Rational(m(i, j)) * v[j];
        r[i] = s;
    }
    return r;
}

QVec vec_mat_q(const QVec& v, const IMat& m) {
    QVec r(m.cols);
    for (long j = 0; j < m.cols; ++j) {
        Rational s;
        for (long i = 0; i < m.rows; ++i) s += v[i] * Rational(m(i, j));
        r[j] = s;
    }
    return r;
}

BigInt content(const IVec& v) {
    BigInt g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x < 0 ? BigInt(-x) : x);
    return g;
}

IVec primitive(const IVec& v) {
    BigInt g = content(v);
    if (g == 0 || g == 1) return v;
    IVec r = v;
    for (auto& x : r) x /= g;
    return r;
}

int lex_sign(const IVec& v) {
    for (const auto& x : v) {
        if (x > 0) return 1;
        if (x < 0) return -1;
    }
    return 0;
}

namespace {

void swap_rows(IMat& m, long i, long j) {
    for (long c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
}
void swap_cols(IMat& m, long i, long j) {
    for (long r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
}
void add_row(IMat& m, long dst, long src, const BigInt& f) {
    for (long c = 0; c < m.cols; ++c) m(dst, c) += f * m(src, c);
}
void add_col(IMat& m, long dst, long src, const BigInt& f) {
    for (long r = 0; r < m.rows; ++r) m(r, dst) += f * m(r, src);
}
void negate_row(IMat& m, long i) {
    for (long c = 0; c < m.cols; ++c) m(i, c) = -m(i, c);
}

} // namespace

SmithResult smith_normal_form(const IMat& m) {
    SmithResult res;
    res.d = m;
    res.u = IMat::identity(m.rows);
    res.v = IMat::identity(m.cols);
    IMat& d = res.d;
    long n = std::min(m.rows, m.cols);
    for (long s = 0; s < n; ++s) {
        // find pivot: nonzero entry of minimal absolute value in the trailing block
        long pi = -1, pj = -1;
        BigInt best = 0;
        for (;;) {
            pi = -1;
            for (long i = s; i < d.rows; ++i)
                for (long j = s; j < d.cols; ++j) {
                    if (d(i, j) == 0) continue;
                    BigInt ab = d(i, j) < 0 ? BigInt(-d(i, j)) : d(i, j);
                    if (pi < 0 || ab < best) { best = ab; pi = i; pj = j; }
                }
            if (pi < 0) break; // trailing block zero
            swap_rows(d, s, pi); swap_rows(res.u, s, pi);
            swap_cols(d, s, pj); swap_cols(res.v, s, pj);
            bool again = false;
            for (long i = s + 1; i < d.rows; ++i) {
                if (d(i, s) == 0) continue;
                BigInt f = d(i, s) / d(s, s);
                add_row(d, i, s, -f); add_row(res.u, i, s, -f);
                if (d(i, s) != 0) again = true;
            }
            for (long j = s + 1; j < d.cols; ++j) {
                if (d(s, j) == 0) continue;
                BigInt f = d(s, j) / d(s, s);
                add_col(d, j, s, -f); add_col(res.v, j, s, -f);
                if (d(s, j) != 0) again = true;
            }
            if (again) continue;
            // divisibility sweep
            bool divides = true;
            for (long i = s + 1; i < d.rows && divides; ++i)
                for (long j = s + 1; j < d.cols && divides; ++j)
                    if (d(i, j) % d(s, s) != 0) {
                        add_row(d, s, i, 1); add_row(res.u, s, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (pi < 0) break;
        if (d(s, s) < 0) { negate_row(d, s); negate_row(res.u, s); }
    }
    for (long s = 0; s < n; ++s)
        if (d(s, s) != 0) ++res.rank;
    return res;
}

IMat hermite_column_basis(const IMat& m) {
    // Column-echelon Hermite normal form of the lattice spanned by the columns.
    IMat w = m;
    long r = 0;
    for (long row = 0; row < w.rows && r < w.cols; ++row) {
        // gcd-reduce columns r..end on this row
        for (;;) {
            long p = -1;
            BigInt best = 0;
            for (long j = r; j < w.cols; ++j) {
                if (w(row, j) == 0) continue;
                BigInt ab = w(row, j) < 0 ? BigInt(-w(row, j)) : w(row, j);
                if (p < 0 || ab < best) { best = ab; p = j; }
            }
            if (p < 0) break;
            swap_cols(w, r, p);
            bool done = true;
            for (long j = r + 1; j < w.cols; ++j) {
                if (w(row, j) == 0) continue;
                BigInt f = w(row, j) / w(row, r);
                add_col(w, j, r, -f);
                if (w(row, j) != 0) done = false;
            }
            if (done) break;
        }
        if (w(row, r) != 0) {
            if (w(row, r) < 0)
                for (long i = 0; i < w.rows; ++i) w(i, r) = -w(i, r);
            // reduce earlier columns against this pivot
            for (long j = 0; j < r; ++j) {
                if (w(row, j) == 0) continue;
                BigInt f = w(row, j) / w(row, r);
                if (w(row, j) % w(row, r) != 0 && w(row, j) < 0) f -= 1;
                add_col(w, j, r, -f);
            }
            ++r;
        }
    }
    IMat h(w.rows, r);
    for (long i = 0; i < w.rows; ++i)
        for (long j = 0; j < r; ++j) h(i, j) = w(i, j);
    return h;
}

IMat integer_kernel(const IMat& m) {
    SmithResult s = smith_normal_form(m);
    long k = m.cols - s.rank;
    IMat ker(m.cols, k);
    for (long j = 0; j < k; ++j)
        for (long i = 0; i < m.cols; ++i) ker(i, j) = s.v(i, s.rank + j);
    return ker;
}

QMat QMat::from_int(const IMat& m) {
    QMat q(m.rows, m.cols);
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j) q(i, j) = Rational(m(i, j));
    return q;
}

QMat operator*(const QMat& x, const QMat& y) {
    if (x.cols != y.rows) throw std::logic_error("QMat: shape mismatch");
    QMat r(x.rows, y.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long k = 0; k < x.cols; ++k) {
            if (x(i, k).is_zero()) continue;
            for (long j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

QMat QMat::transposed() const {
    QMat t(cols, rows);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QVec mat_vec(const QMat& m, const QVec& v) {
    QVec r(m.rows);
    for (long i = 0; i < m.rows; ++i) {
        Rational s;
        for (long j = 0; j < m.cols; ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

std::optional<QVec> solve_linear(QMat m, QVec b) {
    long rows = m.rows, cols = m.cols;
    std::vector<long> pivot_col;
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long p = -1;
        for (long i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r) {
            for (long j = 0; j < cols; ++j) std::swap(m(r, j), m(p, j));
            std::swap(b[r], b[p]);
        }
        Rational inv = Rational(1) / m(r, c);
        for (long j = 0; j < cols; ++j) m(r, j) *= inv;
        b[r] *= inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (long j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (long i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    QVec x(cols, Rational(0));
    for (long i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

QMat invert(const QMat& m) {
    if (m.rows != m.cols) throw std::logic_error("invert: not square");
    long n = m.rows;
    QMat a = m, inv(n, n);
    for (long i = 0; i < n; ++i) inv(i, i) = Rational(1);
    for (long c = 0; c < n; ++c) {
        long p = -1;
        for (long i = c; i < n; ++i)
            if (!a(i, c).is_zero()) { p = i; break; }
        if (p < 0) throw std::domain_error("invert: singular matrix");
        if (p != c)
            for (long j = 0; j < n; ++j) {
                std::swap(a(c, j), a(p, j));
                std::swap(inv(c, j), inv(p, j));
            }
        Rational f = Rational(1) / a(c, c);
        for (long j = 0; j < n; ++j) { a(c, j) *= f; inv(c, j) *= f; }
        for (long i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            Rational g = a(i, c);
            for (long j = 0; j < n; ++j) {
                a(i, j) -= g * a(c, j);
                inv(i, j) -= g * inv(c, j);
            }
        }
    }
    return inv;
}

long rank_q(QMat m) {
    long r = 0;
    for (long c = 0; c < m.cols && r < m.rows; ++c) {
        long p = -1;
        for (long i = r; i < m.rows; ++i)
            if (!m(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (long j = 0; j < m.cols; ++j) std::swap(m(r, j), m(p, j));
        for (long i = r + 1; i < m.rows; ++i) {
            if (m(i, c).is_zero()) continue;
            Rational f = m(i, c) / m(r, c);
            for (long j = 0; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

IMat integer_left_inverse(const IMat& b) {
    // For saturated b, SNF gives u b v = [I; 0], so  v (I 0) u  b = I.
    SmithResult s = smith_normal_form(b);
    if (s.rank != b.cols)
        throw std::logic_error("integer_left_inverse: matrix not full column rank");
    for (long i = 0; i < s.rank; ++i)
        if (s.d(i, i) != 1)
            throw std::logic_error("integer_left_inverse: lattice not saturated");
    // left inverse = v * [I_d | 0] * u
    IMat proj(b.cols, b.rows);
    for (long i = 0; i < b.cols; ++i)
        for (long j = 0; j < b.rows; ++j) proj(i, j) = s.u(i, j);
    return s.v * proj;
}

} // namespace rescalc
