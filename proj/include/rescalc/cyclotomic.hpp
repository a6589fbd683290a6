#pragma once

#include "rescalc/rational.hpp"

#include <complex>
#include <map>
#include <mutex>
#include <vector>

namespace rescalc {

/// Integer polynomials of the cyclotomic polynomials Phi_N, cached per order.
const std::vector<BigInt>& cyclotomic_polynomial(long n);

long euler_phi(long n);

/// Element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, zeta, ..., zeta^{phi(N)-1} reduced mod Phi_N.
class Cyclo {
public:
    Cyclo() : order_(1), coeffs_(1, Rational(0)) {}
    Cyclo(const Rational& r) : order_(1), coeffs_(1, r) {}
    Cyclo(long n) : Cyclo(Rational(n)) {}

    /// zeta_N^k in Q(zeta_N).
    static Cyclo root_of_unity(long order, long power);

    /// exp(2*pi*i*phase) for rational phase; lives in Q(zeta_d), d = denominator.
    static Cyclo from_phase(const Rational& phase);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Constant coefficient; only the full value if is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    Cyclo promoted(long new_order) const;

    Cyclo operator-() const;
    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    Cyclo inverse() const;

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    std::complex<double> to_complex() const;

    /// "1", "-2/3", "zeta(12)^5", or a parenthesized sum of such monomials.
    std::string str() const;

private:
    static std::vector<Rational> reduce(std::vector<Rational> poly, long order);

    long order_;
    std::vector<Rational> coeffs_; // size euler_phi(order_)
};

} // namespace rescalc
