#pragma once

#include "rescalc/cyclotomic.hpp"

#include <complex>
#include <vector>

namespace rescalc {

/// Polynomial in one variable over Cyclo, dense coefficients, no trailing zeros.
class CPoly {
public:
    CPoly() : c_(1, Cyclo()) {}
    explicit CPoly(Cyclo c0) : c_(1, std::move(c0)) { trim(); }
    explicit CPoly(std::vector<Cyclo> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.assign(1, Cyclo());
        trim();
    }

    static CPoly monomial(Cyclo c, long deg);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
    const std::vector<Cyclo>& coeffs() const { return c_; }
    const Cyclo& operator[](size_t i) const { return c_[i]; }
    /// Lowest nonzero exponent (0 for the zero polynomial).
    long valuation() const;

    friend CPoly operator+(const CPoly& a, const CPoly& b);
    friend CPoly operator-(const CPoly& a, const CPoly& b);
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    CPoly operator-() const;

    /// Quotient and remainder over the coefficient field.
    static std::pair<CPoly, CPoly> divmod(const CPoly& a, const CPoly& b);
    static CPoly gcd(CPoly a, CPoly b);
    /// Substitute u -> u^k (k >= 1).
    CPoly stretch(long k) const;
    /// Divide every exponent by k; all exponents must be multiples of k.
    CPoly compress(long k) const;

    friend bool operator==(const CPoly& a, const CPoly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Cyclo> c_;
};

/// Element of Q(zeta_N)(q^{1/D}) times an integer power of log q.
///
/// Stored as num/den, polynomials in u where u stands for q^{1/root_order}.
/// N and D promote lazily to lcms when elements meet. The logq exponent is
/// additive under multiplication and must agree for addition.
class Field {
public:
    Field() : root_(1), num_(), den_(CPoly(Cyclo(Rational(1)))), logq_(0) {}
    Field(const Rational& r)
        : root_(1), num_(CPoly(Cyclo(r))), den_(CPoly(Cyclo(Rational(1)))), logq_(0) {}
    Field(long n) : Field(Rational(n)) {}
    explicit Field(const Cyclo& c)
        : root_(1), num_(CPoly(c)), den_(CPoly(Cyclo(Rational(1)))), logq_(0) {}

    static Field zero() { return Field(); }
    static Field one() { return Field(Rational(1)); }
    /// zeta(phase) * q^expo as an exact element.
    static Field zeta_q(const Rational& phase, const Rational& expo);
    /// q^expo.
    static Field q_power(const Rational& expo);

    bool is_zero() const { return num_.is_zero(); }
    long logq_power() const { return logq_; }
    long root_order() const { return root_; }
    Field with_logq(long k) const { Field f = *this; f.logq_ = k; return f; }

    Field operator-() const;
    friend Field operator+(const Field& a, const Field& b);
    friend Field operator-(const Field& a, const Field& b);
    friend Field operator*(const Field& a, const Field& b);
    friend Field operator/(const Field& a, const Field& b);
    Field& operator+=(const Field& b) { return *this = *this + b; }
    Field& operator-=(const Field& b) { return *this = *this - b; }
    Field& operator*=(const Field& b) { return *this = *this * b; }
    Field& operator/=(const Field& b) { return *this = *this / b; }
    Field inverse() const;
    Field pow(long k) const;

    friend bool operator==(const Field& a, const Field& b);
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

    /// Numeric value with q set to a real number > 1, zeta_N -> exp(2 pi i / N).
    std::complex<double> to_complex(double q) const;

    /// Exact string such as "zeta(3)^1*q^(1/2)", or "(...)/(...)" in general.
    std::string str() const;

    const CPoly& num() const { return num_; }
    const CPoly& den() const { return den_; }

private:
    void promote_to(long new_root);
    void simplify();
    static void align(Field& a, Field& b);

    long root_;  // D: u = q^{1/D}
    CPoly num_, den_;
    long logq_;
};

} // namespace rescalc
