#include "rescalc/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rescalc {

long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<BigInt> poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    std::vector<BigInt> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, BigInt(0));
    while (num.size() >= den.size() && !(num.size() == 1 && num[0] == 0)) {
        BigInt lead = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = lead;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
        while (num.size() > 1 && num.back() == 0) num.pop_back();
        if (num.size() < den.size()) break;
    }
    return q;
}

} // namespace

const std::vector<BigInt>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<BigInt>> cache;
    static std::mutex mtx;
    if (n <= 0) throw std::domain_error("cyclotomic order must be positive");
    if (n > 3000) throw std::domain_error("cyclotomic order too large");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_m = (x^m - 1) / prod of Phi_d over proper divisors d of m,
    // filled bottom-up over the divisors of n.
    for (long m = 1; m <= n; ++m) {
        if (n % m != 0 || cache.count(m)) continue;
        std::vector<BigInt> poly(m + 1, BigInt(0));
        poly[0] = -1;
        poly[m] = 1;
        for (long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            poly = poly_div_exact(std::move(poly), cache.at(d));
        }
        cache.emplace(m, std::move(poly));
    }
    return cache.at(n);
}

std::vector<Rational> Cyclo::reduce(std::vector<Rational> poly, long order) {
    const auto& phi = cyclotomic_polynomial(order);
    size_t deg = phi.size() - 1; // = euler_phi(order)
    while (poly.size() > deg) {
        Rational lead = poly.back();
        size_t shift = poly.size() - 1 - deg;
        if (!lead.is_zero()) {
            for (size_t i = 0; i < deg; ++i)
                poly[shift + i] -= lead * Rational(phi[i], phi.back());
        }
        poly.pop_back();
    }
    poly.resize(deg, Rational(0));
    return poly;
}

Cyclo Cyclo::root_of_unity(long order, long power) {
    if (order <= 0) throw std::domain_error("root_of_unity: order must be positive");
    power %= order;
    if (power < 0) power += order;
    Cyclo z;
    z.order_ = order;
    std::vector<Rational> poly(power + 1, Rational(0));
    poly[power] = Rational(1);
    z.coeffs_ = reduce(std::move(poly), order);
    return z;
}

Cyclo Cyclo::from_phase(const Rational& phase) {
    Rational p = phase.mod1();
    long den = p.den().convert_to<long>();
    long num = p.num().convert_to<long>();
    return root_of_unity(den, num);
}

bool Cyclo::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Cyclo Cyclo::promoted(long new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
        throw std::domain_error("Cyclo: promotion target must be a multiple of the order");
    long step = new_order / order_;
    std::vector<Rational> poly(static_cast<size_t>(new_order), Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j)
        poly[j * step] = coeffs_[j];
    Cyclo z;
    z.order_ = new_order;
    z.coeffs_ = reduce(std::move(poly), new_order);
    return z;
}

Cyclo Cyclo::operator-() const {
    Cyclo z = *this;
    for (auto& c : z.coeffs_) c = -c;
    return z;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    long n = lcm_long(a.order_, b.order_);
    Cyclo x = a.promoted(n), y = b.promoted(n);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    long n = lcm_long(a.order_, b.order_);
    Cyclo x = a.promoted(n), y = b.promoted(n);
    std::vector<Rational> prod(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < y.coeffs_.size(); ++j)
            prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    Cyclo z;
    z.order_ = n;
    z.coeffs_ = Cyclo::reduce(std::move(prod), n);
    return z;
}

namespace {

using QPoly = std::vector<Rational>;

void q_trim(QPoly& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    q_trim(r);
    return r;
}

QPoly q_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    q_trim(a);
    return a;
}

bool q_is_zero(const QPoly& p) { return p.size() == 1 && p[0].is_zero(); }

// remainder and quotient of a by b over Q
std::pair<QPoly, QPoly> q_divmod(QPoly a, const QPoly& b) {
    QPoly q(1, Rational(0));
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (!q_is_zero(a) && a.size() >= b.size()) {
        Rational lead = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        q_trim(a);
        if (a.size() < b.size()) break;
    }
    return {q, a};
}

} // namespace

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo: inverse of zero");
    if (is_rational()) return Cyclo(Rational(1) / coeffs_[0]);
    // Extended Euclid of this against Phi_N over Q; Phi_N is irreducible so
    // the gcd is a nonzero constant.
    const auto& phi_int = cyclotomic_polynomial(order_);
    QPoly r0(phi_int.size());
    for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
    QPoly r1(coeffs_.begin(), coeffs_.end());
    q_trim(r1);
    QPoly s0{Rational(0)}, s1{Rational(1)}; // coefficients of the input polynomial
    while (!q_is_zero(r1)) {
        auto [q, r2] = q_divmod(r0, r1);
        QPoly s2 = q_sub(s0, q_mul(q, s1));
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant), s0 * this == r0 mod Phi
    if (r0.size() != 1 || r0[0].is_zero())
        throw std::logic_error("Cyclo: inverse failed (Phi_N not coprime?)");
    Cyclo z;
    z.order_ = order_;
    for (auto& c : s0) c /= r0[0];
    z.coeffs_ = reduce(std::move(s0), order_);
    return z;
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
    long n = lcm_long(a.order_, b.order_);
    return a.promoted(n).coeffs_ == b.promoted(n).coeffs_;
}

std::complex<double> Cyclo::to_complex() const {
    std::complex<double> z(0.0, 0.0);
    const double two_pi = 6.283185307179586476925286766559;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        double arg = two_pi * static_cast<double>(j) / static_cast<double>(order_);
        z += coeffs_[j].to_double() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return z;
}

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    int printed = 0;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        ++printed;
        if (!first) os << (coeffs_[j].sign() > 0 ? "+" : "-");
        Rational c = first ? coeffs_[j]
                           : (coeffs_[j].sign() > 0 ? coeffs_[j] : -coeffs_[j]);
        if (j == 0) {
            os << c.str();
        } else {
            if (!(c == Rational(1))) os << c.str() << "*";
            os << "zeta(" << order_ << ")";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    std::string s = os.str();
    if (printed > 1) return "(" + s + ")";
    return s;
}

} // namespace rescalc
