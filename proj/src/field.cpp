#include "rescalc/field.hpp"

#include <cmath>
#include <sstream>

namespace rescalc {

CPoly CPoly::monomial(Cyclo c, long deg) {
    std::vector<Cyclo> v(deg + 1, Cyclo());
    v[deg] = std::move(c);
    return CPoly(std::move(v));
}

long CPoly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<long>(i);
    return 0;
}

CPoly operator+(const CPoly& a, const CPoly& b) {
    std::vector<Cyclo> r = a.c_;
    if (r.size() < b.c_.size()) r.resize(b.c_.size(), Cyclo());
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return CPoly(std::move(r));
}

CPoly CPoly::operator-() const {
    std::vector<Cyclo> r = c_;
    for (auto& x : r) x = -x;
    return CPoly(std::move(r));
}

CPoly operator-(const CPoly& a, const CPoly& b) { return a + (-b); }

CPoly operator*(const CPoly& a, const CPoly& b) {
    if (a.is_zero() || b.is_zero()) return CPoly();
    std::vector<Cyclo> r(a.c_.size() + b.c_.size() - 1, Cyclo());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
    }
    return CPoly(std::move(r));
}

std::pair<CPoly, CPoly> CPoly::divmod(const CPoly& a, const CPoly& b) {
    if (b.is_zero()) throw std::domain_error("CPoly: division by zero polynomial");
    std::vector<Cyclo> rem = a.c_;
    auto rem_deg = [&]() -> long {
        long d = static_cast<long>(rem.size()) - 1;
        while (d > 0 && rem[d].is_zero()) --d;
        return (d == 0 && rem[0].is_zero()) ? -1 : d;
    };
    long db = b.degree();
    Cyclo lead_inv = b.c_.back().inverse();
    long dr = rem_deg();
    std::vector<Cyclo> q(dr >= db ? dr - db + 1 : 1, Cyclo());
    while (dr >= db) {
        Cyclo f = rem[dr] * lead_inv;
        q[dr - db] = f;
        for (long i = 0; i <= db; ++i)
            rem[dr - db + i] = rem[dr - db + i] - f * b.c_[i];
        dr = rem_deg();
    }
    return {CPoly(std::move(q)), CPoly(std::move(rem))};
}

CPoly CPoly::gcd(CPoly a, CPoly b) {
    // keep the remainders monic: plain Euclid over Q-coefficients grows
    // rational sizes explosively
    auto monic = [](CPoly p) {
        if (p.is_zero()) return p;
        Cyclo inv = p.c_.back().inverse();
        for (auto& x : p.c_) x = x * inv;
        return p;
    };
    a = monic(std::move(a));
    b = monic(std::move(b));
    while (!b.is_zero()) {
        CPoly r = monic(divmod(a, b).second);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

CPoly CPoly::stretch(long k) const {
    if (k == 1) return *this;
    std::vector<Cyclo> r(static_cast<size_t>(degree()) * k + 1, Cyclo());
    for (size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return CPoly(std::move(r));
}

CPoly CPoly::compress(long k) const {
    if (k == 1) return *this;
    std::vector<Cyclo> r(degree() / k + 1, Cyclo());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (static_cast<long>(i) % k != 0)
            throw std::logic_error("CPoly::compress: exponent not divisible");
        r[i / k] = c_[i];
    }
    return CPoly(std::move(r));
}

Field Field::zeta_q(const Rational& phase, const Rational& expo) {
    Field f{Cyclo::from_phase(phase)};
    return f * q_power(expo);
}

Field Field::q_power(const Rational& expo) {
    Field f = Field::one();
    if (expo.is_zero()) return f;
    long d = expo.den().convert_to<long>();
    long n = expo.num().convert_to<long>();
    f.root_ = d;
    if (n >= 0) {
        f.num_ = CPoly::monomial(Cyclo(Rational(1)), n);
    } else {
        f.den_ = CPoly::monomial(Cyclo(Rational(1)), -n);
    }
    return f;
}

void Field::promote_to(long new_root) {
    if (new_root == root_) return;
    if (new_root % root_ != 0)
        throw std::logic_error("Field: bad root order promotion");
    long k = new_root / root_;
    num_ = num_.stretch(k);
    den_ = den_.stretch(k);
    root_ = new_root;
}

void Field::align(Field& a, Field& b) {
    long r = lcm_long(a.root_, b.root_);
    a.promote_to(r);
    b.promote_to(r);
}

void Field::simplify() {
    if (num_.is_zero()) {
        den_ = CPoly(Cyclo(Rational(1)));
        root_ = 1;
        logq_ = 0;
        return;
    }
    // Polynomial gcd reduction is deliberately limited to small degrees: a
    // naive Euclid over cyclotomic coefficients blows up rational sizes, and
    // every exact comparison cross-multiplies anyway.
    if (den_.degree() > 0 && num_.degree() + den_.degree() <= 24) {
        CPoly g = CPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = CPoly::divmod(num_, g).first;
            den_ = CPoly::divmod(den_, g).first;
        }
    }
    // pull out common powers of u
    long v = std::min(num_.valuation(), den_.valuation());
    if (v > 0) {
        auto shift = [&](const CPoly& p) {
            std::vector<Cyclo> c(p.coeffs().begin() + v, p.coeffs().end());
            return CPoly(std::move(c));
        };
        num_ = shift(num_);
        den_ = shift(den_);
    }
    // normalize: denominator leading coefficient 1
    Cyclo inv = den_.coeffs().back().inverse();
    if (!(den_.coeffs().back() == Cyclo(Rational(1)))) {
        num_ = num_ * CPoly(inv);
        den_ = den_ * CPoly(inv);
    }
    // shrink the root order if all exponents allow it
    for (long k = root_; k > 1; --k) {
        if (root_ % k != 0) continue;
        bool ok = true;
        for (size_t i = 0; i < static_cast<size_t>(num_.degree()) + 1 && ok; ++i)
            if (!num_.coeffs()[i].is_zero() && i % k != 0) ok = false;
        for (size_t i = 0; i < static_cast<size_t>(den_.degree()) + 1 && ok; ++i)
            if (!den_.coeffs()[i].is_zero() && i % k != 0) ok = false;
        if (ok) {
            num_ = num_.compress(k);
            den_ = den_.compress(k);
            root_ /= k;
            break;
        }
    }
}

Field Field::operator-() const {
    Field f = *this;
    f.num_ = -f.num_;
    return f;
}

Field operator+(const Field& a, const Field& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.logq_ != b.logq_)
        throw std::domain_error("Field: logq power mismatch in addition");
    Field x = a, y = b;
    Field::align(x, y);
    Field r;
    r.root_ = x.root_;
    r.logq_ = x.logq_;
    r.num_ = x.num_ * y.den_ + y.num_ * x.den_;
    r.den_ = x.den_ * y.den_;
    r.simplify();
    return r;
}

Field operator-(const Field& a, const Field& b) { return a + (-b); }

Field operator*(const Field& a, const Field& b) {
    if (a.is_zero() || b.is_zero()) return Field::zero();
    Field x = a, y = b;
    Field::align(x, y);
    Field r;
    r.root_ = x.root_;
    r.logq_ = x.logq_ + y.logq_;
    r.num_ = x.num_ * y.num_;
    r.den_ = x.den_ * y.den_;
    r.simplify();
    return r;
}

Field Field::inverse() const {
    if (is_zero()) throw std::domain_error("Field: division by zero");
    Field r;
    r.root_ = root_;
    r.logq_ = -logq_;
    r.num_ = den_;
    r.den_ = num_;
    r.simplify();
    return r;
}

Field operator/(const Field& a, const Field& b) { return a * b.inverse(); }

Field Field::pow(long k) const {
    if (k == 0) return Field::one();
    Field base = k > 0 ? *this : inverse();
    long n = k > 0 ? k : -k;
    Field r = Field::one();
    for (long i = 0; i < n; ++i) r *= base;
    return r;
}

bool operator==(const Field& a, const Field& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.logq_ != b.logq_) return false;
    Field x = a, y = b;
    Field::align(x, y);
    return (x.num_ * y.den_) == (y.num_ * x.den_);
}

std::complex<double> Field::to_complex(double q) const {
    double u = std::pow(q, 1.0 / static_cast<double>(root_));
    auto eval = [&](const CPoly& p) {
        std::complex<double> acc(0.0, 0.0);
        double up = 1.0;
        for (const auto& c : p.coeffs()) {
            if (!c.is_zero()) acc += c.to_complex() * up;
            up *= u;
        }
        return acc;
    };
    std::complex<double> v = eval(num_) / eval(den_);
    if (logq_ != 0) v *= std::pow(std::log(q), static_cast<double>(logq_));
    return v;
}

namespace {

std::string poly_str(const CPoly& p, long root) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    int printed = 0;
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        const Cyclo& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        ++printed;
        if (!first) os << "+";
        first = false;
        bool coeff_one = (c == Cyclo(Rational(1)));
        if (i == 0) {
            os << c.str();
        } else {
            if (!coeff_one) os << c.str() << "*";
            os << "q^(";
            os << Rational(static_cast<long>(i), root).str();
            os << ")";
        }
    }
    std::string s = os.str();
    if (printed > 1) return "(" + s + ")";
    return s;
}

} // namespace

std::string Field::str() const {
    if (is_zero()) return "0";
    std::string s = poly_str(num_, root_);
    bool den_one = (den_.degree() == 0 && den_.coeffs()[0] == Cyclo(Rational(1)));
    if (!den_one) s += "/" + poly_str(den_, root_);
    if (logq_ != 0) {
        std::ostringstream os;
        os << s << "*logq^" << logq_;
        return os.str();
    }
    return s;
}

} // namespace rescalc
