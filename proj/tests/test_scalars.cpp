#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rescalc/cyclotomic.hpp"
#include "rescalc/field.hpp"
#include "rescalc/series.hpp"

#include <complex>
#include <functional>
#include <random>

using namespace rescalc;

TEST_CASE("rational basics") {
    Rational a(3, 6);
    CHECK(a == Rational(1, 2));
    CHECK((a + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(-7, 2)).mod1() == Rational(1, 2));
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("roots of unity") {
    // phase 0 -> 1, phase 1/2 -> -1, phase 1/3 satisfies z^2 + z + 1 = 0
    CHECK(Cyclo::from_phase(Rational(0)) == Cyclo(Rational(1)));
    CHECK(Cyclo::from_phase(Rational(1, 2)) == Cyclo(Rational(-1)));
    Cyclo z3 = Cyclo::from_phase(Rational(1, 3));
    CHECK((z3 * z3 + z3 + Cyclo(Rational(1))).is_zero());
    Cyclo z = z3 * z3 * z3;
    CHECK(z == Cyclo(Rational(1)));
    // mixed orders promote to the lcm
    Cyclo z4 = Cyclo::from_phase(Rational(1, 4));
    Cyclo w = z3 * z4; // a primitive 12th root
    Cyclo w12 = w;
    for (int i = 0; i < 11; ++i) w12 = w12 * w;
    CHECK(w12 == Cyclo(Rational(1)));
}

TEST_CASE("cyclotomic field axioms on random triples") {
    std::mt19937_64 rng(20240817);
    auto rand_cyclo = [&]() {
        static const long orders[] = {1, 2, 3, 4, 6, 12};
        long n = orders[rng() % 6];
        Cyclo acc;
        for (long j = 0; j < euler_phi(n); ++j) {
            long c = static_cast<long>(rng() % 7) - 3;
            if (c == 0) continue;
            acc = acc + Cyclo(Rational(c)) * Cyclo::root_of_unity(n, j);
        }
        return acc;
    };
    for (int iter = 0; iter < 60; ++iter) {
        Cyclo a = rand_cyclo(), b = rand_cyclo(), c = rand_cyclo();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a + b == b + a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Cyclo(Rational(1)));
        }
    }
}

TEST_CASE("field elements: q powers and logq bookkeeping") {
    Field h = Field::q_power(Rational(1, 2));
    CHECK(h * h == Field::q_power(Rational(1)));
    // (1 - q) + q = 1
    Field q = Field::q_power(Rational(1));
    CHECK((Field::one() - q) + q == Field::one());
    // logq exponents add under multiplication and must match for addition
    Field a = Field(Rational(2)).with_logq(1);
    Field b = Field(Rational(3)).with_logq(1);
    CHECK((a * b).logq_power() == 2);
    CHECK((a + b) == Field(Rational(5)).with_logq(1));
    Field c = Field(Rational(1)).with_logq(2);
    CHECK_THROWS(a + c);
    CHECK((a / c).logq_power() == -1);
}

TEST_CASE("field numeric consistency at q = 2") {
    // evaluating exact elements numerically agrees with direct complex
    // arithmetic to 1e-10
    double q = 2.0;
    Field x = Field::zeta_q(Rational(1, 3), Rational(3, 2));
    std::complex<double> direct =
        std::polar(std::pow(q, 1.5), 2.0 * 3.14159265358979323846 / 3.0);
    CHECK(std::abs(x.to_complex(q) - direct) < 1e-10);
    Field y = (x * x - Field::one()) / (x + Field(Rational(7)));
    std::complex<double> dy = (direct * direct - 1.0) / (direct + 7.0);
    CHECK(std::abs(y.to_complex(q) - dy) < 1e-10);
}

TEST_CASE("series expansion: simple pole of 1/(1 - t/2) at t = 2") {
    // 1 - t/2 = -(t-2)/2, so the residue coefficient is -2
    UniPoly num = UniPoly::constant(Field::one());
    UniPoly den;
    den.c = {Field::one(), Field(Rational(-1, 2))};
    LaurentSeries s = series_expand(num, den, Field(Rational(2)), 3);
    CHECK(s.valuation == -1);
    CHECK(s.coeff(-1) == Field(Rational(-2)));
    CHECK(residue_coefficient(s) == Field(Rational(-2)));
}

TEST_CASE("series expansion: double zero of (1-t)^2 at t = 1") {
    UniPoly num;
    num.c = {Field::one(), Field(Rational(-2)), Field::one()};
    UniPoly den = UniPoly::constant(Field::one());
    LaurentSeries s = series_expand(num, den, Field::one(), 4);
    CHECK(s.valuation == 2);
    CHECK(s.coeff(2) == Field::one());
    CHECK(residue_coefficient(s) == Field::zero());
}

TEST_CASE("residue of 1/(t(1-t/q)) at t = q is -1") {
    Field q = Field::q_power(Rational(1));
    UniPoly num = UniPoly::monomial(Field::one(), -1); // 1/t
    UniPoly den;
    den.c = {Field::one(), Field::zero() - q.inverse()};
    LaurentSeries s = series_expand(num, den, q, 2);
    CHECK(s.valuation == -1);
    CHECK(residue_coefficient(s) == Field(Rational(-1)));
}

namespace {

// numeric Laurent-coefficient fit by sampling f on a small circle around t0
std::complex<double> numeric_laurent_coeff(const std::function<std::complex<double>(std::complex<double>)>& f,
                                           std::complex<double> t0, int exponent,
                                           int samples = 64, double radius = 1e-2) {
    std::complex<double> acc(0.0, 0.0);
    for (int k = 0; k < samples; ++k) {
        double th = 2.0 * 3.14159265358979323846 * k / samples;
        std::complex<double> w = std::polar(radius, th);
        acc += f(t0 + w) * std::pow(w, -exponent);
    }
    return acc / static_cast<double>(samples);
}

} // namespace

TEST_CASE("generic mu restriction series against the numeric Laurent fit at q = 4") {
    // f(t) = (1-t)(1-1/t) / ((1-q/t)(1-q t)) around t = q, with q = u^2, D = 2.
    // The exact residue coefficient is -(q-1)/(q(q+1)); at q = 4 this is -3/20.
    Field q = Field::q_power(Rational(1));
    Field u = Field::q_power(Rational(1, 2));
    CHECK(u * u == q);
    // numerator: (1-t)(1-1/t) = -(1-t)^2 / t = (2 - t - 1/t)
    UniPoly num;
    num.shift = -1;
    num.c = {Field(Rational(-1)), Field(Rational(2)), Field(Rational(-1))};
    // denominator: (1-q/t)(1-qt) = 1 + q^2 - q/t - q t
    UniPoly den;
    den.shift = -1;
    den.c = {Field::zero() - q, Field::one() + q * q, Field::zero() - q};
    LaurentSeries s = series_expand(num, den, q, 2);
    CHECK(s.valuation == -1);
    Field res = residue_coefficient(s);
    // (t-q) f(t) -> (q-1)/(q+1) as t -> q; frozen from the numeric fit below
    Field expected = (q - Field::one()) / (q + Field::one());
    CHECK(res == expected);
    double qnum = 4.0;
    CHECK(std::abs(res.to_complex(qnum) - std::complex<double>(0.6, 0.0)) < 1e-9);
    auto fnum = [&](std::complex<double> t) {
        return (1.0 - t) * (1.0 - 1.0 / t) /
               ((1.0 - qnum / t) * (1.0 - qnum * t));
    };
    std::complex<double> fit = numeric_laurent_coeff(fnum, {qnum, 0.0}, -1);
    CHECK(std::abs(fit - res.to_complex(qnum)) < 1e-6);
}

TEST_CASE("series multiplication obeys the Cauchy product") {
    // expand f = 1/(1 - t/2) and g = (1 - t) at t = 3 and compare
    // series(f g) with the product of the series
    Field t0 = Field(Rational(3));
    UniPoly fn = UniPoly::constant(Field::one());
    UniPoly fd;
    fd.c = {Field::one(), Field(Rational(-1, 2))};
    UniPoly gn;
    gn.c = {Field::one(), Field(Rational(-1))};
    UniPoly gd = UniPoly::constant(Field::one());
    long order = 4;
    LaurentSeries sf = series_expand(fn, fd, t0, order);
    LaurentSeries sg = series_expand(gn, gd, t0, order);
    LaurentSeries sfg = series_expand(gn, fd, t0, order);
    for (long e = sfg.valuation; e <= order; ++e) {
        Field acc = Field::zero();
        for (long i = sf.valuation; i <= e - sg.valuation; ++i)
            acc += sf.coeff(i) * sg.coeff(e - i);
        CHECK(acc == sfg.coeff(e));
    }
}

TEST_CASE("residue coefficient is linear") {
    Field t0 = Field(Rational(2));
    UniPoly n1 = UniPoly::constant(Field::one());
    UniPoly d1;
    d1.c = {Field::one(), Field(Rational(-1, 2))};
    UniPoly n2 = UniPoly::monomial(Field::one(), 1);
    LaurentSeries s1 = series_expand(n1, d1, t0, 1);
    LaurentSeries s2 = series_expand(n2, d1, t0, 1);
    // a f + b g with a = 3, b = -1/2: expand the combined numerator
    UniPoly comb;
    comb.c = {Field(Rational(3)), Field(Rational(-1, 2))};
    LaurentSeries s3 = series_expand(comb, d1, t0, 1);
    Field expect = Field(Rational(3)) * residue_coefficient(s1) +
                   Field(Rational(-1, 2)) * residue_coefficient(s2);
    CHECK(residue_coefficient(s3) == expect);
}

TEST_CASE("zero function errors") {
    UniPoly zero;
    zero.c = {Field::zero()};
    UniPoly one = UniPoly::constant(Field::one());
    CHECK_THROWS(series_expand(zero, one, Field::one(), 2));
    CHECK_THROWS(series_expand(one, zero, Field::one(), 2));
}
