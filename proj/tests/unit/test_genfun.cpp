#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "shintani/genfun.hpp"

using namespace shintani;

namespace {

// Bernoulli numbers from sum_{j<=m} C(m+1, j) B_j = 0, B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(int max)
{
    std::vector<Rational> b{Rational(1)};
    for (int m = 1; m <= max; ++m) {
        Rational s = 0;
        Integer binom = 1;  // C(m+1, j)
        for (int j = 0; j < m; ++j) {
            s += Rational(binom) * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b.push_back(-s / Rational(m + 1));
    }
    return b;
}

Rational bernoulli_poly_at(int m, const Rational& x)
{
    auto b = bernoulli_numbers(m);
    Rational s = 0, xp = 1;
    Integer binom = 1;  // C(m, m - j) built from the top
    std::vector<Rational> pows{Rational(1)};
    for (int i = 1; i <= m; ++i)
        pows.push_back(pows.back() * x);
    for (int j = 0; j <= m; ++j) {
        s += Rational(binom) * b[j] * pows[m - j];
        binom = binom * (m - j) / (j + 1);
    }
    return s;
}

Rational rnd(std::mt19937_64& rng, int span, int den = 1)
{
    std::uniform_int_distribution<int> d(-span, span), e(1, den);
    Rational r(d(rng), e(rng));
    r.canonicalize();
    return r;
}

Rational rnd_nonzero(std::mt19937_64& rng, int span, int den = 1)
{
    for (;;) {
        Rational r = rnd(rng, span, den);
        if (r != 0)
            return r;
    }
}

MultiSeries random_series(std::mt19937_64& rng, std::size_t n, int trunc)
{
    MultiSeries s(n, trunc);
    Exponent e(n, 0);
    // walk all exponents of total degree <= trunc
    for (;;) {
        if (total_degree(e) <= trunc)
            s.add_term(e, rnd(rng, 5, 3));
        std::size_t i = 0;
        while (i < n && e[i] == trunc)
            e[i++] = 0;
        if (i == n)
            break;
        ++e[i];
    }
    return s;
}

HdElement random_hd(std::mt19937_64& rng, std::size_t n, std::size_t nforms, int trunc)
{
    std::vector<LinearForm> forms;
    for (std::size_t f = 0; f < nforms; ++f) {
        RatVector c(n);
        for (auto& x : c)
            x = rnd_nonzero(rng, 4);
        forms.push_back({c});
    }
    return HdElement(random_series(rng, n, trunc), forms);
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int span)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = rnd(rng, span);
    return m;
}

}  // namespace

TEST_CASE("multiseries basics")
{
    MultiSeries one = MultiSeries::constant(2, 5, 1);
    MultiSeries e = MultiSeries::exp_linear({1, 2}, 5);
    MultiSeries einv = MultiSeries::exp_linear({-1, -2}, 5);
    CHECK(e * einv == one);
    CHECK(e.inverse() == einv);
    CHECK(e.coeff({1, 1}) == 2);
    CHECK(e.coeff({0, 2}) == 2);
    auto b = MultiSeries::bernoulli_unit({1}, 6);
    auto nums = bernoulli_numbers(6);
    for (int m = 0; m <= 6; ++m)
        CHECK(b.coeff({m}) == nums[m] / Rational(factorial(m)));
    CHECK(e.substitute(RatMatrix::identity(2)) == e);
}

TEST_CASE("genfun_g")
{
    Cone half(1, {{1}});
    auto g0 = genfun_g(half, {0});
    CHECK(g0.numerator_exponents == std::vector<IntVector>{{1}});
    CHECK(g0.denominator_exponents == std::vector<IntVector>{{1}});
    auto g1 = genfun_g(half, {Rational(1, 2)});
    CHECK(g1.numerator_exponents == std::vector<IntVector>{{0}});

    std::mt19937_64 rng(71);
    for (int t = 0; t < 20; ++t) {
        Cone c(2, {{rnd_nonzero(rng, 3), 1}, {1, rnd_nonzero(rng, 3) + 5}});
        RatVector v{rnd(rng, 2, 4), rnd(rng, 2, 4)};
        IntVector mu{Integer(rnd(rng, 3).get_num()), Integer(rnd(rng, 3).get_num())};
        auto a = genfun_g(c, v);
        auto b = genfun_g(c, {v[0] + mu[0], v[1] + mu[1]});
        REQUIRE(a.numerator_exponents.size() == b.numerator_exponents.size());
        for (std::size_t i = 0; i < a.numerator_exponents.size(); ++i)
            CHECK(b.numerator_exponents[i] ==
                  IntVector{a.numerator_exponents[i][0] - mu[0], a.numerator_exponents[i][1] - mu[1]});
    }
}

TEST_CASE("genfun_h on the half line")
{
    Cone half(1, {{1}});
    HdElement h = genfun_h(half, {0}, 6);
    REQUIRE(h.forms().size() == 1);
    // e^z/(1 - e^z) = -(1/z)(1 + z/2 + z^2/12 - z^4/720 + ...)
    CHECK(h.numerator().coeff({0}) == -1);
    CHECK(h.numerator().coeff({1}) == Rational(-1, 2));
    CHECK(h.numerator().coeff({2}) == Rational(-1, 12));
    CHECK(h.numerator().coeff({3}) == 0);
    CHECK(h.numerator().coeff({4}) == Rational(1, 720));
    CHECK(delta_k(h, 0) == Rational(-1, 2));
}

TEST_CASE("Hurwitz values on the half line")
{
    Cone half(1, {{1}});
    for (int q = 1; q <= 7; ++q)
        for (int p = 1; p <= q; ++p)
            for (unsigned k = 0; k <= 4; ++k) {
                const Rational a(p, q);
                Rational a_canon = a;
                a_canon.canonicalize();
                HdElement h = genfun_h(half, {a_canon}, required_trunc(1, k, 1));
                CHECK(delta_k(h, k) == -bernoulli_poly_at(int(k) + 1, a_canon) / Rational(k + 1));
            }
    CHECK(delta_k(genfun_h(half, {Rational(1, 2)}, 4), 1) == Rational(1, 24));
}

TEST_CASE("h is periodic in v")
{
    Cone c(2, {{2, 1}, {1, 3}});
    for (const RatVector& v : std::vector<RatVector>{{0, 0}, {Rational(1, 2), Rational(1, 3)}, {Rational(2, 5), 0}})
        CHECK(genfun_h(c, v, 6).numerator() == genfun_h(c, {v[0] + 3, v[1] - 2}, 6).numerator());
}

TEST_CASE("Solomon-Hu pairing kills wedges")
{
    std::mt19937_64 rng(73);
    CHECK(solomon_hu(ConeCombo{}, {0, 0}, 5).is_zero());
    int checked = 0;
    while (checked < 50) {
        const std::size_t n = checked % 5 == 4 ? 3 : 2;
        std::vector<RatVector> g(n, RatVector(n));
        for (auto& x : g)
            for (auto& c : x)
                c = rnd(rng, 3);
        if (det(RatMatrix::from_columns(g)) == 0)
            continue;
        // R g0 + R_{>0} g1 + ... = C(g0, ..) + C(-g0, ..) + C(..)
        std::vector<RatVector> minus = g, rest(g.begin() + 1, g.end());
        for (auto& c : minus[0])
            c = -c;
        ConeCombo wedge;
        wedge.add(Cone(n, g), 1);
        wedge.add(Cone(n, minus), 1);
        wedge.add(Cone(n, rest), 1);
        RatVector v(n);
        for (auto& c : v)
            c = rnd(rng, 2, 5);
        CHECK(solomon_hu(wedge, v, n == 2 ? 8 : 6).is_zero());
        ++checked;
    }
}

TEST_CASE("Solomon-Hu pairing is linear")
{
    Cone a(2, {{1, 0}, {1, 1}}), b(2, {{1, 2}, {0, 1}});
    ConeCombo ab;
    ab.add(a, 1);
    ab.add(b, 2);
    RatVector v{Rational(1, 3), 0};
    HdElement lhs = solomon_hu(ab, v, 6);
    HdElement rhs = genfun_h(a, v, 6) + genfun_h(b, v, 6) * Rational(2);
    CHECK((lhs - rhs).is_zero());
}

TEST_CASE("series-level cocycle relation")
{
    std::mt19937_64 rng(79);
    int checked = 0;
    while (checked < 30) {
        const std::size_t n = checked % 3 == 2 ? 3 : 2;
        std::vector<RatVector> vs(n + 1, RatVector(n));
        for (auto& x : vs)
            for (auto& c : x)
                c = rnd(rng, 3);
        // first columns of invertible matrices are never zero
        if (std::any_of(vs.begin(), vs.end(), [&](const RatVector& x) { return x == RatVector(n, 0); }))
            continue;
        RatVector q(n), v(n);
        for (auto& c : q)
            c = rnd(rng, 30, 7);
        for (auto& c : v)
            c = rnd(rng, 2, 3);
        ConeCombo defect;
        try {
            defect = cocycle_defect(vs, PerturbationVector::rational(q));
        } catch (const Error&) {
            continue;
        }
        CHECK(solomon_hu(defect, v, 6).is_zero());
        ++checked;
    }
}

TEST_CASE("substitute_linear")
{
    HdElement e(MultiSeries::constant(2, 4, 1), {LinearForm{{1, 1}}});
    CHECK(substitute_linear(e, RatMatrix::identity(2)).numerator() == e.numerator());
    CHECK(substitute_linear(e, RatMatrix::identity(2)).forms() == e.forms());
    CHECK(LinearForm{{1, 0}}.substitute(RatMatrix{{1, 2}, {3, 4}}) == LinearForm{{1, 2}});
    HdElement z1(MultiSeries::constant(2, 4, 1), {LinearForm{{1, 0}}});
    CHECK_THROWS_AS(substitute_linear(z1, RatMatrix{{1, 0}, {3, 4}}), Error);
    CHECK_NOTHROW(substitute_linear(z1, RatMatrix{{1, 2}, {3, 4}}));
}

TEST_CASE("delta operators on small examples")
{
    Polynomial num = Polynomial::linear({1, -1});
    HdElement g(MultiSeries::from_polynomial(num, 3), {LinearForm{{1, 1}}});
    CHECK(delta_kj(g, 0, 0) == 1);
    CHECK(delta_kj(g, 1, 0) == -1);
    CHECK(delta_k(g, 0) == 0);

    MultiSeries zz(2, 4);
    zz.add_term({1, 1}, 1);
    HdElement r(zz, {});
    CHECK(delta_kj(r, 0, 1) == 1);
    CHECK(delta_kj(r, 1, 1) == 1);
    CHECK(delta_k(r, 1) == 1);

    MultiSeries u(1, 6);
    for (int m = 0; m <= 6; ++m)
        u.add_term({m}, Rational(m + 1) / 7);
    for (unsigned k = 0; k <= 4; ++k)
        CHECK(delta_kj(HdElement(u, {}), 0, k) == Rational(k + 1) / 7);

    CHECK_THROWS_AS(delta_k(HdElement(zz, {}), 2), Error);
    HdElement sparse(MultiSeries::constant(2, 6, 1), {LinearForm{{1, 0}}});
    CHECK_THROWS_AS(delta_k(sparse, 0), Error);
}

TEST_CASE("regular part")
{
    std::mt19937_64 rng(83);
    for (int t = 0; t < 10; ++t) {
        MultiSeries g = random_series(rng, 2, 6);
        LinearForm f{{rnd_nonzero(rng, 3), rnd_nonzero(rng, 3)}};
        HdElement e(g * f.poly(), {f});
        MultiSeries back;
        REQUIRE(e.regular_part(back));
        CHECK(back == g.truncated(5));
        MultiSeries junk;
        CHECK_FALSE(HdElement(g + MultiSeries::constant(2, 6, 1), {f}).regular_part(junk));
    }
}

TEST_CASE("diagonal scaling and permutation invariance")
{
    std::mt19937_64 rng(89);
    for (int t = 0; t < 12; ++t) {
        const std::size_t n = t % 2 ? 3 : 2;
        const unsigned k = t % 3;
        const std::size_t nforms = 1 + t % 2;
        HdElement h = random_hd(rng, n, nforms, required_trunc(n, k, nforms));
        const Rational base = delta_k(h, k);
        RatMatrix d(n, n);
        Rational prod = 1;
        for (std::size_t i = 0; i < n; ++i) {
            d(i, i) = rnd_nonzero(rng, 4, 3);
            prod *= d(i, i);
        }
        Rational pk = 1;
        for (unsigned i = 0; i < k; ++i)
            pk *= prod;
        CHECK(delta_k(substitute_linear(h, d), k) == pk * base);
        RatMatrix perm(n, n);
        for (std::size_t i = 0; i < n; ++i)
            perm(i, (i + 1) % n) = 1;
        CHECK(delta_k(substitute_linear(h, perm), k) == base);
    }
}

TEST_CASE("prk coefficients")
{
    Polynomial x1x2 = Polynomial::variable(2, 0) * Polynomial::variable(2, 1);
    auto p = prk_coeffs(x1x2, RatMatrix::identity(2), 1);
    CHECK(p.size() == 1);
    CHECK(p.at({1, 1}) == 1);
    auto p0 = prk_coeffs(x1x2, RatMatrix::identity(2), 0);
    CHECK(p0.size() == 1);
    CHECK(p0.at({0, 0}) == 1);

    // C_{r,s}(M) = s! coeff(z^s, (zM)^r) is symmetric under (r, s, M) -> (s, r, M^t)
    auto crs = [](const RatMatrix& m, const Exponent& r, const Exponent& s) -> Rational {
        const std::size_t n = m.rows();
        Polynomial prod = Polynomial::constant(n, 1);
        for (std::size_t i = 0; i < n; ++i)
            prod = prod * Polynomial::linear(m.column(i)).pow(unsigned(r[i]));
        return prod.coeff(s) * multi_factorial(s);
    };
    RatMatrix m{{1, 2}, {3, 4}};
    CHECK(crs(m, {2, 0}, {1, 1}) == 6);
    CHECK(crs(m.transpose(), {1, 1}, {2, 0}) == 6);
    std::mt19937_64 rng(97);
    for (int t = 0; t < 20; ++t) {
        RatMatrix a = random_matrix(rng, 3, 3);
        Exponent r{t % 3, 1, 2 - t % 3}, s{1, (t + 1) % 3, 2 - (t + 1) % 3};
        CHECK(crs(a, r, s) == crs(a.transpose(), s, r));
    }
}

TEST_CASE("delta_P")
{
    std::mt19937_64 rng(101);
    MultiSeries s = random_series(rng, 2, 5);
    CHECK(delta_P(s, Polynomial::constant(2, 1)) == s.coeff({0, 0}));
    Polynomial p = Polynomial::linear({1, 2}).pow(2), q = Polynomial::linear({3, -1}).pow(2);
    CHECK(delta_P(s, p + q * Rational(3)) == delta_P(s, p) + 3 * delta_P(s, q));
}

TEST_CASE("twisting a regular series by M")
{
    std::mt19937_64 rng(103);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = t % 2 ? 3 : 2;
        const unsigned k = 1 + t % 2;
        RatMatrix m = random_matrix(rng, n, 3);
        Polynomial fM = Polynomial::constant(n, 1);
        for (std::size_t j = 0; j < n; ++j)
            fM = fM * Polynomial::linear(m.column(j));
        MultiSeries f = random_series(rng, n, required_trunc(n, k, 0));
        const Rational lhs = delta_k(substitute_linear(HdElement(f, {}), m), k);
        Rational rhs = 0;
        for (const auto& [r, pr] : prk_coeffs(fM, RatMatrix::identity(n), k))
            rhs += f.coeff(r) * pr;
        CHECK(lhs == rhs);
        CHECK(lhs == delta_P(f, fM.pow(k)));
    }
}

TEST_CASE("truncation stability")
{
    Cone c(2, {{2, 1}, {1, 3}});
    RatMatrix m{{1, 2}, {-3, 1}};
    for (unsigned k = 0; k <= 2; ++k) {
        const int t = required_trunc(2, k, 2) + 2;
        HdElement a = substitute_linear(genfun_h(c, {Rational(1, 3), 0}, t), m);
        HdElement b = substitute_linear(genfun_h(c, {Rational(1, 3), 0}, t + 2), m);
        CHECK(delta_k(a, k) == delta_k(b, k));
    }
}
