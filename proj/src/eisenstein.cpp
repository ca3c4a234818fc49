#include "shintani/eisenstein.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>

namespace shintani {

namespace {

std::mutex bernoulli_mutex;
std::deque<std::vector<Rational>> bernoulli_cache;  // deque: references stay valid while it grows

Rational exact_ratio(const Integer& a, const Integer& b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

Integer power(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

bool divisible(const Integer& x, const Integer& ell)
{
    return mpz_divisible_p(x.get_mpz_t(), ell.get_mpz_t()) != 0;
}

RatVector apply_pi(const RatVector& v, const Integer& ell)
{
    RatVector out = v;
    out[0] *= ell;
    return out;
}

std::vector<RatMatrix> conjugate_by_pi(const std::vector<RatMatrix>& A, const Integer& ell)
{
    std::vector<RatMatrix> out;
    for (const auto& a : A) {
        const std::size_t n = a.rows();
        out.push_back(pi_ell(n, ell) * a * inv_det(pi_ell(n, ell)).inverse);
    }
    return out;
}

// All exponent vectors of total degree <= t.
std::vector<Exponent> exponents_up_to(std::size_t n, int t)
{
    std::vector<Exponent> out;
    Exponent e(n, 0);
    for (;;) {
        if (total_degree(e) <= t)
            out.push_back(e);
        std::size_t i = 0;
        while (i < n && e[i] == t)
            e[i++] = 0;
        if (i == n)
            break;
        ++e[i];
    }
    return out;
}

}  // namespace

const std::vector<Rational>& bernoulli_poly(unsigned k)
{
    std::lock_guard lock(bernoulli_mutex);
    // B_m by sum_{j<=m} C(m+1, j) B_j = 0; b_k(x) = sum_j C(k, j) B_j x^{k-j}
    static std::vector<Rational> numbers{Rational(1)};
    while (numbers.size() <= k) {
        const unsigned m = unsigned(numbers.size());
        Rational s = 0;
        Integer binom = 1;
        for (unsigned j = 0; j < m; ++j) {
            s += binom * numbers[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        numbers.push_back(-s / (m + 1));
    }
    while (bernoulli_cache.size() <= k) {
        const unsigned m = unsigned(bernoulli_cache.size());
        std::vector<Rational> p(m + 1);
        Integer binom = 1;
        for (unsigned j = 0; j <= m; ++j) {
            p[m - j] = binom * numbers[j];
            binom = binom * (m - j) / (j + 1);
        }
        bernoulli_cache.push_back(std::move(p));
    }
    return bernoulli_cache[k];
}

Rational bernoulli_eval(unsigned k, const Rational& x)
{
    const auto& p = bernoulli_poly(k);
    Rational s = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        s = s * x + *it;
    return s;
}

Rational periodic_B(unsigned k, const Rational& x)
{
    if (k == 1 && is_integer(x))
        fail(Errc::AmbiguousB1, "B_1 at an integer needs a choice of Q");
    return bernoulli_eval(k, frac(x));
}

std::vector<int> component_signs(const PerturbationVector& q)
{
    std::vector<int> s;
    for (std::size_t i = 0; i < q.dim(); ++i) {
        RatVector e(q.dim(), Rational(0));
        e[i] = 1;
        s.push_back(q.sign_pairing(e));
    }
    return s;
}

Rational b_product(const std::vector<unsigned>& e, const RatVector& v, const std::vector<int>& q_signs)
{
    Rational p = 1;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 1 && is_integer(v[j])) {
            if (q_signs.at(j) == 0)
                fail(Errc::DegenerateQ, "B_1 at an integer with Q_j = 0");
            p *= Rational(-q_signs[j], 2);
        } else {
            p *= bernoulli_eval(e[j], frac(v[j]));
        }
        if (p == 0)
            break;
    }
    return p;
}

Rational dedekind_D(const IntMatrix& sigma, const std::vector<unsigned>& e, const PerturbationVector& q,
                    const RatVector& v)
{
    return dedekind_D_batch(sigma, {e}, q, v).front();
}

std::vector<Rational> dedekind_D_batch(const IntMatrix& sigma, const std::vector<std::vector<unsigned>>& es,
                                       const PerturbationVector& q, const RatVector& v)
{
    const std::size_t n = sigma.rows();
    const RatMatrix sinv = inv_det(to_rational(sigma)).inverse;
    std::vector<int> signs(n, 0);
    const bool any_one = std::any_of(es.begin(), es.end(), [](const auto& e) {
        return std::find(e.begin(), e.end(), 1u) != e.end();
    });
    if (any_one)
        signs = component_signs(q.transformed(sinv));
    const LatticeQuotient quot(sigma);
    std::vector<Rational> out(es.size(), Rational(0));
    RatVector shifted(n);
    for (const auto& x : quot.reps()) {
        for (std::size_t i = 0; i < n; ++i)
            shifted[i] = v[i] + x[i];
        const RatVector y = sinv * shifted;
        for (std::size_t t = 0; t < es.size(); ++t)
            out[t] += b_product(es[t], y, signs);
    }
    return out;
}

RatMatrix pi_ell(std::size_t n, const Integer& ell)
{
    RatMatrix p = RatMatrix::identity(n);
    p(0, 0) = ell;
    return p;
}

Rational dedekind_D_ell(const IntMatrix& sigma, const std::vector<unsigned>& e, const PerturbationVector& q,
                        const RatVector& v, const Integer& ell)
{
    return dedekind_D_ell_batch(sigma, {e}, q, v, ell).front();
}

std::vector<Rational> dedekind_D_ell_batch(const IntMatrix& sigma, const std::vector<std::vector<unsigned>>& es,
                                           const PerturbationVector& q, const RatVector& v, const Integer& ell)
{
    const std::size_t n = sigma.rows();
    IntMatrix sl = sigma;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!divisible(sigma(i, j), ell))
                fail(Errc::NotSmoothable, "rows 2..n of sigma are not divisible by ell");
            sl(i, j) = sigma(i, j) / ell;
        }
    const auto top = dedekind_D_batch(sl, es, q.transformed(pi_ell(n, ell)), apply_pi(v, ell));
    const auto base = dedekind_D_batch(sigma, es, q, v);
    std::vector<Rational> out;
    for (std::size_t t = 0; t < es.size(); ++t) {
        const long weight = 1 - long(n) + std::accumulate(es[t].begin(), es[t].end(), 0L);
        out.push_back(top[t] - power(ell, weight) * base[t]);
    }
    return out;
}

bool in_gamma_ell(const RatMatrix& a, const Integer& ell)
{
    if (!a.square() || a.rows() == 0)
        return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (divisible(a(i, j).get_den(), ell))
                return false;
    for (std::size_t i = 1; i < a.rows(); ++i)
        if (!divisible(a(i, 0).get_num(), ell))
            return false;
    const Rational d = det(a);
    return d != 0 && !divisible(d.get_num(), ell);
}

std::optional<IntMatrix> scaled_first_columns(const std::vector<RatMatrix>& A, const Integer& ell)
{
    const std::size_t n = A.size();
    std::vector<RatVector> cols;
    for (const auto& a : A) {
        if (a.rows() != n || a.cols() != n)
            fail(Errc::InvalidInput, "cocycle argument must be n matrices of size n");
        cols.push_back(a.column(0));
    }
    const RatMatrix s = RatMatrix::from_columns(cols);
    if (det(s) == 0)
        return std::nullopt;
    Integer lambda = 1;
    for (const auto& c : cols) {
        const Integer l = lcm_of_denominators(c);
        mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), l.get_mpz_t());
    }
    if (divisible(lambda, ell))
        fail(Errc::ScalingHitsEll, "clearing denominators needs a multiple of ell");
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = Rational(s(i, j) * lambda).get_num();
    return out;
}

Rational smoothed_cocycle_value(const SmoothedQuery& query)
{
    const std::size_t n = query.A.size();
    const auto sigma = scaled_first_columns(query.A, query.ell);
    if (!sigma)
        return 0;
    for (const auto& a : query.A)
        if (!in_gamma_ell(a, query.ell))
            fail(Errc::NotSmoothable, "cocycle argument is not in Gamma_0(ell)");
    const auto p = prk_coeffs(query.fM, to_rational(*sigma), query.k);
    std::vector<std::vector<unsigned>> es;
    std::vector<Rational> weights;
    for (const auto& [r, pr] : p) {
        std::vector<unsigned> e;
        Integer rf = 1;
        for (int x : r) {
            e.push_back(unsigned(x) + 1);
            rf *= factorial(unsigned(x) + 1);
        }
        es.push_back(std::move(e));
        weights.push_back(pr / Rational(power(query.ell, unsigned(total_degree(r))) * rf));
    }
    const auto d = dedekind_D_ell_batch(*sigma, es, query.q, query.v, query.ell);
    Rational total = 0;
    for (std::size_t t = 0; t < d.size(); ++t)
        total += weights[t] * d[t];
    const int sign = (n % 2 ? -1 : 1) * sgn(det(*sigma));
    return total * sign;
}

ConeCombo phi_sh(const std::vector<RatMatrix>& A, const PerturbationVector& q)
{
    const std::size_t n = A.size();
    std::vector<RatVector> cols;
    for (const auto& a : A)
        cols.push_back(a.column(0));
    const RatMatrix s = RatMatrix::from_columns(cols);
    ConeCombo out;
    const int d = sgn(det(s));
    if (d == 0)
        return out;
    FaceWeights fw(s, q);
    for (Subset sub = 0; sub < (Subset(1) << n); ++sub)
        if (fw.weight(sub))
            out.add(fw.face(sub), d);
    return out;
}

HdElement shintani_series(const std::vector<RatMatrix>& A, const RatMatrix& m, const PerturbationVector& q,
                          const RatVector& v, int trunc)
{
    return substitute_linear(solomon_hu(phi_sh(A, q), v, trunc), m);
}

HdElement smoothed_series(const std::vector<RatMatrix>& A, const RatMatrix& m, const PerturbationVector& q,
                          const RatVector& v, const Integer& ell, int trunc)
{
    const std::size_t n = A.size();
    const RatMatrix pinv = inv_det(pi_ell(n, ell)).inverse;
    HdElement top = shintani_series(conjugate_by_pi(A, ell), pinv * m, q.transformed(pi_ell(n, ell)),
                                    apply_pi(v, ell), trunc);
    return top - shintani_series(A, m, q, v, trunc) * Rational(ell);
}

MultiSeries smoothed_series_explicit(const std::vector<RatMatrix>& A, const RatMatrix& m,
                                     const PerturbationVector& q, const RatVector& v, const Integer& ell,
                                     int trunc)
{
    const std::size_t n = A.size();
    const auto sigma = scaled_first_columns(A, ell);
    if (!sigma)
        return MultiSeries(n, trunc);
    const auto rs = exponents_up_to(n, trunc);
    std::vector<std::vector<unsigned>> es;
    for (const auto& r : rs) {
        std::vector<unsigned> e;
        for (int x : r)
            e.push_back(unsigned(x) + 1);
        es.push_back(std::move(e));
    }
    const auto d = dedekind_D_ell_batch(*sigma, es, q, v, ell);
    const int sign = (n % 2 ? -1 : 1) * sgn(det(*sigma));
    MultiSeries f(n, trunc);
    for (std::size_t t = 0; t < rs.size(); ++t) {
        Integer rf = 1;
        for (int x : rs[t])
            rf *= factorial(unsigned(x) + 1);
        f.add_term(rs[t], d[t] * sign / Rational(power(ell, unsigned(total_degree(rs[t]))) * rf));
    }
    return f.substitute(to_rational(*sigma).transpose() * m);
}

Integer ideal_norm(const Lattice& x)
{
    const Rational r = x.covolume() / Lattice::equation_order(x.field()).covolume();
    if (!is_integer(r))
        fail(Errc::InvalidInput, "lattice is not an integral ideal");
    return r.get_num();
}

AdaptedBasis adapted_basis(const Lattice& a, const Lattice& f, const Lattice& c)
{
    const TotallyRealField& field = a.field();
    const std::size_t n = field.degree();
    const Integer ell = ideal_norm(c);
    if (mpz_probab_prime_p(ell.get_mpz_t(), 30) == 0)
        fail(Errc::InvalidInput, "N(c) = " + ell.get_str() + " is not prime");
    const Lattice inner = f.colon(a);      // a^{-1} f
    const Lattice outer = f.colon(a * c);  // (ac)^{-1} f
    if (!outer.contains(inner) || inner.covolume() / outer.covolume() != ell)
        fail(Errc::InvalidInput, "a^{-1}f does not have index N(c) in (ac)^{-1}f");

    // coordinates of the inner basis in the outer one; its image mod ell is the kernel of phi
    const RatMatrix t = inv_det(outer.basis()).inverse * inner.basis();
    const InverseDet id = inv_det(t);
    IntVector phi;
    for (std::size_t i = 0; i < n && phi.empty(); ++i) {
        IntVector row(n);
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = Rational(id.inverse(i, j) * id.det).get_num();
            nonzero = nonzero || !divisible(row[j], ell);
        }
        if (nonzero)
            phi = row;
    }
    if (phi.empty())
        fail(Errc::InvalidInput, "no functional cuts out a^{-1}f");
    IntMatrix col(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        col(i, 0) = phi[i];
    // u phi^t = (g, 0, ..., 0)^t, so the columns of u^t after the first are killed by phi
    const RatMatrix basis = outer.basis() * to_rational(hnf(col).u.transpose());
    std::vector<FieldElem> w;
    for (std::size_t j = 0; j < n; ++j) {
        FieldElem e = field.elem(basis.column(j));
        w.push_back(j == 0 ? e * Rational(ell) : e);
    }
    std::vector<RatVector> gens;
    for (const auto& x : w)
        gens.push_back(x.coords());
    if (!(lattice_from_generators(field, gens) == inner))
        fail(Errc::InvalidInput, "adapted basis construction failed");
    return {std::move(w), ell};
}

std::vector<FieldElem> alternate_adapted_basis(const AdaptedBasis& b)
{
    std::vector<FieldElem> w = b.w;
    if (w.size() < 2)
        return w;
    w[0] = b.w[0] + b.w[1] * Rational(b.ell);
    w[1] = b.w[0] + b.w[1] * Rational(b.ell + 1);
    return w;
}

std::vector<CycleTerm> zeta_cycle(const UnitSystem& units, const std::vector<FieldElem>& w)
{
    const std::size_t n = w.size();
    if (units.units.size() + 1 != n)
        fail(Errc::InvalidInput, "need n-1 units for a degree n field");
    if (n == 1)
        return {{1, {RatMatrix::identity(1)}}};
    const int w_eps = regulator_sign(units);
    std::vector<CycleTerm> out;
    std::vector<std::size_t> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        CycleTerm t{((n - 1) % 2 ? -1 : 1) * w_eps * permutation_sign(perm), {}};
        for (const auto& v : unit_chain(units, perm))
            t.A.push_back(rho_w(v, w));
        out.push_back(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

ZetaData zeta_data(const Lattice& a, const Lattice& f, const Lattice& c, const UnitSystem& units,
                   const std::optional<std::vector<FieldElem>>& basis)
{
    const TotallyRealField& field = a.field();
    const std::size_t n = field.degree();
    for (const auto& u : units.units) {
        if (!u.totally_positive())
            fail(Errc::InvalidInput, "units must be totally positive");
        if (!f.contains(u - field.one()))
            fail(Errc::InvalidInput, "units must be congruent to 1 modulo f");
    }
    AdaptedBasis ab = adapted_basis(a, f, c);
    ZetaData d;
    d.ell = ab.ell;
    d.w = basis ? *basis : ab.w;
    if (basis) {
        std::vector<RatVector> gens;
        for (const auto& x : d.w)
            gens.push_back(x.coords());
        if (d.w.size() != n || !(lattice_from_generators(field, gens) == f.colon(a)) ||
            det(coordinate_matrix(d.w)) == 0)
            fail(Errc::InvalidInput, "supplied basis does not span a^{-1}f");
    }
    for (const auto& u : units.units)
        if (!in_gamma_ell(rho_w(u, d.w), d.ell))
            fail(Errc::NotSmoothable, "basis is not adapted: a unit leaves Gamma_0(ell)");
    d.fM = norm_form(d.w) * Rational(ideal_norm(a));
    const auto dual = trace_dual_basis(d.w);
    d.q = PerturbationVector::embedded(dual, n - 1);
    for (const auto& x : dual)
        d.v.push_back(x.trace());
    d.cycle = zeta_cycle(units, d.w);
    d.sign_det_J = sign_det_J(d.w);
    return d;
}

Rational smoothed_zeta(const ZetaData& data, unsigned k)
{
    Rational total = 0;
    for (const auto& term : data.cycle)
        total += term.coeff * smoothed_cocycle_value({term.A, data.fM, data.q, data.v, data.ell, k});
    // the cycle pairs to ell^{-k} sign det J(w) times the smoothed zeta value
    return total * Rational(power(data.ell, k)) * data.sign_det_J;
}

Rational smoothed_zeta(const Lattice& a, const Lattice& f, const Lattice& c, const UnitSystem& units,
                       unsigned k, const std::optional<std::vector<FieldElem>>& basis)
{
    return smoothed_zeta(zeta_data(a, f, c, units, basis), k);
}

std::vector<Rational> unsmooth_solve(const std::vector<Rational>& smoothed, const std::vector<std::size_t>& c_action,
                                     const Integer& ell, unsigned k)
{
    const std::size_t h = smoothed.size();
    if (h == 0 || c_action.size() != h)
        fail(Errc::MissingClassData, "need one smoothed value and one c-action entry per class");
    std::vector<bool> hit(h, false);
    for (std::size_t i : c_action) {
        if (i >= h || hit[i])
            fail(Errc::MissingClassData, "c-action is not a permutation of the classes");
        hit[i] = true;
    }
    RatMatrix m(h, h);
    const Rational scale(power(ell, k + 1));
    for (std::size_t i = 0; i < h; ++i) {
        m(i, c_action[i]) += 1;
        m(i, i) -= scale;
    }
    return solve(m, smoothed);
}

bool denominator_is_power_of(const Rational& x, const Integer& ell)
{
    Integer d = x.get_den();
    while (divisible(d, ell))
        d /= ell;
    return d == 1;
}

IntegralityReport integrality_check(const std::vector<Rational>& values, const Integer& ell)
{
    IntegralityReport r;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!denominator_is_power_of(values[i], ell)) {
            r.ok = false;
            r.offenders.push_back(i);
        }
    return r;
}

bool integrality_hypothesis(const Polynomial& fM, const RatVector& v, const Integer& ell)
{
    const std::size_t n = v.size();
    for (const auto& c : exponents_up_to(n, int(n))) {
        RatVector p = v;
        p[0] += exact_ratio(c[0], ell);
        for (std::size_t i = 1; i < n; ++i)
            p[i] += c[i];
        if (!denominator_is_power_of(fM.eval(p), ell))
            return false;
    }
    return true;
}

}  // namespace shintani
