#include "shintani/exactmath.hpp"

#include <algorithm>
#include <utility>

namespace shintani {

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

RatVector to_rational(const IntVector& v)
{
    RatVector r;
    r.reserve(v.size());
    for (const auto& x : v)
        r.emplace_back(x);
    return r;
}

Integer det(const IntMatrix& m)
{
    if (!m.square())
        fail(Errc::InvalidInput, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(t);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Gauss-Jordan on [m | rhs]; returns det of m and leaves the solution in rhs.
Rational eliminate(RatMatrix& a, RatMatrix& rhs)
{
    const std::size_t n = a.rows();
    Rational d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            for (std::size_t j = 0; j < rhs.cols(); ++j)
                std::swap(rhs(k, j), rhs(p, j));
            d = -d;
        }
        const Rational piv = a(k, k);
        d *= piv;
        for (std::size_t j = 0; j < n; ++j)
            a(k, j) /= piv;
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            rhs(k, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0)
                continue;
            const Rational f = a(i, k);
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) -= f * a(k, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j)
                rhs(i, j) -= f * rhs(k, j);
        }
    }
    return d;
}

}  // namespace

Rational det(const RatMatrix& m)
{
    if (!m.square())
        fail(Errc::InvalidInput, "determinant of a non-square matrix");
    RatMatrix a = m;
    RatMatrix none(m.rows(), 0);
    return eliminate(a, none);
}

InverseDet inv_det(const RatMatrix& m)
{
    if (!m.square())
        fail(Errc::InvalidInput, "inverse of a non-square matrix");
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(m.rows());
    Rational d = eliminate(a, inv);
    if (d == 0)
        fail(Errc::SingularMatrix, "matrix is singular");
    return {std::move(inv), std::move(d)};
}

RatMatrix inverse(const RatMatrix& m)
{
    return inv_det(m).inverse;
}

RatVector solve(const RatMatrix& m, const RatVector& b)
{
    RatMatrix a = m;
    RatMatrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i)
        rhs(i, 0) = b[i];
    if (eliminate(a, rhs) == 0)
        fail(Errc::SingularMatrix, "linear system is singular");
    return rhs.column(0);
}

std::size_t rank(const RatMatrix& m)
{
    RatMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows())
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            std::swap(a(r, j), a(p, j));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0)
                continue;
            const Rational f = a(i, c) / a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(dst, j) -= q * m(src, j);
}

void row_swap(IntMatrix& m, std::size_t a, std::size_t b)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(a, j), m(b, j));
}

void row_negate(IntMatrix& m, std::size_t r)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(r, j) = -m(r, j);
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& m)
{
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    std::size_t row = 0;
    for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
        for (;;) {
            std::size_t best = h.rows();
            for (std::size_t r = row; r < h.rows(); ++r)
                if (h(r, col) != 0 && (best == h.rows() || abs(h(r, col)) < abs(h(best, col))))
                    best = r;
            if (best == h.rows())
                break;
            if (best != row) {
                row_swap(h, row, best);
                row_swap(u, row, best);
            }
            bool done = true;
            for (std::size_t r = row + 1; r < h.rows(); ++r) {
                if (h(r, col) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(), h(row, col).get_mpz_t());
                row_axpy(h, r, row, q);
                row_axpy(u, r, row, q);
                if (h(r, col) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (h(row, col) == 0)
            continue;
        if (h(row, col) < 0) {
            row_negate(h, row);
            row_negate(u, row);
        }
        for (std::size_t r = 0; r < row; ++r) {
            Integer q = floor_div(h(r, col), h(row, col));
            if (q != 0) {
                row_axpy(h, r, row, q);
                row_axpy(u, r, row, q);
            }
        }
        ++row;
    }
    return {std::move(h), std::move(u)};
}

LatticeQuotient::LatticeQuotient(IntMatrix sigma) : sigma_(std::move(sigma))
{
    if (!sigma_.square() || sigma_.rows() == 0)
        fail(Errc::InvalidInput, "lattice quotient needs a square matrix");
    if (det(sigma_) == 0)
        fail(Errc::SingularMatrix, "sigma has zero determinant");
    basis_rows_ = hnf(sigma_.transpose()).h;
    const std::size_t n = sigma_.rows();
    reps_.push_back(IntVector(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned long d = basis_rows_(i, i).get_ui();
        std::vector<IntVector> next;
        next.reserve(reps_.size() * d);
        for (const auto& r : reps_)
            for (unsigned long t = 0; t < d; ++t) {
                IntVector x = r;
                x[i] = t;
                next.push_back(std::move(x));
            }
        reps_ = std::move(next);
    }
}

IntVector LatticeQuotient::reduce(const IntVector& x) const
{
    IntVector y = x;
    for (std::size_t i = 0; i < y.size(); ++i) {
        Integer q = floor_div(y[i], basis_rows_(i, i));
        if (q == 0)
            continue;
        for (std::size_t j = i; j < y.size(); ++j)
            y[j] -= q * basis_rows_(i, j);
    }
    return y;
}

bool LatticeQuotient::congruent(const IntVector& x, const IntVector& y) const
{
    return reduce(x) == reduce(y);
}

LatticeQuotient quotient_reps(const IntMatrix& sigma)
{
    return LatticeQuotient(sigma);
}

bool in_integer_span(const IntVector& v, const std::vector<IntVector>& gens, IntVector& witness)
{
    witness.assign(gens.size(), Integer(0));
    if (gens.empty())
        return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
    IntMatrix g = IntMatrix::from_rows(gens);
    if (g.cols() != v.size())
        fail(Errc::InvalidInput, "span membership dimension mismatch");
    HnfResult r = hnf(g);
    IntVector rest = v;
    IntVector coef(g.rows(), Integer(0));
    std::size_t col = 0;
    for (std::size_t row = 0; row < r.h.rows(); ++row) {
        while (col < r.h.cols() && r.h(row, col) == 0)
            ++col;
        if (col == r.h.cols())
            break;
        const Integer& piv = r.h(row, col);
        if (!mpz_divisible_p(rest[col].get_mpz_t(), piv.get_mpz_t()))
            return false;
        Integer q = rest[col] / piv;
        for (std::size_t j = col; j < rest.size(); ++j)
            rest[j] -= q * r.h(row, j);
        coef[row] = q;
    }
    if (!std::all_of(rest.begin(), rest.end(), [](const Integer& x) { return x == 0; }))
        return false;
    for (std::size_t row = 0; row < coef.size(); ++row) {
        if (coef[row] == 0)
            continue;
        for (std::size_t j = 0; j < gens.size(); ++j)
            witness[j] += coef[row] * r.u(row, j);
    }
    return true;
}

bool in_integer_span(const IntVector& v, const std::vector<IntVector>& gens)
{
    IntVector w;
    return in_integer_span(v, gens, w);
}

Integer gcd_of(const IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

Integer lcm_of_denominators(const RatVector& v)
{
    Integer l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

IntVector primitive(const RatVector& v)
{
    const Integer l = lcm_of_denominators(v);
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.emplace_back(x.get_num() * (l / x.get_den()));
    const Integer g = gcd_of(out);
    if (g == 0)
        fail(Errc::InvalidInput, "zero vector has no primitive scaling");
    for (auto& x : out)
        x /= g;
    return out;
}

Integer floor_of(const Rational& x)
{
    return floor_div(x.get_num(), x.get_den());
}

Rational frac(const Rational& x)
{
    return x - Rational(floor_of(x));
}

bool is_integer(const Rational& x)
{
    return x.get_den() == 1;
}

std::string to_string(const Rational& x)
{
    return x.get_str();
}

Rational parse_rational(const std::string& s)
{
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
        fail(Errc::InvalidInput, "not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace shintani
