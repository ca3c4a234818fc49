#include "shintani/numfield.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>

namespace shintani {

namespace {

using UPoly = RatVector;  // ascending coefficients

void trim(UPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

Rational eval(const UPoly& p, const Rational& x)
{
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

int sign_of(const Rational& x)
{
    return sgn(x);
}

UPoly derivative(const UPoly& p)
{
    UPoly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

UPoly remainder(UPoly a, const UPoly& b)
{
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] -= q * b[i];
        trim(a);
    }
    return a;
}

std::vector<UPoly> sturm_sequence(const UPoly& f)
{
    std::vector<UPoly> seq{f, derivative(f)};
    while (seq.back().size() > 1) {
        UPoly r = remainder(seq[seq.size() - 2], seq.back());
        if (r.empty())
            break;
        for (auto& c : r)
            c = -c;
        seq.push_back(std::move(r));
    }
    return seq;
}

int variations(const std::vector<UPoly>& seq, const Rational& x)
{
    int count = 0, last = 0;
    for (const auto& p : seq) {
        const int s = sign_of(eval(p, x));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++count;
        last = s;
    }
    return count;
}

RatInterval add(const RatInterval& a, const RatInterval& b)
{
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval mul(const RatInterval& a, const RatInterval& b)
{
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

// Horner evaluation of p over the interval x.
RatInterval eval(const UPoly& p, const RatInterval& x)
{
    RatInterval acc{0, 0};
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = add(mul(acc, x), RatInterval{*it, *it});
    return acc;
}

Rational pow2(long e)
{
    Rational r = 1;
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    return r;
}

}  // namespace

int sign_at_point(const IntVector& poly, const Rational& x)
{
    return sign_of(eval(to_rational(poly), x));
}

struct TotallyRealField::Impl {
    IntVector minpoly;
    UPoly f;
    std::size_t n = 0;
    mutable std::mutex mu;
    mutable std::vector<RatInterval> roots;

    void refine(std::size_t j, const Rational& width) const
    {
        RatInterval& r = roots[j];
        if (r.width() <= width)
            return;
        const int s_lo = sign_of(eval(f, r.lo));
        while (r.width() > width) {
            Rational mid = (r.lo + r.hi) / 2;
            const int s = sign_of(eval(f, mid));
            if (s == 0) {
                r = {mid, mid};
                return;
            }
            (s == s_lo ? r.lo : r.hi) = std::move(mid);
        }
    }
};

namespace {

void isolate(TotallyRealField::Impl& impl)
{
    const UPoly& f = impl.f;
    const std::size_t n = impl.n;
    if (n == 1) {
        const Rational r = -f[0];
        impl.roots = {{r, r}};
        return;
    }
    Rational bound = 1;
    for (const auto& c : f)
        bound = std::max(bound, Rational(abs(c) + 1));
    const auto seq = sturm_sequence(f);
    if (seq.back().size() > 1)
        fail(Errc::InvalidInput, "minimal polynomial fails the irreducibility check (repeated factor)");
    const int total = variations(seq, -bound) - variations(seq, bound);
    if (total != static_cast<int>(n))
        fail(Errc::InvalidInput, "minimal polynomial is not totally real: " + std::to_string(total) +
                                     " distinct real roots for degree " + std::to_string(n));
    struct Pending {
        Rational lo, hi;
        int count;
    };
    std::vector<Pending> stack{{-bound, bound, total}};
    while (!stack.empty()) {
        Pending p = std::move(stack.back());
        stack.pop_back();
        if (p.count == 0)
            continue;
        if (p.count == 1) {
            impl.roots.push_back({p.lo, p.hi});
            continue;
        }
        Rational mid = (p.lo + p.hi) / 2;
        if (eval(f, mid) == 0)
            fail(Errc::InvalidInput, "minimal polynomial fails the irreducibility check (rational root " +
                                         mid.get_str() + ")");
        const int vm = variations(seq, mid);
        const int left = variations(seq, p.lo) - vm;
        stack.push_back({mid, p.hi, p.count - left});
        stack.push_back({p.lo, mid, left});
    }
    std::sort(impl.roots.begin(), impl.roots.end(),
              [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
}

bool divides(const UPoly& d, const UPoly& f)
{
    return remainder(f, d).empty();
}

// All roots are real and isolated; look for a monic integer factor prod_{i in S}(x - r_i)
// with |S| <= n/2 by bounding its coefficients with intervals.
void check_irreducible(const TotallyRealField::Impl& impl)
{
    const std::size_t n = impl.n;
    if (n == 1)
        return;
    std::vector<unsigned> undecided;
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        if (static_cast<std::size_t>(__builtin_popcount(mask)) <= n / 2)
            undecided.push_back(mask);
    for (long bits = 16; !undecided.empty(); bits *= 2) {
        const Rational width = pow2(-bits);
        std::vector<RatInterval> r(n);
        for (std::size_t j = 0; j < n; ++j) {
            impl.refine(j, width);
            r[j] = impl.roots[j];
        }
        std::vector<unsigned> still;
        for (unsigned mask : undecided) {
            std::vector<RatInterval> prod{{1, 1}};
            for (std::size_t j = 0; j < n; ++j) {
                if (!(mask >> j & 1))
                    continue;
                std::vector<RatInterval> next(prod.size() + 1, RatInterval{0, 0});
                const RatInterval neg{-r[j].hi, -r[j].lo};
                for (std::size_t i = 0; i < prod.size(); ++i) {
                    next[i + 1] = add(next[i + 1], prod[i]);
                    next[i] = add(next[i], mul(prod[i], neg));
                }
                prod = std::move(next);
            }
            bool excluded = false, wide = false;
            UPoly candidate;
            for (const auto& c : prod) {
                const Integer lo_int = -floor_of(-c.lo);
                if (Rational(lo_int) > c.hi) {
                    excluded = true;
                    break;
                }
                if (Rational(lo_int + 1) <= c.hi)
                    wide = true;
                candidate.emplace_back(lo_int);
            }
            if (excluded)
                continue;
            if (wide) {
                still.push_back(mask);
                continue;
            }
            if (divides(candidate, impl.f))
                fail(Errc::InvalidInput, "minimal polynomial fails the irreducibility check (it has a factor of degree " +
                                             std::to_string(candidate.size() - 1) + ")");
        }
        undecided = std::move(still);
    }
}

}  // namespace

TotallyRealField::TotallyRealField(const IntVector& minpoly) : impl_(std::make_shared<Impl>())
{
    if (minpoly.size() < 2 || minpoly.back() != 1)
        fail(Errc::InvalidInput, "minimal polynomial must be monic of degree >= 1");
    impl_->minpoly = minpoly;
    impl_->f = to_rational(minpoly);
    impl_->n = minpoly.size() - 1;
    isolate(*impl_);
    check_irreducible(*impl_);
}

std::size_t TotallyRealField::degree() const
{
    return impl_->n;
}

const IntVector& TotallyRealField::minpoly() const
{
    return impl_->minpoly;
}

RatInterval TotallyRealField::root(std::size_t j, const Rational& width) const
{
    std::lock_guard lock(impl_->mu);
    impl_->refine(j, width);
    return impl_->roots[j];
}

RatInterval TotallyRealField::root(std::size_t j) const
{
    std::lock_guard lock(impl_->mu);
    return impl_->roots[j];
}

FieldElem TotallyRealField::elem(RatVector coords) const
{
    return FieldElem(*this, std::move(coords));
}

FieldElem TotallyRealField::from_rational(const Rational& c) const
{
    RatVector v(degree());
    v[0] = c;
    return elem(std::move(v));
}

FieldElem TotallyRealField::gen() const
{
    RatVector v(degree());
    if (degree() == 1)
        v[0] = impl_->roots[0].lo;
    else
        v[1] = 1;
    return elem(std::move(v));
}

FieldElem TotallyRealField::one() const
{
    return from_rational(1);
}

FieldElem TotallyRealField::zero() const
{
    return from_rational(0);
}

FieldElem::FieldElem(TotallyRealField field, RatVector coords) : field_(std::move(field)), coords_(std::move(coords))
{
    if (coords_.size() != field_.degree())
        fail(Errc::InvalidInput, "field element has the wrong number of coordinates");
    for (auto& c : coords_)
        c.canonicalize();
}

bool FieldElem::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

FieldElem& FieldElem::operator+=(const FieldElem& o)
{
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += o.coords_[i];
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o)
{
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= o.coords_[i];
    return *this;
}

FieldElem& FieldElem::operator*=(const Rational& c)
{
    for (auto& x : coords_)
        x *= c;
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o)
{
    const std::size_t n = coords_.size();
    const IntVector& f = field_.minpoly();
    RatVector prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (coords_[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            prod[i + j] += coords_[i] * o.coords_[j];
    }
    for (std::size_t d = prod.size(); d-- > n;) {
        if (prod[d] == 0)
            continue;
        const Rational c = prod[d];
        for (std::size_t i = 0; i <= n; ++i)
            prod[d - n + i] -= c * f[i];
    }
    prod.resize(n);
    coords_ = std::move(prod);
    return *this;
}

RatMatrix FieldElem::mult_matrix() const
{
    const std::size_t n = coords_.size();
    RatMatrix m(n, n);
    FieldElem col = *this;
    const FieldElem theta = field_.degree() == 1 ? field_.one() : field_.gen();
    for (std::size_t j = 0; j < n; ++j) {
        m.set_column(j, col.coords_);
        if (j + 1 < n)
            col *= theta;
    }
    return m;
}

FieldElem FieldElem::inverse() const
{
    if (is_zero())
        fail(Errc::InvalidInput, "inverse of zero field element");
    RatVector e(coords_.size());
    e[0] = 1;
    return FieldElem(field_, solve(mult_matrix(), e));
}

FieldElem FieldElem::pow(long e) const
{
    FieldElem base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    FieldElem result = field_.one();
    while (k) {
        if (k & 1)
            result *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return result;
}

Rational FieldElem::trace() const
{
    RatMatrix m = mult_matrix();
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        t += m(i, i);
    return t;
}

Rational FieldElem::norm() const
{
    return det(mult_matrix());
}

RatInterval FieldElem::approx(std::size_t j, const Rational& width) const
{
    if (is_zero())
        return {0, 0};
    Rational root_width = width;
    for (;;) {
        RatInterval iv = eval(coords_, field_.root(j, root_width));
        if (iv.width() <= width)
            return iv;
        // shrink the root interval in proportion to the overshoot
        root_width = root_width * width / iv.width() / 2;
    }
}

int FieldElem::sign_at(std::size_t j) const
{
    if (is_zero())
        return 0;
    for (long bits = 8;; bits += 16) {
        RatInterval iv = approx(j, pow2(-bits));
        if (iv.lo > 0)
            return 1;
        if (iv.hi < 0)
            return -1;
    }
}

bool FieldElem::totally_positive() const
{
    for (std::size_t j = 0; j < field_.degree(); ++j)
        if (sign_at(j) <= 0)
            return false;
    return true;
}

double FieldElem::to_double(std::size_t j) const
{
    RatInterval iv = approx(j, pow2(-60));
    return Rational((iv.lo + iv.hi) / 2).get_d();
}

FieldElem elem_mul(const FieldElem& a, const FieldElem& b)
{
    return a * b;
}

Rational elem_trace(const FieldElem& a)
{
    return a.trace();
}

Rational elem_norm(const FieldElem& a)
{
    return a.norm();
}

int sign_at(const FieldElem& a, std::size_t j)
{
    return a.sign_at(j);
}

RatMatrix coordinate_matrix(const std::vector<FieldElem>& w)
{
    std::vector<RatVector> cols;
    for (const auto& x : w)
        cols.push_back(x.coords());
    return RatMatrix::from_columns(cols);
}

RatVector coords_in_basis(const FieldElem& x, const std::vector<FieldElem>& w)
{
    return solve(coordinate_matrix(w), x.coords());
}

std::vector<FieldElem> trace_dual_basis(const std::vector<FieldElem>& w)
{
    const std::size_t n = w.size();
    RatMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            gram(i, j) = gram(j, i) = (w[i] * w[j]).trace();
    RatMatrix inv = inv_det(gram).inverse;
    std::vector<FieldElem> dual;
    for (std::size_t j = 0; j < n; ++j) {
        FieldElem x = w[0].field().zero();
        for (std::size_t i = 0; i < n; ++i)
            x += w[i] * inv(i, j);
        dual.push_back(std::move(x));
    }
    return dual;
}

RatMatrix rho_w(const FieldElem& u, const std::vector<FieldElem>& w)
{
    RatMatrix c = coordinate_matrix(w);
    return inv_det(c).inverse * u.mult_matrix() * c;
}

int sign_det_J(const std::vector<FieldElem>& w)
{
    // J(w) = V * C with V_{ij} = r_i^j the Vandermonde matrix of the roots and C the
    // coordinate matrix. With the roots ascending, det V = prod_{i<j}(r_j - r_i) > 0.
    return sgn(det(coordinate_matrix(w)));
}

Polynomial norm_form(const std::vector<FieldElem>& w)
{
    const std::size_t n = w.size();
    std::vector<RatMatrix> mats;
    for (const auto& x : w)
        mats.push_back(x.mult_matrix());
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            RatVector coeffs(n);
            for (std::size_t i = 0; i < n; ++i)
                coeffs[i] = mats[i](r, c);
            m[r][c] = Polynomial::linear(coeffs);
        }
    return det(m);
}

namespace {

// Canonical basis of the lattice spanned by `gens`, as columns.
RatMatrix canonical_basis(const std::vector<RatVector>& gens, std::size_t n)
{
    if (gens.empty())
        fail(Errc::InvalidInput, "lattice needs generators");
    Integer d = 1;
    for (const auto& g : gens)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), lcm_of_denominators(g).get_mpz_t());
    IntMatrix rows(gens.size(), n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != n)
            fail(Errc::InvalidInput, "lattice generator has the wrong length");
        for (std::size_t j = 0; j < n; ++j) {
            Rational s = gens[i][j] * d;
            rows(i, j) = s.get_num();
        }
    }
    IntMatrix h = hnf(rows).h;
    RatMatrix basis(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= h.rows())
            fail(Errc::InvalidInput, "lattice is not of full rank");
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            basis(j, i) = Rational(h(i, j)) / d;
            nonzero = nonzero || h(i, j) != 0;
        }
        if (!nonzero)
            fail(Errc::InvalidInput, "lattice is not of full rank");
    }
    return basis;
}

}  // namespace

Lattice::Lattice(TotallyRealField field, const RatMatrix& basis) : field_(std::move(field))
{
    if (basis.rows() != field_.degree())
        fail(Errc::InvalidInput, "lattice basis has the wrong number of rows");
    std::vector<RatVector> gens;
    for (std::size_t j = 0; j < basis.cols(); ++j)
        gens.push_back(basis.column(j));
    basis_ = canonical_basis(gens, field_.degree());
}

Lattice lattice_from_generators(const TotallyRealField& field, const std::vector<RatVector>& gens)
{
    return Lattice(field, RatMatrix::from_columns(gens));
}

Lattice Lattice::equation_order(const TotallyRealField& field)
{
    return Lattice(field, RatMatrix::identity(field.degree()));
}

Lattice Lattice::principal(const FieldElem& alpha, const Lattice& order)
{
    return order.scaled(alpha);
}

std::vector<FieldElem> Lattice::elements() const
{
    std::vector<FieldElem> out;
    for (std::size_t j = 0; j < basis_.cols(); ++j)
        out.push_back(field_.elem(basis_.column(j)));
    return out;
}

bool Lattice::contains(const FieldElem& x) const
{
    for (const auto& c : solve(basis_, x.coords()))
        if (!is_integer(c))
            return false;
    return true;
}

bool Lattice::contains(const Lattice& other) const
{
    for (const auto& x : other.elements())
        if (!contains(x))
            return false;
    return true;
}

Rational Lattice::covolume() const
{
    return abs(det(basis_));
}

Lattice Lattice::scaled(const FieldElem& alpha) const
{
    RatMatrix m = alpha.mult_matrix() * basis_;
    return Lattice(field_, m);
}

Lattice operator*(const Lattice& a, const Lattice& b)
{
    std::vector<RatVector> gens;
    for (const auto& x : a.elements())
        for (const auto& y : b.elements())
            gens.push_back((x * y).coords());
    return lattice_from_generators(a.field_, gens);
}

Lattice Lattice::colon(const Lattice& divisor) const
{
    // x qualifies iff B^{-1} mult(d_i) x is integral for every basis element d_i; those
    // rows span a lattice R and the answer is the dual {x : R x integral}.
    const RatMatrix binv = inv_det(basis_).inverse;
    std::vector<RatVector> rows;
    for (const auto& d : divisor.elements()) {
        RatMatrix a = binv * d.mult_matrix();
        for (std::size_t i = 0; i < a.rows(); ++i)
            rows.push_back(a.row(i));
    }
    RatMatrix r = canonical_basis(rows, field_.degree()).transpose();
    return Lattice(field_, inv_det(r).inverse);
}

FieldElem fundamental_unit_quadratic(const TotallyRealField& field)
{
    if (field.degree() != 2)
        fail(Errc::InvalidInput, "fundamental_unit_quadratic needs a quadratic field");
    const FieldElem theta = field.gen();
    FieldElem x = theta;
    Integer p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
    FieldElem unit;
    bool found = false;
    for (int step = 0; step < 10000 && !found; ++step) {
        Integer a;
        for (long bits = 8;; bits *= 2) {
            RatInterval iv = x.approx(1, pow2(-bits));
            if (floor_of(iv.lo) == floor_of(iv.hi)) {
                a = floor_of(iv.lo);
                break;
            }
        }
        Integer p = a * p_prev + p_prev2, q = a * q_prev + q_prev2;
        p_prev2 = p_prev;
        p_prev = p;
        q_prev2 = q_prev;
        q_prev = q;
        FieldElem cand = field.from_rational(Rational(p)) - theta * Rational(q);
        if (abs(cand.norm()) == 1) {
            unit = cand;
            found = true;
            break;
        }
        x = (x - field.from_rational(Rational(a))).inverse();
    }
    if (!found)
        fail(Errc::SearchExhausted, "no unit among the first 10000 convergents");
    if (unit.sign_at(1) < 0)
        unit = -unit;
    if ((unit - field.one()).sign_at(1) < 0)
        unit = unit.inverse();
    if (!unit.totally_positive())
        unit = unit * unit;
    return unit;
}

UnitSystem units_congruent_one(const UnitSystem& units, const Lattice& f)
{
    const Rational vol = f.covolume();
    if (!is_integer(vol))
        fail(Errc::InvalidInput, "modulus must be an integral lattice");
    const unsigned long bound = vol.get_num().fits_ulong_p() ? vol.get_num().get_ui() : 1000000UL;
    UnitSystem out;
    for (const auto& eps : units.units) {
        FieldElem power = eps;
        unsigned long m = 1;
        while (!f.contains(power - eps.field().one())) {
            if (++m > bound)
                fail(Errc::SearchExhausted, "no power of the unit up to " + std::to_string(bound) +
                                                " is congruent to 1 modulo f");
            power *= eps;
        }
        out.units.push_back(std::move(power));
    }
    return out;
}

unsigned default_precision_cap()
{
    if (const char* env = std::getenv("SHINTANI_PRECISION_CAP")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return 4096;
}

namespace {

class Real {
public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    Real(const Real& o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real& operator=(const Real& o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    ~Real() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

struct Ball {
    Real lo, hi;
    explicit Ball(mpfr_prec_t prec) : lo(prec), hi(prec) {}
};

Ball ball_mul(const Ball& a, const Ball& b, mpfr_prec_t prec)
{
    Ball out(prec);
    Real t(prec);
    bool first = true;
    for (const Real* x : {&a.lo, &a.hi})
        for (const Real* y : {&b.lo, &b.hi}) {
            mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), out.lo.get()))
                mpfr_set(out.lo.get(), t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), out.hi.get()))
                mpfr_set(out.hi.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    return out;
}

}  // namespace

int regulator_sign(const UnitSystem& units, std::vector<std::size_t> embeddings, unsigned cap_bits)
{
    const std::size_t m = units.units.size();
    if (m == 0)
        return 1;
    const TotallyRealField& field = units.units[0].field();
    if (embeddings.empty()) {
        embeddings.resize(field.degree() - 1);
        std::iota(embeddings.begin(), embeddings.end(), 0);
    }
    if (embeddings.size() != m)
        fail(Errc::InvalidInput, "regulator needs as many embeddings as units");
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        if (prec > static_cast<mpfr_prec_t>(cap_bits))
            fail(Errc::PrecisionCap, "regulator determinant undecided at " + std::to_string(cap_bits) + " bits");
        std::vector<std::vector<Ball>> logs(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                RatInterval iv;
                for (long bits = prec;; bits += 32) {
                    iv = units.units[i].approx(embeddings[j], pow2(-bits));
                    if (iv.lo > 0)
                        break;
                    if (iv.hi <= 0)
                        fail(Errc::InvalidInput, "unit is not totally positive");
                }
                Ball b(prec);
                mpfr_set_q(b.lo.get(), iv.lo.get_mpq_t(), MPFR_RNDD);
                mpfr_log(b.lo.get(), b.lo.get(), MPFR_RNDD);
                mpfr_set_q(b.hi.get(), iv.hi.get_mpq_t(), MPFR_RNDU);
                mpfr_log(b.hi.get(), b.hi.get(), MPFR_RNDU);
                logs[i].push_back(std::move(b));
            }
        Ball sum(prec);
        mpfr_set_zero(sum.lo.get(), 1);
        mpfr_set_zero(sum.hi.get(), 1);
        std::vector<std::size_t> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int inversions = 0;
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = a + 1; b < m; ++b)
                    if (perm[a] > perm[b])
                        ++inversions;
            Ball term = logs[0][perm[0]];
            for (std::size_t i = 1; i < m; ++i)
                term = ball_mul(term, logs[i][perm[i]], prec);
            if (inversions % 2) {
                mpfr_sub(sum.lo.get(), sum.lo.get(), term.hi.get(), MPFR_RNDD);
                mpfr_sub(sum.hi.get(), sum.hi.get(), term.lo.get(), MPFR_RNDU);
            } else {
                mpfr_add(sum.lo.get(), sum.lo.get(), term.lo.get(), MPFR_RNDD);
                mpfr_add(sum.hi.get(), sum.hi.get(), term.hi.get(), MPFR_RNDU);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (mpfr_sgn(sum.lo.get()) > 0)
            return 1;
        if (mpfr_sgn(sum.hi.get()) < 0)
            return -1;
    }
}

}  // namespace shintani
