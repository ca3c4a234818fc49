#include "shintani/genfun.hpp"

#include <algorithm>

namespace shintani {

namespace {

Exponent unit_exponent(std::size_t n, std::size_t i)
{
    Exponent e(n, 0);
    e[i] = 1;
    return e;
}

MultiSeries series_from_parts(std::size_t nvars, int trunc, const std::vector<Polynomial>& parts)
{
    MultiSeries s(nvars, trunc);
    for (const auto& p : parts)
        for (const auto& [e, c] : p.terms())
            if (total_degree(e) <= trunc)
                s.add_term(e, c);
    return s;
}

// sum_{m <= trunc} coeffs[m] L^m
MultiSeries univariate_of_linear(const std::vector<Rational>& coeffs, const RatVector& l, int trunc)
{
    const std::size_t n = l.size();
    const Polynomial lin = Polynomial::linear(l);
    std::vector<Polynomial> parts;
    Polynomial power = Polynomial::constant(n, 1);
    for (int m = 0; m <= trunc; ++m) {
        if (coeffs[m] != 0)
            parts.push_back(power * coeffs[m]);
        if (m < trunc)
            power = power * lin;
    }
    return series_from_parts(n, trunc, parts);
}

// p / l for homogeneous p; false if l does not divide p.
bool divide_by_form(Polynomial p, const LinearForm& l, Polynomial& quotient)
{
    const std::size_t n = l.coeffs.size();
    std::size_t pivot = 0;
    while (pivot < n && l.coeffs[pivot] == 0)
        ++pivot;
    if (pivot == n)
        fail(Errc::InvalidInput, "division by the zero form");
    const Polynomial lp = l.poly();
    quotient = Polynomial(n);
    while (!p.is_zero()) {
        auto lead = std::max_element(p.terms().begin(), p.terms().end(),
                                     [&](const auto& a, const auto& b) { return a.first[pivot] < b.first[pivot]; });
        if (lead->first[pivot] == 0)
            return false;
        Exponent e = lead->first;
        --e[pivot];
        const Rational c = lead->second / l.coeffs[pivot];
        Polynomial mono(n);
        mono.add_term(e, c);
        quotient += mono;
        p -= lp * mono;
    }
    return true;
}

}  // namespace

MultiSeries MultiSeries::constant(std::size_t nvars, int trunc, const Rational& c)
{
    MultiSeries s(nvars, trunc);
    s.add_term(Exponent(nvars, 0), c);
    return s;
}

MultiSeries MultiSeries::from_polynomial(const Polynomial& p, int trunc)
{
    return series_from_parts(p.nvars(), trunc, {p});
}

MultiSeries MultiSeries::exp_linear(const RatVector& a, int trunc)
{
    std::vector<Rational> c(trunc + 1);
    for (int m = 0; m <= trunc; ++m)
        c[m] = Rational(1, factorial(m));
    return univariate_of_linear(c, a, trunc);
}

MultiSeries MultiSeries::bernoulli_unit(const RatVector& s, int trunc)
{
    // x/(e^x - 1) is the inverse of sum_m x^m/(m+1)!
    MultiSeries e(1, trunc);
    for (int m = 0; m <= trunc; ++m)
        e.add_term({m}, Rational(1, factorial(m + 1)));
    const MultiSeries b = e.inverse();
    std::vector<Rational> c(trunc + 1);
    for (int m = 0; m <= trunc; ++m)
        c[m] = b.coeff({m});
    return univariate_of_linear(c, s, trunc);
}

Rational MultiSeries::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiSeries::add_term(const Exponent& e, const Rational& c)
{
    if (c == 0 || total_degree(e) > trunc_)
        return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial MultiSeries::homogeneous_part(int d) const
{
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d)
            p.add_term(e, c);
    return p;
}

MultiSeries MultiSeries::truncated(int trunc) const
{
    MultiSeries s(nvars_, trunc);
    for (const auto& [e, c] : terms_)
        s.add_term(e, c);
    return s;
}

MultiSeries MultiSeries::substitute(const RatMatrix& m) const
{
    if (m.rows() != nvars_)
        fail(Errc::InvalidInput, "substitution matrix has the wrong shape");
    std::vector<Polynomial> parts;
    for (int d = 0; d <= trunc_; ++d)
        parts.push_back(homogeneous_part(d).substitute(m));
    return series_from_parts(m.cols(), trunc_, parts);
}

MultiSeries MultiSeries::inverse() const
{
    const Rational c0 = coeff(Exponent(nvars_, 0));
    if (c0 == 0)
        fail(Errc::InvalidInput, "series with zero constant term is not invertible");
    std::vector<Polynomial> s, inv;
    for (int d = 0; d <= trunc_; ++d)
        s.push_back(homogeneous_part(d));
    inv.push_back(Polynomial::constant(nvars_, 1 / c0));
    for (int d = 1; d <= trunc_; ++d) {
        Polynomial acc(nvars_);
        for (int e = 1; e <= d; ++e)
            if (!s[e].is_zero() && !inv[d - e].is_zero())
                acc += s[e] * inv[d - e];
        inv.push_back(acc * (-1 / c0));
    }
    return series_from_parts(nvars_, trunc_, inv);
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o)
{
    trunc_ = std::min(trunc_, o.trunc_);
    *this = truncated(trunc_);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o)
{
    return *this += o * Rational(-1);
}

MultiSeries& MultiSeries::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_)
        x *= c;
    return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b)
{
    MultiSeries out(a.nvars_, std::min(a.trunc_, b.trunc_));
    std::vector<std::pair<int, const std::pair<const Exponent, Rational>*>> bs;
    for (const auto& t : b.terms_)
        bs.push_back({total_degree(t.first), &t});
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        const int da = total_degree(ea);
        for (const auto& [db, tb] : bs) {
            if (da + db > out.trunc_)
                continue;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + tb->first[i];
            out.add_term(e, ca * tb->second);
        }
    }
    return out;
}

MultiSeries operator*(const MultiSeries& a, const Polynomial& p)
{
    return a * MultiSeries::from_polynomial(p, a.trunc());
}

bool LinearForm::dense() const
{
    return std::none_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

Polynomial LinearForm::poly() const
{
    return Polynomial::linear(coeffs);
}

LinearForm LinearForm::substitute(const RatMatrix& m) const
{
    return {m.transpose() * coeffs};
}

HdElement::HdElement(MultiSeries numerator, std::vector<LinearForm> forms)
    : num_(std::move(numerator)), forms_(std::move(forms))
{
    for (auto& f : forms_) {
        auto lead = std::find_if(f.coeffs.begin(), f.coeffs.end(), [](const Rational& c) { return c != 0; });
        if (lead == f.coeffs.end())
            fail(Errc::InvalidInput, "zero linear form in a denominator");
        const Rational c = *lead;
        for (auto& x : f.coeffs)
            x /= c;
        num_ *= 1 / c;
    }
    std::sort(forms_.begin(), forms_.end());
}

HdElement HdElement::zero(std::size_t nvars, int trunc)
{
    return HdElement(MultiSeries(nvars, trunc), {});
}

HdElement& HdElement::operator+=(const HdElement& o)
{
    if (o.is_zero()) {
        num_ = num_.truncated(std::min(trunc(), o.trunc()));
        return *this;
    }
    if (is_zero() && forms_.empty()) {
        const int t = std::min(trunc(), o.trunc());
        *this = o;
        num_ = num_.truncated(t);
        return *this;
    }
    // multiset union of the two denominators
    std::vector<LinearForm> common, mine, theirs;
    std::set_union(forms_.begin(), forms_.end(), o.forms_.begin(), o.forms_.end(), std::back_inserter(common));
    std::set_difference(common.begin(), common.end(), forms_.begin(), forms_.end(), std::back_inserter(mine));
    std::set_difference(common.begin(), common.end(), o.forms_.begin(), o.forms_.end(), std::back_inserter(theirs));
    MultiSeries a = num_, b = o.num_;
    for (const auto& f : mine)
        a = a * f.poly();
    for (const auto& f : theirs)
        b = b * f.poly();
    num_ = a + b;
    forms_ = std::move(common);
    return *this;
}

HdElement& HdElement::operator-=(const HdElement& o)
{
    return *this += o * Rational(-1);
}

HdElement& HdElement::operator*=(const Rational& c)
{
    num_ *= c;
    return *this;
}

bool HdElement::regular_part(MultiSeries& out) const
{
    MultiSeries g = num_;
    for (const auto& f : forms_) {
        if (g.coeff(Exponent(nvars(), 0)) != 0)
            return false;
        std::vector<Polynomial> parts;
        for (int d = 0; d < g.trunc(); ++d) {
            Polynomial q;
            if (!divide_by_form(g.homogeneous_part(d + 1), f, q))
                return false;
            parts.push_back(std::move(q));
        }
        g = series_from_parts(nvars(), g.trunc() - 1, parts);
    }
    out = std::move(g);
    return true;
}

ConeGenFun genfun_g(const Cone& c, const RatVector& v)
{
    ConeGenFun g;
    const Subset full = (Subset(1) << c.rank()) - 1;
    for (const auto& a : parallelepiped_points(c.matrix(), full, v)) {
        IntVector e;
        for (std::size_t i = 0; i < a.size(); ++i)
            e.push_back(Rational(a[i] - v[i]).get_num());
        g.numerator_exponents.push_back(std::move(e));
    }
    g.denominator_exponents = c.gens();
    return g;
}

HdElement genfun_h(const Cone& c, const RatVector& v, int trunc)
{
    const std::size_t n = c.dim();
    std::vector<LinearForm> forms;
    MultiSeries units = MultiSeries::constant(n, trunc, c.rank() % 2 ? -1 : 1);
    for (const auto& g : c.gens()) {
        RatVector s = to_rational(g);
        units = units * MultiSeries::bernoulli_unit(s, trunc);
        forms.push_back({std::move(s)});
    }
    MultiSeries exps(n, trunc);
    const Subset full = (Subset(1) << c.rank()) - 1;
    for (const auto& a : parallelepiped_points(c.matrix(), full, v))
        exps += MultiSeries::exp_linear(a, trunc);
    return HdElement(exps * units, std::move(forms));
}

HdElement solomon_hu(const ConeCombo& combo, const RatVector& v, int trunc)
{
    HdElement out = HdElement::zero(v.size(), trunc);
    for (const auto& [cone, k] : combo.terms())
        out += genfun_h(cone, v, trunc) * Rational(k);
    return out;
}

HdElement substitute_linear(const HdElement& e, const RatMatrix& m)
{
    std::vector<LinearForm> forms;
    for (const auto& f : e.forms()) {
        LinearForm g = f.substitute(m);
        if (!g.dense())
            fail(Errc::NotDense, "substituted denominator form has a zero coefficient");
        forms.push_back(std::move(g));
    }
    return HdElement(e.numerator().substitute(m), std::move(forms));
}

int required_trunc(std::size_t n, unsigned k, std::size_t nforms)
{
    return int(n * (k + 1) + nforms);
}

Rational delta_kj(const HdElement& e, std::size_t j, unsigned k)
{
    const std::size_t n = e.nvars();
    if (j >= n)
        fail(Errc::InvalidInput, "delta_kj: index out of range");
    for (const auto& f : e.forms())
        if (!f.dense())
            fail(Errc::NotDense, "denominator form is not dense");
    const std::size_t d = e.forms().size();
    if (e.trunc() < required_trunc(n, k, d))
        fail(Errc::InsufficientTruncation, "series truncated at degree " + std::to_string(e.trunc()) +
                                               ", need " + std::to_string(required_trunc(n, k, d)));
    // G(Z_j) = z_j^{-d} num(Z_j) / prod L~, L~ = l_j + sum_{i != j} l_i z_i
    const int rest = int((n - 1) * k);
    MultiSeries inv = MultiSeries::constant(n, rest, 1);
    for (const auto& f : e.forms()) {
        MultiSeries lt = MultiSeries::constant(n, rest, f.coeffs[j]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != j)
                lt.add_term(unit_exponent(n, i), f.coeffs[i]);
        inv = inv * lt.inverse();
    }
    // only the numerator's homogeneous part of degree nk + d reaches z_j^{nk+d}
    const int top = int(n * k + d);
    Rational total = 0;
    for (const auto& [a, c] : e.numerator().terms()) {
        if (total_degree(a) != top)
            continue;
        Exponent b(n, 0);
        bool fits = true;
        for (std::size_t i = 0; i < n && fits; ++i) {
            if (i == j)
                continue;
            if (a[i] > int(k))
                fits = false;
            else
                b[i] = int(k) - a[i];
        }
        if (fits)
            total += c * inv.coeff(b);
    }
    return total;
}

Rational delta_k(const HdElement& e, unsigned k)
{
    const std::size_t n = e.nvars();
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j)
        s += delta_kj(e, j, k);
    Integer kf = factorial(k), scale = 1;
    for (std::size_t j = 0; j < n; ++j)
        scale *= kf;
    Rational factor(scale, n);
    factor.canonicalize();
    return s * factor;
}

std::map<Exponent, Rational> prk_coeffs(const Polynomial& fM, const RatMatrix& sigma, unsigned k)
{
    if (!fM.is_zero() && !fM.homogeneous(int(fM.nvars())))
        fail(Errc::InvalidInput, "f_M must be homogeneous of degree n");
    const Polynomial p = fM.substitute(sigma).pow(k);
    std::map<Exponent, Rational> out;
    for (const auto& [r, c] : p.terms())
        out.emplace(r, c * multi_factorial(r));
    return out;
}

Rational delta_P(const MultiSeries& s, const Polynomial& p)
{
    if (!p.is_zero() && p.degree() > s.trunc())
        fail(Errc::InsufficientTruncation, "series truncated below the degree of P");
    Rational total = 0;
    for (const auto& [r, c] : p.terms())
        total += s.coeff(r) * c * multi_factorial(r);
    return total;
}

}  // namespace shintani
