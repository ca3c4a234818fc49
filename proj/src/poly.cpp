#include "shintani/poly.hpp"

#include <algorithm>
#include <numeric>

namespace shintani {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c)
{
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i)
{
    Polynomial p(nvars);
    Exponent e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::linear(const RatVector& coeffs)
{
    Polynomial p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponent e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

Rational Polynomial::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int Polynomial::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, total_degree(e));
    return d;
}

bool Polynomial::homogeneous(int d) const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
}

Rational Polynomial::eval(const RatVector& x) const
{
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int p = 0; p < e[i]; ++p)
                t *= x[i];
        s += t;
    }
    return s;
}

Polynomial Polynomial::substitute(const RatMatrix& m) const
{
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < nvars_; ++i)
        images.push_back(linear(m.row(i)));
    Polynomial out(m.cols());
    for (const auto& [e, c] : terms_) {
        Polynomial t = constant(m.cols(), c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                t = t * images[i].pow(e[i]);
        out += t;
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (nvars_ == 0)
        nvars_ = o.nvars_;
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (nvars_ == 0)
        nvars_ = o.nvars_;
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out(std::max(a.nvars_, b.nvars_));
    Exponent e(out.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial Polynomial::pow(unsigned k) const
{
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

Polynomial det(const std::vector<std::vector<Polynomial>>& m)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const std::size_t nvars = n ? m[0][0].nvars() : 0;
    Polynomial out(nvars);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        Polynomial t = Polynomial::constant(nvars, inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n && !t.is_zero(); ++i)
            t = t * m[i][perm[i]];
        out += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Integer factorial(unsigned k)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

Integer multi_factorial(const Exponent& e)
{
    Integer f = 1;
    for (int x : e)
        f *= factorial(static_cast<unsigned>(x));
    return f;
}

int total_degree(const Exponent& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace shintani
