// Truncated power series, cone generating functions and the Shintani operator.
#pragma once

#include <map>
#include <vector>

#include "shintani/conegeom.hpp"
#include "shintani/exactmath.hpp"
#include "shintani/poly.hpp"

namespace shintani {

// Power series in nvars variables, known exactly up to total degree trunc.
class MultiSeries {
public:
    MultiSeries() = default;
    MultiSeries(std::size_t nvars, int trunc) : nvars_(nvars), trunc_(trunc) {}

    static MultiSeries constant(std::size_t nvars, int trunc, const Rational& c);
    static MultiSeries from_polynomial(const Polynomial& p, int trunc);
    // exp(a . z)
    static MultiSeries exp_linear(const RatVector& a, int trunc);
    // (s . z) / (exp(s . z) - 1)
    static MultiSeries bernoulli_unit(const RatVector& s, int trunc);

    std::size_t nvars() const noexcept { return nvars_; }
    int trunc() const noexcept { return trunc_; }
    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);
    Polynomial homogeneous_part(int d) const;
    MultiSeries truncated(int trunc) const;

    // z_i -> sum_j m(i, j) z_j, i.e. z -> z m^t.
    MultiSeries substitute(const RatMatrix& m) const;
    // Inverse of a series with nonzero constant term.
    MultiSeries inverse() const;

    MultiSeries& operator+=(const MultiSeries& o);
    MultiSeries& operator-=(const MultiSeries& o);
    MultiSeries& operator*=(const Rational& c);
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
    friend MultiSeries operator*(MultiSeries a, const Rational& c) { return a *= c; }
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    friend MultiSeries operator*(const MultiSeries& a, const Polynomial& p);
    friend bool operator==(const MultiSeries& a, const MultiSeries& b)
    {
        return a.nvars_ == b.nvars_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }

private:
    std::size_t nvars_ = 0;
    int trunc_ = 0;
    std::map<Exponent, Rational> terms_;
};

struct LinearForm {
    RatVector coeffs;

    bool dense() const;
    Polynomial poly() const;
    // The form after z -> z m^t.
    LinearForm substitute(const RatMatrix& m) const;
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    friend bool operator<(const LinearForm& a, const LinearForm& b) { return a.coeffs < b.coeffs; }
};

// numerator / prod(denominator forms). Forms are scaled so their first nonzero
// coefficient is 1 and kept sorted, so equal denominators compare equal.
class HdElement {
public:
    HdElement() = default;
    HdElement(MultiSeries numerator, std::vector<LinearForm> forms);
    static HdElement zero(std::size_t nvars, int trunc);

    const MultiSeries& numerator() const noexcept { return num_; }
    const std::vector<LinearForm>& forms() const noexcept { return forms_; }
    std::size_t nvars() const noexcept { return num_.nvars(); }
    int trunc() const noexcept { return num_.trunc(); }
    bool is_zero() const noexcept { return num_.is_zero(); }

    HdElement& operator+=(const HdElement& o);
    HdElement& operator-=(const HdElement& o);
    HdElement& operator*=(const Rational& c);
    friend HdElement operator+(HdElement a, const HdElement& b) { return a += b; }
    friend HdElement operator-(HdElement a, const HdElement& b) { return a -= b; }
    friend HdElement operator*(HdElement a, const Rational& c) { return a *= c; }

    // Divides out every form exactly; false when some division leaves a remainder.
    // Each division costs one degree of truncation.
    bool regular_part(MultiSeries& out) const;

private:
    MultiSeries num_;
    std::vector<LinearForm> forms_;
};

// sum x^a / prod (1 - x^sigma_i)
struct ConeGenFun {
    std::vector<IntVector> numerator_exponents;
    std::vector<IntVector> denominator_exponents;
};

ConeGenFun genfun_g(const Cone& c, const RatVector& v);
HdElement genfun_h(const Cone& c, const RatVector& v, int trunc);
HdElement solomon_hu(const ConeCombo& combo, const RatVector& v, int trunc);

// Throws NotDense if a transformed denominator form has a zero coefficient.
HdElement substitute_linear(const HdElement& e, const RatMatrix& m);

// Truncation needed by delta_kj / delta_k.
int required_trunc(std::size_t n, unsigned k, std::size_t nforms);

// Coefficient of N(Z_j)^k in G(Z_j); j is 0-based.
Rational delta_kj(const HdElement& e, std::size_t j, unsigned k);
// (k!)^n / n * sum_j delta_kj
Rational delta_k(const HdElement& e, unsigned k);

// r! times the coefficient of z^r in fM(z sigma^t)^k.
std::map<Exponent, Rational> prk_coeffs(const Polynomial& fM, const RatMatrix& sigma, unsigned k);

// sum_r s_r P_r(1), P_r(1) = r! coeff(P, z^r).
Rational delta_P(const MultiSeries& s, const Polynomial& p);

}  // namespace shintani
