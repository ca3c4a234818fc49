// Sparse multivariate polynomials with exact rational coefficients.
#pragma once

#include <map>
#include <vector>

#include "shintani/exactmath.hpp"

namespace shintani {

using Exponent = std::vector<int>;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);
    // sum_i coeffs[i] * x_i
    static Polynomial linear(const RatVector& coeffs);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);
    int degree() const;
    bool homogeneous(int d) const;

    Rational eval(const RatVector& x) const;
    // x_i -> sum_j m(i, j) y_j
    Polynomial substitute(const RatMatrix& m) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Polynomial pow(unsigned k) const;

private:
    std::size_t nvars_ = 0;
    std::map<Exponent, Rational> terms_;
};

// Determinant of a square matrix of polynomials (Leibniz expansion; n is small).
Polynomial det(const std::vector<std::vector<Polynomial>>& m);

Integer factorial(unsigned k);
// prod_i e_i!
Integer multi_factorial(const Exponent& e);
int total_degree(const Exponent& e);

}  // namespace shintani
