// Totally real number fields given by a monic integer minimal polynomial.
//
// Embeddings are 0-based and ordered by ascending real root, so J_{n-1} is
// the distinguished last embedding.
#pragma once

#include <memory>
#include <vector>

#include "shintani/exactmath.hpp"
#include "shintani/poly.hpp"

namespace shintani {

struct RatInterval {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

class FieldElem;

class TotallyRealField {
public:
    TotallyRealField() = default;
    // Monic integer minimal polynomial, ascending coefficients (constant term first).
    // Throws InvalidInput unless it is irreducible with all roots real.
    explicit TotallyRealField(const IntVector& minpoly);

    std::size_t degree() const;
    const IntVector& minpoly() const;

    // Isolating interval for the j-th root, refined until its width is at most `width`.
    RatInterval root(std::size_t j, const Rational& width) const;
    RatInterval root(std::size_t j) const;

    FieldElem elem(RatVector coords) const;
    FieldElem from_rational(const Rational& c) const;
    FieldElem gen() const;
    FieldElem one() const;
    FieldElem zero() const;

    friend bool operator==(const TotallyRealField& a, const TotallyRealField& b)
    {
        return a.impl_ == b.impl_;
    }

    struct Impl;

private:
    std::shared_ptr<Impl> impl_;
};

// Sign of a univariate integer polynomial (ascending coefficients) at a rational point.
int sign_at_point(const IntVector& poly, const Rational& x);

class FieldElem {
public:
    FieldElem() = default;
    FieldElem(TotallyRealField field, RatVector coords);

    const TotallyRealField& field() const { return field_; }
    const RatVector& coords() const { return coords_; }
    bool is_zero() const;

    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator*=(const Rational& c);
    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator*(FieldElem a, const Rational& c) { return a *= c; }
    friend FieldElem operator*(const Rational& c, FieldElem a) { return a *= c; }
    FieldElem operator-() const { return *this * Rational(-1); }
    friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.coords_ == b.coords_; }

    FieldElem inverse() const;
    FieldElem pow(long e) const;

    // Matrix of multiplication by this element on the power basis.
    RatMatrix mult_matrix() const;
    Rational trace() const;
    Rational norm() const;

    int sign_at(std::size_t j) const;
    bool totally_positive() const;
    // Interval of width at most `width` containing J_j(this).
    RatInterval approx(std::size_t j, const Rational& width) const;
    double to_double(std::size_t j) const;

private:
    TotallyRealField field_;
    RatVector coords_;
};

FieldElem elem_mul(const FieldElem& a, const FieldElem& b);
Rational elem_trace(const FieldElem& a);
Rational elem_norm(const FieldElem& a);
int sign_at(const FieldElem& a, std::size_t j);

// Columns are power-basis coordinates of the w_i.
RatMatrix coordinate_matrix(const std::vector<FieldElem>& w);
// Coordinates of x in the basis w.
RatVector coords_in_basis(const FieldElem& x, const std::vector<FieldElem>& w);

// w* with Tr(w_i w*_j) = delta_ij. Throws SingularMatrix if w is not a basis.
std::vector<FieldElem> trace_dual_basis(const std::vector<FieldElem>& w);

// Column j holds the coordinates of w_j u in the basis w.
RatMatrix rho_w(const FieldElem& u, const std::vector<FieldElem>& w);

// sign det J(w), with J(w)_{ij} = J_i(w_j).
int sign_det_J(const std::vector<FieldElem>& w);

// N(sum_i w_i x_i) as a homogeneous polynomial of degree n in x.
Polynomial norm_form(const std::vector<FieldElem>& w);

// Full-rank Z-lattice in F; columns of `basis` are power-basis coordinates.
class Lattice {
public:
    Lattice(TotallyRealField field, const RatMatrix& basis);

    // Z[theta].
    static Lattice equation_order(const TotallyRealField& field);
    // alpha * O, for O given by its basis.
    static Lattice principal(const FieldElem& alpha, const Lattice& order);

    const TotallyRealField& field() const { return field_; }
    const RatMatrix& basis() const { return basis_; }
    std::vector<FieldElem> elements() const;
    bool contains(const FieldElem& x) const;
    bool contains(const Lattice& other) const;
    Rational covolume() const;

    Lattice scaled(const FieldElem& alpha) const;
    friend Lattice operator*(const Lattice& a, const Lattice& b);
    // {x : x * divisor is contained in *this}.
    Lattice colon(const Lattice& divisor) const;

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

private:
    TotallyRealField field_;
    RatMatrix basis_;  // canonical: HNF rows of the scaled basis, transposed
};

// Lattice spanned by arbitrary generators (power-basis coordinate vectors).
Lattice lattice_from_generators(const TotallyRealField& field, const std::vector<RatVector>& gens);

struct UnitSystem {
    std::vector<FieldElem> units;
};

// Totally positive fundamental unit of a real quadratic field with O = Z[theta].
FieldElem fundamental_unit_quadratic(const TotallyRealField& field);

// Replaces each unit by its least power congruent to 1 modulo the integral lattice f.
UnitSystem units_congruent_one(const UnitSystem& units, const Lattice& f);

// Cap in bits for interval refinement; SHINTANI_PRECISION_CAP overrides the default 4096.
unsigned default_precision_cap();

// sign det(log J_j(eps_i)) over the embeddings listed in `embeddings`
// (default: the first n-1). Throws PrecisionCap past `cap_bits`.
int regulator_sign(const UnitSystem& units, std::vector<std::size_t> embeddings = {},
                   unsigned cap_bits = default_precision_cap());

}  // namespace shintani
