// Bernoulli functions, Dedekind sums, the smoothed cocycle and partial zeta values.
#pragma once

#include <optional>
#include <vector>

#include "shintani/conegeom.hpp"
#include "shintani/genfun.hpp"
#include "shintani/numfield.hpp"

namespace shintani {

// Ascending coefficients of b_k(x), from t e^{xt}/(e^t - 1) = sum b_k(x) t^k/k!.
const std::vector<Rational>& bernoulli_poly(unsigned k);
Rational bernoulli_eval(unsigned k, const Rational& x);
// b_k({x}); AmbiguousB1 for k = 1 at an integer.
Rational periodic_B(unsigned k, const Rational& x);

// Exact signs of the components of Q.
std::vector<int> component_signs(const PerturbationVector& q);

// prod_{j in J} (-sgn Q_j / 2) prod_{j not in J} B_{e_j}(v_j), J = {j : e_j = 1, v_j integral}.
Rational b_product(const std::vector<unsigned>& e, const RatVector& v, const std::vector<int>& q_signs);

// sum over x in Z^n / sigma Z^n of B_e(sigma^{-1}(x + v), sigma^{-1} Q).
Rational dedekind_D(const IntMatrix& sigma, const std::vector<unsigned>& e, const PerturbationVector& q,
                    const RatVector& v);
// The same for several e at once, sharing the quotient enumeration.
std::vector<Rational> dedekind_D_batch(const IntMatrix& sigma, const std::vector<std::vector<unsigned>>& es,
                                       const PerturbationVector& q, const RatVector& v);

// D(sigma_ell, e, pi Q, pi v) - ell^{1-n+|e|} D(sigma, e, Q, v), sigma_ell = pi sigma / ell.
Rational dedekind_D_ell(const IntMatrix& sigma, const std::vector<unsigned>& e, const PerturbationVector& q,
                        const RatVector& v, const Integer& ell);
std::vector<Rational> dedekind_D_ell_batch(const IntMatrix& sigma, const std::vector<std::vector<unsigned>>& es,
                                           const PerturbationVector& q, const RatVector& v, const Integer& ell);

// diag(ell, 1, ..., 1)
RatMatrix pi_ell(std::size_t n, const Integer& ell);
bool in_gamma_ell(const RatMatrix& a, const Integer& ell);

struct SmoothedQuery {
    std::vector<RatMatrix> A;  // n matrices in Gamma_ell
    Polynomial fM;
    PerturbationVector q;
    RatVector v;
    Integer ell;
    unsigned k = 0;
};

// Delta^(k) Psi_{Sh,ell}(A, M, Q, v) through smoothed Dedekind sums.
Rational smoothed_cocycle_value(const SmoothedQuery& query);

// Integral sigma = lambda * (first columns of A), lambda coprime to ell. Empty if singular.
std::optional<IntMatrix> scaled_first_columns(const std::vector<RatMatrix>& A, const Integer& ell);

// Phi_Sh(A)(Q) as a combination of open cones.
ConeCombo phi_sh(const std::vector<RatMatrix>& A, const PerturbationVector& q);
// h(Phi_Sh(A)(Q), v)(z M^t) for rational M.
HdElement shintani_series(const std::vector<RatMatrix>& A, const RatMatrix& m, const PerturbationVector& q,
                          const RatVector& v, int trunc);
// Psi(pi A pi^-1, pi^-1 M, pi Q, pi v) - ell Psi(A, M, Q, v).
HdElement smoothed_series(const std::vector<RatMatrix>& A, const RatMatrix& m, const PerturbationVector& q,
                          const RatVector& v, const Integer& ell, int trunc);
// The regular series (-1)^n sgn det(sigma) sum_r ell^{-|r|} D_ell(sigma, r+1, Q, v) (z M^t sigma)^r/(r+1)!.
MultiSeries smoothed_series_explicit(const std::vector<RatMatrix>& A, const RatMatrix& m,
                                     const PerturbationVector& q, const RatVector& v, const Integer& ell,
                                     int trunc);

// N(x) for an integral lattice x of O = Z[theta].
Integer ideal_norm(const Lattice& x);

struct AdaptedBasis {
    std::vector<FieldElem> w;  // basis of a^{-1}f
    Integer ell;
};

// Basis w of a^{-1}f such that rho_w(O^x) lies in Gamma_ell: w = (ell w'_1, w'_2, ..., w'_n) where
// w' is a basis of (ac)^{-1}f with w'_2, ..., w'_n in a^{-1}f.
AdaptedBasis adapted_basis(const Lattice& a, const Lattice& f, const Lattice& c);
// w U for U = [[1, 1], [ell, ell + 1]] (extended by the identity): another adapted basis.
std::vector<FieldElem> alternate_adapted_basis(const AdaptedBasis& b);

struct CycleTerm {
    int coeff;
    std::vector<RatMatrix> A;
};

// (-1)^{n-1} w_eps sum_sigma sign(sigma) [rho_w(v_{1,sigma}), ..., rho_w(v_{n,sigma})]
std::vector<CycleTerm> zeta_cycle(const UnitSystem& units, const std::vector<FieldElem>& w);

struct ZetaData {
    std::vector<FieldElem> w;
    Integer ell;
    Polynomial fM;
    PerturbationVector q;
    RatVector v;
    std::vector<CycleTerm> cycle;
    int sign_det_J = 1;
};

// Everything the pairing needs for the class of a; `basis` overrides the adapted basis.
ZetaData zeta_data(const Lattice& a, const Lattice& f, const Lattice& c, const UnitSystem& units,
                   const std::optional<std::vector<FieldElem>>& basis = std::nullopt);

// zeta_{f,c}(a, -k) = zeta_f(ac, -k) - ell^{1+k} zeta_f(a, -k).
Rational smoothed_zeta(const ZetaData& data, unsigned k);
Rational smoothed_zeta(const Lattice& a, const Lattice& f, const Lattice& c, const UnitSystem& units,
                       unsigned k, const std::optional<std::vector<FieldElem>>& basis = std::nullopt);

// Solves (P_c - ell^{1+k}) zeta = smoothed, where (P_c zeta)_i = zeta_{c_action[i]}.
std::vector<Rational> unsmooth_solve(const std::vector<Rational>& smoothed, const std::vector<std::size_t>& c_action,
                                     const Integer& ell, unsigned k);

struct IntegralityReport {
    bool ok = true;
    std::vector<std::size_t> offenders;
};

// Every denominator a power of ell?
IntegralityReport integrality_check(const std::vector<Rational>& values, const Integer& ell);
bool denominator_is_power_of(const Rational& x, const Integer& ell);

// f_M(v + (1/ell)Z + Z^{n-1}) in Z[1/ell], tested on v + sum c_i b_i with c in N^n, |c| <= n.
bool integrality_hypothesis(const Polynomial& fM, const RatVector& v, const Integer& ell);

}  // namespace shintani
