// The rational cocycle f, formal symbols over (S_k x S)^n and the explicit coboundary h.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "shintani/exactmath.hpp"
#include "shintani/genfun.hpp"

namespace shintani {

// f(tau_1, ..., tau_n)(x) = det(tau) / prod <x, tau_i>. PoleHit if a pairing vanishes.
Rational f_eval(const std::vector<RatVector>& taus, const RatVector& x);

// (a, b): column b of A_a, both 1-based.
using SymbolPair = std::pair<int, int>;
using Symbol = std::vector<SymbolPair>;

class SymbolSum {
public:
    SymbolSum() = default;
    explicit SymbolSum(const Symbol& s, const Integer& c = 1) { add(s, c); }

    const std::map<Symbol, Integer>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    void add(const Symbol& s, const Integer& c);

    SymbolSum& operator+=(const SymbolSum& o);
    SymbolSum& operator-=(const SymbolSum& o);
    SymbolSum& operator*=(const Integer& c);
    friend SymbolSum operator+(SymbolSum a, const SymbolSum& b) { return a += b; }
    friend SymbolSum operator-(SymbolSum a, const SymbolSum& b) { return a -= b; }
    friend SymbolSum operator*(SymbolSum a, const Integer& c) { return a *= c; }
    friend bool operator==(const SymbolSum& a, const SymbolSum& b) { return a.terms_ == b.terms_; }

private:
    std::map<Symbol, Integer> terms_;
};

// sum_i (-1)^i [t_0, ..., t_i omitted, ..., t_m]
SymbolSum boundary(const Symbol& s);
SymbolSum boundary(const SymbolSum& s);

// w in S^n, entries 1-based.
SymbolSum alpha(const std::vector<int>& w);
SymbolSum beta(const std::vector<int>& w);
// w in S^{n-1}; h = sum_i (-1)^i h_i.
SymbolSum h_map(const std::vector<int>& w);
// (dh)(w) = sum_i (-1)^i (e_i x id)(h(w with w_i removed)), i = 1..n.
SymbolSum dh_map(const std::vector<int>& w);

struct Membership {
    bool member = false;
    // boundary(witness) == s when member
    SymbolSum witness;
};

// Is s an integer combination of boundaries of (n+1)-symbols over the alphabet?
Membership boundary_image_membership(const SymbolSum& s, const std::vector<SymbolPair>& alphabet);

struct CoboundaryReport {
    std::size_t n = 0;
    std::size_t checked = 0;
    std::vector<std::vector<int>> failures;
    bool ok() const { return failures.empty(); }
};

// beta - alpha - dh in Image(boundary) for every w in S^n; `parallel` splits the words over threads.
CoboundaryReport verify_coboundary(std::size_t n, bool parallel = false);

// (-1)^{n+1} det(sigma) / prod_j (z M^t sigma_j), sigma_j the first column of A_j. NotDense on a sparse form.
HdElement polar_value(const std::vector<RatMatrix>& A, const RatMatrix& m, int trunc);

}  // namespace shintani
