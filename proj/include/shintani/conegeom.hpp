// Rational simplicial cones, Q-perturbed cones and signed fundamental domains.
#pragma once

#include <map>
#include <vector>

#include "shintani/exactmath.hpp"
#include "shintani/numfield.hpp"

namespace shintani {

// Open cone R_{>0} g_1 + ... + R_{>0} g_r; the generators are primitive integer
// vectors kept in lexicographic order, so equal cones compare equal.
class Cone {
public:
    Cone() = default;
    // Accepts any nonzero rational generators; throws InvalidInput if dependent.
    Cone(std::size_t dim, const std::vector<RatVector>& gens);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return gens_.size(); }
    const std::vector<IntVector>& gens() const noexcept { return gens_; }
    IntMatrix matrix() const;

    bool contains(const RatVector& x) const;

    friend bool operator==(const Cone& a, const Cone& b) { return a.dim_ == b.dim_ && a.gens_ == b.gens_; }
    friend bool operator<(const Cone& a, const Cone& b)
    {
        if (a.dim_ != b.dim_)
            return a.dim_ < b.dim_;
        return a.gens_ < b.gens_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<IntVector> gens_;
};

// Formal integer combination of open cones.
class ConeCombo {
public:
    void add(const Cone& c, const Integer& coeff);
    const std::map<Cone, Integer>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    Integer eval(const RatVector& x) const;

    ConeCombo& operator+=(const ConeCombo& o);
    friend bool operator==(const ConeCombo& a, const ConeCombo& b) { return a.terms_ == b.terms_; }

private:
    std::map<Cone, Integer> terms_;
};

// The auxiliary vector Q: either rational, or (J_j(e_1), ..., J_j(e_n)) for field elements e_i.
class PerturbationVector {
public:
    static PerturbationVector rational(RatVector q);
    static PerturbationVector embedded(std::vector<FieldElem> elems, std::size_t embedding);

    std::size_t dim() const;
    bool is_embedded() const noexcept { return embedded_; }
    const RatVector& rational_value() const { return rat_; }
    const std::vector<FieldElem>& elems() const { return elems_; }
    std::size_t embedding() const noexcept { return embedding_; }

    // Exact sign of <Q, x>.
    int sign_pairing(const RatVector& x) const;
    // The vector m Q (Q as a column).
    PerturbationVector transformed(const RatMatrix& m) const;
    // Positive rescaling (same class in Q-space).
    PerturbationVector scaled(const Rational& c) const;
    std::vector<double> approx() const;

private:
    bool embedded_ = false;
    RatVector rat_;
    std::vector<FieldElem> elems_;
    std::size_t embedding_ = 0;
};

// Subsets of {0..n-1} are bitmasks.
using Subset = unsigned;

// Weighted faces of C_Q(sigma_1..sigma_n): weight(I) = prod_{i not in I} (1 + sign(Q sigma^{-t})_i)/2.
class FaceWeights {
public:
    // Throws SingularMatrix if the columns are dependent, DegenerateQ if some q_i = 0.
    FaceWeights(const RatMatrix& sigma, const PerturbationVector& q);

    const RatMatrix& sigma() const noexcept { return sigma_; }
    std::size_t dim() const noexcept { return sigma_.rows(); }
    int weight(Subset s) const { return weights_[s]; }
    const std::vector<int>& q_signs() const noexcept { return q_signs_; }
    // The open face C_I.
    Cone face(Subset s) const;
    // c_Q(sigma)(w).
    int eval(const RatVector& w) const;
    // sigma^{-1} w.
    RatVector coords(const RatVector& w) const;

private:
    RatMatrix sigma_;
    RatMatrix inverse_;
    std::vector<int> q_signs_;
    std::vector<int> weights_;
};

// c_Q(sigma)(w); 0 when the columns are dependent.
int cq_eval(const RatMatrix& sigma, const PerturbationVector& q, const RatVector& w);
FaceWeights face_weights(const RatMatrix& sigma, const PerturbationVector& q);

// sum_i (-1)^i O_B(v^_i) c_Q(v_0, .., v^_i, .., v_n) as weighted faces, for n+1 vectors in Q^n.
ConeCombo cocycle_defect(const std::vector<RatVector>& v, const PerturbationVector& q,
                         const RatMatrix& basis);
ConeCombo cocycle_defect(const std::vector<RatVector>& v, const PerturbationVector& q);

// Points a = sum_{i in I} t_i sigma_i with t in (0,1]^I and a = v mod Z^n.
std::vector<RatVector> parallelepiped_points(const IntMatrix& sigma, Subset subset, const RatVector& v);

struct DecompositionPiece {
    RatVector a;
    Subset subset;
};

// C_Q(sigma) meets v + Z^n in the disjoint union of a_I + sum_{i in I} Z_{>=0} sigma_i.
std::vector<DecompositionPiece> cq_decomposition(const IntMatrix& sigma, const PerturbationVector& q,
                                                 const RatVector& v);

struct DomainPiece {
    int coeff;  // w_sigma
    Cone cone;
    FaceWeights weights;
    std::vector<std::size_t> perm;  // the permutation of S_{n-1}
};

struct SignedDomain {
    std::vector<DomainPiece> pieces;
    std::vector<FieldElem> basis;  // w
    UnitSystem units;
    int regulator_sign = 1;  // w_u
    int sign_det_J = 1;
    PerturbationVector q;

    // sum over pieces of w_sigma * c_Q(piece)(x), x in w-coordinates.
    int eval(const RatVector& x) const;
};

// v_{i,sigma} = eps_{sigma(1)} ... eps_{sigma(i-1)} for i = 1..n.
std::vector<FieldElem> unit_chain(const UnitSystem& units, const std::vector<std::size_t>& perm);

int permutation_sign(const std::vector<std::size_t>& perm);

// Cones pulled back through J(w), with Q = (J_n(w*_1), ..., J_n(w*_n)).
SignedDomain signed_fundamental_domain(const UnitSystem& units, const std::vector<FieldElem>& w);

struct OrbitSum {
    Integer total;
    int radius;  // half-width of the exponent window actually used
};

// sum over u in U of the domain's signed indicator at the w-coordinates of u*xi.
// The window grows until two consecutive boundary shells contribute nothing.
OrbitSum orbit_sum(const SignedDomain& domain, const FieldElem& xi, int max_radius = 64);

}  // namespace shintani
