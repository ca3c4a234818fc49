#include "shintani/conegeom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace shintani {

Cone::Cone(std::size_t dim, const std::vector<RatVector>& gens) : dim_(dim)
{
    for (const auto& g : gens) {
        if (g.size() != dim)
            fail(Errc::InvalidInput, "cone generator has the wrong dimension");
        gens_.push_back(primitive(g));
    }
    if (!gens_.empty() && shintani::rank(to_rational(matrix())) != gens_.size())
        fail(Errc::InvalidInput, "cone generators are linearly dependent");
    std::sort(gens_.begin(), gens_.end());
}

IntMatrix Cone::matrix() const
{
    if (gens_.empty())
        return IntMatrix(dim_, 0);
    return IntMatrix::from_columns(gens_);
}

bool Cone::contains(const RatVector& x) const
{
    if (gens_.empty())
        return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c == 0; });
    // normal equations give the unique candidate coefficients
    const RatMatrix g = to_rational(matrix());
    const RatMatrix gt = g.transpose();
    const RatVector c = solve(gt * g, gt * x);
    if (g * c != x)
        return false;
    return std::all_of(c.begin(), c.end(), [](const Rational& t) { return t > 0; });
}

void ConeCombo::add(const Cone& c, const Integer& coeff)
{
    if (coeff == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(c, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

ConeCombo& ConeCombo::operator+=(const ConeCombo& o)
{
    for (const auto& [c, k] : o.terms_)
        add(c, k);
    return *this;
}

Integer ConeCombo::eval(const RatVector& x) const
{
    Integer s = 0;
    for (const auto& [c, k] : terms_)
        if (c.contains(x))
            s += k;
    return s;
}

PerturbationVector PerturbationVector::rational(RatVector q)
{
    PerturbationVector p;
    p.rat_ = std::move(q);
    return p;
}

PerturbationVector PerturbationVector::embedded(std::vector<FieldElem> elems, std::size_t embedding)
{
    PerturbationVector p;
    p.embedded_ = true;
    p.elems_ = std::move(elems);
    p.embedding_ = embedding;
    return p;
}

std::size_t PerturbationVector::dim() const
{
    return embedded_ ? elems_.size() : rat_.size();
}

int PerturbationVector::sign_pairing(const RatVector& x) const
{
    if (x.size() != dim())
        fail(Errc::InvalidInput, "pairing with Q: dimension mismatch");
    if (!embedded_) {
        Rational s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s += rat_[i] * x[i];
        return sgn(s);
    }
    FieldElem s = elems_[0].field().zero();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0)
            s += elems_[i] * x[i];
    return s.sign_at(embedding_);
}

PerturbationVector PerturbationVector::transformed(const RatMatrix& m) const
{
    if (!embedded_)
        return rational(m * rat_);
    std::vector<FieldElem> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        FieldElem s = elems_[0].field().zero();
        for (std::size_t k = 0; k < m.cols(); ++k)
            if (m(i, k) != 0)
                s += elems_[k] * m(i, k);
        out.push_back(std::move(s));
    }
    return embedded(std::move(out), embedding_);
}

PerturbationVector PerturbationVector::scaled(const Rational& c) const
{
    if (c <= 0)
        fail(Errc::InvalidInput, "Q may only be rescaled by a positive factor");
    RatMatrix m = RatMatrix::identity(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        m(i, i) = c;
    return transformed(m);
}

std::vector<double> PerturbationVector::approx() const
{
    std::vector<double> out;
    if (!embedded_) {
        for (const auto& x : rat_)
            out.push_back(x.get_d());
    } else {
        for (const auto& e : elems_)
            out.push_back(e.to_double(embedding_));
    }
    return out;
}

FaceWeights::FaceWeights(const RatMatrix& sigma, const PerturbationVector& q) : sigma_(sigma)
{
    if (!sigma.square() || sigma.rows() != q.dim())
        fail(Errc::InvalidInput, "face weights need n vectors in dimension n");
    inverse_ = inv_det(sigma).inverse;
    const std::size_t n = sigma.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const int s = q.sign_pairing(inverse_.row(i));
        if (s == 0)
            fail(Errc::DegenerateQ, "Q lies in the span of n-1 of the cone generators");
        q_signs_.push_back(s);
    }
    weights_.assign(std::size_t(1) << n, 0);
    for (Subset s = 0; s < weights_.size(); ++s) {
        int w = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (!(s >> i & 1) && q_signs_[i] < 0)
                w = 0;
        weights_[s] = w;
    }
}

Cone FaceWeights::face(Subset s) const
{
    std::vector<RatVector> cols;
    for (std::size_t i = 0; i < dim(); ++i)
        if (s >> i & 1)
            cols.push_back(sigma_.column(i));
    return Cone(dim(), cols);
}

RatVector FaceWeights::coords(const RatVector& w) const
{
    return inverse_ * w;
}

int FaceWeights::eval(const RatVector& w) const
{
    const RatVector c = coords(w);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0)
            return 0;
        if (c[i] == 0 && q_signs_[i] < 0)
            return 0;
    }
    return 1;
}

int cq_eval(const RatMatrix& sigma, const PerturbationVector& q, const RatVector& w)
{
    if (det(sigma) == 0)
        return 0;
    return FaceWeights(sigma, q).eval(w);
}

FaceWeights face_weights(const RatMatrix& sigma, const PerturbationVector& q)
{
    return FaceWeights(sigma, q);
}

ConeCombo cocycle_defect(const std::vector<RatVector>& v, const PerturbationVector& q, const RatMatrix& basis)
{
    const std::size_t n = basis.rows();
    if (v.size() != n + 1)
        fail(Errc::InvalidInput, "cocycle defect needs n+1 vectors");
    const RatMatrix binv = inv_det(basis).inverse;
    ConeCombo out;
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<RatVector> cols;
        for (std::size_t j = 0; j <= n; ++j)
            if (j != i)
                cols.push_back(v[j]);
        const RatMatrix m = RatMatrix::from_columns(cols);
        const int orient = sgn(det(binv * m));
        if (orient == 0)
            continue;
        const int sign = (i % 2 ? -1 : 1) * orient;
        FaceWeights fw(m, q);
        for (Subset s = 0; s < (Subset(1) << n); ++s)
            if (fw.weight(s))
                out.add(fw.face(s), sign);
    }
    return out;
}

ConeCombo cocycle_defect(const std::vector<RatVector>& v, const PerturbationVector& q)
{
    return cocycle_defect(v, q, RatMatrix::identity(v.empty() ? 0 : v[0].size()));
}

namespace {

Rational into_half_open_unit(const Rational& t)
{
    // (0, 1]
    Rational f = frac(t);
    return f == 0 ? Rational(1) : f;
}

}  // namespace

std::vector<RatVector> parallelepiped_points(const IntMatrix& sigma, Subset subset, const RatVector& v)
{
    const std::size_t n = sigma.rows();
    std::vector<IntVector> cols;
    for (std::size_t i = 0; i < sigma.cols(); ++i)
        if (subset >> i & 1)
            cols.push_back(sigma.column(i));
    if (cols.empty()) {
        if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return is_integer(c); }))
            return {RatVector(n, Rational(0))};
        return {};
    }
    const std::size_t r = cols.size();
    const IntMatrix si = IntMatrix::from_columns(cols);
    const HnfResult red = hnf(si);
    const RatVector uv = to_rational(red.u) * v;
    for (std::size_t k = r; k < n; ++k)
        if (!is_integer(uv[k]))
            return {};
    IntMatrix top(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            top(i, j) = red.h(i, j);
    const RatMatrix top_inv = inv_det(to_rational(top)).inverse;
    const RatMatrix si_q = to_rational(si);
    std::vector<RatVector> out;
    const LatticeQuotient quot = quotient_reps(top);
    for (const auto& x : quot.reps()) {
        RatVector rhs(r);
        for (std::size_t i = 0; i < r; ++i)
            rhs[i] = uv[i] + x[i];
        RatVector t = top_inv * rhs;
        for (auto& c : t)
            c = into_half_open_unit(c);
        out.push_back(si_q * t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DecompositionPiece> cq_decomposition(const IntMatrix& sigma, const PerturbationVector& q,
                                                 const RatVector& v)
{
    const std::size_t n = sigma.rows();
    const RatMatrix sq = to_rational(sigma);
    FaceWeights fw(sq, q);
    const Subset full = (Subset(1) << n) - 1;
    std::vector<DecompositionPiece> out;
    const LatticeQuotient quot = quotient_reps(sigma);
    for (const auto& x : quot.reps()) {
        RatVector shifted(n);
        for (std::size_t i = 0; i < n; ++i)
            shifted[i] = v[i] + x[i];
        const RatVector y = fw.coords(shifted);
        Subset integral = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (is_integer(y[i]))
                integral |= Subset(1) << i;
        const Subset forced = full & ~integral;
        // I = forced | s, s ranging over the subsets of `integral`
        for (Subset s = integral;; s = (s - 1) & integral) {
            const Subset subset = forced | s;
            if (fw.weight(subset)) {
                RatVector t(n);
                for (std::size_t i = 0; i < n; ++i) {
                    if (!(integral >> i & 1))
                        t[i] = frac(y[i]);
                    else
                        t[i] = (subset >> i & 1) ? 1 : 0;
                }
                out.push_back({sq * t, subset});
            }
            if (s == 0)
                break;
        }
    }
    return out;
}

int SignedDomain::eval(const RatVector& x) const
{
    int s = 0;
    for (const auto& p : pieces)
        if (p.coeff != 0)
            s += p.coeff * p.weights.eval(x);
    return s;
}

std::vector<FieldElem> unit_chain(const UnitSystem& units, const std::vector<std::size_t>& perm)
{
    const TotallyRealField& field = units.units.at(0).field();
    std::vector<FieldElem> chain{field.one()};
    for (std::size_t i = 0; i < perm.size(); ++i)
        chain.push_back(chain.back() * units.units.at(perm[i]));
    return chain;
}

int permutation_sign(const std::vector<std::size_t>& perm)
{
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b])
                ++inversions;
    return inversions % 2 ? -1 : 1;
}

SignedDomain signed_fundamental_domain(const UnitSystem& units, const std::vector<FieldElem>& w)
{
    const std::size_t n = w.size();
    if (n == 0)
        fail(Errc::InvalidInput, "empty basis");
    if (units.units.size() + 1 != n)
        fail(Errc::InvalidInput, "need n-1 units for a degree n field");
    for (const auto& u : units.units)
        if (!u.totally_positive())
            fail(Errc::InvalidInput, "units must be totally positive");
    SignedDomain d{{}, w, units, 1, sign_det_J(w), PerturbationVector::embedded(trace_dual_basis(w), n - 1)};
    if (n > 1)
        d.regulator_sign = regulator_sign(units);
    const RatMatrix winv = inv_det(coordinate_matrix(w)).inverse;
    std::vector<std::size_t> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<RatVector> cols;
        for (const auto& v : unit_chain(units, perm))
            cols.push_back(winv * v.coords());
        const int dc = sgn(det(RatMatrix::from_columns(cols)));
        const int coeff = ((n - 1) % 2 ? -1 : 1) * d.regulator_sign * permutation_sign(perm) * dc * d.sign_det_J;
        Cone cone(n, cols);
        FaceWeights fw(to_rational(cone.matrix()), d.q);
        d.pieces.push_back({coeff, std::move(cone), std::move(fw), perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return d;
}

OrbitSum orbit_sum(const SignedDomain& domain, const FieldElem& xi, int max_radius)
{
    const std::size_t m = domain.units.units.size();
    const RatMatrix winv = inv_det(coordinate_matrix(domain.basis)).inverse;
    auto at = [&](const FieldElem& y) { return domain.eval(winv * y.coords()); };
    if (m == 0)
        return {at(xi), 0};
    const std::size_t n = m + 1;

    // exponents that roughly balance the embeddings of u*xi
    std::vector<double> logxi(n);
    double mean = 0;
    for (std::size_t j = 0; j < n; ++j) {
        logxi[j] = std::log(xi.to_double(j));
        mean += logxi[j] / n;
    }
    RatMatrix lt(m, m);  // lt(j, i) = log J_j(eps_i), rounded to a rational
    RatVector rhs(m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < m; ++i)
            lt(j, i) = Rational(std::log(domain.units.units[i].to_double(j)));
        rhs[j] = Rational(mean - logxi[j]);
    }
    std::vector<long> center(m);
    const RatVector a = solve(lt, rhs);
    for (std::size_t i = 0; i < m; ++i)
        center[i] = std::lround(a[i].get_d());

    std::map<std::pair<std::size_t, long>, FieldElem> powers;
    auto unit_power = [&](std::size_t i, long e) -> const FieldElem& {
        auto key = std::make_pair(i, e);
        auto it = powers.find(key);
        if (it == powers.end())
            it = powers.emplace(key, domain.units.units[i].pow(e)).first;
        return it->second;
    };

    Integer total = 0;
    int empty_shells = 0;
    for (int radius = 0; radius <= max_radius; ++radius) {
        bool hit = false;
        std::vector<long> off(m, -radius);
        for (;;) {
            long norm = 0;
            for (long o : off)
                norm = std::max(norm, std::labs(o));
            if (norm == radius) {
                FieldElem y = xi;
                for (std::size_t i = 0; i < m; ++i)
                    y *= unit_power(i, center[i] + off[i]);
                const int c = at(y);
                if (c != 0) {
                    total += c;
                    hit = true;
                }
            }
            std::size_t k = 0;
            while (k < m && off[k] == radius)
                off[k++] = -radius;
            if (k == m)
                break;
            ++off[k];
        }
        empty_shells = hit ? 0 : empty_shells + 1;
        if (empty_shells >= 2 && radius >= 2)
            return {total, radius};
    }
    fail(Errc::SearchExhausted, "orbit sum did not stabilise within radius " + std::to_string(max_radius));
}

}  // namespace shintani
