#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "shintani/conegeom.hpp"

using namespace shintani;

namespace {

RatMatrix rat(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<RatVector> r;
    for (const auto& row : rows) {
        RatVector v;
        for (long x : row)
            v.emplace_back(x);
        r.push_back(v);
    }
    return RatMatrix::from_rows(r);
}

PerturbationVector ratq(std::initializer_list<long> q)
{
    RatVector v;
    for (long x : q)
        v.emplace_back(x);
    return PerturbationVector::rational(v);
}

Rational rnd_rational(std::mt19937_64& rng, int span, int den)
{
    std::uniform_int_distribution<int> d(-span, span), e(1, den);
    Rational r(d(rng), e(rng));
    r.canonicalize();
    return r;
}

RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n, int span)
{
    std::uniform_int_distribution<int> d(-span, span);
    for (;;) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = d(rng);
        if (det(m) != 0)
            return m;
    }
}

// Points of sigma * c for small integer c, so faces get hit often.
RatVector face_heavy_point(std::mt19937_64& rng, const RatMatrix& sigma)
{
    std::uniform_int_distribution<int> d(-1, 2);
    std::uniform_int_distribution<int> den(1, 3);
    RatVector c(sigma.cols());
    for (auto& x : c) {
        x = Rational(d(rng), den(rng));
        x.canonicalize();
    }
    return sigma * c;
}

int open_cone_indicator(const RatMatrix& sigma, const RatVector& w)
{
    for (const auto& c : inv_det(sigma).inverse * w)
        if (c <= 0)
            return 0;
    return 1;
}

// 1_C(w + eps Q) for eps = 2^-k, until two consecutive k agree.
int limit_indicator(const RatMatrix& sigma, const RatVector& q, const RatVector& w)
{
    int prev = -1;
    Rational eps(1, 4);
    for (int k = 0; k < 200; ++k, eps /= 2) {
        RatVector p = w;
        for (std::size_t i = 0; i < p.size(); ++i)
            p[i] += eps * q[i];
        const int cur = open_cone_indicator(sigma, p);
        if (cur == prev && k > 20)
            return cur;
        prev = cur;
    }
    return prev;
}

TotallyRealField golden()
{
    return TotallyRealField(IntVector{-1, -1, 1});
}

FieldElem random_totally_positive(const TotallyRealField& f, std::mt19937_64& rng)
{
    for (;;) {
        RatVector c(f.degree());
        for (auto& x : c)
            x = rnd_rational(rng, 12, 3);
        FieldElem e = f.elem(c);
        if (!e.is_zero() && e.totally_positive())
            return e;
    }
}

}  // namespace

TEST_CASE("cq_eval examples")
{
    const RatMatrix id = RatMatrix::identity(2);
    CHECK(cq_eval(id, ratq({1, 1}), {0, 0}) == 1);
    CHECK(cq_eval(id, ratq({1, -1}), {0, 0}) == 0);
    CHECK(cq_eval(id, ratq({1, -1}), {0, 5}) == 1);
    CHECK(limit_indicator(id, {1, -1}, {0, 5}) == 1);
    CHECK_THROWS_AS(cq_eval(id, ratq({1, 0}), {1, 1}), Error);
    CHECK(cq_eval(rat({{1, 2}, {2, 4}}), ratq({1, 1}), {1, 1}) == 0);
}

TEST_CASE("face weights examples")
{
    FaceWeights fw(RatMatrix::identity(2), ratq({1, -1}));
    CHECK(fw.weight(0b11) == 1);
    CHECK(fw.weight(0b10) == 1);
    CHECK(fw.weight(0b01) == 0);
    CHECK(fw.weight(0b00) == 0);
    // brute force: sample one point on each face and apply the limit definition
    const std::vector<RatVector> samples{{0, 0}, {3, 0}, {0, 3}, {1, 2}};
    const std::vector<Subset> faces{0b00, 0b01, 0b10, 0b11};
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(fw.weight(faces[i]) == limit_indicator(RatMatrix::identity(2), {1, -1}, samples[i]));

    FaceWeights all(rat({{2, 1}, {1, 3}}), ratq({3, 4}));
    for (Subset s = 0; s < 4; ++s)
        CHECK(all.weight(s) == 1);
}

TEST_CASE("face weights cohere with cq_eval and the limit definition")
{
    std::mt19937_64 rng(41);
    for (std::size_t n : {1u, 2u, 3u}) {
        for (int t = 0; t < 30; ++t) {
            RatMatrix sigma = random_invertible(rng, n, 4);
            RatVector q(n);
            for (auto& x : q)
                x = rnd_rational(rng, 9, 5);
            PerturbationVector pq = PerturbationVector::rational(q);
            if (std::any_of(q.begin(), q.end(), [](const Rational& x) { return x == 0; }))
                continue;
            FaceWeights fw = [&] {
                try {
                    return FaceWeights(sigma, pq);
                } catch (const Error&) {
                    return FaceWeights(RatMatrix::identity(n), PerturbationVector::rational(RatVector(n, 1)));
                }
            }();
            if (fw.sigma() != sigma)
                continue;
            for (int s = 0; s < 100; ++s) {
                RatVector w = s % 2 ? face_heavy_point(rng, sigma) : RatVector(n, Rational(0));
                if (s % 2 == 0)
                    for (auto& x : w)
                        x = rnd_rational(rng, 3, 2);
                const int direct = cq_eval(sigma, pq, w);
                int summed = 0;
                for (Subset sub = 0; sub < (Subset(1) << n); ++sub)
                    if (fw.weight(sub) && fw.face(sub).contains(w))
                        ++summed;
                CHECK(direct == summed);
                CHECK(direct == limit_indicator(sigma, q, w));
                CHECK(direct == cq_eval(sigma, pq.scaled(Rational(7, 3)), w));
            }
        }
    }
}

TEST_CASE("cocycle defect vanishes for positive vectors")
{
    std::vector<RatVector> v{{1, 0}, {1, 1}, {0, 1}};
    // (1,0) and (0,1) are on the boundary of the orthant, the relation still holds
    ConeCombo d = cocycle_defect(v, ratq({2, 3}));
    for (const RatVector& p : std::vector<RatVector>{{2, 1}, {1, 1}, {5, 2}})
        CHECK(d.eval(p) == 0);

    ConeCombo one = cocycle_defect({{1}, {2}}, ratq({1}));
    CHECK(one.empty());

    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> pos(1, 6);
    for (std::size_t n : {2u, 3u}) {
        for (int t = 0; t < 25; ++t) {
            std::vector<RatVector> vs(n + 1, RatVector(n));
            for (auto& x : vs)
                for (auto& c : x)
                    c = pos(rng);
            RatVector q(n);
            for (auto& c : q)
                c = rnd_rational(rng, 20, 7);
            ConeCombo dd;
            try {
                dd = cocycle_defect(vs, PerturbationVector::rational(q));
            } catch (const Error& e) {
                CHECK(e.code() == Errc::DegenerateQ);
                continue;
            }
            for (int s = 0; s < 60; ++s) {
                RatVector p(n);
                for (std::size_t i = 0; i < n; ++i) {
                    // mix generic points with points on the spanned faces
                    p[i] = s % 3 ? Rational(pos(rng)) : vs[s % (n + 1)][i] * pos(rng) + vs[(s + 1) % (n + 1)][i];
                }
                CHECK(dd.eval(p) == 0);
            }
        }
    }
}

TEST_CASE("parallelepiped points")
{
    IntMatrix s{{2, 0}, {0, 1}};
    auto pts = parallelepiped_points(s, 0b11, {0, 0});
    CHECK(pts == std::vector<RatVector>{{1, 1}, {2, 1}});
    CHECK(parallelepiped_points(s, 0, {0, 0}) == std::vector<RatVector>{{0, 0}});
    CHECK(parallelepiped_points(s, 0, {Rational(1, 2), 0}).empty());
    CHECK(parallelepiped_points(IntMatrix::identity(2), 0b11, {Rational(1, 2), Rational(1, 2)}) ==
          std::vector<RatVector>{{Rational(1, 2), Rational(1, 2)}});
}

TEST_CASE("parallelepiped points against brute force")
{
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> d(-3, 3), den(1, 3), num(0, 2);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + t % 2;
        RatMatrix sr = random_invertible(rng, n, 3);
        IntMatrix s(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                s(i, j) = sr(i, j).get_num();
        RatVector v(n);
        for (auto& x : v) {
            x = Rational(num(rng), den(rng));
            x.canonicalize();
        }
        for (Subset sub = 1; sub < (Subset(1) << n); ++sub) {
            auto got = parallelepiped_points(s, sub, v);
            std::set<RatVector> want;
            // box containing the parallelepiped
            std::vector<long> lo(n, 0), hi(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (sub >> j & 1)
                        (s(i, j) < 0 ? lo[i] : hi[i]) += s(i, j).get_si();
            std::vector<long> p(lo);
            RatMatrix inv = inv_det(sr).inverse;
            for (;;) {
                RatVector a(n);
                for (std::size_t i = 0; i < n; ++i)
                    a[i] = Rational(p[i]) + v[i] - floor_of(v[i]) - 1;
                for (int shift = 0; shift < 2; ++shift) {
                    RatVector c = inv * a;
                    bool ok = true;
                    for (std::size_t j = 0; j < n; ++j) {
                        if (sub >> j & 1)
                            ok = ok && c[j] > 0 && c[j] <= 1;
                        else
                            ok = ok && c[j] == 0;
                    }
                    if (ok)
                        want.insert(a);
                    for (auto& x : a)
                        x += 1;
                }
                std::size_t k = 0;
                while (k < n && p[k] == hi[k] + 1)
                    p[k] = lo[k], ++k;
                if (k == n)
                    break;
                ++p[k];
            }
            CHECK(std::set<RatVector>(got.begin(), got.end()) == want);
            CHECK(got.size() == want.size());
        }
    }
}

TEST_CASE("cq decomposition")
{
    auto pieces = cq_decomposition(IntMatrix::identity(2), ratq({1, 1}), {0, 0});
    std::set<std::pair<RatVector, Subset>> got;
    for (const auto& p : pieces)
        got.insert({p.a, p.subset});
    std::set<std::pair<RatVector, Subset>> want{
        {{0, 0}, 0b00}, {{1, 0}, 0b01}, {{0, 1}, 0b10}, {{1, 1}, 0b11}};
    CHECK(got == want);

    auto generic = cq_decomposition(IntMatrix{{2, 1}, {0, 3}}, ratq({1, 1}), {Rational(1, 7), Rational(2, 7)});
    for (const auto& p : generic)
        CHECK(p.subset == 0b11);
    CHECK(generic.size() == 6);
}

TEST_CASE("cq decomposition partitions C_Q on a box")
{
    std::mt19937_64 rng(53);
    for (int t = 0; t < 20; ++t) {
        RatMatrix sr = random_invertible(rng, 2, 3);
        IntMatrix s(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                s(i, j) = sr(i, j).get_num();
        RatVector q{rnd_rational(rng, 9, 4), rnd_rational(rng, 9, 4)};
        if (q[0] == 0 || q[1] == 0)
            continue;
        RatVector v{Rational(t % 3, 3), Rational(0)};
        v[0].canonicalize();
        PerturbationVector pq = PerturbationVector::rational(q);
        std::vector<DecompositionPiece> pieces;
        try {
            pieces = cq_decomposition(s, pq, v);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::DegenerateQ);
            continue;
        }
        RatMatrix inv = inv_det(sr).inverse;
        for (int x = -5; x <= 5; ++x)
            for (int y = -5; y <= 5; ++y) {
                RatVector p{v[0] + x, v[1] + y};
                int covered = 0;
                for (const auto& piece : pieces) {
                    RatVector c = inv * RatVector{p[0] - piece.a[0], p[1] - piece.a[1]};
                    bool ok = true;
                    for (std::size_t j = 0; j < 2; ++j) {
                        if (piece.subset >> j & 1)
                            ok = ok && is_integer(c[j]) && c[j] >= 0;
                        else
                            ok = ok && c[j] == 0;
                    }
                    covered += ok;
                }
                CHECK(covered == cq_eval(sr, pq, p));
            }
    }
}

TEST_CASE("signed domain for x^2 - x - 1")
{
    auto f = golden();
    UnitSystem u{{f.gen() + f.one()}};
    std::vector<FieldElem> w{f.one(), f.gen()};
    SignedDomain d = signed_fundamental_domain(u, w);
    REQUIRE(d.pieces.size() == 1);
    CHECK(d.regulator_sign == -1);
    CHECK(d.sign_det_J == 1);
    CHECK(d.pieces[0].coeff == 1);
    CHECK(orbit_sum(d, f.from_rational(3) + f.gen()).total == 1);

    std::mt19937_64 rng(59);
    // bases of both orientations, and one where w_1 is not totally positive
    std::vector<std::vector<FieldElem>> bases{
        w, {f.gen(), f.one()}, {f.from_rational(3) + f.gen(), f.one()}, {f.gen() - f.from_rational(2), f.gen()}};
    for (const auto& b : bases) {
        SignedDomain db = signed_fundamental_domain(u, b);
        for (int t = 0; t < 40; ++t)
            CHECK(orbit_sum(db, random_totally_positive(f, rng)).total == 1);
    }
}

TEST_CASE("signed domain for the cubic field of conductor 7")
{
    TotallyRealField f(IntVector{-1, -2, 1, 1});
    FieldElem t = f.gen();
    UnitSystem u{{t * t, (f.one() + t) * (f.one() + t)}};
    std::mt19937_64 rng(61);
    for (const auto& b : std::vector<std::vector<FieldElem>>{{f.one(), t, t * t}, {t, f.one(), t * t + t}}) {
        SignedDomain d = signed_fundamental_domain(u, b);
        CHECK(d.pieces.size() == 2);
        for (int k = 0; k < 15; ++k)
            CHECK(orbit_sum(d, random_totally_positive(f, rng)).total == 1);
    }
}
