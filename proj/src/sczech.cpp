#include "shintani/sczech.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "shintani/error.hpp"

namespace shintani {

namespace {

void check_word(const std::vector<int>& w, std::size_t n)
{
    for (int x : w)
        if (x < 1 || std::size_t(x) > n)
            fail(Errc::InvalidInput, "word entry out of range 1.." + std::to_string(n));
}

// h_i(w) for 1 <= i <= n-1, w in S^{n-1}
SymbolSum h_component(const std::vector<int>& w, std::size_t i)
{
    const std::size_t n = w.size() + 1;
    if (w[i - 1] == 1)
        return {};
    Symbol s;
    for (std::size_t j = 1; j < i; ++j)
        s.emplace_back(int(j), w[j - 1]);
    s.emplace_back(int(i), 1);
    s.emplace_back(int(i), w[i - 1]);
    for (std::size_t j = i + 1; j <= n - 1; ++j)
        s.emplace_back(int(j), 1);
    return SymbolSum(s);
}

}  // namespace

Rational f_eval(const std::vector<RatVector>& taus, const RatVector& x)
{
    const std::size_t n = taus.size();
    Rational den = 1;
    for (const auto& t : taus) {
        if (t.size() != n || x.size() != n)
            fail(Errc::InvalidInput, "f needs n vectors of length n");
        Rational p = 0;
        for (std::size_t i = 0; i < n; ++i)
            p += x[i] * t[i];
        if (p == 0)
            fail(Errc::PoleHit, "x is orthogonal to some tau_i");
        den *= p;
    }
    return det(RatMatrix::from_columns(taus)) / den;
}

void SymbolSum::add(const Symbol& s, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(s, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SymbolSum& SymbolSum::operator+=(const SymbolSum& o)
{
    for (const auto& [s, c] : o.terms_)
        add(s, c);
    return *this;
}

SymbolSum& SymbolSum::operator-=(const SymbolSum& o)
{
    for (const auto& [s, c] : o.terms_)
        add(s, -c);
    return *this;
}

SymbolSum& SymbolSum::operator*=(const Integer& c)
{
    if (c == 0)
        terms_.clear();
    for (auto& [s, x] : terms_)
        x *= c;
    return *this;
}

SymbolSum boundary(const Symbol& s)
{
    SymbolSum out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Symbol t;
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != i)
                t.push_back(s[j]);
        out.add(t, i % 2 ? -1 : 1);
    }
    return out;
}

SymbolSum boundary(const SymbolSum& s)
{
    SymbolSum out;
    for (const auto& [sym, c] : s.terms())
        out += boundary(sym) * c;
    return out;
}

SymbolSum alpha(const std::vector<int>& w)
{
    check_word(w, w.size());
    Symbol s;
    for (std::size_t i = 1; i <= w.size(); ++i)
        s.emplace_back(int(i), 1);
    return SymbolSum(s);
}

SymbolSum beta(const std::vector<int>& w)
{
    check_word(w, w.size());
    Symbol s;
    for (std::size_t i = 1; i <= w.size(); ++i)
        s.emplace_back(int(i), w[i - 1]);
    return SymbolSum(s);
}

SymbolSum h_map(const std::vector<int>& w)
{
    check_word(w, w.size() + 1);
    SymbolSum out;
    for (std::size_t i = 1; i <= w.size(); ++i)
        out += h_component(w, i) * Integer(i % 2 ? -1 : 1);
    return out;
}

SymbolSum dh_map(const std::vector<int>& w)
{
    const std::size_t n = w.size();
    check_word(w, n);
    SymbolSum out;
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<int> rest;
        for (std::size_t j = 1; j <= n; ++j)
            if (j != i)
                rest.push_back(w[j - 1]);
        const SymbolSum h = h_map(rest);
        for (const auto& [sym, c] : h.terms()) {
            Symbol lifted = sym;
            for (auto& [a, b] : lifted)
                if (std::size_t(a) >= i)
                    ++a;
            out.add(lifted, i % 2 ? Integer(-c) : c);
        }
    }
    return out;
}

Membership boundary_image_membership(const SymbolSum& s, const std::vector<SymbolPair>& alphabet)
{
    Membership r;
    if (s.is_zero()) {
        r.member = true;
        return r;
    }
    // Prepending a fixed pair is a contracting homotopy of the tuple complex, so these
    // generators reach every element of Image(boundary) supported on s.
    std::vector<Symbol> gens;
    for (const auto& x : std::set<SymbolPair>(alphabet.begin(), alphabet.end()))
        for (const auto& [t, c] : s.terms()) {
            Symbol g{x};
            g.insert(g.end(), t.begin(), t.end());
            gens.push_back(std::move(g));
        }
    std::map<Symbol, std::size_t> coord;
    std::vector<SymbolSum> images;
    for (const auto& [t, c] : s.terms())
        coord.try_emplace(t, coord.size());
    for (const auto& g : gens) {
        images.push_back(boundary(g));
        for (const auto& [t, c] : images.back().terms())
            coord.try_emplace(t, coord.size());
    }
    auto dense = [&](const SymbolSum& x) {
        IntVector v(coord.size(), Integer(0));
        for (const auto& [t, c] : x.terms())
            v[coord.at(t)] = c;
        return v;
    };
    std::vector<IntVector> rows;
    for (const auto& im : images)
        rows.push_back(dense(im));
    IntVector coef;
    if (gens.empty() || !in_integer_span(dense(s), rows, coef))
        return r;
    r.member = true;
    for (std::size_t i = 0; i < gens.size(); ++i)
        r.witness.add(gens[i], coef[i]);
    return r;
}

namespace {

bool coboundary_holds(const std::vector<int>& w)
{
    const SymbolSum target = beta(w) - alpha(w) - dh_map(w);
    std::set<SymbolPair> seen;
    for (const auto& [t, c] : target.terms())
        seen.insert(t.begin(), t.end());
    Membership m = boundary_image_membership(target, {seen.begin(), seen.end()});
    if (!m.member) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            seen.emplace(int(i + 1), 1);
            seen.emplace(int(i + 1), w[i]);
        }
        m = boundary_image_membership(target, {seen.begin(), seen.end()});
    }
    return m.member && boundary(m.witness) == target;
}

}  // namespace

CoboundaryReport verify_coboundary(std::size_t n, bool parallel)
{
    if (n < 2)
        fail(Errc::InvalidInput, "verify_coboundary needs n >= 2");
    std::vector<std::vector<int>> words;
    std::vector<int> w(n, 1);
    for (;;) {
        words.push_back(w);
        std::size_t i = 0;
        while (i < n && w[i] == int(n))
            w[i++] = 1;
        if (i == n)
            break;
        ++w[i];
    }
    std::vector<char> good(words.size(), 0);
    const std::size_t threads = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    std::vector<std::future<void>> jobs;
    for (std::size_t t = 0; t < threads; ++t)
        jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, [&, t] {
            for (std::size_t i = t; i < words.size(); i += threads)
                good[i] = coboundary_holds(words[i]);
        }));
    for (auto& j : jobs)
        j.get();
    CoboundaryReport rep;
    rep.n = n;
    rep.checked = words.size();
    for (std::size_t i = 0; i < words.size(); ++i)
        if (!good[i])
            rep.failures.push_back(words[i]);
    return rep;
}

HdElement polar_value(const std::vector<RatMatrix>& A, const RatMatrix& m, int trunc)
{
    const std::size_t n = A.size();
    std::vector<RatVector> cols;
    for (const auto& a : A) {
        if (a.rows() != n || a.cols() != n)
            fail(Errc::InvalidInput, "polar cocycle needs n matrices of size n");
        cols.push_back(a.column(0));
    }
    const RatMatrix sigma = RatMatrix::from_columns(cols);
    const Rational d = det(sigma);
    if (d == 0)
        return HdElement::zero(n, trunc);
    std::vector<LinearForm> forms;
    const RatMatrix mt = m.transpose();
    for (const auto& c : cols) {
        LinearForm f{mt * c};
        if (!f.dense())
            fail(Errc::NotDense, "polar form has a zero coefficient");
        forms.push_back(std::move(f));
    }
    return HdElement(MultiSeries::constant(n, trunc, n % 2 ? d : -d), std::move(forms));
}

}  // namespace shintani
