#pragma once

#include "hk/numeric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hk {

using Expo = std::vector<int>;

struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;  // higher total degree first
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

inline bool coeff_is_zero(const Rat& x) { return x == 0; }

// Sparse multivariate polynomial with exact coefficients, canonical graded-lex
// term order. K must provide +, -, *, == and coeff_is_zero(K).
template <class K>
struct MultiPoly {
    int nvars = 0;
    std::map<Expo, K, GrlexLess> terms;

    MultiPoly() = default;
    explicit MultiPoly(int n) : nvars(n) {}

    static MultiPoly monomial(int n, const Expo& e, K c) {
        MultiPoly p(n);
        if (!coeff_is_zero(c)) p.terms.emplace(e, std::move(c));
        return p;
    }
    static MultiPoly variable(int n, int i, K one) {
        Expo e(n, 0);
        e[i] = 1;
        return monomial(n, e, std::move(one));
    }
    static MultiPoly constant(int n, K c) { return monomial(n, Expo(n, 0), std::move(c)); }

    bool is_zero() const { return terms.empty(); }
    int size() const { return int(terms.size()); }
    int total_degree() const {
        int d = -1;
        for (auto& [e, c] : terms)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    void add_term(const Expo& e, const K& c) {
        if (coeff_is_zero(c)) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms.erase(it);
        }
    }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (auto& [e, c] : o.terms) r.add_term(e, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (auto& [e, c] : o.terms) r.add_term(e, K(0) - c);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r(nvars);
        for (auto& [e1, c1] : terms)
            for (auto& [e2, c2] : o.terms) {
                Expo e(nvars);
                for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    MultiPoly scaled(const K& c) const {
        MultiPoly r(nvars);
        for (auto& [e, v] : terms) r.add_term(e, v * c);
        return r;
    }
    bool operator==(const MultiPoly& o) const { return nvars == o.nvars && terms == o.terms; }

    MultiPoly pow(int n) const {
        MultiPoly r = constant(nvars, K(1));
        MultiPoly b = *this;
        for (; n > 0; --n) r = r * b;
        return r;
    }

    // substitute variable i by subst[i]; all subst share a variable count
    MultiPoly compose(const std::vector<MultiPoly>& subst) const {
        if (int(subst.size()) != nvars)
            throw std::invalid_argument("compose: arity mismatch");
        int m = subst.empty() ? 0 : subst[0].nvars;
        MultiPoly out(m);
        for (auto& [e, c] : terms) {
            MultiPoly t = constant(m, c);
            for (int i = 0; i < nvars; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * subst[i];
            out = out + t;
        }
        return out;
    }

    K eval(const std::vector<K>& pt) const {
        if (int(pt.size()) != nvars) throw std::invalid_argument("eval: arity mismatch");
        K acc = K(0);
        for (auto& [e, c] : terms) {
            K v = c;
            for (int i = 0; i < nvars; ++i)
                for (int k = 0; k < e[i]; ++k) v = v * pt[i];
            acc = acc + v;
        }
        return acc;
    }

    MultiPoly derivative(int var) const {
        MultiPoly r(nvars);
        for (auto& [e, c] : terms) {
            if (e[var] == 0) continue;
            Expo e2 = e;
            e2[var] -= 1;
            r.add_term(e2, c * K(e[var]));
        }
        return r;
    }
};

// division by a single divisor under the graded-lex order; returns
// (quotient, remainder) with p = q * d + r and no r-term divisible by lead(d).
template <class K>
std::pair<MultiPoly<K>, MultiPoly<K>> poly_divmod(MultiPoly<K> p, const MultiPoly<K>& d) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const auto& lead = *d.terms.begin();
    MultiPoly<K> q(p.nvars), r(p.nvars);
    while (!p.is_zero()) {
        auto it = p.terms.begin();
        bool divisible = true;
        Expo e(p.nvars);
        for (int i = 0; i < p.nvars; ++i) {
            e[i] = it->first[i] - lead.first[i];
            if (e[i] < 0) divisible = false;
        }
        if (!divisible) {
            r.add_term(it->first, it->second);
            p.terms.erase(it);
            continue;
        }
        K c = it->second / lead.second;
        q.add_term(e, c);
        MultiPoly<K> t = MultiPoly<K>::monomial(p.nvars, e, c);
        p = p - t * d;
    }
    return {q, r};
}

// p / d when the division is exact; nullopt otherwise
template <class K>
std::optional<MultiPoly<K>> poly_divide_exact(const MultiPoly<K>& p, const MultiPoly<K>& d) {
    auto [q, r] = poly_divmod(p, d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

MultiPoly<Rat> parse_poly(const std::string& text);
MultiPoly<Rat> load_poly_file(const std::string& path);
std::string poly_to_data(const MultiPoly<Rat>& p);

}  // namespace hk
