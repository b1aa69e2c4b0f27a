#pragma once

// Independent reference computations used to derive and freeze expected
// values. They rely only on polynomial arithmetic and dense linear algebra,
// never on the standard-basis engine.

#include "icis/polynomial.hpp"

#include <map>
#include <optional>
#include <random>
#include <vector>

namespace icis_test {

using icis::Exponent;
using icis::Monomial;
using icis::Polynomial;
using icis::Rational;

/// All exponent vectors in n variables with total degree < bound.
inline std::vector<Monomial> monomials_below(std::size_t n, std::uint64_t bound) {
    std::vector<Monomial> out;
    std::vector<Exponent> e(n, 0);
    const auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
        if (i == n) {
            out.emplace_back(e);
            return;
        }
        for (std::uint64_t a = 0; a < left; ++a) {
            e[i] = static_cast<Exponent>(a);
            self(self, i + 1, left - a);
        }
        e[i] = 0;
    };
    if (bound > 0) rec(rec, 0, bound);
    return out;
}

/// Monomials in the box prod [0, box_i) outside the monomial ideal.
inline std::uint64_t brute_force_staircase(const std::vector<Monomial>& generators, const std::vector<Exponent>& box) {
    std::uint64_t count = 0;
    std::vector<Exponent> e(box.size(), 0);
    const auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == box.size()) {
            const Monomial m(e);
            bool inside = false;
            for (const auto& g : generators) {
                bool divides = true;
                for (std::size_t k = 0; k < box.size(); ++k) divides = divides && g[k] <= m[k];
                inside = inside || divides;
            }
            if (!inside) ++count;
            return;
        }
        for (Exponent a = 0; a < box[i]; ++a) {
            e[i] = a;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return count;
}

/// Rank of a set of sparse rows over Q.
inline std::size_t rank_of(std::vector<std::map<std::size_t, Rational>> rows) {
    std::size_t rank = 0;
    std::map<std::size_t, std::map<std::size_t, Rational>> pivots;  // pivot column -> row
    for (auto& row : rows) {
        while (!row.empty()) {
            const std::size_t lead = row.begin()->first;
            const auto it = pivots.find(lead);
            if (it == pivots.end()) {
                const Rational inv = 1 / row.begin()->second;
                for (auto& [c, v] : row) v *= inv;
                pivots.emplace(lead, std::move(row));
                ++rank;
                break;
            }
            const Rational factor = row.begin()->second;
            for (const auto& [c, v] : it->second) {
                Rational& slot = row[c];
                slot -= factor * v;
                if (slot == 0) row.erase(c);
            }
        }
    }
    return rank;
}

/// dim Q[x] / (I + m^bound) by linear algebra on monomials of degree < bound.
inline std::uint64_t truncated_colength(const std::vector<Polynomial>& gens, std::uint64_t bound) {
    const std::size_t n = gens.front().ring()->size();
    const std::vector<Monomial> basis = monomials_below(n, bound);
    std::map<std::vector<Exponent>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].exponents(), i);
    std::vector<std::map<std::size_t, Rational>> rows;
    for (const auto& g : gens) {
        for (const auto& m : basis) {
            std::map<std::size_t, Rational> row;
            for (const auto& t : g.terms()) {
                const Monomial prod = t.monomial * m;
                if (prod.degree() < bound) row[index.at(prod.exponents())] += t.coefficient;
            }
            for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
            if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    return basis.size() - rank_of(std::move(rows));
}

/// Local colength at the origin: truncated colengths grow with the bound and
/// become constant exactly once m^bound lies in the localized ideal.
inline std::optional<std::uint64_t> local_colength_oracle(const std::vector<Polynomial>& gens,
                                                          std::uint64_t max_bound = 24) {
    std::uint64_t previous = truncated_colength(gens, 1);
    for (std::uint64_t b = 2; b <= max_bound; ++b) {
        const std::uint64_t current = truncated_colength(gens, b);
        if (current == previous) return current;
        previous = current;
    }
    return std::nullopt;
}

/// Small seeded generators for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rational(std::int64_t span = 5) {
        const std::int64_t den = integer(1, 4);
        Rational r(integer(-span, span), den);
        r.canonicalize();
        return r;
    }
    Rational nonzero_rational(std::int64_t span = 5) {
        Rational r;
        do r = rational(span); while (r == 0);
        return r;
    }
    Monomial monomial(std::size_t n, Exponent max_exp) {
        std::vector<Exponent> e(n);
        for (auto& a : e) a = static_cast<Exponent>(integer(0, max_exp));
        return Monomial(e);
    }
    Polynomial polynomial(const icis::RingPtr& ring, std::size_t terms, Exponent max_exp) {
        Polynomial p(ring);
        for (std::size_t i = 0; i < terms; ++i) {
            p += Polynomial::term(ring, monomial(ring->size(), max_exp), rational());
        }
        return p;
    }
    /// Sum of terms of total degree in [lo, hi].
    Polynomial polynomial_in_degrees(const icis::RingPtr& ring, std::size_t terms, std::uint64_t lo, std::uint64_t hi) {
        Polynomial p(ring);
        for (std::size_t i = 0; i < terms; ++i) {
            Monomial m;
            do m = monomial(ring->size(), static_cast<Exponent>(hi)); while (m.degree() < lo || m.degree() > hi);
            p += Polynomial::term(ring, m, rational());
        }
        return p;
    }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace icis_test
