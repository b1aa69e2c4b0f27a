#include "icis/polynomial.hpp"

#include "icis/error.hpp"

#include <algorithm>
#include <sstream>

namespace icis {

namespace {

// Canonical storage order: descending degrevlex.
bool canonical_before(const Monomial& a, const Monomial& b) { return compare_degrevlex(a, b) > 0; }

std::vector<Term> merge_sub(const std::vector<Term>& a, const std::vector<Term>& b, const Rational& scale,
                            const Monomial* shift) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Monomial shifted;
    auto b_mono = [&](std::size_t k) -> const Monomial& {
        if (!shift) return b[k].monomial;
        shifted = b[k].monomial * *shift;
        return shifted;
    };
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        const Monomial& mb = b_mono(j);
        if (i == a.size()) {
            out.push_back(Term{mb, -scale * b[j].coefficient});
            ++j;
            continue;
        }
        const int c = compare_degrevlex(a[i].monomial, mb);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(Term{mb, -scale * b[j].coefficient});
            ++j;
        } else {
            Rational coeff = a[i].coefficient - scale * b[j].coefficient;
            if (coeff != 0) out.push_back(Term{mb, std::move(coeff)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Rational& value) {
    Polynomial p(ring);
    if (value != 0) p.terms_.push_back(Term{Monomial(ring->size()), value});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
    const auto idx = ring->index_of(name);
    if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
    return variable(ring, *idx);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    const auto n = ring->size();
    return term(std::move(ring), Monomial::variable(n, index), 1);
}

Polynomial Polynomial::term(RingPtr ring, Monomial monomial, const Rational& coefficient) {
    if (monomial.size() != ring->size()) throw Error(ErrorCode::RingMismatch, "monomial length differs from ring size");
    Polynomial p(ring);
    if (coefficient != 0) p.terms_.push_back(Term{std::move(monomial), coefficient});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    for (const auto& t : terms) {
        if (t.monomial.size() != ring->size()) throw Error(ErrorCode::RingMismatch, "monomial length differs from ring size");
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return canonical_before(a.monomial, b.monomial); });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().monomial == t.monomial) {
            out.back().coefficient += t.coefficient;
        } else {
            if (!out.empty() && out.back().coefficient == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coefficient == 0) out.pop_back();
    return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

std::int64_t Polynomial::total_degree() const {
    return terms_.empty() ? -1 : static_cast<std::int64_t>(terms_.front().monomial.degree());
}

std::int64_t Polynomial::degree_in(std::size_t variable) const {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max<std::int64_t>(d, t.monomial[variable]);
    return d;
}

bool Polynomial::involves(std::size_t variable) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial[variable] != 0; });
}

Rational Polynomial::coefficient(const Monomial& monomial) const {
    for (const auto& t : terms_) {
        if (t.monomial == monomial) return t.coefficient;
    }
    return 0;
}

Rational Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
    return 0;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw Error(ErrorCode::InvalidInput, "leading term of the zero polynomial");
    if (order.kind() == MonomialOrder::Kind::DegRevLex) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_) {
        if (order.compare(t.monomial, best->monomial) > 0) best = &t;
    }
    return *best;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_)) throw Error(ErrorCode::RingMismatch, "polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_ring(other);
    terms_ = merge_sub(terms_, other.terms_, -1, nullptr);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_ring(other);
    terms_ = merge_sub(terms_, other.terms_, 1, nullptr);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    // Accumulate row by row; each row is a shifted copy of the longer factor.
    const Polynomial& longer = a.terms_.size() >= b.terms_.size() ? a : b;
    const Polynomial& shorter = &longer == &a ? b : a;
    Polynomial acc(a.ring_);
    for (const auto& t : shorter.terms_) acc = acc.minus_scaled(-t.coefficient, t.monomial, longer);
    return acc;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coefficient *= scalar;
    return *this;
}

Polynomial Polynomial::minus_scaled(const Rational& scale, const Monomial& shift, const Polynomial& g) const {
    require_same_ring(g);
    return Polynomial(ring_, merge_sub(terms_, g.terms_, scale, &shift));
}

Polynomial Polynomial::times_monomial(const Monomial& shift) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.monomial = t.monomial * shift;
    return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (exponent) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent) base *= base;
    }
    return result;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    Polynomial r = *this;
    const Rational lc = terms_.front().coefficient;
    for (auto& t : r.terms_) t.coefficient /= lc;
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != ring_->size()) throw Error(ErrorCode::InvalidInput, "evaluation point has wrong dimension");
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational v = t.coefficient;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (Exponent e = 0; e < t.monomial[i]; ++e) v *= point[i];
        }
        sum += v;
    }
    return sum;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coefficient != b.terms_[i].coefficient) {
            return false;
        }
    }
    return true;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coefficient;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        const bool one = t.monomial.is_one();
        if (c != 1 || one) {
            os << c.get_str();
            if (!one) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < t.monomial.size(); ++i) {
            if (t.monomial[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << p.ring()->name(i);
            if (t.monomial[i] > 1) os << "^" << t.monomial[i];
        }
    }
    return os.str();
}

Polynomial partial_derivative(const Polynomial& f, std::string_view variable) {
    const auto idx = f.ring()->index_of(variable);
    if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(variable) + "'");
    return partial_derivative(f, *idx);
}

Polynomial partial_derivative(const Polynomial& f, std::size_t variable) {
    if (variable >= f.ring()->size()) throw Error(ErrorCode::UnknownVariable, "variable index out of range");
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        const Exponent e = t.monomial[variable];
        if (e == 0) continue;
        Monomial m = t.monomial;
        m[variable] = e - 1;
        out.push_back(Term{std::move(m), t.coefficient * e});
    }
    return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& bindings) {
    if (bindings.empty()) return f;
    const RingPtr& target = bindings.begin()->second.ring();
    return substitute(f, bindings, target);
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& bindings,
                      const RingPtr& target) {
    const Ring& source = *f.ring();
    std::vector<std::optional<Polynomial>> images(source.size());
    for (const auto& [name, image] : bindings) {
        const auto idx = source.index_of(name);
        if (!idx) throw Error(ErrorCode::UnknownVariable, "substitution binds unknown variable '" + name + "'");
        if (!same_ring(image.ring(), target)) {
            throw Error(ErrorCode::RingMismatch, "substitution images live in different rings");
        }
        images[*idx] = image;
    }
    for (std::size_t i = 0; i < source.size(); ++i) {
        if (images[i] || !f.involves(i)) continue;
        const auto idx = target->index_of(source.name(i));
        if (!idx) {
            throw Error(ErrorCode::RingMismatch, "variable '" + source.name(i) + "' has no image in the target ring");
        }
        images[i] = Polynomial::variable(target, *idx);
    }
    // Powers of each image are cached per variable since they recur across terms.
    std::vector<std::vector<Polynomial>> powers(source.size());
    auto power_of = [&](std::size_t var, Exponent e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * *images[var]);
        return cache[e];
    };
    Polynomial result(target);
    for (const auto& t : f.terms()) {
        Polynomial term = Polynomial::constant(target, t.coefficient);
        for (std::size_t i = 0; i < source.size(); ++i) {
            if (t.monomial[i] != 0) term *= power_of(i, t.monomial[i]);
        }
        result += term;
    }
    return result;
}

Polynomial change_ring(const Polynomial& f, const RingPtr& target) {
    if (same_ring(f.ring(), target)) return Polynomial::from_terms(target, f.terms());
    const Ring& source = *f.ring();
    std::vector<std::optional<std::size_t>> map(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) map[i] = target->index_of(source.name(i));
    std::vector<Term> out;
    out.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        Monomial m(target->size());
        for (std::size_t i = 0; i < source.size(); ++i) {
            if (t.monomial[i] == 0) continue;
            if (!map[i]) {
                throw Error(ErrorCode::RingMismatch, "variable '" + source.name(i) + "' is absent from the target ring");
            }
            m[*map[i]] = t.monomial[i];
        }
        out.push_back(Term{std::move(m), t.coefficient});
    }
    return Polynomial::from_terms(target, std::move(out));
}

ExtendedCount order_of_vanishing(const Polynomial& f) {
    std::optional<std::size_t> var;
    for (std::size_t i = 0; i < f.ring()->size(); ++i) {
        if (!f.involves(i)) continue;
        if (var) throw Error(ErrorCode::InvalidInput, "order of vanishing needs a univariate polynomial");
        var = i;
    }
    if (f.is_zero()) return ExtendedCount::infinity();
    // The lowest-degree term sits at the back of the canonical order.
    return ExtendedCount(f.terms().back().monomial.degree());
}

Polynomial homogeneous_component(const Polynomial& f, std::uint64_t degree) {
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (t.monomial.degree() == degree) out.push_back(t);
    }
    return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial lowest_degree_form(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "lowest degree form of the zero polynomial");
    return homogeneous_component(f, f.terms().back().monomial.degree());
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "division by the zero polynomial");
    if (!same_ring(a.ring(), b.ring())) throw Error(ErrorCode::RingMismatch, "division across rings");
    const Term& lead = b.terms().front();
    Polynomial quotient(a.ring());
    Polynomial rest = a;
    while (!rest.is_zero()) {
        const Term& top = rest.terms().front();
        if (!lead.monomial.divides(top.monomial)) {
            throw Error(ErrorCode::InvalidInput, "polynomial division is not exact");
        }
        const Monomial shift = lead.monomial.quotient_of(top.monomial);
        const Rational scale = top.coefficient / lead.coefficient;
        quotient += Polynomial::term(a.ring(), shift, scale);
        rest = rest.minus_scaled(scale, shift, b);
    }
    return quotient;
}

}  // namespace icis
