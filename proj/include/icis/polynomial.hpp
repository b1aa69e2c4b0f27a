#pragma once

#include "icis/monomial.hpp"
#include "icis/order.hpp"
#include "icis/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace icis {

struct Term {
    Monomial monomial;
    Rational coefficient;
};

/// Sparse multivariate polynomial over Q.
///
/// Terms are kept sorted descending in degrevlex with nonzero coefficients, so
/// structural equality is mathematical equality.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, const Rational& value);
    static Polynomial variable(RingPtr ring, std::string_view name);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial term(RingPtr ring, Monomial monomial, const Rational& coefficient);
    /// Combines duplicate monomials and drops zero coefficients.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Maximal total degree; -1 for the zero polynomial.
    std::int64_t total_degree() const;
    std::int64_t degree_in(std::size_t variable) const;
    bool involves(std::size_t variable) const;
    Rational coefficient(const Monomial& monomial) const;
    Rational constant_term() const;

    /// Leading term under `order`. Precondition: nonzero.
    const Term& leading_term(const MonomialOrder& order) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    /// *this - scale * shift * g, computed by a single merge.
    Polynomial minus_scaled(const Rational& scale, const Monomial& shift,
                            const Polynomial& g) const;
    Polynomial times_monomial(const Monomial& shift) const;
    Polynomial pow(unsigned exponent) const;
    /// Divides by the degrevlex-leading coefficient. Zero stays zero.
    Polynomial monic() const;

    Rational evaluate(std::span<const Rational> point) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
        : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

    void require_same_ring(const Polynomial& other) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

std::string to_string(const Polynomial& p);

Polynomial partial_derivative(const Polynomial& f, std::string_view variable);
Polynomial partial_derivative(const Polynomial& f, std::size_t variable);

/// Replaces bound variables by their images. Unbound variables map to the
/// same-named variable of the target ring (the common ring of the images, or
/// f's own ring when there are no bindings); a variable that occurs in f but
/// has no image and no namesake in the target is rejected.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& bindings);
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& bindings,
                      const RingPtr& target);
/// Moves f into `target`, matching variables by name.
Polynomial change_ring(const Polynomial& f, const RingPtr& target);

/// Least exponent carrying a nonzero coefficient for a polynomial in at most
/// one variable; infinity for zero.
ExtendedCount order_of_vanishing(const Polynomial& f);

/// Homogeneous component of minimal total degree. Rejects zero.
Polynomial lowest_degree_form(const Polynomial& f);
/// Homogeneous component of the given total degree (possibly zero).
Polynomial homogeneous_component(const Polynomial& f, std::uint64_t degree);

/// Exact quotient a / b; throws Error(InvalidInput) when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

}  // namespace icis
