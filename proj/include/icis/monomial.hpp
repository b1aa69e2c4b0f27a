#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace icis {

/// Ordered list of variable names. Shared between polynomials via RingPtr.
class Ring {
public:
    explicit Ring(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t index) const { return names_.at(index); }
    std::optional<std::size_t> index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);
bool same_ring(const RingPtr& a, const RingPtr& b);
/// Appends a variable that does not collide with any existing name.
std::string fresh_variable_name(const Ring& ring, std::string_view stem);

using Exponent = std::uint32_t;

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t variables) : exponents_(variables, 0) {}
    explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}

    static Monomial variable(std::size_t variables, std::size_t index, Exponent power = 1);

    std::size_t size() const { return exponents_.size(); }
    Exponent operator[](std::size_t i) const { return exponents_[i]; }
    Exponent& operator[](std::size_t i) { return exponents_[i]; }
    const std::vector<Exponent>& exponents() const { return exponents_; }

    std::uint64_t degree() const;
    bool is_one() const;
    bool divides(const Monomial& other) const;
    /// Precondition: divides(other). Returns other / *this.
    Monomial quotient_of(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exponents_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic comparison: -1, 0 or 1.
int compare_degrevlex(const Monomial& a, const Monomial& b);

}  // namespace icis
