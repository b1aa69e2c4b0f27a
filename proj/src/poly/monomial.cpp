#include "icis/monomial.hpp"

#include "icis/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace icis {

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!is_identifier(n)) throw Error(ErrorCode::InvalidInput, "invalid variable name '" + n + "'");
        if (!seen.insert(n).second) throw Error(ErrorCode::InvalidInput, "duplicate variable '" + n + "'");
    }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const Ring>(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

std::string fresh_variable_name(const Ring& ring, std::string_view stem) {
    std::string candidate(stem);
    for (int k = 0; ring.contains(candidate); ++k) candidate = std::string(stem) + std::to_string(k);
    return candidate;
}

Monomial Monomial::variable(std::size_t variables, std::size_t index, Exponent power) {
    Monomial m(variables);
    m.exponents_.at(index) = power;
    return m;
}

std::uint64_t Monomial::degree() const {
    return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] > other.exponents_[i]) return false;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial q(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i) q.exponents_[i] = other.exponents_[i] - exponents_[i];
    return q;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i) r.exponents_[i] = exponents_[i] + other.exponents_[i];
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) return false;
    }
    return true;
}

int compare_degrevlex(const Monomial& a, const Monomial& b) {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace icis
