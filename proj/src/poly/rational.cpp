#include "icis/rational.hpp"

#include "icis/error.hpp"

#include <cctype>

namespace icis {

std::string to_string(const Rational& value) { return value.get_str(); }

namespace {

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-') {
        throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    Integer d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    Rational r(Integer(n, 10), d);
    r.canonicalize();
    return r;
}

std::string ExtendedCount::to_string() const {
    return finite_ ? std::to_string(value_) : std::string("inf");
}

}  // namespace icis
