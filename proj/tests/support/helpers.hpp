#pragma once

#include "icis/problem.hpp"

#include <doctest.h>

#include <string>
#include <vector>

namespace icis_test {

inline icis::Polynomial P(const icis::RingPtr& ring, const std::string& text) {
    return icis::parse_polynomial(text, ring);
}

inline std::vector<icis::Polynomial> Ps(const icis::RingPtr& ring, const std::vector<std::string>& texts) {
    std::vector<icis::Polynomial> out;
    for (const auto& t : texts) out.push_back(P(ring, t));
    return out;
}

inline icis::ErrorCode code_of(const auto& fn) {
    try {
        fn();
    } catch (const icis::Error& e) {
        return e.code();
    }
    throw std::logic_error("expected an icis::Error");
}

}  // namespace icis_test

namespace doctest {
template <>
struct StringMaker<icis::Polynomial> {
    static String convert(const icis::Polynomial& p) { return icis::to_string(p).c_str(); }
};
template <>
struct StringMaker<icis::Rational> {
    static String convert(const icis::Rational& r) { return icis::to_string(r).c_str(); }
};
template <>
struct StringMaker<icis::ExtendedCount> {
    static String convert(const icis::ExtendedCount& c) { return c.to_string().c_str(); }
};
}  // namespace doctest
