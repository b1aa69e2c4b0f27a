#include "icis/order.hpp"

#include "icis/error.hpp"

#include <algorithm>

namespace icis {

namespace {

using Kind = MonomialOrder::Kind;

std::uint64_t degree_on(const Monomial& m, const std::vector<std::size_t>& vars) {
    std::uint64_t d = 0;
    for (auto v : vars) d += m[v];
    return d;
}

// Reverse lexicographic tie-break: the smaller exponent in the last differing
// variable wins.
int revlex_on(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& vars) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
    }
    return 0;
}

int compare_on(Kind kind, const Monomial& a, const Monomial& b, const std::vector<std::size_t>& vars) {
    switch (kind) {
    case Kind::Lex:
        for (auto v : vars) {
            if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        }
        return 0;
    case Kind::DegRevLex: {
        const auto da = degree_on(a, vars), db = degree_on(b, vars);
        if (da != db) return da > db ? 1 : -1;
        return revlex_on(a, b, vars);
    }
    case Kind::NegDegRevLex: {
        const auto da = degree_on(a, vars), db = degree_on(b, vars);
        if (da != db) return da < db ? 1 : -1;
        return revlex_on(a, b, vars);
    }
    case Kind::Block:
        break;
    }
    throw Error(ErrorCode::InvalidInput, "nested block orders are not supported");
}

const char* kind_name(Kind k) {
    switch (k) {
    case Kind::Lex: return "lex";
    case Kind::DegRevLex: return "degrevlex";
    case Kind::NegDegRevLex: return "negdegrevlex";
    case Kind::Block: return "block";
    }
    return "?";
}

}  // namespace

MonomialOrder MonomialOrder::block(std::vector<std::size_t> first_block, std::size_t variables,
                                   Kind first_kind, Kind rest_kind) {
    if (first_kind == Kind::Block || rest_kind == Kind::Block) {
        throw Error(ErrorCode::InvalidInput, "block orders take simple inner orders");
    }
    std::sort(first_block.begin(), first_block.end());
    first_block.erase(std::unique(first_block.begin(), first_block.end()), first_block.end());
    MonomialOrder order(Kind::Block);
    order.first_kind_ = first_kind;
    order.rest_kind_ = rest_kind;
    for (auto v : first_block) {
        if (v >= variables) throw Error(ErrorCode::InvalidInput, "block variable index out of range");
    }
    for (std::size_t i = 0; i < variables; ++i) {
        if (!std::binary_search(first_block.begin(), first_block.end(), i)) order.rest_.push_back(i);
    }
    order.first_ = std::move(first_block);
    return order;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind_ != Kind::Block) {
        switch (kind_) {
        case Kind::DegRevLex: return compare_degrevlex(a, b);
        case Kind::NegDegRevLex: {
            const auto da = a.degree(), db = b.degree();
            if (da != db) return da < db ? 1 : -1;
            return compare_degrevlex(a, b);  // equal degrees: pure revlex tie-break
        }
        default: break;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
    if (const int c = compare_on(first_kind_, a, b, first_)) return c;
    return compare_on(rest_kind_, a, b, rest_);
}

bool MonomialOrder::is_global() const {
    if (kind_ == Kind::Block) return first_kind_ != Kind::NegDegRevLex && rest_kind_ != Kind::NegDegRevLex;
    return kind_ != Kind::NegDegRevLex;
}

bool MonomialOrder::is_local() const {
    if (kind_ == Kind::Block) return first_kind_ == Kind::NegDegRevLex && rest_kind_ == Kind::NegDegRevLex;
    return kind_ == Kind::NegDegRevLex;
}

std::string MonomialOrder::describe() const {
    if (kind_ != Kind::Block) return kind_name(kind_);
    std::string s = "block(";
    s += kind_name(first_kind_);
    s += "[";
    for (std::size_t i = 0; i < first_.size(); ++i) s += (i ? "," : "") + std::to_string(first_[i]);
    s += "];";
    s += kind_name(rest_kind_);
    s += ")";
    return s;
}

}  // namespace icis
