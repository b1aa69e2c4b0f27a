#pragma once

#include "icis/monomial.hpp"

#include <string>
#include <vector>

namespace icis {

/// Monomial orderings used by the engines.
///
/// Lex and DegRevLex are global (1 is the smallest monomial). NegDegRevLex is
/// the local degree ordering (1 is the largest monomial), used for every
/// computation in a local ring at the origin. Block compares the exponents of
/// a chosen variable block first, then the remaining variables; it is global
/// when both inner orders are global, which is how elimination is done.
class MonomialOrder {
public:
    enum class Kind { Lex, DegRevLex, NegDegRevLex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
    static MonomialOrder negdegrevlex() { return MonomialOrder(Kind::NegDegRevLex); }
    /// `first_block` holds variable indices compared first with `first_kind`;
    /// the complement (in index order) is compared with `rest_kind`.
    static MonomialOrder block(std::vector<std::size_t> first_block, std::size_t variables,
                               Kind first_kind = Kind::DegRevLex,
                               Kind rest_kind = Kind::DegRevLex);

    Kind kind() const { return kind_; }
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool is_global() const;
    bool is_local() const;
    std::string describe() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    explicit MonomialOrder(Kind kind) : kind_(kind) {}

    Kind kind_;
    Kind first_kind_ = Kind::DegRevLex;
    Kind rest_kind_ = Kind::DegRevLex;
    std::vector<std::size_t> first_;
    std::vector<std::size_t> rest_;
};

}  // namespace icis
