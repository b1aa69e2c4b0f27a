#include "icis/ideal.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <set>

using namespace icis;
using icis_test::code_of;
using icis_test::Gen;
using icis_test::P;
using icis_test::Ps;

namespace {

const RingPtr& xy() {
    static const RingPtr r = make_ring({"x", "y"});
    return r;
}

const RingPtr& txy() {
    static const RingPtr r = make_ring({"t", "x", "y"});
    return r;
}

IdealPresentation ideal(const RingPtr& ring, const std::vector<std::string>& gens) {
    return IdealPresentation(ring, Ps(ring, gens));
}

bool proportional(const Polynomial& a, const Polynomial& b) { return !a.is_zero() && a.monic() == b.monic(); }

/// Zero-dimensional ideal with prescribed rational points: <u(x)^k, (y - L(x))^m>,
/// where u has the distinct roots xs and L interpolates ys.
struct PointIdeal {
    IdealPresentation ideal;
    std::vector<std::vector<Rational>> points;
    std::uint64_t colength;
};

PointIdeal point_ideal(Gen& g) {
    const std::size_t count = static_cast<std::size_t>(g.integer(1, 3));
    std::set<Rational> roots;
    while (roots.size() < count) roots.insert(g.rational(4));
    const Polynomial x = P(xy(), "x"), y = P(xy(), "y");
    Polynomial u = Polynomial::constant(xy(), 1);
    for (const auto& a : roots) u *= x - Polynomial::constant(xy(), a);
    const Polynomial L = g.polynomial(make_ring({"x", "y"}), 0, 0) + Polynomial::constant(xy(), g.rational()) +
                         x * g.rational() + x.pow(2) * g.rational();
    const unsigned k = static_cast<unsigned>(g.integer(1, 2)), m = static_cast<unsigned>(g.integer(1, 2));
    std::vector<std::vector<Rational>> points;
    for (const auto& a : roots) {
        const std::vector<Rational> at{a, Rational(0)};
        points.push_back({a, L.evaluate(at)});
    }
    return {IdealPresentation(xy(), {u.pow(k), (y - L).pow(m)}), points, count * k * m};
}

}  // namespace

TEST_SUITE("jacobians and minors") {
    TEST_CASE("Jacobian examples") {
        const PolynomialMatrix j = jacobian_matrix(Ps(xy(), {"x^2 - y^3"}), {"x", "y"});
        CHECK(j.rows() == 1u);
        CHECK(j.at(0, 0) == P(xy(), "2x"));
        CHECK(j.at(0, 1) == P(xy(), "-3y^2"));
        const PolynomialMatrix id = jacobian_matrix(Ps(xy(), {"x", "y"}), {"x", "y"});
        CHECK(determinant(id) == P(xy(), "1"));
        CHECK(id.at(0, 1).is_zero());
        const PolynomialMatrix rel = jacobian_matrix(Ps(txy(), {"x + t*y", "x^2 - y^3"}), {"x", "y"});
        CHECK(rel.at(0, 0) == P(txy(), "1"));
        CHECK(rel.at(0, 1) == P(txy(), "t"));
        CHECK(rel.at(1, 0) == P(txy(), "2x"));
        CHECK(rel.at(1, 1) == P(txy(), "-3y^2"));
        CHECK(maximal_minors(rel) == Ps(txy(), {"-3y^2 - 2t*x"}));
        CHECK(code_of([] { jacobian_matrix({}, {"x"}); }) == ErrorCode::InvalidInput);
        CHECK(code_of([] { jacobian_matrix(Ps(xy(), {"x"}), {}); }) == ErrorCode::InvalidInput);
        CHECK(code_of([] { jacobian_matrix(Ps(xy(), {"x"}), {"w"}); }) == ErrorCode::UnknownVariable);
    }

    TEST_CASE("minors of a row and of a tall matrix") {
        PolynomialMatrix row(xy(), 1, 2);
        row.set(0, 0, P(xy(), "x + 1"));
        row.set(0, 1, P(xy(), "y^2"));
        CHECK(maximal_minors(row) == Ps(xy(), {"x + 1", "y^2"}));
        CHECK(maximal_minors(row.transposed()) == Ps(xy(), {"x + 1", "y^2"}));
    }

    TEST_CASE("property: equal rows give zero minors; serial and parallel agree") {
        Gen g(12);
        const RingPtr r = make_ring({"x", "y", "z", "w"});
        for (int trial = 0; trial < 15; ++trial) {
            const std::size_t rows = static_cast<std::size_t>(g.integer(1, 3));
            const std::size_t cols = rows + static_cast<std::size_t>(g.integer(0, 2));
            PolynomialMatrix m(r, rows, cols);
            for (std::size_t i = 0; i < rows; ++i) {
                for (std::size_t j = 0; j < cols; ++j) m.set(i, j, g.polynomial(r, 2, 2));
            }
            CHECK(maximal_minors(m) == maximal_minors_serial(m));
            if (rows >= 2) {
                for (std::size_t j = 0; j < cols; ++j) m.set(1, j, m.at(0, j));
                for (const auto& minor : maximal_minors(m)) CHECK(minor.is_zero());
            }
        }
    }

    TEST_CASE("relative Jacobian ideal") {
        CHECK(relative_jacobian_ideal(P(txy(), "x + t*y"), Ps(txy(), {"x^2 - y^3"}), "t").generators() ==
              Ps(txy(), {"-3y^2 - 2t*x"}));
        CHECK(relative_jacobian_ideal(P(txy(), "x"), Ps(txy(), {"y"}), "t").generators() == Ps(txy(), {"1"}));
        // F free of x, y: only the phi row contributes, and every minor vanishes
        const IdealPresentation deg = relative_jacobian_ideal(P(txy(), "t^2"), Ps(txy(), {"x^2 - y^3"}), "t");
        for (const auto& g : deg.generators()) CHECK(g.is_zero());
        CHECK(code_of([] { relative_jacobian_ideal(P(txy(), "x"), Ps(txy(), {"y"}), "t", {"t", "x"}); }) ==
              ErrorCode::InvalidInput);
    }

    TEST_CASE("property: specialization commutes with minors") {
        Gen g(77);
        for (int trial = 0; trial < 20; ++trial) {
            const Polynomial F = g.polynomial(txy(), 4, 3);
            const std::vector<Polynomial> phi{g.polynomial(txy(), 3, 3)};
            const Rational t0 = g.rational();
            const std::map<std::string, Polynomial> at{{"t", Polynomial::constant(txy(), t0)}};
            std::vector<Polynomial> specialized;
            const IdealPresentation before = relative_jacobian_ideal(F, phi, "t");
            for (const auto& m : before.generators()) specialized.push_back(substitute(m, at, txy()));
            const IdealPresentation after =
                relative_jacobian_ideal(substitute(F, at, txy()), {substitute(phi[0], at, txy())}, "t");
            CHECK(after.generators() == specialized);
        }
    }
}

TEST_SUITE("elimination and saturation") {
    TEST_CASE("elimination examples") {
        const RingPtr r = make_ring({"x", "y", "u", "v"});
        const IdealPresentation e = elimination_ideal(ideal(r, {"u - x", "v - y^3 - x*y", "3y^2 + x"}), {"u", "v"});
        REQUIRE(e.generators().size() == 1u);
        CHECK(proportional(e.generators().front(), P(r, "4u^3 + 27v^2")));
        CHECK(elimination_ideal(ideal(xy(), {"x - y"}), {"x"}).is_zero_ideal());
        const IdealPresentation sq = elimination_ideal(ideal(xy(), {"x^2", "y - x"}), {"y"});
        CHECK(sq.generators() == Ps(xy(), {"y^2"}));
    }

    TEST_CASE("property: eliminants lie in the ideal and avoid eliminated variables") {
        Gen g(41);
        const RingPtr r = make_ring({"x", "y", "z"});
        for (int trial = 0; trial < 15; ++trial) {
            const IdealPresentation I(r, {g.polynomial(r, 3, 2), g.polynomial(r, 3, 2)});
            const StandardBasis& b = I.basis(MonomialOrder::degrevlex());
            const IdealPresentation e_ideal = elimination_ideal(I, {"y", "z"});
            for (const auto& e : e_ideal.generators()) {
                CHECK_FALSE(e.involves(0));
                CHECK(ideal_contains(b, e));
            }
        }
    }

    TEST_CASE("saturation") {
        // <x*y, x^2> : x^inf = <1>;  <x*y> : x^inf = <y>
        CHECK(saturation(ideal(xy(), {"x*y", "x^2"}), P(xy(), "x")).basis(MonomialOrder::degrevlex()).is_unit_ideal());
        CHECK(saturation(ideal(xy(), {"x*y"}), P(xy(), "x")).basis(MonomialOrder::degrevlex()).generators() ==
              Ps(xy(), {"y"}));
        const IdealPresentation s = saturation(ideal(xy(), {"x^3*(y - 1)", "y^2 - y"}), P(xy(), "x"));
        CHECK(s.basis(MonomialOrder::degrevlex()).generators() == Ps(xy(), {"y - 1"}));
    }
}

TEST_SUITE("radicals") {
    TEST_CASE("radical membership examples") {
        const IdealPresentation J = ideal(txy(), {"x^2 - y^3", "3y^2 + 2t*x"});
        CHECK_FALSE(radical_membership(P(txy(), "y"), J));
        CHECK(radical_membership(P(txy(), "x^2 - y^3"), J));
        CHECK(radical_membership(P(xy(), "x"), ideal(xy(), {"x^2"})));
        CHECK_FALSE(radical_membership(P(xy(), "1"), ideal(xy(), {"x^2"})));
    }

    TEST_CASE("the witness curve lies on the critical locus") {
        const RingPtr s = make_ring({"s"});
        const std::map<std::string, Polynomial> curve{{"t", P(s, "-3/2*s")}, {"x", P(s, "s^3")}, {"y", P(s, "s^2")}};
        for (const auto& g : Ps(txy(), {"x^2 - y^3", "3y^2 + 2t*x"})) CHECK(substitute(g, curve).is_zero());
    }

    TEST_CASE("local radical membership") {
        // away from the origin the ideal <x - 1> says nothing about y
        CHECK(local_radical_membership(P(xy(), "y"), ideal(xy(), {"y*(x - 1)"})));
        CHECK_FALSE(radical_membership(P(xy(), "y"), ideal(xy(), {"y*(x - 1)"})));
        CHECK_FALSE(local_radical_membership(P(xy(), "y"), ideal(xy(), {"x*y"})));
        CHECK(local_radical_membership(P(xy(), "x + y"), ideal(xy(), {"x^3", "y^2"})));
        CHECK(local_radical_membership(P(xy(), "x"), ideal(xy(), {"1 + y"})));
    }

    TEST_CASE("distinct point counts") {
        CHECK(distinct_point_count(ideal(xy(), {"x^2", "y^3"})) == 1u);
        CHECK(distinct_point_count(ideal(xy(), {"x^2 - 1", "y"})) == 2u);
        CHECK(distinct_point_count(ideal(xy(), {"x^2 - y^3", "3y^2 + 2x"})) == 2u);
        CHECK(distinct_point_count(ideal(xy(), {"x^2 + 1", "y^2 + 1"})) == 4u);
        CHECK(code_of([] { distinct_point_count(ideal(xy(), {"x*y"})); }) == ErrorCode::NotZeroDimensional);
    }

    TEST_CASE("univariate eliminants and the zero-dimensional radical") {
        const IdealPresentation I = ideal(xy(), {"x^2 - y^3", "3y^2 + 2x"});
        // points (s^3, s^2) with s = 0 (multiplicity 3) and s = -2/3
        CHECK(univariate_eliminant(I, 1) == P(xy(), "y^4 - 4/9*y^3"));
        const IdealPresentation rad = zero_dimensional_radical(I);
        CHECK(colength(rad.basis(MonomialOrder::degrevlex())) == 2u);
        CHECK(colength(I.basis(MonomialOrder::degrevlex())) == 4u);  // 3 at the origin, 1 at s = -2/3
    }

    TEST_CASE("gcd and squarefree part") {
        CHECK(polynomial_gcd(P(xy(), "x^2 - y^2"), P(xy(), "x^2 + 2x*y + y^2")) == P(xy(), "x + y"));
        CHECK(polynomial_gcd(Polynomial(xy()), Polynomial(xy())).is_zero());
        CHECK(polynomial_gcd(P(xy(), "3x"), Polynomial(xy())) == P(xy(), "x"));
        CHECK(squarefree_part(P(xy(), "x^3*y^2 - x^3")) == P(xy(), "x*y^2 - x"));
        CHECK(squarefree_part(P(xy(), "(x - y)^4*(x + 1)")) == P(xy(), "x^2 - x*y + x - y"));
    }

    TEST_CASE("property: radical membership agrees with evaluation at the rational points") {
        Gen g(5150);
        for (int trial = 0; trial < 20; ++trial) {
            const PointIdeal pi = point_ideal(g);
            const auto vanishes_on_points = [&](const Polynomial& f) {
                for (const auto& pt : pi.points) {
                    if (f.evaluate(pt) != 0) return false;
                }
                return true;
            };
            // the squarefree product through every x-coordinate vanishes, a random polynomial usually does not
            Polynomial hit = Polynomial::constant(xy(), 1);
            for (const auto& pt : pi.points) hit *= P(xy(), "x") - Polynomial::constant(xy(), pt[0]);
            hit *= g.polynomial(xy(), 2, 2) + Polynomial::constant(xy(), 1);
            for (const Polynomial& f : {hit, g.polynomial(xy(), 3, 2), P(xy(), "y") * g.polynomial(xy(), 2, 1)}) {
                CHECK(radical_membership(f, pi.ideal) == vanishes_on_points(f));
            }
            const std::uint64_t distinct = distinct_point_count(pi.ideal);
            const ExtendedCount len = colength(pi.ideal.basis(MonomialOrder::degrevlex()));
            CHECK(distinct == pi.points.size());
            CHECK(len == pi.colength);
            CHECK(distinct <= len.value());
            CHECK((distinct == len.value()) == (zero_dimensional_radical(pi.ideal).basis(MonomialOrder::degrevlex()).generators() ==
                                                pi.ideal.basis(MonomialOrder::degrevlex()).generators()));
        }
    }
}
