// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include "support/family_suite.hpp"
#include "support/oracles.hpp"

#include "icis/singularity.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace icis;
using icis_test::build_family;
using icis_test::default_samples;

namespace {

constexpr double kExampleSeconds = 10.0;
constexpr double kOracleSeconds = 60.0;
constexpr int kRandomDirections = 50;
constexpr int kRandomMonomialIdeals = 30;
constexpr std::size_t kMinimumSuite = 8;

struct Cusp {
    int p, q;
};
const std::vector<Cusp> kCusps{{2, 3}, {2, 5}, {3, 4}, {3, 5}};

const RingPtr& txy() {
    static const RingPtr r = make_ring({"t", "x", "y"});
    return r;
}

Polynomial parse(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

DeformationFamily cusp_family(const Cusp& c) {
    return build_family({"", {"t", "x", "y"}, {icis_test::cusp(c.p, c.q)}, "x + t*y"});
}

std::uint64_t u64(int v) { return static_cast<std::uint64_t>(v); }

// Collects mismatches for one criterion.
class Criterion {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++failed_;
        ++checked_;
    }
    bool ok() const { return failed_ == 0; }
    std::string detail() const {
        std::ostringstream out;
        out << checked_ << " checks";
        for (const auto& f : failures_) out << "; " << f;
        return out.str();
    }

private:
    int checked_ = 0;
    int failed_ = 0;
    std::vector<std::string> failures_;
};

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome finish(const Criterion& c, std::string extra = "") {
    return {c.ok(), c.detail() + (extra.empty() ? "" : "; " + extra)};
}

Outcome ac1_example_reproduction() {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& cusp : kCusps) {
        const std::string tag = "(" + std::to_string(cusp.p) + "," + std::to_string(cusp.q) + ")";
        const DeformationFamily fam = cusp_family(cusp);
        c.expect(function_on_icis_milnor(fam.base_function()) == u64(cusp.p * cusp.q - cusp.p), tag + " mu(f)");
        for (const auto& t0 : default_samples()) {
            const CriticalLocusReport r = critical_locus_report(fam, t0);
            c.expect(r.local_mu_origin == u64(cusp.p * cusp.q - cusp.q), tag + " mu(f_t) at t=" + t0.get_str());
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < kExampleSeconds, "runtime " + std::to_string(seconds) + " s");
    return finish(c, "runtime " + std::to_string(seconds) + " s < " + std::to_string(kExampleSeconds));
}

Outcome ac2_conservation() {
    Criterion c;
    for (const auto& cusp : kCusps) {
        const std::string tag = "(" + std::to_string(cusp.p) + "," + std::to_string(cusp.q) + ")";
        const DeformationFamily fam = cusp_family(cusp);
        for (const auto& t0 : default_samples()) {
            const CriticalLocusReport r = critical_locus_report(fam, t0);
            c.expect(r.total_colength == u64(cusp.p * cusp.q - cusp.p), tag + " total at t=" + t0.get_str());
            c.expect(r.off_origin_budget == u64(cusp.q - cusp.p), tag + " off-origin budget");
        }
        const ConservationResult cons = conservation_check(fam, default_samples());
        c.expect(cons.certificate.converges, tag + " converges to origin");
        c.expect(cons.status == ConservationStatus::Holds, tag + " conservation holds");
    }
    return finish(c);
}

Outcome ac3_radical_correction() {
    Criterion c;
    const DeformationFamily fam = cusp_family({2, 3});
    c.expect(!condition5(fam), "cond5 is false");
    // witness curve (t, x, y) = (-3/2 s, s^3, s^2)
    const RingPtr s = make_ring({"s"});
    const std::map<std::string, Polynomial> gamma{
        {"t", parse(s, "-3/2*s")}, {"x", parse(s, "s^3")}, {"y", parse(s, "s^2")}};
    const IdealPresentation critical = parametric_critical_ideal(fam);
    for (const auto& g : critical.generators()) {
        c.expect(substitute(g, gamma).is_zero(), "generator " + to_string(g) + " vanishes on the curve");
    }
    c.expect(!substitute(parse(txy(), "y"), gamma).is_zero(), "y is nonzero on the curve");
    const Polynomial dFdt = partial_derivative(fam.deformed_function(), std::size_t{0});
    c.expect(substitute(dFdt, gamma) == parse(s, "s^2"), "dF/dt restricts to s^2");
    c.expect(substitute(fam.deformed_function(), gamma) == parse(s, "-1/2*s^3"), "F restricts to -s^3/2");
    return finish(c);
}

Outcome ac4_radical_implies_variety() {
    Criterion c;
    const auto& suite = icis_test::function_suite();
    c.expect(suite.size() >= kMinimumSuite, "suite size");
    int hypotheses = 0;
    for (const auto& fc : suite) {
        const DeformationFamily fam = build_family(fc);
        const bool c5 = condition5(fam);
        hypotheses += c5 ? 1 : 0;
        c.expect(!(c5 && !condition6(fam)), fc.name + ": cond5 without cond6");
    }
    return finish(c, std::to_string(suite.size()) + " families, cond5 true in " + std::to_string(hypotheses));
}

Outcome ac5_no_splitting() {
    Criterion c;
    int applicable = 0;
    std::vector<icis_test::FamilyCase> cases = icis_test::space_suite();
    cases.insert(cases.end(), icis_test::function_suite().begin(), icis_test::function_suite().end());
    for (const auto& fc : cases) {
        const DeformationFamily fam = build_family(fc);
        const SplittingResult r = splitting_check(fam, default_samples());
        c.expect(r.verdict != Verdict::Inconclusive, fc.name + ": inconclusive");
        const bool constant = !r.reports.empty() && std::all_of(r.reports.begin(), r.reports.end(), [&](const FibreReport& f) {
            return f.total_milnor == r.mu_base;
        });
        if (!constant || r.mu_base == 0) continue;
        ++applicable;
        const bool section = fam.kind() == DeformationKind::Function || icis_test::keeps_origin(fam);
        for (const auto& f : r.reports) {
            c.expect(f.singular_points == 1u, fc.name + ": one singular point at t=" + f.t0.get_str());
            c.expect(f.point_milnor == std::optional<std::uint64_t>(r.mu_base), fc.name + ": full mu at the point");
            if (section) c.expect(f.at_origin, fc.name + ": point is the origin");
        }
    }
    c.expect(applicable > 0, "no applicable instance");
    return finish(c, std::to_string(cases.size()) + " families, " + std::to_string(applicable) + " mu-constant");
}

Outcome ac6_critical_set() {
    Criterion c;
    int applicable = 0;
    for (const auto& fc : icis_test::function_suite()) {
        const DeformationFamily fam = build_family(fc);
        const IdealPresentation C = parametric_critical_ideal(fam);
        if (!local_radical_membership(fam.deformed_function(), C)) continue;
        ++applicable;
        // near the origin: V(C) is empty or C x {0}
        if (!C.basis(MonomialOrder::negdegrevlex()).is_unit_ideal()) c.expect(condition6(fam), fc.name + ": cond6");
        c.expect(zero_fibre_critical_check(fam, default_samples()).verdict == Verdict::Verified, fc.name + ": verdict");
        if (!convergence_certificate(fam, C).converges) continue;
        for (const auto& r : critical_locus_reports(fam, default_samples())) {
            const bool only_origin = r.total_colength == 0 || (r.distinct_points == 1 && r.local_mu_origin == r.total_colength);
            c.expect(only_origin, fc.name + ": single critical point at t=" + r.t0.get_str());
        }
    }
    c.expect(applicable > 0, "no applicable instance");
    return finish(c, std::to_string(applicable) + " families with F in the radical");
}

Outcome ac7_genericity() {
    Criterion c;
    const RingPtr xy = make_ring({"x", "y"});
    const Polynomial delta = discriminant({parse(xy, "x"), parse(xy, "y^3 + x*y")});
    c.expect(delta.monic() == parse(delta.ring(), "4u^3 + 27v^2").monic(), "delta = " + to_string(delta));
    c.expect(multiplicity(delta) == 2u, "multiplicity");
    const LineDirection vertical({Rational(0), Rational(1)}), horizontal({Rational(1), Rational(0)});
    c.expect(line_intersection_number(delta, vertical) == 2u, "i along (0,1)");
    c.expect(is_generic_line(delta, vertical), "(0,1) generic");
    c.expect(line_intersection_number(delta, horizontal) == 3u, "i along (1,0)");
    c.expect(!is_generic_line(delta, horizontal), "(1,0) not generic");
    icis_test::Gen g(7);
    const std::uint64_t m = multiplicity(delta);
    int generic = 0;
    for (int trial = 0; trial < kRandomDirections; ++trial) {
        std::vector<Rational> v{g.rational(6), g.rational(6)};
        if (v[0] == 0 && v[1] == 0) v[trial % 2] = 1;
        const LineDirection line(v);
        const bool by_intersection = line_intersection_number(delta, line) == m;
        const bool by_lowest_form = tangent_cone_avoids(delta, line);
        c.expect(by_intersection == by_lowest_form, "direction " + v[0].get_str() + "," + v[1].get_str());
        c.expect(is_generic_line(delta, line) == by_intersection, "is_generic_line agrees");
        generic += by_intersection ? 1 : 0;
    }
    return finish(c, std::to_string(generic) + "/" + std::to_string(kRandomDirections) + " random directions generic");
}

Outcome ac8_engine_oracles() {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    icis_test::Gen g(30);
    for (int trial = 0; trial < kRandomMonomialIdeals; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.integer(2, 3));
        const RingPtr r = make_ring(n == 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"});
        std::vector<Monomial> gens;
        std::vector<Exponent> box(n);
        for (std::size_t i = 0; i < n; ++i) {
            box[i] = static_cast<Exponent>(g.integer(1, 6));
            gens.push_back(Monomial::variable(n, i, box[i]));
        }
        for (int extra = 0, k = static_cast<int>(g.integer(0, 4)); extra < k; ++extra) gens.push_back(g.monomial(n, 5));
        std::vector<Polynomial> polys;
        for (const auto& mono : gens) polys.push_back(Polynomial::term(r, mono, Rational(1)));
        const ExtendedCount col = colength(complete_basis(polys, MonomialOrder::degrevlex(), r));
        c.expect(col == icis_test::brute_force_staircase(gens, box), "monomial ideal " + std::to_string(trial));
    }
    const RingPtr xy = make_ring({"x", "y"});
    auto jacobian_oracle = [&](const Polynomial& f) {
        return icis_test::local_colength_oracle(std::vector<Polynomial>{partial_derivative(f, "x"), partial_derivative(f, "y")}, 16);
    };
    for (int k = 1; k <= 6; ++k) {
        const Polynomial f = parse(xy, "x^" + std::to_string(k + 1) + " + y^2");
        c.expect(hypersurface_milnor(f) == u64(k), "A" + std::to_string(k));
        c.expect(jacobian_oracle(f) == std::optional<std::uint64_t>(u64(k)), "A" + std::to_string(k) + " oracle");
    }
    const Polynomial e8 = parse(xy, "x^3 + y^5");
    c.expect(hypersurface_milnor(e8) == 8u, "x^3 + y^5");
    c.expect(jacobian_oracle(e8) == std::optional<std::uint64_t>(8), "x^3 + y^5 oracle");
    for (const auto& phi : std::vector<std::vector<std::string>>{
             {"x^2", "y^2"}, {"x^2 - y^3", "x*y"}, {"x^3 + y^2", "x*y^2"}, {"x^2 + y^3", "y^2 + x^3"}}) {
        std::vector<Polynomial> eqs;
        for (const auto& e : phi) eqs.push_back(parse(xy, e));
        const auto direct = icis_test::local_colength_oracle(eqs, 16);
        c.expect(direct.has_value(), "regular sequence oracle stabilizes");
        if (direct) c.expect(icis_milnor(IcisPresentation::create(eqs)) == *direct - 1, "p = n for " + phi.front());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < kOracleSeconds, "runtime " + std::to_string(seconds) + " s");
    return finish(c, "runtime " + std::to_string(seconds) + " s < " + std::to_string(kOracleSeconds));
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 cusp family Milnor numbers", ac1_example_reproduction},
        {"AC2 conservation of number", ac2_conservation},
        {"AC3 radical membership fails for (2,3)", ac3_radical_correction},
        {"AC4 radical condition implies variety condition", ac4_radical_implies_variety},
        {"AC5 constant total Milnor number forbids splitting", ac5_no_splitting},
        {"AC6 F in the radical keeps the critical set at the origin", ac6_critical_set},
        {"AC7 generic line criterion", ac7_genericity},
        {"AC8 engine oracles", ac8_engine_oracles},
    };
    int failures = 0;
    for (const auto& [name, run_check] : criteria) {
        Outcome o;
        try {
            o = run_check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << o.detail << ")\n";
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
    return failures == 0 ? 0 : 1;
}
