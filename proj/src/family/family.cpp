#include "icis/family.hpp"

#include "icis/error.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <tuple>

namespace icis {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "VERIFIED";
        case Verdict::Vacuous: return "VACUOUS";
        case Verdict::Violation: return "VIOLATION";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

std::string_view conservation_name(ConservationStatus s) {
    switch (s) {
        case ConservationStatus::Holds: return "HOLDS";
        case ConservationStatus::Fails: return "FAILS";
        case ConservationStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

namespace {

const MonomialOrder& global_order() {
    static const MonomialOrder order = MonomialOrder::degrevlex();
    return order;
}

const MonomialOrder& local_order() {
    static const MonomialOrder order = MonomialOrder::negdegrevlex();
    return order;
}

RingPtr drop_variable(const RingPtr& ring, const std::string& name) {
    std::vector<std::string> names;
    for (const auto& v : ring->names()) {
        if (v != name) names.push_back(v);
    }
    return make_ring(std::move(names));
}

Polynomial at_parameter(const Polynomial& p, const std::string& parameter, const Rational& t0, const RingPtr& x_ring) {
    std::map<std::string, Polynomial> bind;
    bind.emplace(parameter, Polynomial::constant(p.ring(), t0));
    return change_ring(substitute(p, bind, p.ring()), x_ring);
}

/// Substitutes 0 for every variable other than the parameter, staying in p's ring.
Polynomial at_zero_section(const Polynomial& p, std::size_t parameter_index) {
    std::map<std::string, Polynomial> bind;
    for (std::size_t i = 0; i < p.ring()->size(); ++i) {
        if (i != parameter_index) bind.emplace(p.ring()->name(i), Polynomial(p.ring()));
    }
    return substitute(p, bind, p.ring());
}

std::vector<std::string> x_names(const DeformationFamily& fam) { return fam.x_ring()->names(); }

void require_function_family(const DeformationFamily& fam) {
    if (fam.kind() != DeformationKind::Function) {
        throw Error(ErrorCode::Unsupported, "operation needs a function deformation");
    }
}

bool is_recoverable_sample_failure(const Error& e) {
    return e.code() == ErrorCode::NotZeroDimensional || e.code() == ErrorCode::InfiniteMilnor ||
           e.code() == ErrorCode::GenericityFailure;
}

/// Evaluates fn on each sample concurrently; failures that mark a sample as
/// non-generic come back empty, any other failure is rethrown in sample order.
template <class Fn>
auto evaluate_samples(const std::vector<Rational>& samples, Fn fn) {
    using Result = decltype(fn(samples.front()));
    std::vector<std::optional<Result>> out(samples.size());
    std::vector<std::exception_ptr> errors(samples.size());
    const long n = static_cast<long>(samples.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(samples[static_cast<std::size_t>(i)]);
        } catch (const Error& e) {
            if (!is_recoverable_sample_failure(e)) errors[static_cast<std::size_t>(i)] = std::current_exception();
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

template <class Result, class KeyFn>
SampleAgreement agreement_of(const std::vector<Rational>& samples, const std::vector<std::optional<Result>>& results,
                             KeyFn key) {
    using Key = decltype(key(*results.front()));
    std::map<Key, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (results[i]) groups[key(*results[i])].push_back(i);
    }
    SampleAgreement agreement;
    const std::vector<std::size_t>* best = nullptr;
    bool tie = false;
    for (const auto& [k, members] : groups) {
        if (!best || members.size() > best->size()) {
            best = &members;
            tie = false;
        } else if (members.size() == best->size()) {
            tie = true;
        }
    }
    agreement.stable = best && best->size() >= 2 && !tie;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const bool accepted = agreement.stable && std::find(best->begin(), best->end(), i) != best->end();
        (accepted ? agreement.accepted : agreement.rejected).push_back(samples[i]);
    }
    return agreement;
}

template <class Result>
struct Sweep {
    SampleAgreement agreement;
    std::vector<Result> accepted;
};

std::vector<Rational> distinct_nonzero(const std::vector<Rational>& samples) {
    std::vector<Rational> out;
    for (const auto& s : samples) {
        if (s == 0) throw Error(ErrorCode::InvalidInput, "sample parameter value must be nonzero");
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    if (out.empty()) throw Error(ErrorCode::InvalidInput, "at least one sample parameter value is required");
    return out;
}

constexpr std::size_t kMaxFallbacks = 6;

/// Evaluates the requested samples and, while they disagree, adds fallback
/// samples one at a time.
template <class Fn, class KeyFn>
auto sweep_samples(const std::vector<Rational>& requested, Fn fn, KeyFn key) {
    using Result = typename decltype(evaluate_samples(requested, fn))::value_type::value_type;
    std::vector<Rational> samples = distinct_nonzero(requested);
    auto results = evaluate_samples(samples, fn);
    SampleAgreement agreement = agreement_of(samples, results, key);
    std::size_t added = 0;
    for (const auto& extra : fallback_samples()) {
        if (agreement.stable || added == kMaxFallbacks) break;
        if (std::find(samples.begin(), samples.end(), extra) != samples.end()) continue;
        auto more = evaluate_samples(std::vector<Rational>{extra}, fn);
        samples.push_back(extra);
        results.push_back(std::move(more.front()));
        ++added;
        agreement = agreement_of(samples, results, key);
    }
    Sweep<Result> sweep;
    sweep.agreement = agreement;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (results[i] && std::find(agreement.accepted.begin(), agreement.accepted.end(), samples[i]) !=
                              agreement.accepted.end()) {
            sweep.accepted.push_back(std::move(*results[i]));
        }
    }
    return sweep;
}

auto critical_key(const CriticalLocusReport& r) {
    return std::make_tuple(r.total_colength, r.distinct_points, r.local_mu_origin);
}

CriticalLocusReport build_critical_report(const DeformationFamily& fam, const Rational& t0, bool converges,
                                          const EngineOptions& options) {
    if (t0 == 0) throw Error(ErrorCode::InvalidInput, "sample parameter value must be nonzero");
    const GermFunction g = specialize_function(fam, t0);
    CriticalLocusReport r{t0, function_critical_ideal(g.f(), g.base().phi()), 0, 0, 0, 0, converges};
    const ExtendedCount total = colength(r.critical_ideal.basis(global_order(), options));
    if (!total.is_finite()) {
        throw Error(ErrorCode::NotZeroDimensional, "critical locus of f_" + to_string(t0) + " is not zero-dimensional");
    }
    const ExtendedCount local = colength(r.critical_ideal.basis(local_order(), options));
    r.total_colength = total.value();
    r.local_mu_origin = local.value();
    r.distinct_points = distinct_point_count(r.critical_ideal, options);
    r.off_origin_budget = r.total_colength - r.local_mu_origin;
    return r;
}

Polynomial dF_dt(const DeformationFamily& fam) {
    return partial_derivative(fam.deformed_function(), fam.parameter());
}

bool vanishes_on_zero_section(const IdealPresentation& ideal, std::size_t parameter_index) {
    return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Polynomial& g) { return at_zero_section(g, parameter_index).is_zero(); });
}

std::size_t parameter_index(const DeformationFamily& fam) { return *fam.ring()->index_of(fam.parameter()); }

}  // namespace

DeformationFamily::DeformationFamily(DeformationKind kind, RingPtr ring, std::string parameter, IcisPresentation base,
                                     std::vector<Polynomial> equations, std::optional<Polynomial> F)
    : kind_(kind),
      ring_(std::move(ring)),
      parameter_(std::move(parameter)),
      t_(Polynomial::variable(ring_, parameter_)),
      base_(std::move(base)),
      equations_(std::move(equations)),
      F_(std::move(F)) {}

DeformationFamily DeformationFamily::function_deformation(const std::vector<Polynomial>& phi, const Polynomial& F,
                                                          const std::string& parameter, const EngineOptions& options) {
    const RingPtr ring = F.ring();
    const auto t = ring->index_of(parameter);
    if (!t) throw Error(ErrorCode::MissingParameter, "parameter '" + parameter + "' is not a ring variable");
    if (ring->size() < 2) throw Error(ErrorCode::InvalidInput, "family ring needs variables besides the parameter");
    for (const auto& eq : phi) {
        if (!same_ring(eq.ring(), ring)) throw Error(ErrorCode::RingMismatch, "family data live in different rings");
        if (eq.involves(*t)) throw Error(ErrorCode::InvalidInput, "ICIS equations must not involve the parameter");
    }
    if (!at_zero_section(F, *t).is_zero()) {
        throw Error(ErrorCode::InvalidInput, "deformation must satisfy F(t, 0) = 0");
    }
    const RingPtr x_ring = drop_variable(ring, parameter);
    std::vector<Polynomial> base_eqs;
    for (const auto& eq : phi) base_eqs.push_back(change_ring(eq, x_ring));
    IcisPresentation base = IcisPresentation::create(std::move(base_eqs), options);
    DeformationFamily fam(DeformationKind::Function, ring, parameter, base, phi, F);
    function_on_icis_milnor(fam.base_function(), options);
    return fam;
}

DeformationFamily DeformationFamily::space_deformation(const std::vector<Polynomial>& Phi, const std::string& parameter,
                                                       const EngineOptions& options) {
    if (Phi.empty()) throw Error(ErrorCode::InvalidInput, "space deformation needs at least one equation");
    const RingPtr ring = Phi.front().ring();
    if (!ring->contains(parameter)) {
        throw Error(ErrorCode::MissingParameter, "parameter '" + parameter + "' is not a ring variable");
    }
    if (ring->size() < 2) throw Error(ErrorCode::InvalidInput, "family ring needs variables besides the parameter");
    const RingPtr x_ring = drop_variable(ring, parameter);
    std::vector<Polynomial> base_eqs;
    for (const auto& eq : Phi) {
        if (!same_ring(eq.ring(), ring)) throw Error(ErrorCode::RingMismatch, "family data live in different rings");
        base_eqs.push_back(at_parameter(eq, parameter, 0, x_ring));
    }
    IcisPresentation base = IcisPresentation::create(std::move(base_eqs), options);
    return DeformationFamily(DeformationKind::Space, ring, parameter, base, Phi, std::nullopt);
}

const Polynomial& DeformationFamily::deformed_function() const {
    if (!F_) throw Error(ErrorCode::Unsupported, "space deformations carry no function");
    return *F_;
}

GermFunction DeformationFamily::base_function() const {
    return specialize_function(*this, 0);
}

GermFunction specialize_function(const DeformationFamily& fam, const Rational& t0) {
    return GermFunction::create(at_parameter(fam.deformed_function(), fam.parameter(), t0, fam.x_ring()), fam.base());
}

std::vector<Polynomial> specialize_space(const DeformationFamily& fam, const Rational& t0) {
    std::vector<Polynomial> out;
    for (const auto& eq : fam.equations()) out.push_back(at_parameter(eq, fam.parameter(), t0, fam.x_ring()));
    return out;
}

std::vector<Polynomial> fibre_equations(const DeformationFamily& fam, const Rational& t0) {
    if (fam.kind() == DeformationKind::Space) return specialize_space(fam, t0);
    std::vector<Polynomial> out = fam.base().phi();
    out.push_back(specialize_function(fam, t0).f());
    return out;
}

IdealPresentation parametric_critical_ideal(const DeformationFamily& fam) {
    const auto& eqs = fam.equations();
    if (fam.kind() == DeformationKind::Function) {
        return relative_jacobian_ideal(fam.deformed_function(), eqs, fam.parameter(), x_names(fam)).plus(eqs);
    }
    IdealPresentation ideal(fam.ring(), eqs);
    return ideal.plus(maximal_minors(jacobian_matrix(eqs, x_names(fam))));
}

IdealPresentation parametric_fibre_singular_ideal(const DeformationFamily& fam) {
    if (fam.kind() == DeformationKind::Space) return parametric_critical_ideal(fam);
    return parametric_critical_ideal(fam).plus(std::vector<Polynomial>{fam.deformed_function()});
}

ConvergenceCertificate convergence_certificate(const DeformationFamily& fam, const IdealPresentation& parametric,
                                               const EngineOptions& options) {
    ConvergenceCertificate cert;
    const std::size_t t = parameter_index(fam);
    const Polynomial& tvar = fam.parameter_variable();
    for (std::size_t i = 0; i < fam.ring()->size(); ++i) {
        if (i == t) continue;
        const std::string& name = fam.ring()->name(i);
        const IdealPresentation sat =
            saturation(elimination_ideal(parametric, {fam.parameter(), name}, options), tvar, options);
        if (sat.is_zero_ideal()) {
            cert.reason = "critical locus projects onto the whole (" + fam.parameter() + ", " + name + ") plane";
            return cert;
        }
        Polynomial g(fam.ring());
        for (const auto& gen : sat.generators()) g = polynomial_gcd(g, gen, options);
        cert.eliminants.push_back(g);
        std::map<std::string, Polynomial> bind;
        bind.emplace(fam.parameter(), Polynomial(fam.ring()));
        const Polynomial g0 = substitute(g, bind, fam.ring());
        const std::int64_t k = g.degree_in(i);
        const bool pure_power = g0.term_count() == 1 && g0.total_degree() == k && g0.degree_in(i) == k;
        if (!pure_power) {
            cert.reason = "critical points escape from the origin in " + name + " as " + fam.parameter() +
                          " -> 0 (eliminant " + to_string(g) + ")";
            return cert;
        }
    }
    cert.converges = true;
    return cert;
}

CriticalLocusReport critical_locus_report(const DeformationFamily& fam, const Rational& t0,
                                          const EngineOptions& options) {
    require_function_family(fam);
    const bool converges = convergence_certificate(fam, parametric_critical_ideal(fam), options).converges;
    return build_critical_report(fam, t0, converges, options);
}

std::vector<CriticalLocusReport> critical_locus_reports(const DeformationFamily& fam,
                                                        const std::vector<Rational>& samples,
                                                        const EngineOptions& options) {
    require_function_family(fam);
    const bool converges = convergence_certificate(fam, parametric_critical_ideal(fam), options).converges;
    std::vector<std::optional<CriticalLocusReport>> slots(samples.size());
    std::vector<std::exception_ptr> errors(samples.size());
    const long n = static_cast<long>(samples.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            slots[static_cast<std::size_t>(i)] =
                build_critical_report(fam, samples[static_cast<std::size_t>(i)], converges, options);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    std::vector<CriticalLocusReport> out;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

std::vector<CriticalLocusReport> critical_locus_reports_serial(const DeformationFamily& fam,
                                                               const std::vector<Rational>& samples,
                                                               const EngineOptions& options) {
    require_function_family(fam);
    const bool converges = convergence_certificate(fam, parametric_critical_ideal(fam), options).converges;
    std::vector<CriticalLocusReport> out;
    for (const auto& t0 : samples) out.push_back(build_critical_report(fam, t0, converges, options));
    return out;
}

const std::vector<Rational>& fallback_samples() {
    static const std::vector<Rational> values{Rational(1, 3), Rational(2, 3), Rational(3, 2), Rational(2),
                                              Rational(1, 5), Rational(5, 7), Rational(3), Rational(-1)};
    return values;
}

ConservationResult conservation_check(const DeformationFamily& fam, const std::vector<Rational>& samples,
                                      const EngineOptions& options) {
    require_function_family(fam);
    ConservationResult result;
    result.mu_base = function_on_icis_milnor(fam.base_function(), options);
    result.certificate = convergence_certificate(fam, parametric_critical_ideal(fam), options);
    if (!result.certificate.converges) {
        result.reason = result.certificate.reason;
        return result;
    }
    auto sweep = sweep_samples(
        samples, [&](const Rational& t0) { return build_critical_report(fam, t0, true, options); }, critical_key);
    result.agreement = sweep.agreement;
    result.reports = std::move(sweep.accepted);
    if (!result.agreement.stable) {
        result.reason = "no two samples agree on the critical locus";
        return result;
    }
    const bool holds = std::all_of(result.reports.begin(), result.reports.end(),
                                   [&](const CriticalLocusReport& r) { return r.total_colength == result.mu_base; });
    result.status = holds ? ConservationStatus::Holds : ConservationStatus::Fails;
    return result;
}

FibreReport fibre_report(const std::vector<Polynomial>& psi, const Rational& t0, std::uint64_t seed,
                         const EngineOptions& options) {
    if (psi.empty()) throw Error(ErrorCode::InvalidInput, "fibre needs at least one equation");
    const RingPtr ring = psi.front().ring();
    if (psi.size() > ring->size()) throw Error(ErrorCode::InvalidInput, "fibre has more equations than variables");
    FibreReport report{t0, IdealPresentation(ring, psi), 0, 0, std::nullopt, std::nullopt, false};
    report.singular_ideal = report.singular_ideal.plus(maximal_minors(jacobian_matrix(psi, ring->names())));
    const StandardBasis& kb = report.singular_ideal.basis(global_order(), options);
    if (kb.is_unit_ideal()) return report;
    if (!is_zero_dimensional(kb)) {
        throw Error(ErrorCode::NotZeroDimensional, "fibre at " + to_string(t0) + " has non-isolated singularities");
    }
    report.singular_points = distinct_point_count(report.singular_ideal, options);

    std::mt19937_64 rng(seed);
    const auto random_coefficient = [&rng] {
        long c = 0;
        while (c == 0) c = static_cast<long>(rng() % 19) - 9;
        return Rational(c);
    };
    const std::uint64_t singular_count_with = report.singular_points;
    std::string failure;
    bool done = false;
    for (unsigned attempt = 0; attempt <= kGenericityRetries && !done; ++attempt) {
        const std::vector<Polynomial> eqs = attempt == 0 ? psi : upper_triangular_recombination(psi, rng);
        std::uint64_t previous = 0;
        bool ok = true;
        for (std::size_t k = 1; k <= eqs.size() && ok; ++k) {
            const IdealPresentation stage = le_greuel_stage_ideal(eqs, k);
            const StandardBasis& sb = stage.basis(global_order(), options);
            std::uint64_t c = 0;
            if (!sb.is_unit_ideal()) {
                if (!is_zero_dimensional(sb)) {
                    failure = "stage " + std::to_string(k) + " is not zero-dimensional";
                    ok = false;
                    break;
                }
                const IdealPresentation on_singular = stage.plus(report.singular_ideal);
                const std::uint64_t target = distinct_point_count(on_singular, options);
                if (target > 0) {
                    bool separated = false;
                    for (unsigned tries = 0; tries < kGenericityRetries && !separated; ++tries) {
                        Polynomial h(ring);
                        for (const auto& gen : report.singular_ideal.generators()) h += gen * random_coefficient();
                        if (h.is_zero()) continue;
                        if (distinct_point_count(stage.plus({h}), options) != target) continue;
                        separated = true;
                        const ExtendedCount all = colength(sb);
                        const ExtendedCount away =
                            colength(saturation(stage, h, options).basis(global_order(), options));
                        c = all.value() - away.value();
                    }
                    if (!separated) {
                        failure = "no separating function found at stage " + std::to_string(k);
                        ok = false;
                        break;
                    }
                }
            }
            if (c < previous) {
                failure = "stage " + std::to_string(k) + " gives a negative Milnor number";
                ok = false;
                break;
            }
            previous = c - previous;
        }
        if (ok) {
            report.total_milnor = previous;
            done = true;
        }
    }
    if (!done) throw Error(ErrorCode::GenericityFailure, "fibre chain not generic: " + failure);

    if (singular_count_with == 1) {
        std::vector<Rational> point;
        for (std::size_t v = 0; v < ring->size(); ++v) {
            const Polynomial e = squarefree_part(univariate_eliminant(report.singular_ideal, v, options), options);
            if (e.total_degree() != 1) return report;
            // e = a*x_v + b with a = 1 after normalization.
            const Rational a = e.terms().front().coefficient;
            point.push_back(-e.constant_term() / a);
        }
        std::vector<Polynomial> translated;
        for (const auto& eq : psi) translated.push_back(translate(eq, point));
        report.point_milnor = local_milnor_chain(translated, seed, options).milnor();
        report.at_origin = std::all_of(point.begin(), point.end(), [](const Rational& c) { return c == 0; });
        report.point = std::move(point);
    }
    return report;
}

SplittingResult splitting_check(const DeformationFamily& fam, const std::vector<Rational>& samples, std::uint64_t seed,
                                const EngineOptions& options) {
    SplittingResult result;
    std::vector<Polynomial> base_fibre = fibre_equations(fam, 0);
    result.base_chain.push_back(local_milnor_chain(base_fibre, seed, options));
    result.mu_base = result.base_chain.front().milnor();
    result.certificate = convergence_certificate(fam, parametric_fibre_singular_ideal(fam), options);

    auto sweep = sweep_samples(
        samples,
        [&](const Rational& t0) { return fibre_report(fibre_equations(fam, t0), t0, seed, options); },
        [](const FibreReport& r) { return std::make_pair(r.total_milnor, r.singular_points); });
    result.agreement = sweep.agreement;
    result.reports = std::move(sweep.accepted);

    if (!result.agreement.stable) {
        result.reason = "no two samples agree on the fibre singularities";
        return result;
    }
    if (!result.certificate.converges) {
        result.reason = result.certificate.reason;
        return result;
    }
    if (result.mu_base == 0) {
        result.verdict = Verdict::Vacuous;
        result.reason = "special fibre is smooth at the origin";
        return result;
    }
    if (result.reports.front().total_milnor != result.mu_base) {
        result.verdict = Verdict::Vacuous;
        result.reason = "total Milnor number is not constant";
        return result;
    }
    const bool single = std::all_of(result.reports.begin(), result.reports.end(), [&](const FibreReport& r) {
        return r.singular_points == 1 && r.point_milnor && *r.point_milnor == result.mu_base;
    });
    result.verdict = single ? Verdict::Verified : Verdict::Violation;
    if (!single) result.reason = "constant total Milnor number with several singular points";
    return result;
}

ProbeResult evaluate_probe(const DeformationFamily& fam, const CurveProbe& curve) {
    require_function_family(fam);
    const RingPtr& ring = fam.ring();
    if (curve.components.size() != ring->size()) {
        throw Error(ErrorCode::InvalidInput, "probe needs one component per family variable");
    }
    const RingPtr curve_ring = curve.components.front().ring();
    if (curve_ring->size() != 1) throw Error(ErrorCode::InvalidInput, "probe components must be univariate");
    std::map<std::string, Polynomial> bind;
    for (std::size_t i = 0; i < ring->size(); ++i) {
        const Polynomial& c = curve.components[i];
        if (!same_ring(c.ring(), curve_ring)) throw Error(ErrorCode::RingMismatch, "probe components in different rings");
        if (c.constant_term() != 0) throw Error(ErrorCode::InvalidInput, "probe curve must pass through the origin");
        bind.emplace(ring->name(i), c);
    }
    for (const auto& eq : fam.equations()) {
        if (!substitute(eq, bind, curve_ring).is_zero()) {
            throw Error(ErrorCode::InvalidInput, "probe curve does not lie in C x X");
        }
    }
    ProbeResult r{curve, order_of_vanishing(substitute(dF_dt(fam), bind, curve_ring)), ExtendedCount::infinity(),
                  false, false, false};
    const IdealPresentation J = relative_jacobian_ideal(fam.deformed_function(), fam.equations(), fam.parameter(),
                                                        x_names(fam));
    for (const auto& g : J.generators()) {
        const ExtendedCount v = order_of_vanishing(substitute(g, bind, curve_ring));
        if (v < r.denominator) r.denominator = v;
    }
    if (!r.denominator.is_finite()) {
        r.inside_critical_locus = true;
        r.strict = r.weak = !r.numerator.is_finite();
    } else {
        r.strict = r.denominator < r.numerator;
        r.weak = r.denominator <= r.numerator;
    }
    return r;
}

std::vector<CurveProbe> generate_monomial_probes(const DeformationFamily& fam, std::uint64_t seed, std::size_t count) {
    require_function_family(fam);
    const RingPtr& ring = fam.ring();
    const RingPtr curve_ring = make_ring({fresh_variable_name(*ring, "s")});
    const Polynomial s = Polynomial::variable(curve_ring, 0);
    const std::size_t t = parameter_index(fam);

    std::vector<CurveProbe> probes;
    std::set<std::vector<unsigned>> seen;
    const auto try_exponents = [&](const std::vector<unsigned>& exps) {
        if (probes.size() >= count || !seen.insert(exps).second) return;
        if (std::all_of(exps.begin(), exps.end(), [](unsigned a) { return a == 0; })) return;
        CurveProbe probe;
        std::map<std::string, Polynomial> bind;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            probe.components.push_back(exps[i] == 0 ? Polynomial(curve_ring) : s.pow(exps[i]));
            bind.emplace(ring->name(i), probe.components.back());
        }
        for (const auto& eq : fam.equations()) {
            if (!substitute(eq, bind, curve_ring).is_zero()) return;
        }
        probes.push_back(std::move(probe));
    };

    std::vector<unsigned> axis(ring->size(), 0);
    axis[t] = 1;
    try_exponents(axis);
    std::mt19937_64 rng(seed);
    for (std::size_t draw = 0; draw < 500 * count && probes.size() < count; ++draw) {
        std::vector<unsigned> exps(ring->size());
        for (auto& a : exps) a = static_cast<unsigned>(rng() % 7);
        try_exponents(exps);
    }
    return probes;
}

bool condition5(const DeformationFamily& fam, const EngineOptions& options) {
    require_function_family(fam);
    return local_radical_membership(dF_dt(fam), parametric_critical_ideal(fam), options);
}

bool condition6(const DeformationFamily& fam, const EngineOptions& options) {
    require_function_family(fam);
    const IdealPresentation C = parametric_critical_ideal(fam);
    const std::size_t t = parameter_index(fam);
    if (!vanishes_on_zero_section(C, t)) return false;
    for (std::size_t i = 0; i < fam.ring()->size(); ++i) {
        if (i == t) continue;
        if (!local_radical_membership(Polynomial::variable(fam.ring(), i), C, options)) return false;
    }
    return true;
}

namespace {

template <class Fn>
std::optional<bool> decide(Fn fn, const std::string& label, std::vector<std::string>& notes) {
    try {
        return fn();
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExhausted) throw;
        notes.push_back(label + ": " + e.what());
        return std::nullopt;
    }
}

}  // namespace

GreuelConditionsReport greuel_conditions(const DeformationFamily& fam, const std::vector<CurveProbe>& probes,
                                         const std::vector<Rational>& samples, const EngineOptions& options) {
    require_function_family(fam);
    GreuelConditionsReport report;
    report.mu_base = function_on_icis_milnor(fam.base_function(), options);
    report.cond5_radical = decide([&] { return condition5(fam, options); }, "cond5", report.notes);
    report.cond6_variety = decide([&] { return condition6(fam, options); }, "cond6", report.notes);
    try {
        auto sweep = sweep_samples(
            samples, [&](const Rational& t0) { return build_critical_report(fam, t0, false, options); },
            critical_key);
        report.samples = std::move(sweep.accepted);
        if (sweep.agreement.stable) {
            report.cond1_mu_constant =
                std::all_of(report.samples.begin(), report.samples.end(),
                            [&](const CriticalLocusReport& r) { return r.local_mu_origin == report.mu_base; });
        } else {
            report.notes.push_back("cond1: no two samples agree on the critical locus");
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExhausted) throw;
        report.notes.push_back(std::string("cond1: ") + e.what());
    }
    for (const auto& probe : probes) report.curve_probes.push_back(evaluate_probe(fam, probe));
    report.implications_ok = !(report.cond5_radical.value_or(false) && report.cond6_variety == false);
    return report;
}

ImplicationCheck radical_locus_check(const DeformationFamily& fam, const EngineOptions& options) {
    require_function_family(fam);
    ImplicationCheck check;
    if (function_on_icis_milnor(fam.base_function(), options) == 0) {
        check.verdict = Verdict::Vacuous;
        check.reason = "origin is not a critical point of f";
        return check;
    }
    std::vector<std::string> notes;
    check.hypothesis = decide([&] { return condition5(fam, options); }, "cond5", notes);
    check.conclusion = decide([&] { return condition6(fam, options); }, "cond6", notes);
    if (!check.hypothesis || !check.conclusion) {
        check.reason = notes.empty() ? "undecided" : notes.front();
        return check;
    }
    if (*check.hypothesis && !*check.conclusion) {
        check.verdict = Verdict::Violation;
        check.reason = "dF/dt lies in the radical but the critical locus is not C x {0}";
    } else {
        check.verdict = Verdict::Verified;
        check.reason = *check.hypothesis ? "hypothesis and conclusion hold" : "hypothesis fails";
    }
    return check;
}

ImplicationCheck zero_fibre_critical_check(const DeformationFamily& fam, const std::vector<Rational>& samples,
                               const EngineOptions& options) {
    require_function_family(fam);
    ImplicationCheck check;
    const IdealPresentation C = parametric_critical_ideal(fam);
    std::vector<std::string> notes;
    check.hypothesis =
        decide([&] { return local_radical_membership(fam.deformed_function(), C, options); }, "hypothesis", notes);
    if (!check.hypothesis) {
        check.reason = notes.front();
        return check;
    }
    if (!*check.hypothesis) {
        check.verdict = Verdict::Vacuous;
        check.reason = "F does not vanish on the critical locus";
        return check;
    }
    // Near the origin S(f_t) = {0} means C is a unit there or V(C) = C x {0}.
    const bool origin_critical = !C.basis(local_order(), options).is_unit_ideal();
    if (origin_critical && !condition6(fam, options)) {
        check.conclusion = false;
        check.verdict = Verdict::Violation;
        check.reason = "critical points other than the origin accumulate at the origin";
        return check;
    }
    const ConvergenceCertificate cert = convergence_certificate(fam, C, options);
    if (!cert.converges) {
        check.conclusion = true;
        check.verdict = Verdict::Verified;
        check.reason = "verified near the origin only; sampled members skipped: " + cert.reason;
        return check;
    }
    auto sweep = sweep_samples(
        samples, [&](const Rational& t0) { return build_critical_report(fam, t0, true, options); }, critical_key);
    if (!sweep.agreement.stable) {
        check.reason = "no two samples agree on the critical locus";
        return check;
    }
    check.conclusion = std::all_of(sweep.accepted.begin(), sweep.accepted.end(), [](const CriticalLocusReport& r) {
        return r.distinct_points == 0 || (r.distinct_points == 1 && r.local_mu_origin == r.total_colength);
    });
    check.verdict = *check.conclusion ? Verdict::Verified : Verdict::Violation;
    check.reason = *check.conclusion ? "every sampled member has at most the origin as critical point"
                                     : "a sampled member has a critical point away from the origin";
    return check;
}

}  // namespace icis
