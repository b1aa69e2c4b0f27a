#include "icis/error.hpp"
#include "icis/problem.hpp"

#include <algorithm>

namespace icis {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kGeneratedProbes = 8;

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(const Rational& r) { return to_string(r); }
std::string str(const ExtendedCount& c) { return c.to_string(); }

Json polys(const std::vector<Polynomial>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(to_string(p));
    return out;
}

Json rationals(const std::vector<Rational>& rs) {
    Json out = Json::array();
    for (const auto& r : rs) out.push_back(str(r));
    return out;
}

Json tri(const std::optional<bool>& b) { return b ? Json(*b) : Json("undecided"); }

/// Accumulates results and verdicts for one run.
class Recorder {
public:
    void result(const std::string& name, Json value, Json provenance) {
        Json r;
        r["name"] = name;
        r["value"] = std::move(value);
        r["provenance"] = std::move(provenance);
        results_.push_back(std::move(r));
    }
    void verdict(const std::string& check, std::string_view verdict, const std::string& reason, Json detail = {}) {
        Json v;
        v["check"] = check;
        v["verdict"] = std::string(verdict);
        v["reason"] = reason;
        if (!detail.is_null()) v["detail"] = std::move(detail);
        if (verdict == "INCONCLUSIVE") inconclusive_ = true;
        verdicts_.push_back(std::move(v));
    }
    void mark_inconclusive() { inconclusive_ = true; }

    Json results_ = Json::array();
    Json verdicts_ = Json::array();
    bool inconclusive_ = false;
};

Json provenance(const std::string& ideal, const std::string& order, const std::optional<Rational>& sample = {}) {
    Json p;
    p["ideal"] = ideal;
    p["order"] = order;
    if (sample) p["sample"] = str(*sample);
    return p;
}

const std::string kLocal = "negdegrevlex (local, tangent-cone normal form)";
const std::string kGlobal = "degrevlex (global)";

const std::vector<Polynomial>& values(const ProblemFile& problem, const char* name) {
    return problem.find(name)->values;
}

const Polynomial& single(const ProblemFile& problem, const char* name) { return values(problem, name).front(); }

void record_chain(Recorder& rec, const MilnorChain& chain, const std::string& label) {
    for (std::size_t k = 0; k < chain.stage_colengths.size(); ++k) {
        const std::string stage = std::to_string(k + 1);
        rec.result(label + "stage_colength[" + stage + "]", str(chain.stage_colengths[k]),
                   provenance("<phi_1..phi_" + std::to_string(k) + "> + maximal minors of Jac(phi_1..phi_" + stage + ")",
                              kLocal));
        rec.result(label + "stage_milnor[" + stage + "]", str(chain.stage_milnor[k]),
                   provenance("Le-Greuel recursion mu_k = c_k - mu_(k-1)", kLocal));
    }
    rec.result(label + "chain_equations", polys(chain.equations),
               provenance(chain.attempt == 0 ? "equations as given"
                                             : "upper-triangular recombination, attempt " + std::to_string(chain.attempt),
                          "none"));
}

void run_milnor(const ProblemFile& problem, const EngineOptions& opts, Recorder& rec) {
    const std::uint64_t mu = hypersurface_milnor(single(problem, "f"), opts);
    rec.result("mu", str(mu), provenance("<df/dx_1, ..., df/dx_n>", kLocal));
}

void run_icis_milnor(const ProblemFile& problem, const EngineOptions& opts, Recorder& rec) {
    const IcisPresentation x = IcisPresentation::create(values(problem, "phi"), opts);
    const MilnorChain chain = icis_milnor_chain(x, problem.seed, opts);
    rec.result("dimension", str(x.dimension()), provenance("n - p", "none"));
    record_chain(rec, chain, "");
    rec.result("mu", str(chain.milnor()), provenance("Le-Greuel chain", kLocal));
}

void run_function_milnor(const ProblemFile& problem, const EngineOptions& opts, Recorder& rec) {
    const IcisPresentation x = IcisPresentation::create(values(problem, "phi"), opts);
    const GermFunction g = GermFunction::create(single(problem, "f"), x);
    rec.result("mu_X", str(icis_milnor(x, problem.seed, opts)), provenance("Le-Greuel chain", kLocal));
    rec.result("mu_f", str(function_on_icis_milnor(g, opts)),
               provenance("<phi> + maximal minors of Jac(f, phi)", kLocal));
}

void run_discriminant(const ProblemFile& problem, const EngineOptions& opts, Recorder& rec) {
    const Polynomial delta = discriminant(values(problem, "phi"), problem.targets, opts);
    rec.result("delta", to_string(delta),
               provenance("squarefree part of (<y - phi> + maximal minors of Jac(phi)) eliminated to the target",
                          "block elimination order"));
    rec.result("target_ring", delta.ring()->names(), provenance("target variables", "none"));
    rec.result("multiplicity", str(multiplicity(delta)), provenance("degree of the lowest homogeneous part", "none"));
}

void run_generic_line(const ProblemFile& problem, const EngineOptions& opts, Recorder& rec) {
    Polynomial delta = problem.find("delta") ? single(problem, "delta")
                                             : discriminant(values(problem, "phi"), problem.targets, opts);
    delta = squarefree_part(delta, opts);
    const LineDirection line(*problem.direction);
    const ExtendedCount i = line_intersection_number(delta, line);
    const std::uint64_t m = multiplicity(delta);
    rec.result("delta", to_string(delta), provenance("squarefree part of the discriminant", "none"));
    rec.result("direction", rationals(line.components()), provenance("input", "none"));
    rec.result("intersection_number", str(i), provenance("order of vanishing of delta(s*v)", "none"));
    rec.result("multiplicity", str(m), provenance("degree of the lowest homogeneous part", "none"));
    rec.result("generic", i == m, provenance("intersection number equals multiplicity", "none"));
    rec.result("tangent_cone_avoided", tangent_cone_avoids(delta, line),
               provenance("lowest form of delta does not vanish at v", "none"));
}

Json certificate_json(const ConvergenceCertificate& cert) {
    Json j;
    j["converges_to_origin"] = cert.converges;
    j["eliminants"] = polys(cert.eliminants);
    if (!cert.reason.empty()) j["reason"] = cert.reason;
    return j;
}

Json agreement_json(const SampleAgreement& a) {
    Json j;
    j["stable"] = a.stable;
    j["accepted"] = rationals(a.accepted);
    j["rejected"] = rationals(a.rejected);
    return j;
}

void record_critical_report(Recorder& rec, const CriticalLocusReport& r) {
    const std::string tag = "[t=" + str(r.t0) + "]";
    const std::string ideal = "<phi> + maximal minors of Jac(f_t, phi) = <" + [&] {
        std::string s;
        for (const auto& g : r.critical_ideal.generators()) s += (s.empty() ? "" : ", ") + to_string(g);
        return s;
    }() + ">";
    rec.result("total_colength" + tag, str(r.total_colength), provenance(ideal, kGlobal, r.t0));
    rec.result("mu_origin" + tag, str(r.local_mu_origin), provenance(ideal, kLocal, r.t0));
    rec.result("distinct_points" + tag, str(r.distinct_points),
               provenance("radical via squarefree univariate eliminants", kGlobal, r.t0));
    rec.result("off_origin_budget" + tag, str(r.off_origin_budget),
               provenance("total_colength - mu_origin", "none", r.t0));
}

void record_fibre_report(Recorder& rec, const FibreReport& r) {
    const std::string tag = "[t=" + str(r.t0) + "]";
    rec.result("fibre_total_milnor" + tag, str(r.total_milnor),
               provenance("Le-Greuel chain stages localized at the singular points", kGlobal, r.t0));
    rec.result("fibre_singular_points" + tag, str(r.singular_points),
               provenance("<psi> + maximal minors of Jac(psi)", kGlobal, r.t0));
    if (r.point) {
        rec.result("fibre_singular_point" + tag, rationals(*r.point),
                   provenance("linear squarefree eliminants", "none", r.t0));
        rec.result("fibre_point_milnor" + tag, str(*r.point_milnor),
                   provenance("Le-Greuel chain after translation to the point", kLocal, r.t0));
    }
}

void record_splitting(Recorder& rec, const SplittingResult& s) {
    rec.result("mu_special_fibre", str(s.mu_base), provenance("Le-Greuel chain of the fibre at t = 0", kLocal));
    for (const auto& r : s.reports) record_fibre_report(rec, r);
    Json detail;
    detail["samples"] = agreement_json(s.agreement);
    detail["certificate"] = certificate_json(s.certificate);
    rec.verdict("no_splitting", verdict_name(s.verdict), s.reason, std::move(detail));
}

void record_greuel(Recorder& rec, const GreuelConditionsReport& g) {
    rec.result("cond1_mu_constant", tri(g.cond1_mu_constant),
               provenance("mu(f_t, 0) = mu(f) at agreeing samples", kLocal));
    rec.result("cond5_radical", tri(g.cond5_radical),
               provenance("dF/dt in the radical of <phi> + J at the origin of (t, x)", kLocal));
    rec.result("cond6_variety", tri(g.cond6_variety),
               provenance("x_i in the local radical of <phi> + J and <phi> + J vanishing on the t-axis", kLocal));
    Json probes = Json::array();
    for (const auto& p : g.curve_probes) {
        Json j;
        j["curve"] = polys(p.curve.components);
        j["order_dF_dt"] = str(p.numerator);
        j["order_minors"] = str(p.denominator);
        j["strict"] = p.strict;
        j["weak"] = p.weak;
        if (p.inside_critical_locus) j["inside_critical_locus"] = true;
        probes.push_back(std::move(j));
    }
    rec.result("curve_probes", std::move(probes),
               provenance("valuations along polynomial curves (evidence only)", "none"));
    rec.result("implications_ok", g.implications_ok, provenance("not (cond5 and not cond6)", "none"));
    for (const auto& n : g.notes) rec.result("note", n, provenance("undecided condition", "none"));
    if (!g.cond1_mu_constant || !g.cond5_radical || !g.cond6_variety) rec.mark_inconclusive();
}

void record_implication(Recorder& rec, const std::string& name, const ImplicationCheck& c) {
    Json detail;
    detail["hypothesis"] = tri(c.hypothesis);
    detail["conclusion"] = tri(c.conclusion);
    rec.verdict(name, verdict_name(c.verdict), c.reason, std::move(detail));
}

std::vector<CurveProbe> probes_for(const ProblemFile& problem, const DeformationFamily& fam) {
    return problem.probes.empty() ? generate_monomial_probes(fam, problem.seed, kGeneratedProbes) : problem.probes;
}

void run_function_family(const ProblemFile& problem, const DeformationFamily& fam, const EngineOptions& opts,
                         Recorder& rec, bool analyze) {
    const std::uint64_t mu_f = function_on_icis_milnor(fam.base_function(), opts);
    rec.result("mu_f", str(mu_f), provenance("<phi> + maximal minors of Jac(f, phi), f = F(0, x)", kLocal));
    if (analyze) {
        const ConservationResult cons = conservation_check(fam, problem.samples, opts);
        for (const auto& r : cons.reports) record_critical_report(rec, r);
        Json detail;
        detail["samples"] = agreement_json(cons.agreement);
        detail["certificate"] = certificate_json(cons.certificate);
        rec.verdict("conservation", conservation_name(cons.status), cons.reason, std::move(detail));
        record_splitting(rec, splitting_check(fam, problem.samples, problem.seed, opts));
    }
    record_greuel(rec, greuel_conditions(fam, probes_for(problem, fam), problem.samples, opts));
    record_implication(rec, "radical_implies_trivial_locus", radical_locus_check(fam, opts));
    record_implication(rec, "critical_set_in_zero_fibre", zero_fibre_critical_check(fam, problem.samples, opts));
}

void run_family(const ProblemFile& problem, const EngineOptions& opts, Recorder& rec, bool analyze) {
    if (problem.find("F")) {
        const DeformationFamily fam =
            DeformationFamily::function_deformation(values(problem, "phi"), single(problem, "F"), *problem.parameter, opts);
        rec.result("family_kind", "function-deformation", provenance("F given", "none"));
        run_function_family(problem, fam, opts, rec, analyze);
    } else {
        const DeformationFamily fam = DeformationFamily::space_deformation(values(problem, "Phi"), *problem.parameter, opts);
        rec.result("family_kind", "space-deformation", provenance("Phi given", "none"));
        const MilnorChain chain = icis_milnor_chain(fam.base(), problem.seed, opts);
        record_chain(rec, chain, "base_");
        rec.result("mu_X", str(chain.milnor()), provenance("Le-Greuel chain of Phi(0, x)", kLocal));
        record_splitting(rec, splitting_check(fam, problem.samples, problem.seed, opts));
    }
}

Json echo_inputs(const ProblemFile& problem) {
    Json in;
    in["ring"] = problem.ring->names();
    if (problem.parameter) in["parameter"] = *problem.parameter;
    Json bindings;
    for (const auto& b : problem.bindings) bindings[b.name] = polys(b.values);
    in["bindings"] = bindings.is_null() ? Json::object() : bindings;
    in["samples"] = rationals(problem.samples);
    in["seed"] = str(problem.seed);
    in["step_budget"] = str(problem.budget);
    if (problem.direction) in["direction"] = rationals(*problem.direction);
    if (!problem.targets.empty()) in["target"] = problem.targets;
    if (!problem.probes.empty()) {
        Json probes = Json::array();
        for (const auto& p : problem.probes) probes.push_back(polys(p.components));
        in["probes"] = std::move(probes);
    }
    return in;
}

std::string status_name(int exit_status) {
    switch (exit_status) {
        case kExitComputed: return "computed";
        case kExitInconclusive: return "inconclusive";
        case kExitBudget: return "budget-exhausted";
        default: return "input-error";
    }
}

void finish(Report& report, int status) {
    report.exit_status = status;
    report.data["status"] = status_name(status);
    report.data["exit_code"] = std::to_string(status);
}

}  // namespace

int exit_status_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::BudgetExhausted: return kExitBudget;
        case ErrorCode::GenericityFailure: return kExitInconclusive;
        default: return kExitInputError;
    }
}

Report error_report(const Error& error, std::optional<ProblemKind> kind) {
    Report report;
    report.data["tool"] = "icis";
    if (kind) report.data["kind"] = std::string(kind_name(*kind));
    Json err;
    err["code"] = std::string(code_name(error.code()));
    err["message"] = error.what();
    if (const auto* pe = dynamic_cast<const ParseError*>(&error)) {
        err["line"] = std::to_string(pe->line());
        err["column"] = std::to_string(pe->column());
    }
    report.data["error"] = std::move(err);
    finish(report, exit_status_for(error.code()));
    return report;
}

Report run(const ProblemFile& problem) {
    StepMeter meter;
    const EngineOptions opts{problem.budget, &meter};
    Recorder rec;
    Report report;
    report.data["tool"] = "icis";
    report.data["kind"] = std::string(kind_name(problem.kind));
    report.data["inputs"] = echo_inputs(problem);
    int status = kExitComputed;
    try {
        switch (problem.kind) {
            case ProblemKind::Milnor: run_milnor(problem, opts, rec); break;
            case ProblemKind::IcisMilnor: run_icis_milnor(problem, opts, rec); break;
            case ProblemKind::FunctionMilnor: run_function_milnor(problem, opts, rec); break;
            case ProblemKind::Discriminant: run_discriminant(problem, opts, rec); break;
            case ProblemKind::GenericLine: run_generic_line(problem, opts, rec); break;
            case ProblemKind::FamilyAnalyze: run_family(problem, opts, rec, true); break;
            case ProblemKind::GreuelCheck: run_family(problem, opts, rec, false); break;
        }
        if (rec.inconclusive_) status = kExitInconclusive;
    } catch (const Error& e) {
        Json err;
        err["code"] = std::string(code_name(e.code()));
        err["message"] = e.what();
        report.data["error"] = std::move(err);
        status = exit_status_for(e.code());
    }
    report.data["results"] = std::move(rec.results_);
    report.data["verdicts"] = std::move(rec.verdicts_);
    Json budget;
    budget["step_budget_per_call"] = str(problem.budget);
    budget["steps_used"] = str(meter.total());
    report.data["budget"] = std::move(budget);
    finish(report, status);
    return report;
}

}  // namespace icis
