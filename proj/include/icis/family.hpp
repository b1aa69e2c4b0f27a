#pragma once

#include "icis/ideal.hpp"
#include "icis/singularity.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace icis {

enum class DeformationKind { Function, Space };

enum class Verdict { Verified, Vacuous, Violation, Inconclusive };
std::string_view verdict_name(Verdict v);

/// One-parameter family over the ring (t, x_1..x_n), either of a function on a
/// fixed ICIS or of the ICIS equations themselves.
class DeformationFamily {
public:
    /// phi and F live in the full ring; phi must not involve the parameter.
    /// Requires F(t, 0) = 0 identically.
    static DeformationFamily function_deformation(const std::vector<Polynomial>& phi, const Polynomial& F,
                                                  const std::string& parameter, const EngineOptions& options = {});
    /// Phi(0, x) must define an ICIS at the origin.
    static DeformationFamily space_deformation(const std::vector<Polynomial>& Phi, const std::string& parameter,
                                               const EngineOptions& options = {});

    DeformationKind kind() const { return kind_; }
    const RingPtr& ring() const { return ring_; }
    const RingPtr& x_ring() const { return base_.ring(); }
    const std::string& parameter() const { return parameter_; }
    const Polynomial& parameter_variable() const { return t_; }
    const IcisPresentation& base() const { return base_; }
    /// φ for function families, Φ for space families; in the full ring.
    const std::vector<Polynomial>& equations() const { return equations_; }
    /// F; only for function families.
    const Polynomial& deformed_function() const;
    /// f = F(0, x); only for function families.
    GermFunction base_function() const;

private:
    DeformationFamily(DeformationKind kind, RingPtr ring, std::string parameter, IcisPresentation base,
                      std::vector<Polynomial> equations, std::optional<Polynomial> F);

    DeformationKind kind_;
    RingPtr ring_;
    std::string parameter_;
    Polynomial t_;
    IcisPresentation base_;
    std::vector<Polynomial> equations_;
    std::optional<Polynomial> F_;
};

/// f_{t0} on the base ICIS.
GermFunction specialize_function(const DeformationFamily& fam, const Rational& t0);
/// Φ(t0, x) in the x-ring.
std::vector<Polynomial> specialize_space(const DeformationFamily& fam, const Rational& t0);
/// Equations of the fibre Y_{t0}: (φ, f_{t0}) or Φ(t0, x).
std::vector<Polynomial> fibre_equations(const DeformationFamily& fam, const Rational& t0);

/// Ideal in (t, x) whose zero set is the union of the critical sets of the
/// members: <φ> + J_x(F, φ) for function families, <Φ> + J_x(Φ) otherwise.
IdealPresentation parametric_critical_ideal(const DeformationFamily& fam);
/// <φ, F> + J_x(F, φ): union of the singular sets of the fibres Y_t.
IdealPresentation parametric_fibre_singular_ideal(const DeformationFamily& fam);

/// All points of V(C) ∩ {t = t0} tend to the origin as t0 -> 0, certified
/// per variable by the t-saturated eliminant g_i(t, x_i), whose restriction
/// g_i(0, x_i) must be c·x_i^k with k = deg_{x_i} g_i.
struct ConvergenceCertificate {
    bool converges = false;
    std::vector<Polynomial> eliminants;  // g_i in the full ring, one per x-variable examined
    std::string reason;
};
ConvergenceCertificate convergence_certificate(const DeformationFamily& fam, const IdealPresentation& parametric,
                                               const EngineOptions& options = {});

struct CriticalLocusReport {
    Rational t0;
    IdealPresentation critical_ideal;  // in the x-ring
    std::uint64_t total_colength = 0;  // global, degrevlex
    std::uint64_t local_mu_origin = 0; // local, negdegrevlex
    std::uint64_t distinct_points = 0;
    std::uint64_t off_origin_budget = 0;
    bool converges_to_origin = false;
};

/// Function families only. Throws Error(NotZeroDimensional) when f_{t0} has
/// non-isolated critical points.
CriticalLocusReport critical_locus_report(const DeformationFamily& fam, const Rational& t0,
                                          const EngineOptions& options = {});
/// Reports for all samples, computed concurrently.
std::vector<CriticalLocusReport> critical_locus_reports(const DeformationFamily& fam,
                                                        const std::vector<Rational>& samples,
                                                        const EngineOptions& options = {});
std::vector<CriticalLocusReport> critical_locus_reports_serial(const DeformationFamily& fam,
                                                               const std::vector<Rational>& samples,
                                                               const EngineOptions& options = {});

/// Extra parameter values tried when the requested samples disagree.
const std::vector<Rational>& fallback_samples();

/// Which samples agree. A group of at least two samples with equal keys that
/// is strictly larger than every other group wins.
struct SampleAgreement {
    bool stable = false;
    std::vector<Rational> accepted;
    std::vector<Rational> rejected;
};

enum class ConservationStatus { Holds, Fails, Inconclusive };
std::string_view conservation_name(ConservationStatus s);

struct ConservationResult {
    ConservationStatus status = ConservationStatus::Inconclusive;
    std::uint64_t mu_base = 0;
    std::vector<CriticalLocusReport> reports;  // accepted samples only
    SampleAgreement agreement;
    ConvergenceCertificate certificate;
    std::string reason;
};
ConservationResult conservation_check(const DeformationFamily& fam, const std::vector<Rational>& samples,
                                      const EngineOptions& options = {});

struct FibreReport {
    Rational t0;
    IdealPresentation singular_ideal;    // <Ψ> + maximal minors, x-ring
    std::uint64_t total_milnor = 0;      // sum of μ over singular points
    std::uint64_t singular_points = 0;
    std::optional<std::vector<Rational>> point;  // when there is exactly one
    std::optional<std::uint64_t> point_milnor;
    bool at_origin = false;
};

/// Singular points of the fibre Ψ = 0 with their total Milnor number.
FibreReport fibre_report(const std::vector<Polynomial>& psi, const Rational& t0, std::uint64_t seed,
                         const EngineOptions& options = {});

struct SplittingResult {
    Verdict verdict = Verdict::Inconclusive;
    std::uint64_t mu_base = 0;
    std::vector<MilnorChain> base_chain;  // empty or one entry
    std::vector<FibreReport> reports;
    SampleAgreement agreement;
    ConvergenceCertificate certificate;
    std::string reason;
};
SplittingResult splitting_check(const DeformationFamily& fam, const std::vector<Rational>& samples,
                                std::uint64_t seed = 0, const EngineOptions& options = {});

/// Polynomial curve s -> (t(s), x_1(s), ..) through the origin.
struct CurveProbe {
    std::vector<Polynomial> components;  // in a univariate ring, one per variable of the family ring
};

struct ProbeResult {
    CurveProbe curve;
    ExtendedCount numerator;    // ν(∂F/∂t ∘ γ)
    ExtendedCount denominator;  // min ν(g_i ∘ γ)
    bool strict = false;        // numerator > denominator
    bool weak = false;          // numerator >= denominator
    bool inside_critical_locus = false;  // denominator infinite
};

ProbeResult evaluate_probe(const DeformationFamily& fam, const CurveProbe& curve);

/// Seeded monomial curves (components 0 or s^a, 1 <= a <= 6) lying in C × X,
/// starting with the parameter axis.
std::vector<CurveProbe> generate_monomial_probes(const DeformationFamily& fam, std::uint64_t seed,
                                                 std::size_t count);

struct GreuelConditionsReport {
    std::optional<bool> cond1_mu_constant;
    std::optional<bool> cond5_radical;
    std::optional<bool> cond6_variety;
    std::vector<ProbeResult> curve_probes;
    bool implications_ok = true;
    std::uint64_t mu_base = 0;
    std::vector<CriticalLocusReport> samples;
    std::vector<std::string> notes;  // reasons for undecided conditions
};
GreuelConditionsReport greuel_conditions(const DeformationFamily& fam, const std::vector<CurveProbe>& probes,
                                         const std::vector<Rational>& samples, const EngineOptions& options = {});

/// ∂F/∂t vanishes on V(<φ> + J) near the origin of (t, x).
bool condition5(const DeformationFamily& fam, const EngineOptions& options = {});
/// V(<φ> + J) = C × {0} near the origin.
bool condition6(const DeformationFamily& fam, const EngineOptions& options = {});

struct ImplicationCheck {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<bool> hypothesis;
    std::optional<bool> conclusion;
    std::string reason;
};

ImplicationCheck radical_locus_check(const DeformationFamily& fam, const EngineOptions& options = {});
ImplicationCheck zero_fibre_critical_check(const DeformationFamily& fam, const std::vector<Rational>& samples,
                               const EngineOptions& options = {});

}  // namespace icis
