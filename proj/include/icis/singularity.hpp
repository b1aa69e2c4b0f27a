#pragma once

#include "icis/ideal.hpp"
#include "icis/polynomial.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace icis {

/// (X, 0) ⊂ (C^n, 0) cut out by p equations vanishing at the origin, with a
/// verified isolated-singularity certificate.
class IcisPresentation {
public:
    /// Throws Error(InvalidInput) on malformed data and Error(InfiniteMilnor)
    /// when <phi> + (maximal minors of the Jacobian) has infinite local colength.
    static IcisPresentation create(std::vector<Polynomial> phi, const EngineOptions& options = {});

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& phi() const { return phi_; }
    std::size_t ambient_dimension() const { return ring_->size(); }
    std::size_t codimension() const { return phi_.size(); }
    std::size_t dimension() const { return ambient_dimension() - codimension(); }

private:
    IcisPresentation(RingPtr ring, std::vector<Polynomial> phi) : ring_(std::move(ring)), phi_(std::move(phi)) {}

    RingPtr ring_;
    std::vector<Polynomial> phi_;
};

/// f : (X, 0) -> (C, 0).
class GermFunction {
public:
    static GermFunction create(Polynomial f, IcisPresentation base);

    const Polynomial& f() const { return f_; }
    const IcisPresentation& base() const { return base_; }

private:
    GermFunction(Polynomial f, IcisPresentation base) : f_(std::move(f)), base_(std::move(base)) {}

    Polynomial f_;
    IcisPresentation base_;
};

/// Nonzero direction vector of a line through the origin of the target.
class LineDirection {
public:
    explicit LineDirection(std::vector<Rational> v);
    const std::vector<Rational>& components() const { return v_; }

private:
    std::vector<Rational> v_;
};

/// Stage data of the Lê–Greuel chain μ(X_{k-1}) + μ(X_k) = c_k.
struct MilnorChain {
    std::vector<Polynomial> equations;        // the (possibly recombined) equations used
    std::vector<std::uint64_t> stage_colengths;
    std::vector<std::uint64_t> stage_milnor;  // μ(X_k) for k = 1..p
    unsigned attempt = 0;                     // 0 = equations in the given order
    std::uint64_t milnor() const { return stage_milnor.back(); }
};

inline constexpr unsigned kGenericityRetries = 16;

/// Local colength of the Jacobian ideal. Throws Error(InfiniteMilnor).
std::uint64_t hypersurface_milnor(const Polynomial& f, const EngineOptions& options = {});

/// μ(X, 0) via the Lê–Greuel chain, retrying seeded upper-triangular
/// recombinations of the equations when a stage is not isolated.
std::uint64_t icis_milnor(const IcisPresentation& x, std::uint64_t seed = 0, const EngineOptions& options = {});
MilnorChain icis_milnor_chain(const IcisPresentation& x, std::uint64_t seed = 0, const EngineOptions& options = {});
/// Same chain for equations that need not satisfy the IcisPresentation checks.
MilnorChain local_milnor_chain(const std::vector<Polynomial>& phi, std::uint64_t seed,
                               const EngineOptions& options = {});

/// φ'_i = φ_i + Σ_{j>i} c_ij φ_j with c_ij uniform in [-9, 9].
std::vector<Polynomial> upper_triangular_recombination(const std::vector<Polynomial>& phi, std::mt19937_64& rng);

/// Ideal <φ_1..φ_{k-1}> + (maximal minors of the Jacobian of φ_1..φ_k), k = 1..p.
IdealPresentation le_greuel_stage_ideal(const std::vector<Polynomial>& phi, std::size_t k);

/// <φ> + maximal minors of the Jacobian of (f, φ) in all ring variables.
IdealPresentation function_critical_ideal(const Polynomial& f, const std::vector<Polynomial>& phi);

/// Local colength of <φ> + J(f, φ). Throws Error(InfiniteMilnor).
std::uint64_t function_on_icis_milnor(const GermFunction& g, const EngineOptions& options = {});

/// Local Milnor number of g.f on V(φ) at a rational point of V(φ).
std::uint64_t milnor_at_point(const GermFunction& g, std::span<const Rational> point,
                              const EngineOptions& options = {});

/// x_i -> x_i + point_i.
Polynomial translate(const Polynomial& f, std::span<const Rational> point);

/// Reduced equation of φ(Σ) in the target variables (default u, v, w or y1..yp).
Polynomial discriminant(const std::vector<Polynomial>& phi, std::vector<std::string> target_names = {},
                        const EngineOptions& options = {});

/// Degree of the lowest homogeneous part; rejects units and zero.
std::uint64_t multiplicity(const Polynomial& delta);

/// Order of Δ(s·v); infinity when the line lies in Δ.
ExtendedCount line_intersection_number(const Polynomial& delta, const LineDirection& line);

/// Lowest form of Δ does not vanish at v.
bool tangent_cone_avoids(const Polynomial& delta, const LineDirection& line);

/// i(Δ, L; 0) = m(Δ, 0), with Δ replaced by its squarefree part.
bool is_generic_line(const Polynomial& delta, const LineDirection& line, const EngineOptions& options = {});

}  // namespace icis
