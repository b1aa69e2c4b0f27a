#include "icis/singularity.hpp"

#include "icis/error.hpp"

#include <algorithm>
#include <map>

namespace icis {

namespace {

const MonomialOrder& local_order() {
    static const MonomialOrder order = MonomialOrder::negdegrevlex();
    return order;
}

ExtendedCount local_colength(const IdealPresentation& ideal, const EngineOptions& options) {
    return colength(ideal.basis(local_order(), options));
}

std::vector<Polynomial> maximal_jacobian_minors(const std::vector<Polynomial>& maps) {
    return maximal_minors(jacobian_matrix(maps, maps.front().ring()->names()));
}

void require_common_ring(const std::vector<Polynomial>& polys, const RingPtr& ring) {
    for (const auto& p : polys) {
        if (!same_ring(p.ring(), ring)) throw Error(ErrorCode::RingMismatch, "equations live in different rings");
    }
}

}  // namespace

IcisPresentation IcisPresentation::create(std::vector<Polynomial> phi, const EngineOptions& options) {
    if (phi.empty()) throw Error(ErrorCode::InvalidInput, "an ICIS needs at least one equation");
    const RingPtr ring = phi.front().ring();
    require_common_ring(phi, ring);
    if (phi.size() > ring->size()) {
        throw Error(ErrorCode::InvalidInput, "more equations than variables: not a complete intersection");
    }
    for (const auto& f : phi) {
        if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "defining equations must be nonzero");
        if (f.constant_term() != 0) throw Error(ErrorCode::InvalidInput, "defining equation does not vanish at the origin");
    }
    IdealPresentation certificate(ring, phi);
    certificate = certificate.plus(maximal_jacobian_minors(phi));
    if (!local_colength(certificate, options).is_finite()) {
        throw Error(ErrorCode::InfiniteMilnor, "singularity at the origin is not isolated");
    }
    return IcisPresentation(ring, std::move(phi));
}

GermFunction GermFunction::create(Polynomial f, IcisPresentation base) {
    if (!same_ring(f.ring(), base.ring())) throw Error(ErrorCode::RingMismatch, "function and ICIS live in different rings");
    if (f.constant_term() != 0) throw Error(ErrorCode::InvalidInput, "germ function does not vanish at the origin");
    return GermFunction(std::move(f), std::move(base));
}

LineDirection::LineDirection(std::vector<Rational> v) : v_(std::move(v)) {
    if (std::all_of(v_.begin(), v_.end(), [](const Rational& c) { return c == 0; })) {
        throw Error(ErrorCode::InvalidInput, "line direction must be nonzero");
    }
}

std::uint64_t hypersurface_milnor(const Polynomial& f, const EngineOptions& options) {
    if (f.constant_term() != 0) throw Error(ErrorCode::InvalidInput, "hypersurface does not pass through the origin");
    std::vector<Polynomial> partials;
    for (std::size_t v = 0; v < f.ring()->size(); ++v) partials.push_back(partial_derivative(f, v));
    const ExtendedCount mu = local_colength(IdealPresentation(f.ring(), partials), options);
    if (!mu.is_finite()) throw Error(ErrorCode::InfiniteMilnor, "hypersurface singularity is not isolated");
    return mu.value();
}

std::vector<Polynomial> upper_triangular_recombination(const std::vector<Polynomial>& phi, std::mt19937_64& rng) {
    std::vector<Polynomial> out = phi;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        for (std::size_t j = i + 1; j < phi.size(); ++j) {
            const long c = static_cast<long>(rng() % 19) - 9;
            if (c != 0) out[i] += phi[j] * Rational(c);
        }
    }
    return out;
}

IdealPresentation le_greuel_stage_ideal(const std::vector<Polynomial>& phi, std::size_t k) {
    if (k == 0 || k > phi.size()) throw Error(ErrorCode::InvalidInput, "chain stage out of range");
    std::vector<Polynomial> lower(phi.begin(), phi.begin() + static_cast<std::ptrdiff_t>(k - 1));
    const std::vector<Polynomial> prefix(phi.begin(), phi.begin() + static_cast<std::ptrdiff_t>(k));
    IdealPresentation ideal(phi.front().ring(), std::move(lower));
    return ideal.plus(maximal_jacobian_minors(prefix));
}

MilnorChain local_milnor_chain(const std::vector<Polynomial>& phi, std::uint64_t seed, const EngineOptions& options) {
    if (phi.empty()) throw Error(ErrorCode::InvalidInput, "empty equation list");
    require_common_ring(phi, phi.front().ring());
    std::mt19937_64 rng(seed);
    std::string last_failure;
    for (unsigned attempt = 0; attempt <= kGenericityRetries; ++attempt) {
        MilnorChain chain;
        chain.attempt = attempt;
        chain.equations = attempt == 0 ? phi : upper_triangular_recombination(phi, rng);
        std::uint64_t previous = 0;
        bool ok = true;
        for (std::size_t k = 1; k <= phi.size() && ok; ++k) {
            const ExtendedCount c = local_colength(le_greuel_stage_ideal(chain.equations, k), options);
            if (!c.is_finite() || c.value() < previous) {
                last_failure = "stage " + std::to_string(k) + " has infinite local colength";
                ok = false;
                break;
            }
            chain.stage_colengths.push_back(c.value());
            previous = c.value() - previous;
            chain.stage_milnor.push_back(previous);
        }
        if (ok) return chain;
    }
    throw Error(ErrorCode::GenericityFailure, "Lê–Greuel chain not generic after " +
                                                  std::to_string(kGenericityRetries) + " recombinations: " + last_failure);
}

MilnorChain icis_milnor_chain(const IcisPresentation& x, std::uint64_t seed, const EngineOptions& options) {
    return local_milnor_chain(x.phi(), seed, options);
}

std::uint64_t icis_milnor(const IcisPresentation& x, std::uint64_t seed, const EngineOptions& options) {
    return icis_milnor_chain(x, seed, options).milnor();
}

IdealPresentation function_critical_ideal(const Polynomial& f, const std::vector<Polynomial>& phi) {
    std::vector<Polynomial> maps{f};
    maps.insert(maps.end(), phi.begin(), phi.end());
    require_common_ring(maps, f.ring());
    IdealPresentation ideal(f.ring(), phi);
    return ideal.plus(maximal_jacobian_minors(maps));
}

std::uint64_t function_on_icis_milnor(const GermFunction& g, const EngineOptions& options) {
    const ExtendedCount mu = local_colength(function_critical_ideal(g.f(), g.base().phi()), options);
    if (!mu.is_finite()) throw Error(ErrorCode::InfiniteMilnor, "function has a non-isolated singularity on X");
    return mu.value();
}

Polynomial translate(const Polynomial& f, std::span<const Rational> point) {
    const RingPtr& ring = f.ring();
    if (point.size() != ring->size()) throw Error(ErrorCode::InvalidInput, "point has the wrong dimension");
    std::map<std::string, Polynomial> shift;
    for (std::size_t i = 0; i < ring->size(); ++i) {
        shift.emplace(ring->name(i), Polynomial::variable(ring, i) + Polynomial::constant(ring, point[i]));
    }
    return substitute(f, shift, ring);
}

std::uint64_t milnor_at_point(const GermFunction& g, std::span<const Rational> point, const EngineOptions& options) {
    std::vector<Polynomial> phi;
    for (const auto& eq : g.base().phi()) {
        if (eq.evaluate(point) != 0) throw Error(ErrorCode::InvalidInput, "point does not lie on the ICIS");
        phi.push_back(translate(eq, point));
    }
    const Polynomial f = translate(g.f(), point) - Polynomial::constant(g.f().ring(), g.f().evaluate(point));
    const ExtendedCount mu = local_colength(function_critical_ideal(f, phi), options);
    if (!mu.is_finite()) throw Error(ErrorCode::InfiniteMilnor, "function has a non-isolated singularity at the point");
    return mu.value();
}

Polynomial discriminant(const std::vector<Polynomial>& phi, std::vector<std::string> target_names,
                        const EngineOptions& options) {
    if (phi.empty()) throw Error(ErrorCode::InvalidInput, "discriminant of an empty map");
    const RingPtr source = phi.front().ring();
    require_common_ring(phi, source);
    const std::size_t p = phi.size();
    if (p > source->size()) throw Error(ErrorCode::Unsupported, "map has more components than source variables");
    if (target_names.empty()) {
        static const std::vector<std::string> small{"u", "v", "w"};
        for (std::size_t i = 0; i < p; ++i) target_names.push_back(p <= 3 ? small[i] : "y" + std::to_string(i + 1));
    }
    if (target_names.size() != p) throw Error(ErrorCode::InvalidInput, "one target variable per map component required");
    std::vector<std::string> names = source->names();
    for (const auto& t : target_names) {
        if (source->contains(t)) throw Error(ErrorCode::InvalidInput, "target variable '" + t + "' clashes with a source variable");
        names.push_back(t);
    }
    const RingPtr graph_ring = make_ring(names);
    const RingPtr target_ring = make_ring(target_names);

    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < p; ++i) {
        gens.push_back(Polynomial::variable(graph_ring, target_names[i]) - change_ring(phi[i], graph_ring));
    }
    for (auto& minor : maximal_jacobian_minors(phi)) gens.push_back(change_ring(minor, graph_ring));

    const IdealPresentation eliminant = elimination_ideal(IdealPresentation(graph_ring, gens), target_names, options);
    if (eliminant.is_zero_ideal()) throw Error(ErrorCode::Unsupported, "critical image is not a hypersurface");
    if (eliminant.generators().size() != 1) throw Error(ErrorCode::Unsupported, "discriminant eliminant is not principal");
    const Polynomial equation = change_ring(eliminant.generators().front(), target_ring);
    if (equation.is_constant()) throw Error(ErrorCode::Unsupported, "critical set is empty: no discriminant hypersurface");
    return squarefree_part(equation, options);
}

std::uint64_t multiplicity(const Polynomial& delta) {
    if (delta.is_zero()) throw Error(ErrorCode::InvalidInput, "multiplicity of the zero polynomial");
    if (delta.constant_term() != 0) throw Error(ErrorCode::InvalidInput, "multiplicity of a unit");
    return static_cast<std::uint64_t>(lowest_degree_form(delta).total_degree());
}

ExtendedCount line_intersection_number(const Polynomial& delta, const LineDirection& line) {
    const RingPtr& ring = delta.ring();
    const auto& v = line.components();
    if (v.size() != ring->size()) throw Error(ErrorCode::InvalidInput, "line direction has the wrong dimension");
    if (delta.constant_term() != 0) throw Error(ErrorCode::InvalidInput, "hypersurface does not pass through the origin");
    const RingPtr curve = make_ring({fresh_variable_name(*ring, "s")});
    const Polynomial s = Polynomial::variable(curve, 0);
    std::map<std::string, Polynomial> param;
    for (std::size_t i = 0; i < ring->size(); ++i) param.emplace(ring->name(i), s * v[i]);
    return order_of_vanishing(substitute(delta, param, curve));
}

bool tangent_cone_avoids(const Polynomial& delta, const LineDirection& line) {
    return lowest_degree_form(delta).evaluate(line.components()) != 0;
}

bool is_generic_line(const Polynomial& delta, const LineDirection& line, const EngineOptions& options) {
    const Polynomial reduced = squarefree_part(delta, options);
    return line_intersection_number(reduced, line) == multiplicity(reduced);
}

}  // namespace icis
