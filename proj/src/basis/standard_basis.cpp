#include "icis/standard_basis.hpp"

#include "icis/error.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

namespace icis {

namespace {

struct Element {
    Polynomial poly;
    Monomial lead;
    Rational lead_coefficient;
    std::uint64_t ecart;
};

Element make_element(Polynomial p, const MonomialOrder& order) {
    const Term& lt = p.leading_term(order);
    Monomial lead = lt.monomial;
    Rational lc = lt.coefficient;
    const auto ecart = static_cast<std::uint64_t>(p.total_degree()) - lead.degree();
    return Element{std::move(p), std::move(lead), std::move(lc), ecart};
}

class StepCounter {
public:
    explicit StepCounter(const EngineOptions& options) : limit_(options.step_budget), meter_(options.meter) {}
    ~StepCounter() {
        if (meter_) meter_->add(used_);
    }
    StepCounter(const StepCounter&) = delete;
    StepCounter& operator=(const StepCounter&) = delete;

    void step() {
        if (++used_ > limit_) {
            throw Error(ErrorCode::BudgetExhausted,
                        "step budget of " + std::to_string(limit_) + " reduction steps exhausted");
        }
    }
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t limit_;
    StepMeter* meter_;
    std::uint64_t used_ = 0;
};

// Local case: once the leading ideal holds every monomial of degree D, m^D
// lies in the localized ideal (Nakayama), so terms of degree > D are dropped.
using Corner = std::optional<std::uint64_t>;

Polynomial truncate_above(const Polynomial& p, const Corner& corner) {
    if (!corner || p.total_degree() <= static_cast<std::int64_t>(*corner)) return p;
    std::vector<Term> kept;
    for (const auto& t : p.terms()) {
        if (t.monomial.degree() <= *corner) kept.push_back(t);
    }
    return Polynomial::from_terms(p.ring(), std::move(kept));
}

Corner corner_of(std::size_t variables, const std::vector<Monomial>& leads) {
    const Staircase stairs(variables, leads);
    if (!stairs.is_finite()) return std::nullopt;
    std::uint64_t top = 0;
    for (const auto& m : stairs.standard_monomials()) top = std::max(top, m.degree());
    return top + 1;
}

Polynomial drop_term(const Polynomial& p, const Term& t) {
    return p.minus_scaled(t.coefficient, Monomial(t.monomial.size()), Polynomial::term(p.ring(), t.monomial, 1));
}

// Full reduction against a global basis; `skip` excludes one element (used
// for tail inter-reduction).
Polynomial reduce_global(const Polynomial& f, const std::vector<Element>& basis, const MonomialOrder& order,
                         StepCounter& counter, std::size_t skip = static_cast<std::size_t>(-1)) {
    Polynomial rest = f;
    std::vector<Term> remainder;
    while (!rest.is_zero()) {
        const Term& lt = rest.leading_term(order);
        const Element* reducer = nullptr;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k != skip && basis[k].lead.divides(lt.monomial)) {
                reducer = &basis[k];
                break;
            }
        }
        counter.step();
        if (reducer) {
            rest = rest.minus_scaled(lt.coefficient / reducer->lead_coefficient,
                                     reducer->lead.quotient_of(lt.monomial), reducer->poly);
        } else {
            remainder.push_back(lt);
            rest = drop_term(rest, remainder.back());
        }
    }
    return Polynomial::from_terms(f.ring(), std::move(remainder));
}

// Mora's normal form with ecart-minimal reducer choice. Intermediate results
// whose ecart is smaller than the chosen reducer's join the reducer set.
Polynomial reduce_mora(const Polynomial& f, const std::vector<Element>& basis, const MonomialOrder& order,
                       StepCounter& counter, const Corner& corner) {
    std::vector<const Element*> reducers;
    reducers.reserve(basis.size());
    for (const auto& e : basis) reducers.push_back(&e);
    std::deque<Element> added;
    Polynomial h = truncate_above(f, corner);
    while (!h.is_zero()) {
        const Element current = make_element(h, order);
        const Element* best = nullptr;
        for (const Element* e : reducers) {
            if (e->lead.divides(current.lead) && (!best || e->ecart < best->ecart)) best = e;
        }
        if (!best) return h;
        counter.step();
        if (best->ecart > current.ecart) {
            added.push_back(current);
            reducers.push_back(&added.back());
        }
        h = truncate_above(h.minus_scaled(current.lead_coefficient / best->lead_coefficient,
                                          best->lead.quotient_of(current.lead), best->poly),
                           corner);
    }
    return h;
}

Polynomial reduce(const Polynomial& f, const std::vector<Element>& basis, const MonomialOrder& order,
                  StepCounter& counter, const Corner& corner = std::nullopt) {
    return order.is_global() ? reduce_global(f, basis, order, counter) : reduce_mora(f, basis, order, counter, corner);
}

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint64_t degree;
};

class PairQueue {
public:
    void push(Pair p) {
        pending_.insert({p.i, p.j});
        pairs_.push_back(std::move(p));
    }
    bool empty() const { return pairs_.empty(); }
    bool is_pending(std::size_t a, std::size_t b) const {
        return pending_.count({std::min(a, b), std::max(a, b)}) != 0;
    }
    // Normal strategy: minimal lcm degree, ties by insertion.
    Pair pop() {
        auto best = pairs_.begin();
        for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
            if (it->degree < best->degree) best = it;
        }
        Pair p = *best;
        pairs_.erase(best);
        pending_.erase({p.i, p.j});
        return p;
    }

private:
    std::vector<Pair> pairs_;
    std::set<std::pair<std::size_t, std::size_t>> pending_;
};

Polynomial spoly(const Element& a, const Element& b) {
    const Monomial l = lcm(a.lead, b.lead);
    const Polynomial left = a.poly.times_monomial(a.lead.quotient_of(l)) * (1 / a.lead_coefficient);
    return left.minus_scaled(1 / b.lead_coefficient, b.lead.quotient_of(l), b.poly);
}

}  // namespace

StandardBasis StandardBasis::unchecked(RingPtr ring, std::vector<Polynomial> generators, MonomialOrder order) {
    StandardBasis basis(ring, std::move(order));
    for (auto& g : generators) {
        if (!same_ring(g.ring(), ring)) throw Error(ErrorCode::RingMismatch, "generator outside the basis ring");
        if (g.is_zero()) continue;
        basis.leading_.push_back(g.leading_term(basis.order_).monomial);
        basis.generators_.push_back(std::move(g));
    }
    return basis;
}

bool StandardBasis::is_unit_ideal() const {
    return std::any_of(leading_.begin(), leading_.end(), [](const Monomial& m) { return m.is_one(); });
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::InvalidInput, "s-polynomial of a zero polynomial");
    if (!same_ring(f.ring(), g.ring())) throw Error(ErrorCode::RingMismatch, "s-polynomial across rings");
    return spoly(make_element(f, order), make_element(g, order));
}

Polynomial normal_form(const Polynomial& f, const StandardBasis& basis, const EngineOptions& options) {
    if (!basis.completed()) throw Error(ErrorCode::IncompleteBasis, "normal form needs a completed standard basis");
    if (!same_ring(f.ring(), basis.ring())) throw Error(ErrorCode::RingMismatch, "normal form across rings");
    std::vector<Element> elements;
    elements.reserve(basis.generators().size());
    for (const auto& g : basis.generators()) elements.push_back(make_element(g, basis.order()));
    StepCounter counter(options);
    const Corner corner = basis.order().is_local() ? corner_of(basis.ring()->size(), basis.leading_monomials()) : Corner{};
    return reduce(f, elements, basis.order(), counter, corner);
}

bool ideal_contains(const StandardBasis& basis, const Polynomial& f, const EngineOptions& options) {
    return normal_form(f, basis, options).is_zero();
}

StandardBasis complete_basis(std::vector<Polynomial> generators, const MonomialOrder& order, const RingPtr& ring,
                             const EngineOptions& options) {
    if (!order.is_global() && !order.is_local()) {
        throw Error(ErrorCode::Unsupported, "mixed global/local orders are not supported");
    }
    for (const auto& g : generators) {
        if (!same_ring(g.ring(), ring)) throw Error(ErrorCode::RingMismatch, "generators live in different rings");
    }
    const bool global = order.is_global();
    StepCounter counter(options);
    std::vector<Element> elements;
    PairQueue queue;
    Corner corner;

    auto add_element = [&](Polynomial p) {
        p = truncate_above(p, corner);
        if (p.is_zero()) return false;  // lies in m^(D+1)
        elements.push_back(make_element(p.monic(), order));
        const std::size_t k = elements.size() - 1;
        for (std::size_t i = 0; i < k; ++i) {
            // Product criterion: coprime leading monomials reduce to zero.
            if (global && coprime(elements[i].lead, elements[k].lead)) continue;
            Monomial l = lcm(elements[i].lead, elements[k].lead);
            const auto d = l.degree();
            queue.push(Pair{i, k, std::move(l), d});
        }
        if (!global) {
            std::vector<Monomial> leads;
            for (const auto& e : elements) leads.push_back(e.lead);
            const Corner next = corner_of(ring->size(), leads);
            if (next && (!corner || *next < *corner)) {
                corner = next;
                for (auto& e : elements) {
                    if (e.lead.degree() <= *corner) e = make_element(truncate_above(e.poly, corner), order);
                }
            }
        }
        return elements.back().lead.is_one();
    };

    bool unit = false;
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        if (add_element(std::move(g))) {
            unit = true;
            break;
        }
    }
    while (!unit && !queue.empty()) {
        const Pair pair = queue.pop();
        if (global) {
            // Chain criterion: some k divides the lcm and both its pairs are settled.
            bool redundant = false;
            for (std::size_t k = 0; k < elements.size() && !redundant; ++k) {
                if (k == pair.i || k == pair.j) continue;
                redundant = elements[k].lead.divides(pair.lcm) && !queue.is_pending(pair.i, k) &&
                            !queue.is_pending(pair.j, k);
            }
            if (redundant) continue;
        }
        counter.step();
        Polynomial h = reduce(spoly(elements[pair.i], elements[pair.j]), elements, order, counter, corner);
        if (!h.is_zero()) unit = add_element(std::move(h));
    }

    StandardBasis result(ring, order);
    if (unit) {
        result.generators_.push_back(Polynomial::constant(ring, 1));
        result.leading_.push_back(Monomial(ring->size()));
        result.completed_ = true;
        result.steps_used_ = counter.used();
        return result;
    }

    // Minimalize: drop elements whose leading monomial is divisible by another
    // (earlier one wins on ties).
    std::vector<Element> minimal;
    for (std::size_t a = 0; a < elements.size(); ++a) {
        bool keep = true;
        for (std::size_t b = 0; b < elements.size() && keep; ++b) {
            if (a == b || !elements[b].lead.divides(elements[a].lead)) continue;
            keep = !(elements[b].lead != elements[a].lead || b < a);
        }
        if (keep) minimal.push_back(elements[a]);
    }
    if (global) {
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            const Term lt = minimal[k].poly.leading_term(order);
            Polynomial tail = drop_term(minimal[k].poly, lt);
            Polynomial reduced = reduce_global(tail, minimal, order, counter, k);
            reduced += Polynomial::term(ring, lt.monomial, lt.coefficient);
            minimal[k] = make_element(reduced.monic(), order);
        }
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Element& a, const Element& b) { return order.compare(a.lead, b.lead) < 0; });
    for (auto& e : minimal) {
        Polynomial p = e.poly * (1 / e.lead_coefficient);
        result.leading_.push_back(e.lead);
        result.generators_.push_back(std::move(p));
    }
    result.completed_ = true;
    result.steps_used_ = counter.used();
    return result;
}

Staircase::Staircase(std::size_t variables, std::vector<Monomial> generators) : variables_(variables) {
    for (auto& g : generators) {
        if (g.size() != variables) throw Error(ErrorCode::InvalidInput, "staircase generator has wrong length");
    }
    std::vector<Monomial> minimal;
    for (std::size_t a = 0; a < generators.size(); ++a) {
        bool keep = true;
        for (std::size_t b = 0; b < generators.size() && keep; ++b) {
            if (a == b || !generators[b].divides(generators[a])) continue;
            keep = !(generators[b] != generators[a] || b < a);
        }
        if (keep) minimal.push_back(generators[a]);
    }
    generators_ = std::move(minimal);
}

Staircase::Staircase(const StandardBasis& basis) : Staircase(basis.ring()->size(), basis.leading_monomials()) {
    if (!basis.completed()) throw Error(ErrorCode::IncompleteBasis, "staircase needs a completed standard basis");
}

bool Staircase::contains(const Monomial& m) const {
    return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool Staircase::is_finite() const {
    for (const auto& g : generators_) {
        if (g.is_one()) return true;
    }
    for (std::size_t v = 0; v < variables_; ++v) {
        const bool has_pure_power = std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) {
            return g[v] > 0 && g.degree() == g[v];
        });
        if (!has_pure_power) return false;
    }
    return true;
}

namespace {

// Counts standard monomials in the variables [v, n) for generators already
// restricted to exponents <= the fixed prefix.
std::uint64_t count_from(const std::vector<const Monomial*>& gens, std::size_t v, std::size_t n,
                         std::vector<Monomial>* collect, Monomial& prefix) {
    auto trivial_on_rest = [&](const Monomial& g) {
        for (std::size_t k = v; k < n; ++k) {
            if (g[k] != 0) return false;
        }
        return true;
    };
    for (const Monomial* g : gens) {
        if (trivial_on_rest(*g)) return 0;
    }
    if (v == n) {
        if (collect) collect->push_back(prefix);
        return 1;
    }
    Exponent bound = 0;
    bool found = false;
    for (const Monomial* g : gens) {
        bool pure = (*g)[v] > 0;
        for (std::size_t k = v + 1; k < n && pure; ++k) pure = (*g)[k] == 0;
        if (pure && (!found || (*g)[v] < bound)) {
            bound = (*g)[v];
            found = true;
        }
    }
    // is_finite() guarantees a pure power once lower variables are fixed.
    std::uint64_t total = 0;
    for (Exponent e = 0; e < bound; ++e) {
        std::vector<const Monomial*> sub;
        for (const Monomial* g : gens) {
            if ((*g)[v] <= e) sub.push_back(g);
        }
        prefix[v] = e;
        total += count_from(sub, v + 1, n, collect, prefix);
    }
    prefix[v] = 0;
    return total;
}

}  // namespace

ExtendedCount Staircase::count_standard_monomials() const {
    if (!is_finite()) return ExtendedCount::infinity();
    std::vector<const Monomial*> gens;
    for (const auto& g : generators_) gens.push_back(&g);
    Monomial prefix(variables_);
    return ExtendedCount(count_from(gens, 0, variables_, nullptr, prefix));
}

std::vector<Monomial> Staircase::standard_monomials() const {
    if (!is_finite()) throw Error(ErrorCode::NotZeroDimensional, "infinitely many standard monomials");
    std::vector<const Monomial*> gens;
    for (const auto& g : generators_) gens.push_back(&g);
    std::vector<Monomial> out;
    Monomial prefix(variables_);
    count_from(gens, 0, variables_, &out, prefix);
    return out;
}

ExtendedCount colength(const StandardBasis& basis) { return Staircase(basis).count_standard_monomials(); }

bool is_zero_dimensional(const StandardBasis& basis) { return Staircase(basis).is_finite(); }

}  // namespace icis
