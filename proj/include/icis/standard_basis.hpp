#pragma once

#include "icis/order.hpp"
#include "icis/polynomial.hpp"

#include <atomic>
#include <cstdint>
#include <vector>

namespace icis {

/// Thread-safe tally of reduction steps spent across engine calls.
class StepMeter {
public:
    void add(std::uint64_t steps) { total_.fetch_add(steps, std::memory_order_relaxed); }
    std::uint64_t total() const { return total_.load(std::memory_order_relaxed); }

private:
    std::atomic<std::uint64_t> total_{0};
};

struct EngineOptions {
    /// Reduction steps allowed per completion or normal-form call.
    std::uint64_t step_budget = 1'000'000;
    StepMeter* meter = nullptr;
};

class StandardBasis {
public:
    /// Wraps generators without completing them; completed() is false.
    static StandardBasis unchecked(RingPtr ring, std::vector<Polynomial> generators, MonomialOrder order);

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& generators() const& { return generators_; }
    std::vector<Polynomial> generators() && { return std::move(generators_); }
    const std::vector<Monomial>& leading_monomials() const { return leading_; }
    bool completed() const { return completed_; }
    std::uint64_t steps_used() const { return steps_used_; }
    /// True when the (localized) ideal is the whole ring.
    bool is_unit_ideal() const;

private:
    friend StandardBasis complete_basis(std::vector<Polynomial> generators, const MonomialOrder& order,
                                        const RingPtr& ring, const EngineOptions& options);

    StandardBasis(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(std::move(order)) {}

    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Polynomial> generators_;
    std::vector<Monomial> leading_;
    bool completed_ = false;
    std::uint64_t steps_used_ = 0;
};

/// Minimal generators of a monomial ideal and the standard monomials outside it.
class Staircase {
public:
    Staircase(std::size_t variables, std::vector<Monomial> generators);
    explicit Staircase(const StandardBasis& basis);

    const std::vector<Monomial>& generators() const& { return generators_; }
    std::vector<Monomial> generators() && { return std::move(generators_); }
    std::size_t variables() const { return variables_; }
    bool contains(const Monomial& m) const;
    /// Every variable appears alone to some power among the generators.
    bool is_finite() const;
    ExtendedCount count_standard_monomials() const;
    /// Precondition: is_finite().
    std::vector<Monomial> standard_monomials() const;

private:
    std::size_t variables_;
    std::vector<Monomial> generators_;
};

/// (lcm/lt(f))·f - (lcm/lt(g))·g with leading terms taken monic.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Global orders: fully reduced remainder. Local orders: Mora's weak normal
/// form, zero exactly when f lies in the localized ideal.
Polynomial normal_form(const Polynomial& f, const StandardBasis& basis, const EngineOptions& options = {});

/// Buchberger completion for global orders, Mora tangent-cone completion for
/// local ones. The result is minimal, inter-reduced (global case) and monic.
/// Throws Error(BudgetExhausted) when the step budget runs out.
StandardBasis complete_basis(std::vector<Polynomial> generators, const MonomialOrder& order,
                             const RingPtr& ring, const EngineOptions& options = {});

ExtendedCount colength(const StandardBasis& basis);
bool is_zero_dimensional(const StandardBasis& basis);

bool ideal_contains(const StandardBasis& basis, const Polynomial& f, const EngineOptions& options = {});

}  // namespace icis
