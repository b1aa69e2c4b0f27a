#include "icis/ideal.hpp"

#include "icis/error.hpp"

#include <algorithm>
#include <exception>

namespace icis {

PolynomialMatrix::PolynomialMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring)) {}

void PolynomialMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
    if (!same_ring(p.ring(), ring_)) throw Error(ErrorCode::RingMismatch, "matrix entry outside the matrix ring");
    entries_.at(r * cols_ + c) = std::move(p);
}

PolynomialMatrix PolynomialMatrix::transposed() const {
    PolynomialMatrix t(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = at(r, c);
    }
    return t;
}

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
        if (!same_ring(g.ring(), ring_)) throw Error(ErrorCode::RingMismatch, "ideal generator outside the ideal ring");
        if (!g.is_zero()) generators_.push_back(std::move(g));
    }
}

const StandardBasis& IdealPresentation::basis(const MonomialOrder& order, const EngineOptions& options) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    for (const auto& entry : cache_->entries) {
        if (entry->order() == order) return *entry;
    }
    auto computed = std::make_shared<const StandardBasis>(complete_basis(generators_, order, ring_, options));
    cache_->entries.push_back(computed);
    return *computed;
}

IdealPresentation IdealPresentation::plus(const std::vector<Polynomial>& extra) const {
    std::vector<Polynomial> gens = generators_;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return IdealPresentation(ring_, std::move(gens));
}

PolynomialMatrix jacobian_matrix(const std::vector<Polynomial>& maps, const std::vector<std::string>& vars) {
    if (maps.empty() || vars.empty()) throw Error(ErrorCode::InvalidInput, "jacobian of an empty map or variable list");
    const RingPtr ring = maps.front().ring();
    PolynomialMatrix m(ring, maps.size(), vars.size());
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (!same_ring(maps[i].ring(), ring)) throw Error(ErrorCode::RingMismatch, "jacobian maps live in different rings");
        for (std::size_t j = 0; j < vars.size(); ++j) m.set(i, j, partial_derivative(maps[i], vars[j]));
    }
    return m;
}

namespace {

Polynomial determinant_of(const PolynomialMatrix& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols) {
    const RingPtr& ring = m.ring();
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    if (rows.size() == 2) {
        return m.at(rows[0], cols[0]) * m.at(rows[1], cols[1]) - m.at(rows[0], cols[1]) * m.at(rows[1], cols[0]);
    }
    // Laplace expansion along the first remaining row.
    Polynomial det(ring);
    const std::size_t row = rows.front();
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Polynomial& entry = m.at(row, cols[k]);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c != k) sub_cols.push_back(cols[c]);
        }
        Polynomial term = entry * determinant_of(m, sub_rows, sub_cols);
        if (k % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current(k);
    for (std::size_t i = 0; i < k; ++i) current[i] = i;
    if (k > n) return out;
    while (true) {
        out.push_back(current);
        std::size_t i = k;
        while (i > 0 && current[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++current[i - 1];
        for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
    }
    return out;
}

Polynomial minor_for(const PolynomialMatrix& m, const std::vector<std::size_t>& cols) {
    std::vector<std::size_t> rows(m.rows());
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
    std::vector<std::size_t> c = cols;
    return determinant_of(m, rows, c);
}

}  // namespace

Polynomial determinant(const PolynomialMatrix& square) {
    if (square.rows() != square.cols() || square.rows() == 0) {
        throw Error(ErrorCode::InvalidInput, "determinant of a non-square matrix");
    }
    std::vector<std::size_t> idx(square.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return minor_for(square, idx);
}

std::vector<Polynomial> maximal_minors_serial(const PolynomialMatrix& matrix) {
    const PolynomialMatrix m = matrix.rows() > matrix.cols() ? matrix.transposed() : matrix;
    std::vector<Polynomial> out;
    for (const auto& cols : combinations(m.cols(), m.rows())) out.push_back(minor_for(m, cols));
    return out;
}

std::vector<Polynomial> maximal_minors(const PolynomialMatrix& matrix) {
    const PolynomialMatrix m = matrix.rows() > matrix.cols() ? matrix.transposed() : matrix;
    const auto subsets = combinations(m.cols(), m.rows());
    std::vector<Polynomial> out(subsets.size(), Polynomial(m.ring()));
    std::vector<std::exception_ptr> failures(subsets.size());
    const auto count = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) {
        try {
            out[k] = minor_for(m, subsets[k]);
        } catch (...) {
            failures[k] = std::current_exception();
        }
    }
    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
    return out;
}

IdealPresentation relative_jacobian_ideal(const Polynomial& F, const std::vector<Polynomial>& phi,
                                          const std::string& parameter) {
    const RingPtr& ring = F.ring();
    if (!ring->contains(parameter)) {
        throw Error(ErrorCode::UnknownVariable, "parameter '" + parameter + "' is not a ring variable");
    }
    std::vector<std::string> vars;
    for (const auto& name : ring->names()) {
        if (name != parameter) vars.push_back(name);
    }
    return relative_jacobian_ideal(F, phi, parameter, vars);
}

IdealPresentation relative_jacobian_ideal(const Polynomial& F, const std::vector<Polynomial>& phi,
                                          const std::string& parameter, const std::vector<std::string>& vars) {
    if (std::find(vars.begin(), vars.end(), parameter) != vars.end()) {
        throw Error(ErrorCode::InvalidInput, "the parameter '" + parameter + "' must not be differentiated");
    }
    std::vector<Polynomial> maps{F};
    maps.insert(maps.end(), phi.begin(), phi.end());
    return IdealPresentation(F.ring(), maximal_minors(jacobian_matrix(maps, vars)));
}

IdealPresentation elimination_ideal(const IdealPresentation& ideal, const std::vector<std::string>& keep,
                                    const EngineOptions& options) {
    const Ring& ring = *ideal.ring();
    std::vector<std::size_t> eliminate;
    for (const auto& name : keep) {
        if (!ring.contains(name)) throw Error(ErrorCode::UnknownVariable, "cannot keep unknown variable '" + name + "'");
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (std::find(keep.begin(), keep.end(), ring.name(i)) == keep.end()) eliminate.push_back(i);
    }
    const MonomialOrder order =
        eliminate.empty() ? MonomialOrder::degrevlex() : MonomialOrder::block(eliminate, ring.size());
    const StandardBasis& basis = ideal.basis(order, options);
    std::vector<Polynomial> kept;
    for (const auto& g : basis.generators()) {
        const bool free_of_eliminated =
            std::none_of(eliminate.begin(), eliminate.end(), [&](std::size_t v) { return g.involves(v); });
        if (free_of_eliminated) kept.push_back(g);
    }
    return IdealPresentation(ideal.ring(), std::move(kept));
}

namespace {

// Ring with one extra variable appended, and the ideal moved into it.
struct Extended {
    RingPtr ring;
    Polynomial extra;
    std::vector<Polynomial> generators;
};

Extended extend(const IdealPresentation& ideal, std::string_view stem) {
    std::vector<std::string> names = ideal.ring()->names();
    names.push_back(fresh_variable_name(*ideal.ring(), stem));
    Extended e{make_ring(names), Polynomial(nullptr), {}};
    e.extra = Polynomial::variable(e.ring, names.back());
    for (const auto& g : ideal.generators()) e.generators.push_back(change_ring(g, e.ring));
    return e;
}

}  // namespace

IdealPresentation saturation(const IdealPresentation& ideal, const Polynomial& h, const EngineOptions& options) {
    if (!same_ring(h.ring(), ideal.ring())) throw Error(ErrorCode::RingMismatch, "saturation across rings");
    Extended e = extend(ideal, "sat_z");
    e.generators.push_back(Polynomial::constant(e.ring, 1) - e.extra * change_ring(h, e.ring));
    IdealPresentation big(e.ring, e.generators);
    const IdealPresentation eliminated = elimination_ideal(big, ideal.ring()->names(), options);
    std::vector<Polynomial> back;
    for (const auto& g : eliminated.generators()) back.push_back(change_ring(g, ideal.ring()));
    return IdealPresentation(ideal.ring(), std::move(back));
}

bool radical_membership(const Polynomial& f, const IdealPresentation& ideal, const EngineOptions& options) {
    if (!same_ring(f.ring(), ideal.ring())) throw Error(ErrorCode::RingMismatch, "radical membership across rings");
    if (f.is_zero()) return true;
    Extended e = extend(ideal, "rad_z");
    e.generators.push_back(Polynomial::constant(e.ring, 1) - e.extra * change_ring(f, e.ring));
    return complete_basis(e.generators, MonomialOrder::degrevlex(), e.ring, options).is_unit_ideal();
}

bool local_radical_membership(const Polynomial& f, const IdealPresentation& ideal, const EngineOptions& options) {
    if (!same_ring(f.ring(), ideal.ring())) throw Error(ErrorCode::RingMismatch, "radical membership across rings");
    if (f.is_zero()) return true;
    const IdealPresentation saturated = saturation(ideal, f, options);
    const auto& gens = saturated.generators();
    return std::any_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.constant_term() != 0; });
}

Polynomial univariate_eliminant(const IdealPresentation& ideal, std::size_t var, const EngineOptions& options) {
    const IdealPresentation e = elimination_ideal(ideal, {ideal.ring()->name(var)}, options);
    if (e.generators().size() > 1) {
        throw Error(ErrorCode::InvalidInput, "univariate elimination ideal is not principal");
    }
    return e.generators().empty() ? Polynomial(ideal.ring()) : e.generators().front();
}

IdealPresentation zero_dimensional_radical(const IdealPresentation& ideal, const EngineOptions& options) {
    const StandardBasis& basis = ideal.basis(MonomialOrder::degrevlex(), options);
    if (basis.is_unit_ideal()) return ideal;
    if (!is_zero_dimensional(basis)) {
        throw Error(ErrorCode::NotZeroDimensional, "radical construction needs a zero-dimensional ideal");
    }
    std::vector<Polynomial> extra;
    for (std::size_t v = 0; v < ideal.ring()->size(); ++v) {
        extra.push_back(squarefree_part(univariate_eliminant(ideal, v, options), options));
    }
    return ideal.plus(extra);
}

std::uint64_t distinct_point_count(const IdealPresentation& ideal, const EngineOptions& options) {
    const IdealPresentation radical = zero_dimensional_radical(ideal, options);
    const ExtendedCount c = colength(radical.basis(MonomialOrder::degrevlex(), options));
    return c.value();
}

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b, const EngineOptions& options) {
    if (!same_ring(a.ring(), b.ring())) throw Error(ErrorCode::RingMismatch, "gcd across rings");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.ring(), 1);
    // lcm generates <a> ∩ <b> = (<w a, (1 - w) b>) ∩ Q[x].
    Extended e = extend(IdealPresentation(a.ring(), {}), "gcd_w");
    const Polynomial ea = change_ring(a, e.ring);
    const Polynomial eb = change_ring(b, e.ring);
    IdealPresentation big(e.ring, {e.extra * ea, (Polynomial::constant(e.ring, 1) - e.extra) * eb});
    const IdealPresentation meet = elimination_ideal(big, a.ring()->names(), options);
    if (meet.generators().size() != 1) throw Error(ErrorCode::InvalidInput, "intersection of principal ideals is not principal");
    const Polynomial l = change_ring(meet.generators().front(), a.ring());
    return exact_divide(a * b, l).monic();
}

Polynomial squarefree_part(const Polynomial& f, const EngineOptions& options) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "squarefree part of the zero polynomial");
    Polynomial g = f;
    for (std::size_t v = 0; v < f.ring()->size() && !g.is_constant(); ++v) {
        const Polynomial d = partial_derivative(f, v);
        if (!d.is_zero()) g = polynomial_gcd(g, d, options);
    }
    return exact_divide(f, g).monic();
}

}  // namespace icis
