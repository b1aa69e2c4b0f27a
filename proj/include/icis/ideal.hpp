#pragma once

#include "icis/polynomial.hpp"
#include "icis/standard_basis.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace icis {

class PolynomialMatrix {
public:
    PolynomialMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RingPtr& ring() const { return ring_; }
    const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Polynomial p);
    PolynomialMatrix transposed() const;

private:
    RingPtr ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Polynomial> entries_;
};

/// Ideal given by generators, with completed bases cached per order. Copies
/// share the cache; the cache is guarded for concurrent readers.
class IdealPresentation {
public:
    IdealPresentation(RingPtr ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const& { return generators_; }
    std::vector<Polynomial> generators() && { return std::move(generators_); }
    bool is_zero_ideal() const { return generators_.empty(); }

    const StandardBasis& basis(const MonomialOrder& order, const EngineOptions& options = {}) const;
    IdealPresentation plus(const std::vector<Polynomial>& extra) const;
    IdealPresentation plus(const IdealPresentation& other) const { return plus(other.generators_); }

private:
    struct Cache {
        std::mutex mutex;
        std::vector<std::shared_ptr<const StandardBasis>> entries;
    };

    RingPtr ring_;
    std::vector<Polynomial> generators_;
    std::shared_ptr<Cache> cache_;
};

/// Entry (i, j) = d maps[i] / d vars[j].
PolynomialMatrix jacobian_matrix(const std::vector<Polynomial>& maps, const std::vector<std::string>& vars);

/// Determinants of all maximal square submatrices, in lexicographic order of
/// the chosen column (or row) subsets. Evaluated with OpenMP across subsets.
std::vector<Polynomial> maximal_minors(const PolynomialMatrix& m);
/// Serial reference for maximal_minors.
std::vector<Polynomial> maximal_minors_serial(const PolynomialMatrix& m);
Polynomial determinant(const PolynomialMatrix& square);

/// Maximal minors of the Jacobian of (F, phi) in every ring variable except
/// `parameter`.
IdealPresentation relative_jacobian_ideal(const Polynomial& F, const std::vector<Polynomial>& phi,
                                          const std::string& parameter);
/// Same, with explicit differentiation variables; rejects `parameter` among them.
IdealPresentation relative_jacobian_ideal(const Polynomial& F, const std::vector<Polynomial>& phi,
                                          const std::string& parameter, const std::vector<std::string>& vars);

/// I ∩ Q[keep], generators returned in I's ring.
IdealPresentation elimination_ideal(const IdealPresentation& ideal, const std::vector<std::string>& keep,
                                    const EngineOptions& options = {});

/// I : h^∞.
IdealPresentation saturation(const IdealPresentation& ideal, const Polynomial& h, const EngineOptions& options = {});

/// f ∈ √I over the algebraic closure (affine): 1 ∈ I + <1 - z f>.
bool radical_membership(const Polynomial& f, const IdealPresentation& ideal, const EngineOptions& options = {});

/// f ∈ √(I·O_0) in the local ring at the origin: the origin is not a zero of I : f^∞.
bool local_radical_membership(const Polynomial& f, const IdealPresentation& ideal,
                              const EngineOptions& options = {});

/// Generator of I ∩ Q[var] for zero-dimensional I (zero when the eliminant is trivial).
Polynomial univariate_eliminant(const IdealPresentation& ideal, std::size_t var, const EngineOptions& options = {});

/// Number of distinct points of V(I) over the algebraic closure.
std::uint64_t distinct_point_count(const IdealPresentation& ideal, const EngineOptions& options = {});

/// √I for zero-dimensional I, by adjoining squarefree eliminants.
IdealPresentation zero_dimensional_radical(const IdealPresentation& ideal, const EngineOptions& options = {});

/// gcd normalized monic under degrevlex; gcd(0, 0) = 0.
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b, const EngineOptions& options = {});

/// Generator of √<f>: f / gcd(f, df/dx_1, ..., df/dx_n), monic under degrevlex.
Polynomial squarefree_part(const Polynomial& f, const EngineOptions& options = {});

}  // namespace icis
