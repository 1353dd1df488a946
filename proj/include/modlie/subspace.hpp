#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "modlie/kernels.hpp"
#include "modlie/matrix.hpp"

namespace modlie {

/// Subspace of GF(p)^n in canonical form: the basis matrix is the reduced row
/// echelon form of any spanning set, zero rows dropped, pivot columns strictly
/// increasing. Two equal subspaces therefore have identical basis matrices.
class Subspace {
public:
    /// The zero subspace of GF(p)^n.
    Subspace(PrimeField f, std::size_t ambient_dim)
        : basis_(f, 0, ambient_dim), pivots_() {}

    static Subspace from_spanning(const Matrix& rows);
    static Subspace from_spanning(PrimeField f, std::size_t ambient_dim,
                                  const std::vector<Vec>& rows);
    static Subspace full(PrimeField f, std::size_t ambient_dim);

    const PrimeField& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_row(std::size_t i) const { return basis_.row(i); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residual of v after elimination against the basis; zero iff v is a
    /// member. The residual is the canonical coset representative.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
    bool contains(const Subspace& other) const;

    /// Coefficients of v in terms of the basis rows, or nullopt if v is not
    /// a member. For an RREF basis these are just the pivot-column entries.
    std::optional<Vec> coordinates(const Vec& v) const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    explicit Subspace(Matrix reduced_basis, std::vector<std::size_t> pivots)
        : basis_(std::move(reduced_basis)), pivots_(std::move(pivots)) {}

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Solution space of m*x = 0 (column vectors), canonical basis.
Subspace kernel(const Matrix& m);

/// Reduced row echelon form and rank, input unchanged.
std::pair<Matrix, std::size_t> rref(const Matrix& m);

/// Affine solution set of a stacked linear system. Inconsistency is a value,
/// not an error.
struct AffineSolution {
    bool consistent;
    Vec particular;       // one solution, empty if inconsistent
    Subspace homogeneous; // kernel of the stacked system

    std::size_t dim() const { return homogeneous.dim(); }
};

AffineSolution solve_simultaneous(PrimeField f, std::size_t unknowns,
                                  const std::vector<std::pair<Matrix, Vec>>& constraints);

/// Grow an echelon basis in place; returns true if v enlarged the span.
/// The rows stay in reduced echelon form, so this is the incremental version
/// of from_spanning used by closure loops.
class EchelonAccumulator {
public:
    EchelonAccumulator(PrimeField f, std::size_t ambient_dim) : f_(f), n_(ambient_dim) {}

    bool insert(Vec v);
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient_dim() const { return n_; }
    const std::vector<Vec>& rows() const { return rows_; }
    Subspace to_subspace() const;
    bool contains(const Vec& v) const;

private:
    PrimeField f_;
    std::size_t n_;
    std::vector<Vec> rows_;            // reduced echelon rows
    std::vector<std::size_t> pivots_;  // strictly increasing
};

/// Visit one representative of every projective point of GF(p)^d: the vectors
/// whose first nonzero coordinate is 1, in lexicographic order. Stops early if
/// fn returns false.
void for_each_projective_rep(PrimeField f, std::size_t d, const std::function<bool(const Vec&)>& fn);

} // namespace modlie
