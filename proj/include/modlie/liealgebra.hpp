#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modlie/matrix.hpp"
#include "modlie/subspace.hpp"

namespace modlie {

using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Finite-dimensional algebra over GF(p) presented by a bracket tensor on an
/// indexed basis. Antisymmetry is enforced at construction; the Jacobi
/// identity is scanned exhaustively and the verdict stored, so non-Lie tables
/// (they arise on purpose in the Cartan-type experiments) can be built but
/// are refused by every operation that assumes a Lie algebra.
class LieAlgebra {
public:
    LieAlgebra(PrimeField f, std::size_t dim, std::vector<std::string> labels,
               std::vector<SparseRow> table);

    const PrimeField& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const SparseRow& pair_bracket(std::size_t i, std::size_t j) const {
        return table_[i * dim_ + j];
    }

    Vec bracket(const Vec& x, const Vec& y) const;

    /// Matrix of ad(x): column j holds the coordinates of [x, b_j].
    Matrix ad(const Vec& x) const;

    bool jacobi_ok() const { return jacobi_ok_; }
    const std::optional<std::array<std::size_t, 3>>& jacobi_witness() const {
        return jacobi_witness_;
    }
    void require_lie(const char* op) const;

    std::string render(const Vec& v) const;

private:
    PrimeField field_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<SparseRow> table_;
    bool jacobi_ok_;
    std::optional<std::array<std::size_t, 3>> jacobi_witness_;
};

/// First basis triple (i<j<k) violating Jacobi mod p, or nullopt.
std::optional<std::array<std::size_t, 3>> jacobi_violation_serial(const LieAlgebra& a);
std::optional<std::array<std::size_t, 3>> jacobi_violation(const LieAlgebra& a);

/// Bracket-closed subspace of a parent algebra.
struct SubalgebraHandle {
    const LieAlgebra* parent;
    Subspace space;

    std::size_t dim() const { return space.dim(); }
};

/// Wrap a subspace as a handle, verifying [space, space] is contained in it.
SubalgebraHandle make_subalgebra(const LieAlgebra& a, Subspace space);

/// Span of all brackets [a_i, b_j] of two row families. The bracket batch is
/// a data-parallel kernel; serial reference and dispatching variant agree.
Subspace span_of_brackets_serial(const LieAlgebra& a, const std::vector<Vec>& lhs,
                                 const std::vector<Vec>& rhs);
Subspace span_of_brackets(const LieAlgebra& a, const std::vector<Vec>& lhs,
                          const std::vector<Vec>& rhs);

/// Smallest bracket-closed subspace containing the generators.
SubalgebraHandle subalgebra_closure(const LieAlgebra& a, const std::vector<Vec>& generators);

SubalgebraHandle centralizer_of_element(const LieAlgebra& a, const Vec& x);

/// {x in ambient : [x, S] = 0}, as a plain subspace.
Subspace centralizer_of_subspace(const LieAlgebra& a, const Subspace& s);

SubalgebraHandle normalizer(const SubalgebraHandle& s);

SubalgebraHandle derived_subalgebra(const SubalgebraHandle& s);
std::vector<SubalgebraHandle> derived_series(const SubalgebraHandle& s);
std::vector<SubalgebraHandle> lower_central_series(const SubalgebraHandle& s);

/// Center of the subalgebra: {x in s : [x, s] = 0}.
Subspace center(const SubalgebraHandle& s);

struct NilpotencyVerdict {
    bool nilpotent;
    std::size_t index; // smallest k with (ad x)^k = 0 when nilpotent
};
NilpotencyVerdict is_ad_nilpotent(const LieAlgebra& a, const Vec& x);

/// Projective representatives v of the candidate space with
/// dim <e, v> equal to target_dim. Candidate dimension capped at 4.
std::vector<Vec> scan_partners(const LieAlgebra& a, const Vec& e, const Subspace& candidates,
                               std::size_t target_dim);

/// Subalgebra copied out as an algebra of its own, with maps to and from the
/// parent coordinates.
struct MaterializedSubalgebra {
    LieAlgebra alg;
    const LieAlgebra* parent;
    Matrix rows; // basis rows, one per subalgebra coordinate

    Vec to_parent(const Vec& sub_coords) const;
    Vec to_sub(const Vec& parent_vec) const;
};
MaterializedSubalgebra materialize(const SubalgebraHandle& s);

/// Quotient a/I with an explicit linear section, so radical preimages and
/// quotient-structure statements stay checkable.
struct QuotientAlgebra {
    LieAlgebra alg;
    Matrix section;                    // representative vectors in the parent coordinates
    Subspace ideal;                    // the ideal divided out
    std::vector<std::size_t> free_pos; // coordinate positions carried by the quotient

    Vec project(const Vec& parent_vec) const;
};
QuotientAlgebra quotient(const LieAlgebra& a, const Subspace& ideal);

/// Largest solvable ideal, by minimal-ideal peeling. Dimension capped at 12;
/// intended for graded zero-components and other small pieces.
SubalgebraHandle solvable_radical(const SubalgebraHandle& s);

bool is_abelian(const LieAlgebra& a);
bool is_abelian_subspace(const LieAlgebra& a, const Subspace& s);

} // namespace modlie
