#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modlie/liealgebra.hpp"
#include "modlie/matrix.hpp"
#include "modlie/rootdata.hpp"
#include "modlie/subspace.hpp"

namespace modlie::grading {

/// Integer weights on the simple roots; e_alpha has degree <alpha, t>,
/// f_alpha its negative, Cartan elements degree 0.
struct Cocharacter {
    std::vector<long long> weights;
};

struct CocharacterSolution {
    enum class Kind { Unique, Underdetermined, Inconsistent } kind;
    std::vector<long long> weights;                // populated when unique
    std::vector<std::vector<long long>> kernel;    // primitive directions when underdetermined
};

/// Solve <root, t> = target_degree over the rationals for every given root;
/// integrality of a unique solution is checked.
CocharacterSolution derive_cocharacter(const rootdata::RootDatum& rd,
                                       const std::vector<rootdata::RootVec>& roots,
                                       long long target_degree);

/// Degree components of a graded space; all subspaces share one ambient.
struct Grading {
    std::map<int, Subspace> components;

    std::vector<std::pair<int, std::size_t>> profile() const;
    int lowest() const;
    int highest() const;
    std::size_t total_dim() const;
    const Subspace* component(int degree) const;
    /// Degree of a homogeneous vector, nullopt if not homogeneous.
    std::optional<int> degree_of(const Vec& v) const;
};

/// Grading of the Chevalley algebra by a cocharacter: each basis vector is
/// homogeneous, so components are coordinate spans.
Grading cocharacter_grading(const rootdata::ChevalleyBasis& cb, PrimeField f,
                            const Cocharacter& tau);

Grading grading_from_components(std::map<int, Subspace> components);

/// Components of s under an ambient grading: s intersected with each ambient
/// component. Throws unless the dimensions add up to dim s (homogeneity is
/// verified, not assumed).
Grading grade_subalgebra(const SubalgebraHandle& s, const Grading& ambient);

/// First violation of [C_i, C_j] contained in C_{i+j}, or nullopt. A missing
/// target component counts as the zero space.
std::optional<std::pair<int, int>> grading_axiom_violation(const LieAlgebra& a, const Grading& g);

/// Components pairwise independent with total dimension dim(space) and every
/// component inside space.
bool is_direct_decomposition(const Grading& g, const Subspace& space);

struct VDecomposition {
    Vec w;             // basis vector of ker(ad e) intersected with L(tau, top)
    Subspace V;        // span(w) + [W, w]
    Subspace VV_span;  // span of all [u, v] for u, v in V
};

/// The complement module construction: w spans ker(ad e) * L(tau_degree)
/// (must be one-dimensional), V = span(w) + [W, w].
VDecomposition build_V_decomposition(const SubalgebraHandle& L, const SubalgebraHandle& W,
                                     const Vec& e, const Grading& ambient, int kernel_degree);

/// Regrade L from the degree map d on the tau-components of V: the new
/// component of degree k is the span of the V-pieces with d(i) = k together
/// with all products [V_i, V_j] with d(i) + d(j) = k. Throws if the result
/// is not a direct decomposition of L.
Grading regrade_by_table(const SubalgebraHandle& L, const std::map<int, Subspace>& v_components,
                         const std::map<int, int>& degree_map);

struct Sl2Triple {
    Vec e, h, f;
};

/// Search a small subalgebra for (e1, h1, f1) with [h1,e1] = 2e1,
/// [h1,f1] = -2f1, [e1,f1] = h1; deterministic enumeration order.
std::optional<Sl2Triple> find_sl2_triple(const SubalgebraHandle& s);
bool is_sl2_triple(const LieAlgebra& a, const Vec& e, const Vec& h, const Vec& f);

/// Hypothesis checklist for the depth-one recognition theorems. The report
/// never claims the isomorphism itself; it certifies the inputs the external
/// classification needs, with witnesses.
struct RecognitionReport {
    std::string hypothesis_set; // which recognition theorem the checks feed
    int depth = 0;
    std::vector<std::pair<int, std::size_t>> component_dims;
    std::vector<std::pair<std::string, bool>> checklist;
    std::optional<Sl2Triple> sl2_witness;        // in parent coordinates
    std::size_t radical_dim = 0;                 // null-component radical
    std::size_t center_dim = 0;                  // of the null component
    bool reported_lowest_irreducible = false;    // informational, not required
    bool all_ok = false;
};

/// Checks for the depth-one case with non-semisimple null component: depth
/// exactly one, the expected component profile, a nonzero nilpotent
/// non-central radical in the null component, and an sl2 triple modulo the
/// radical.
RecognitionReport ermolaev_recognition(const SubalgebraHandle& L, const Grading& g,
                                       bool simplicity_verified,
                                       const std::vector<std::pair<int, std::size_t>>& expected_profile);

/// Checks for the depth-one case with classical null component: depth one,
/// the expected profile, null component = sl2 plus a one-dimensional center.
RecognitionReport witt_recognition(const SubalgebraHandle& W, const Grading& g,
                                   bool simplicity_verified,
                                   const std::vector<std::pair<int, std::size_t>>& expected_profile);

struct DualityVerdict {
    std::size_t lowest_dim;
    std::size_t top_dim;
    bool unequal; // dimensions differ, so the components cannot be dual
};
DualityVerdict duality_check(const Grading& g);

/// Explicit-isomorphism verifier: does the linear map (columns = images of
/// the basis of a) preserve brackets on all basis pairs?
bool is_bracket_preserving(const LieAlgebra& a, const LieAlgebra& b, const Matrix& map);

} // namespace modlie::grading
