#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "modlie/gf.hpp"
#include "modlie/matrix.hpp"

namespace modlie {
class LieAlgebra;
}

namespace modlie::rootdata {

/// Version tag of the deterministic extraspecial-pair sign convention; part
/// of the dump format and the report header.
inline constexpr const char* kConventionVersion = "extraspecial-v1";

using RootVec = std::vector<int>;

/// Root system of finite type in Bourbaki simple-root ordering. Positive
/// roots are stored as coefficient vectors over the simple roots, sorted by
/// height then lexicographically; all roots are the positives followed by
/// their negatives.
struct RootDatum {
    std::string type_label;
    int rank = 0;
    std::vector<std::vector<int>> cartan; // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<int> sym_d;               // d_i with d_i * a_ij = d_j * a_ji
    std::vector<RootVec> positive_roots;

    std::size_t num_positive() const { return positive_roots.size(); }
    std::vector<RootVec> all_roots() const;

    /// Signed root index: i+1 for positive_roots[i], -(i+1) for its negative,
    /// 0 if not a root.
    int signed_index(const RootVec& v) const;
    bool is_root(const RootVec& v) const { return signed_index(v) != 0; }

    /// W-invariant symmetric form (alpha_i, alpha_j) = d_i * a_ij.
    long long bilinear(const RootVec& a, const RootVec& b) const;
    long long length_sq(const RootVec& a) const { return bilinear(a, a); }

    /// <beta, alpha_i^vee> = sum_j cartan[i][j] * beta_j.
    long long cartan_pairing(const RootVec& beta, int i) const;

    static int height(const RootVec& v);

private:
    friend RootDatum build_root_datum(const std::string& type_label);
    std::map<RootVec, int> index_;
};

/// Supported types: A1, A2, B2, G2, F4.
RootDatum build_root_datum(const std::string& type_label);

using SparseIntRow = std::vector<std::pair<std::uint32_t, long long>>;

/// Chevalley basis e_alpha (alpha positive), f_alpha, h_1..h_rank with the
/// integer structure table. Signs follow a fixed extraspecial-pair
/// convention: for each non-simple positive root, the structure constant of
/// its extraspecial pair is +(p+1); everything else is derived from the
/// standard relations.
struct ChevalleyBasis {
    RootDatum rd;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<SparseIntRow> int_table; // dim*dim sparse rows, [b_i, b_j]

    std::size_t e_index(std::size_t i) const { return i; }
    std::size_t f_index(std::size_t i) const { return rd.num_positive() + i; }
    std::size_t h_index(std::size_t l) const { return 2 * rd.num_positive() + l; }

    const SparseIntRow& entry(std::size_t i, std::size_t j) const {
        return int_table[i * dim + j];
    }

    std::optional<std::size_t> index_of_label(const std::string& label) const;

    /// tau-degree of basis vector b under simple-root weights t: the pairing
    /// of the root with t for e's, its negative for f's, 0 for h's.
    long long basis_degree(std::size_t b, const std::vector<long long>& weights) const;
};

ChevalleyBasis chevalley_structure_constants(const RootDatum& rd);

/// First basis triple (i<j<k) violating the Jacobi identity over the
/// integers, or nullopt. Serial reference and OpenMP variant agree exactly.
std::optional<std::array<std::size_t, 3>> jacobi_violation_int_serial(const ChevalleyBasis& cb);
std::optional<std::array<std::size_t, 3>> jacobi_violation_int(const ChevalleyBasis& cb);

/// The structure table reduced mod p, with antisymmetry and the Jacobi
/// identity re-verified over GF(p).
LieAlgebra reduce_mod_p(const ChevalleyBasis& cb, PrimeField f);

/// Signed sum of labelled basis vectors as a coordinate vector over GF(p).
Vec element_from_label_sum(const ChevalleyBasis& cb, PrimeField f,
                           const std::vector<std::pair<long long, std::string>>& terms);

/// Deterministic dump: header with basis labels, then lines "i j k c" for
/// i < j meaning [b_i, b_j] has coefficient c on b_k (coefficients mod p).
void dump_structure_constants(const ChevalleyBasis& cb, PrimeField f, std::ostream& os);

} // namespace modlie::rootdata
