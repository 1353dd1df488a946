#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modlie/liealgebra.hpp"
#include "modlie/matrix.hpp"
#include "modlie/subspace.hpp"

namespace modlie::modrep {

/// Module over GF(p) given by the action matrices of a generating set.
struct MatrixRepresentation {
    PrimeField field;
    std::size_t degree;
    std::vector<Matrix> generators;
};

/// Adjoint action of every basis vector of the algebra on itself.
MatrixRepresentation regular_adjoint(const LieAlgebra& a);

/// Adjoint matrices of s restricted to s, in s's canonical basis.
MatrixRepresentation adjoint_representation(const SubalgebraHandle& s);

/// Smallest invariant subspace containing v.
Subspace spin(const MatrixRepresentation& rep, const Vec& v);

/// Irreducibility by the kernel-vector spinning criterion: a singular algebra
/// element theta decides the question once every vector of ker(theta) spins
/// to the full space and one vector of ker(theta^T) spins the transposed
/// module to full. Reducible verdicts carry a proper invariant subspace.
struct IrreducibilityVerdict {
    bool irreducible;
    std::optional<Subspace> witness; // proper invariant subspace when reducible
    std::string certificate;        // how theta was found and decided
};
IrreducibilityVerdict is_irreducible(const MatrixRepresentation& rep, std::uint64_t seed = 1);

/// Commutant dimension of an irreducible module by the standard-basis
/// propagation method; absolutely irreducible iff the dimension is 1.
struct CommutantVerdict {
    bool absolutely_irreducible;
    std::size_t commutant_dim;
};
CommutantVerdict is_absolutely_irreducible(const MatrixRepresentation& rep);

/// A minimal nonzero invariant subspace: spin kernel vectors, then shrink by
/// re-spinning members until no member spins smaller.
Subspace socle_minimal_submodule(const MatrixRepresentation& rep);

struct BilinearForm {
    Matrix gram;
};

/// Basis of the space of symmetric forms B with B([x,y],z) = B(x,[y,z]),
/// solved generator by generator on the Gram entries. Diagonal adjoint
/// actions are processed first; the order affects speed only.
std::vector<BilinearForm> invariant_symmetric_forms(const LieAlgebra& a);

/// Gram matrix pulled back to the basis of s.
BilinearForm restrict_form(const BilinearForm& b, const SubalgebraHandle& s);

/// True when the restricted Gram matrix vanishes identically.
bool is_totally_isotropic(const BilinearForm& b, const SubalgebraHandle& s);

std::size_t form_rank(const BilinearForm& b);

/// First basis triple with B([x,y],z) != B(x,[y,z]), or nullopt.
std::optional<std::array<std::size_t, 3>> form_invariance_violation(const LieAlgebra& a,
                                                                    const BilinearForm& b);

} // namespace modlie::modrep
