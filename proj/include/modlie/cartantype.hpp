#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "modlie/gf.hpp"
#include "modlie/liealgebra.hpp"
#include "modlie/matrix.hpp"
#include "modlie/subspace.hpp"

namespace modlie::cartantype {

/// Truncated divided-power algebra O(2;(n1,n2)): monomials x^(a1,a2) with
/// 0 <= a_i < p^{n_i}, product x^(a) x^(b) = binom(a+b, a) x^(a+b)
/// componentwise, zero on exponent overflow. Elements are coefficient
/// vectors over the monomial basis, indexed a1 * p^{n2} + a2.
struct DividedPowerAlgebra {
    PrimeField field;
    int n1, n2;
    std::size_t bound1, bound2; // p^{n1}, p^{n2}
    std::size_t dim;            // bound1 * bound2

    std::size_t mono_index(std::size_t a1, std::size_t a2) const { return a1 * bound2 + a2; }
    std::pair<std::size_t, std::size_t> exponents(std::size_t idx) const {
        return {idx / bound2, idx % bound2};
    }
    std::string mono_label(std::size_t idx) const;

    Vec multiply(const Vec& f, const Vec& g) const;
    /// Divided-power partial derivative: d_i x^(a) = x^(a - e_i).
    Vec derive(const Vec& f, int which) const;
    Vec monomial(std::size_t a1, std::size_t a2) const;
};

DividedPowerAlgebra make_divided_power(PrimeField f, int n1, int n2);

/// Derivation f1*d1 + f2*d2 with f_i in the monomial algebra.
struct WittDerivation {
    Vec f1, f2;
};

Vec apply_derivation(const DividedPowerAlgebra& o, const WittDerivation& d, const Vec& f);
Vec divergence(const DividedPowerAlgebra& o, const WittDerivation& d);
WittDerivation witt_bracket(const DividedPowerAlgebra& o, const WittDerivation& d,
                            const WittDerivation& e);
/// Twisted module action D.f = D(f) + alpha * div(D) * f.
Vec twisted_action(const DividedPowerAlgebra& o, const WittDerivation& d, const Vec& f,
                   Scalar alpha);
/// The bracket of two module elements, landing in the derivation part:
/// [f,g] = (f d2(g) - g d2(f)) d1 + (g d1(f) - f d1(g)) d2.
WittDerivation o_bracket(const DividedPowerAlgebra& o, const Vec& f, const Vec& g);

/// W(2;n) + O(2;n) with the divergence-twisted action and the special
/// O-O bracket: [D, f] = D.f between the summands. Basis layout: x^(a)d1
/// block, x^(a)d2 block, then the monomial block. The table is built for any
/// prime; it is a Lie algebra exactly when the Jacobi scan passes (p = 3),
/// and alg.require_lie guards the operations that need one.
struct ErmolaevAlgebra {
    DividedPowerAlgebra o;
    Scalar alpha;
    LieAlgebra alg;           // dimension 3 * p^{n1+n2}
    std::vector<int> degrees; // native Z-degree per basis vector

    std::size_t w_index(int which, std::size_t mono) const {
        return static_cast<std::size_t>(which) * o.dim + mono;
    }
    std::size_t o_index(std::size_t mono) const { return 2 * o.dim + mono; }

    Vec embed_w(const WittDerivation& d) const;
    Vec embed_o(const Vec& f) const;
    WittDerivation w_part(const Vec& v) const;
    Vec o_part(const Vec& v) const;
};

ErmolaevAlgebra build_ermolaev(int n1, int n2, PrimeField f, Scalar alpha = 1);

/// The W-submodule of O generated by the constant monomial under the twisted
/// action; ambient is the monomial basis.
Subspace o_prime_submodule(const DividedPowerAlgebra& o, Scalar alpha);

/// Native grading components as subspaces of the full Ermolaev algebra:
/// degree |a|-1 both for Witt monomials x^(a)d_i and module monomials x^(a).
std::map<int, Subspace> ermolaev_grading(const ErmolaevAlgebra& er);

/// Graded dimensions of W(2;(n1,n2)) alone, counted from the monomial basis.
std::map<int, std::size_t> witt_profile(PrimeField f, int n1, int n2);

/// J(x1 d1, x1, x2) evaluated through the bracket table at (1,1); zero iff
/// p = 3, and -3*(x1 d1 + x2 d2) otherwise.
struct JacobiDefect {
    WittDerivation w;
    Vec o;
    bool zero;
    std::string rendered;
};
JacobiDefect jacobi_defect(PrimeField f);

} // namespace modlie::cartantype
