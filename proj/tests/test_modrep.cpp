#include <doctest.h>

#include "modlie/liealgebra.hpp"
#include "modlie/modrep.hpp"
#include "modlie/pipeline.hpp"
#include "modlie/rootdata.hpp"
#include "support/oracles.hpp"

using namespace modlie;
using namespace modlie::modrep;

namespace {

const rootdata::ChevalleyBasis& f4_basis() {
    static rootdata::ChevalleyBasis cb =
        rootdata::chevalley_structure_constants(rootdata::build_root_datum("F4"));
    return cb;
}

const LieAlgebra& f4_mod3() {
    static LieAlgebra g = rootdata::reduce_mod_p(f4_basis(), PrimeField(3));
    return g;
}

const SubalgebraHandle& theorem_subalgebra() {
    static pipeline::ResolvedGenerators gens =
        pipeline::resolve_generators(f4_basis(), f4_mod3(), "1232");
    static SubalgebraHandle L = subalgebra_closure(f4_mod3(), {gens.e, gens.f});
    return L;
}

} // namespace

TEST_CASE("adjoint representations") {
    PrimeField f3(3);
    SUBCASE("a one-dimensional algebra gives a single zero matrix") {
        LieAlgebra a(f3, 1, {"z"}, std::vector<SparseRow>(1));
        const auto rep = regular_adjoint(a);
        CHECK(rep.degree == 1);
        REQUIRE(rep.generators.size() == 1);
        CHECK(rep.generators[0].is_zero());
    }
    SUBCASE("ad h in sl2 is diagonal with eigenvalues 2, -2, 0") {
        LieAlgebra a = rootdata::reduce_mod_p(
            rootdata::chevalley_structure_constants(rootdata::build_root_datum("A1")), f3);
        const auto rep = regular_adjoint(a); // basis order e, f, h
        const Matrix& adh = rep.generators[2];
        CHECK(adh == Matrix(f3, {{2, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
    }
    SUBCASE("the theorem subalgebra yields 26 matrices of size 26") {
        const auto rep = adjoint_representation(theorem_subalgebra());
        CHECK(rep.degree == 26);
        CHECK(rep.generators.size() == 26);
    }
    SUBCASE("homomorphism property on random pairs") {
        const auto rep = adjoint_representation(theorem_subalgebra());
        const MaterializedSubalgebra m = materialize(theorem_subalgebra());
        testsupport::ModuleGen gen{17};
        for (int t = 0; t < 10; ++t) {
            Vec x(26, 0), y(26, 0);
            for (std::size_t i = 0; i < 26; ++i) {
                x[i] = static_cast<Scalar>(gen.next() % 3);
                y[i] = static_cast<Scalar>(gen.next() % 3);
            }
            const Matrix ad_xy = m.alg.ad(m.alg.bracket(x, y));
            const Matrix commutator = kernels::matmul(m.alg.ad(x), m.alg.ad(y)) -
                                      kernels::matmul(m.alg.ad(y), m.alg.ad(x));
            CHECK(ad_xy == commutator);
        }
    }
}

TEST_CASE("spin") {
    const auto rep = adjoint_representation(theorem_subalgebra());
    SUBCASE("spin of zero is the zero space") {
        CHECK(spin(rep, Vec(26, 0)).dim() == 0);
    }
    SUBCASE("spin of any basis vector fills the irreducible module") {
        for (std::size_t i = 0; i < 26; i += 5) {
            Vec v(26, 0);
            v[i] = 1;
            CHECK(spin(rep, v).dim() == 26);
        }
    }
    SUBCASE("spin agrees with the oracle closure on small modules") {
        testsupport::ModuleGen gen{23};
        for (int t = 0; t < 10; ++t) {
            const auto small = gen.random_module(PrimeField(3), 5, 2);
            Vec v(5, 0);
            v[t % 5] = 1;
            CHECK(spin(small, v) == testsupport::oracle_spin(small, v));
        }
    }
}

TEST_CASE("irreducibility verdicts on the worked examples") {
    PrimeField f3(3);
    SUBCASE("the adjoint module of L is irreducible") {
        CHECK(is_irreducible(adjoint_representation(theorem_subalgebra())).irreducible);
    }
    SUBCASE("the adjoint module of a 2-dimensional abelian algebra is reducible") {
        LieAlgebra a(f3, 2, {"a", "b"}, std::vector<SparseRow>(4));
        const auto verdict = is_irreducible(regular_adjoint(a));
        CHECK_FALSE(verdict.irreducible);
        REQUIRE(verdict.witness.has_value());
        CHECK(verdict.witness->dim() == 1);
    }
    SUBCASE("reducible witnesses are invariant subspaces") {
        testsupport::ModuleGen gen{31};
        const auto rep = gen.random_block_module(f3, 6, 2, 2);
        const auto verdict = is_irreducible(rep);
        REQUIRE_FALSE(verdict.irreducible);
        REQUIRE(verdict.witness.has_value());
        CHECK(verdict.witness->dim() > 0);
        CHECK(verdict.witness->dim() < 6);
        for (const Matrix& g : rep.generators)
            for (std::size_t i = 0; i < verdict.witness->dim(); ++i)
                CHECK(verdict.witness->contains(g.apply(verdict.witness->basis_row(i))));
    }
}

TEST_CASE("meataxe agrees with the spin-all oracle on random small modules") {
    testsupport::ModuleGen gen{2024};
    PrimeField f3(3);
    int reducible_seen = 0, irreducible_seen = 0;
    for (int t = 0; t < 25; ++t) {
        const std::size_t degree = 2 + gen.next() % 5; // 2..6
        modrep::MatrixRepresentation rep =
            (t % 3 == 2) ? gen.random_block_module(f3, degree, 1 + gen.next() % (degree - 1), 2)
                         : gen.random_module(f3, degree, 2);
        const bool fast = is_irreducible(rep).irreducible;
        const bool slow = testsupport::oracle_irreducible_serial(rep);
        CHECK(fast == slow);
        (slow ? irreducible_seen : reducible_seen)++;
    }
    // the sample must exercise both outcomes
    CHECK(reducible_seen > 0);
    CHECK(irreducible_seen > 0);
}

TEST_CASE("spin-all oracle serial and parallel variants agree") {
    testsupport::ModuleGen gen{555};
    PrimeField f3(3);
    for (int t = 0; t < 6; ++t) {
        const auto rep = gen.random_module(f3, 4 + t % 3, 2);
        CHECK(testsupport::oracle_irreducible_serial(rep) ==
              testsupport::oracle_irreducible_parallel(rep));
    }
}

TEST_CASE("absolute irreducibility") {
    PrimeField f3(3);
    SUBCASE("the adjoint module of L has a one-dimensional commutant") {
        const auto verdict = is_absolutely_irreducible(adjoint_representation(theorem_subalgebra()));
        CHECK(verdict.absolutely_irreducible);
        CHECK(verdict.commutant_dim == 1);
    }
    SUBCASE("a rotation-like single generator is irreducible but not absolutely") {
        // companion matrix of x^2 + 1, irreducible over GF(3)
        MatrixRepresentation rep{f3, 2, {Matrix(f3, {{0, 2}, {1, 0}})}};
        CHECK(is_irreducible(rep).irreducible);
        const auto verdict = is_absolutely_irreducible(rep);
        CHECK_FALSE(verdict.absolutely_irreducible);
        CHECK(verdict.commutant_dim == 2);
        // exhaustive oracle over all 81 candidate matrices
        CHECK(testsupport::oracle_commutant_dim_tiny(rep) == 2);
    }
    SUBCASE("commutant dimension matches the tiny exhaustive oracle when irreducible") {
        testsupport::ModuleGen gen{808};
        int checked = 0;
        for (int t = 0; t < 20 && checked < 5; ++t) {
            const auto rep = gen.random_module(f3, 2, 2);
            if (!is_irreducible(rep).irreducible) continue;
            CHECK(is_absolutely_irreducible(rep).commutant_dim ==
                  testsupport::oracle_commutant_dim_tiny(rep));
            ++checked;
        }
        CHECK(checked == 5);
    }
}

TEST_CASE("socle pieces") {
    PrimeField f3(3);
    SUBCASE("an irreducible module is its own minimal submodule") {
        const auto rep = adjoint_representation(theorem_subalgebra());
        CHECK(socle_minimal_submodule(rep).dim() == 26);
    }
    SUBCASE("a module with a trivial line returns that line") {
        // one generator, block diag(companion, 0): the last coordinate is fixed
        Matrix g(f3, 3, 3);
        g.at(0, 1) = 2;
        g.at(1, 0) = 1;
        MatrixRepresentation rep{f3, 3, {g}};
        const Subspace s = socle_minimal_submodule(rep);
        CHECK(s.dim() == 1);
        CHECK(s.contains(Vec{0, 0, 1}));
    }
    SUBCASE("minimal submodules are minimal: every member spins back to them") {
        testsupport::ModuleGen gen{99};
        for (int t = 0; t < 8; ++t) {
            const auto rep = gen.random_block_module(f3, 5, 2, 2);
            const Subspace s = socle_minimal_submodule(rep);
            REQUIRE(s.dim() > 0);
            for_each_projective_rep(f3, s.dim(), [&](const Vec& coeff) {
                Vec v(5, 0);
                for (std::size_t i = 0; i < s.dim(); ++i)
                    if (coeff[i]) v = vec_add(f3, v, vec_scaled(f3, s.basis_row(i), coeff[i]));
                CHECK(spin(rep, v) == s);
                return true;
            });
        }
    }
}

TEST_CASE("invariant symmetric forms") {
    PrimeField f3(3);
    SUBCASE("F4 mod 3 carries a unique form up to scalar, and it is non-degenerate") {
        const auto forms = invariant_symmetric_forms(f4_mod3());
        REQUIRE(forms.size() == 1);
        CHECK(form_rank(forms[0]) == 52);
        CHECK_FALSE(form_invariance_violation(f4_mod3(), forms[0]).has_value());
    }
    SUBCASE("sl2 mod 3 admits the trace form of the adjoint representation") {
        LieAlgebra a = rootdata::reduce_mod_p(
            rootdata::chevalley_structure_constants(rootdata::build_root_datum("A1")), f3);
        const auto forms = invariant_symmetric_forms(a);
        REQUIRE(forms.size() == 1);
        // independent construction: K(x, y) = trace(ad x ad y)
        Matrix killing(f3, 3, 3);
        const auto rep = regular_adjoint(a);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                const Matrix prod = kernels::matmul(rep.generators[i], rep.generators[j]);
                Scalar tr = 0;
                for (std::size_t t = 0; t < 3; ++t) tr = f3.add(tr, prod.at(t, t));
                killing.at(i, j) = tr;
            }
        CHECK(form_rank({killing}) == 3);
        // the computed line contains the Killing form
        bool matched = false;
        for (Scalar c = 1; c < 3; ++c)
            if (forms[0].gram.scaled(c) == killing) matched = true;
        CHECK(matched);
    }
    SUBCASE("an abelian algebra admits every symmetric form") {
        LieAlgebra a(f3, 3, {"a", "b", "c"}, std::vector<SparseRow>(9));
        CHECK(invariant_symmetric_forms(a).size() == 6); // 3*4/2
    }
}

TEST_CASE("form restriction and isotropy") {
    const auto forms = invariant_symmetric_forms(f4_mod3());
    REQUIRE(forms.size() == 1);
    const BilinearForm& kappa = forms[0];
    SUBCASE("the form vanishes identically on the theorem subalgebra") {
        CHECK(is_totally_isotropic(kappa, theorem_subalgebra()));
    }
    SUBCASE("a subalgebra containing an e/f pair is not isotropic") {
        const auto& cb = f4_basis();
        const LieAlgebra& g = f4_mod3();
        Vec e(g.dim(), 0), f(g.dim(), 0);
        e[*cb.index_of_label("e1000")] = 1;
        f[*cb.index_of_label("f1000")] = 1;
        SubalgebraHandle s = subalgebra_closure(g, {e, f});
        CHECK_FALSE(is_totally_isotropic(kappa, s));
        CHECK(form_rank(restrict_form(kappa, s)) > 0);
    }
    SUBCASE("restriction to the zero subspace is vacuously isotropic") {
        SubalgebraHandle zero{&f4_mod3(), Subspace(PrimeField(3), 52)};
        CHECK(is_totally_isotropic(kappa, zero));
    }
}
