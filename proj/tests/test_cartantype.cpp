#include <doctest.h>

#include "modlie/cartantype.hpp"
#include "modlie/liealgebra.hpp"
#include "modlie/modrep.hpp"

using namespace modlie;
using namespace modlie::cartantype;

namespace {

const ErmolaevAlgebra& er11() {
    static ErmolaevAlgebra er = build_ermolaev(1, 1, PrimeField(3), 1);
    return er;
}

} // namespace

TEST_CASE("divided-power multiplication") {
    DividedPowerAlgebra o = make_divided_power(PrimeField(3), 1, 1);
    CHECK(o.dim == 9);
    SUBCASE("x^(1,0) * x^(1,0) = binom(2,1) x^(2,0) = 2 x^(2,0)") {
        Vec prod = o.multiply(o.monomial(1, 0), o.monomial(1, 0));
        CHECK(prod[o.mono_index(2, 0)] == 2);
    }
    SUBCASE("exponent overflow truncates to zero") {
        CHECK(vec_is_zero(o.multiply(o.monomial(2, 0), o.monomial(1, 0))));
    }
    SUBCASE("associativity and commutativity, exhaustive on the basis") {
        for (std::size_t a = 0; a < o.dim; ++a)
            for (std::size_t b = 0; b < o.dim; ++b) {
                Vec va(o.dim, 0), vb(o.dim, 0);
                va[a] = 1;
                vb[b] = 1;
                CHECK(o.multiply(va, vb) == o.multiply(vb, va));
                for (std::size_t c = 0; c < o.dim; ++c) {
                    Vec vc(o.dim, 0);
                    vc[c] = 1;
                    CHECK(o.multiply(o.multiply(va, vb), vc) ==
                          o.multiply(va, o.multiply(vb, vc)));
                }
            }
    }
    SUBCASE("derivative of a divided power drops the exponent") {
        Vec d = o.derive(o.monomial(2, 1), 1);
        CHECK(d[o.mono_index(1, 1)] == 1);
        CHECK(vec_is_zero(o.derive(o.monomial(0, 1), 1)));
    }
}

TEST_CASE("divergence on the worked examples") {
    DividedPowerAlgebra o = make_divided_power(PrimeField(3), 1, 1);
    SUBCASE("div(x1 d1) = 1") {
        WittDerivation d{o.monomial(1, 0), Vec(o.dim, 0)};
        CHECK(divergence(o, d) == o.monomial(0, 0));
    }
    SUBCASE("div(d1) = 0") {
        WittDerivation d{o.monomial(0, 0), Vec(o.dim, 0)};
        CHECK(vec_is_zero(divergence(o, d)));
    }
    SUBCASE("div(x1x2 d1 + x2^2 d2) vanishes mod 3") {
        // ordinary monomials translate as x2^2 = 2 x^(0,2), so the divergence
        // is x^(0,1) + 2 x^(0,1) = 0
        WittDerivation d{o.monomial(1, 1), vec_scaled(o.field, o.monomial(0, 2), 2)};
        CHECK(vec_is_zero(divergence(o, d)));
    }
}

TEST_CASE("witt bracket on the worked examples") {
    DividedPowerAlgebra o = make_divided_power(PrimeField(3), 1, 1);
    const Vec zero(o.dim, 0);
    SUBCASE("[d1, x1 d1] = d1") {
        WittDerivation d{o.monomial(0, 0), zero};
        WittDerivation e{o.monomial(1, 0), zero};
        WittDerivation br = witt_bracket(o, d, e);
        CHECK(br.f1 == o.monomial(0, 0));
        CHECK(vec_is_zero(br.f2));
    }
    SUBCASE("[x1 d1, x2 d2] = 0") {
        WittDerivation d{o.monomial(1, 0), zero};
        WittDerivation e{zero, o.monomial(0, 1)};
        WittDerivation br = witt_bracket(o, d, e);
        CHECK(vec_is_zero(br.f1));
        CHECK(vec_is_zero(br.f2));
    }
    SUBCASE("[d1, x1x2 d2] = x2 d2") {
        WittDerivation d{o.monomial(0, 0), zero};
        WittDerivation e{zero, o.monomial(1, 1)};
        WittDerivation br = witt_bracket(o, d, e);
        CHECK(vec_is_zero(br.f1));
        CHECK(br.f2 == o.monomial(0, 1));
    }
}

TEST_CASE("twisted action on the worked examples") {
    DividedPowerAlgebra o = make_divided_power(PrimeField(3), 1, 1);
    const Vec zero(o.dim, 0);
    WittDerivation d1{o.monomial(0, 0), zero};
    WittDerivation x1d1{o.monomial(1, 0), zero};
    SUBCASE("d1 . x1 = 1 for every twist") {
        for (Scalar alpha = 0; alpha < 3; ++alpha)
            CHECK(twisted_action(o, d1, o.monomial(1, 0), alpha) == o.monomial(0, 0));
    }
    SUBCASE("(x1 d1) . 1 = alpha") {
        CHECK(twisted_action(o, x1d1, o.monomial(0, 0), 1) == o.monomial(0, 0));
        CHECK(vec_is_zero(twisted_action(o, x1d1, o.monomial(0, 0), 0)));
    }
}

TEST_CASE("module axiom for the twisted action, exhaustive at (1,1,3)") {
    DividedPowerAlgebra o = make_divided_power(PrimeField(3), 1, 1);
    // [D,E].f = D.(E.f) - E.(D.f) for all basis derivations and monomials
    std::vector<WittDerivation> basis;
    for (int which = 0; which < 2; ++which)
        for (std::size_t m = 0; m < o.dim; ++m) {
            WittDerivation d{Vec(o.dim, 0), Vec(o.dim, 0)};
            (which == 0 ? d.f1 : d.f2)[m] = 1;
            basis.push_back(std::move(d));
        }
    for (Scalar alpha = 0; alpha < 3; ++alpha)
        for (const auto& d : basis)
            for (const auto& e : basis)
                for (std::size_t m = 0; m < o.dim; ++m) {
                    const Vec f = [&] {
                        Vec v(o.dim, 0);
                        v[m] = 1;
                        return v;
                    }();
                    const Vec lhs = twisted_action(o, witt_bracket(o, d, e), f, alpha);
                    const Vec rhs = vec_sub(o.field,
                                            twisted_action(o, d, twisted_action(o, e, f, alpha), alpha),
                                            twisted_action(o, e, twisted_action(o, d, f, alpha), alpha));
                    REQUIRE(lhs == rhs);
                }
}

TEST_CASE("the module bracket on the worked examples") {
    DividedPowerAlgebra o = make_divided_power(PrimeField(3), 1, 1);
    SUBCASE("[1, x2] = d1") {
        WittDerivation br = o_bracket(o, o.monomial(0, 0), o.monomial(0, 1));
        CHECK(br.f1 == o.monomial(0, 0));
        CHECK(vec_is_zero(br.f2));
    }
    SUBCASE("[1, x1] = -d2") {
        WittDerivation br = o_bracket(o, o.monomial(0, 0), o.monomial(1, 0));
        CHECK(vec_is_zero(br.f1));
        CHECK(br.f2 == vec_scaled(o.field, o.monomial(0, 0), 2));
    }
    SUBCASE("[f, f] = 0") {
        for (std::size_t m = 0; m < o.dim; ++m) {
            Vec f(o.dim, 0);
            f[m] = 1;
            WittDerivation br = o_bracket(o, f, f);
            CHECK(vec_is_zero(br.f1));
            CHECK(vec_is_zero(br.f2));
        }
    }
}

TEST_CASE("the (1,1) algebra at p=3") {
    const ErmolaevAlgebra& er = er11();
    CHECK(er.alg.dim() == 27);
    CHECK(er.alg.jacobi_ok());
    SUBCASE("parity: module brackets land in the derivation part and vice versa") {
        const std::size_t od = er.o.dim;
        for (std::size_t i = 0; i < er.alg.dim(); ++i)
            for (std::size_t j = 0; j < er.alg.dim(); ++j) {
                const bool iw = i < 2 * od, jw = j < 2 * od;
                for (const auto& [k, c] : er.alg.pair_bracket(i, j)) {
                    (void)c;
                    const bool kw = k < 2 * od;
                    if (iw == jw)
                        CHECK(kw);
                    else
                        CHECK_FALSE(kw);
                }
            }
    }
    SUBCASE("the derived subalgebra has dimension 26 and is simple") {
        SubalgebraHandle whole{&er.alg, Subspace::full(er.alg.field(), 27)};
        SubalgebraHandle derived = derived_subalgebra(whole);
        CHECK(derived.dim() == 26);
        const auto rep = modrep::adjoint_representation(derived);
        CHECK(modrep::is_irreducible(rep).irreducible);
        CHECK(modrep::is_absolutely_irreducible(rep).absolutely_irreducible);
    }
    SUBCASE("the 27-dimensional adjoint module is reducible with the derived witness") {
        const auto rep = modrep::regular_adjoint(er.alg);
        const auto verdict = modrep::is_irreducible(rep);
        CHECK_FALSE(verdict.irreducible);
        REQUIRE(verdict.witness.has_value());
        CHECK(verdict.witness->dim() == 26);
    }
}

TEST_CASE("the submodule generated by the constant") {
    DividedPowerAlgebra o = make_divided_power(PrimeField(3), 1, 1);
    SUBCASE("at alpha = 1 it has codimension 1 and misses the top monomial") {
        Subspace oprime = o_prime_submodule(o, 1);
        CHECK(oprime.dim() == 8);
        CHECK(oprime.contains(o.monomial(0, 0)));
        const std::size_t top = o.mono_index(2, 2);
        for (std::size_t r = 0; r < oprime.dim(); ++r) CHECK(oprime.basis_row(r)[top] == 0);
    }
    SUBCASE("at alpha = 0 plain differentiation kills the constant") {
        Subspace closure = o_prime_submodule(o, 0);
        CHECK(closure.dim() == 1);
        CHECK(closure.contains(o.monomial(0, 0)));
    }
}

TEST_CASE("grading of the (1,1) algebra") {
    const ErmolaevAlgebra& er = er11();
    const auto comps = ermolaev_grading(er);
    SUBCASE("degrees run from -1 to 3 and components fill the space") {
        CHECK(comps.begin()->first == -1);
        CHECK(comps.rbegin()->first == 3);
        std::size_t total = 0;
        for (const auto& [deg, sub] : comps) total += sub.dim();
        CHECK(total == 27);
    }
    SUBCASE("the depth-one component is spanned by d1, d2 and the constant") {
        const Subspace& low = comps.at(-1);
        CHECK(low.dim() == 3);
        Vec d1(27, 0), d2(27, 0), one(27, 0);
        d1[er.w_index(0, er.o.mono_index(0, 0))] = 1;
        d2[er.w_index(1, er.o.mono_index(0, 0))] = 1;
        one[er.o_index(er.o.mono_index(0, 0))] = 1;
        CHECK(low.contains(d1));
        CHECK(low.contains(d2));
        CHECK(low.contains(one));
    }
    SUBCASE("full-algebra component dimensions count monomials") {
        CHECK(comps.at(-1).dim() == 3);
        CHECK(comps.at(0).dim() == 6);
        CHECK(comps.at(1).dim() == 9);
        CHECK(comps.at(2).dim() == 6);
        CHECK(comps.at(3).dim() == 3); // the derived algebra drops one here
    }
    SUBCASE("grading axiom holds exhaustively") {
        for (const auto& [di, ci] : comps)
            for (const auto& [dj, cj] : comps)
                for (std::size_t r = 0; r < ci.dim(); ++r)
                    for (std::size_t t = 0; t < cj.dim(); ++t) {
                        const Vec br = er.alg.bracket(ci.basis_row(r), cj.basis_row(t));
                        if (vec_is_zero(br)) continue;
                        auto it = comps.find(di + dj);
                        REQUIRE(it != comps.end());
                        REQUIRE(it->second.contains(br));
                    }
    }
}

TEST_CASE("the general series keeps the dimension formula") {
    PrimeField f3(3);
    SUBCASE("(1,2) has dimension 81 with derived dimension 80") {
        ErmolaevAlgebra er = build_ermolaev(1, 2, f3, 1);
        CHECK(er.alg.dim() == 81);
        CHECK(er.alg.jacobi_ok());
        SubalgebraHandle whole{&er.alg, Subspace::full(f3, 81)};
        CHECK(derived_subalgebra(whole).dim() == 80);
    }
}

TEST_CASE("jacobi defect on the witness triple") {
    SUBCASE("vanishes at p = 3") {
        const auto d = jacobi_defect(PrimeField(3));
        CHECK(d.zero);
    }
    for (Scalar p : {5u, 7u}) {
        CAPTURE(p);
        PrimeField f(p);
        const auto d = jacobi_defect(f);
        CHECK_FALSE(d.zero);
        // the defect is -3 * (x1 d1 + x2 d2)
        DividedPowerAlgebra o = make_divided_power(f, 1, 1);
        CHECK(d.w.f1 == vec_scaled(f, o.monomial(1, 0), f.reduce(-3)));
        CHECK(d.w.f2 == vec_scaled(f, o.monomial(0, 1), f.reduce(-3)));
        CHECK(vec_is_zero(d.o));
    }
    SUBCASE("the p = 5 table fails the scan on the witness triple") {
        PrimeField f5(5);
        ErmolaevAlgebra er = build_ermolaev(1, 1, f5, 1);
        CHECK_FALSE(er.alg.jacobi_ok());
        REQUIRE(er.alg.jacobi_witness().has_value());
        // operations that assume a Lie algebra refuse the table
        CHECK_THROWS_AS(subalgebra_closure(er.alg, {er.embed_o(er.o.monomial(0, 0))}),
                        std::invalid_argument);
    }
}

TEST_CASE("witt profile counts monomials by degree") {
    const auto prof = witt_profile(PrimeField(3), 1, 1);
    CHECK(prof.at(-1) == 2);
    CHECK(prof.at(0) == 4);
    CHECK(prof.at(1) == 6);
    CHECK(prof.at(2) == 4);
    CHECK(prof.at(3) == 2);
}
