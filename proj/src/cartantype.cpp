#include "modlie/cartantype.hpp"

#include <sstream>
#include <stdexcept>

namespace modlie::cartantype {

namespace {

/// binom(n, k) mod p by Lucas' theorem.
Scalar binom_mod(const PrimeField& f, std::size_t n, std::size_t k) {
    const Scalar p = f.modulus();
    Scalar result = 1;
    while (n || k) {
        const std::size_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        // small-case binomial of digits
        Scalar c = 1;
        for (std::size_t i = 0; i < kd; ++i) {
            c = f.mul(c, static_cast<Scalar>((nd - i) % p));
            c = f.mul(c, f.inv(static_cast<Scalar>((i + 1) % p)));
        }
        result = f.mul(result, c);
        n /= p;
        k /= p;
    }
    return result;
}

std::size_t int_pow(std::size_t base, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

DividedPowerAlgebra make_divided_power(PrimeField f, int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("make_divided_power: heights must be >= 1");
    DividedPowerAlgebra o{f, n1, n2, int_pow(f.modulus(), n1), int_pow(f.modulus(), n2), 0};
    o.dim = o.bound1 * o.bound2;
    if (o.dim > 4096) throw std::invalid_argument("make_divided_power: dimension too large");
    return o;
}

std::string DividedPowerAlgebra::mono_label(std::size_t idx) const {
    const auto [a1, a2] = exponents(idx);
    if (a1 == 0 && a2 == 0) return "1";
    std::ostringstream os;
    os << "x(" << a1 << "," << a2 << ")";
    return os.str();
}

Vec DividedPowerAlgebra::multiply(const Vec& f, const Vec& g) const {
    Vec out(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!f[i]) continue;
        const auto [a1, a2] = exponents(i);
        for (std::size_t j = 0; j < dim; ++j) {
            if (!g[j]) continue;
            const auto [b1, b2] = exponents(j);
            if (a1 + b1 >= bound1 || a2 + b2 >= bound2) continue;
            const Scalar c = field.mul(binom_mod(field, a1 + b1, a1), binom_mod(field, a2 + b2, a2));
            if (!c) continue;
            const std::size_t t = mono_index(a1 + b1, a2 + b2);
            out[t] = field.add(out[t], field.mul(field.mul(f[i], g[j]), c));
        }
    }
    return out;
}

Vec DividedPowerAlgebra::derive(const Vec& f, int which) const {
    Vec out(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!f[i]) continue;
        const auto [a1, a2] = exponents(i);
        if (which == 1 && a1 > 0) out[mono_index(a1 - 1, a2)] = field.add(out[mono_index(a1 - 1, a2)], f[i]);
        if (which == 2 && a2 > 0) out[mono_index(a1, a2 - 1)] = field.add(out[mono_index(a1, a2 - 1)], f[i]);
    }
    return out;
}

Vec DividedPowerAlgebra::monomial(std::size_t a1, std::size_t a2) const {
    Vec v(dim, 0);
    v[mono_index(a1, a2)] = 1;
    return v;
}

Vec apply_derivation(const DividedPowerAlgebra& o, const WittDerivation& d, const Vec& f) {
    return vec_add(o.field, o.multiply(d.f1, o.derive(f, 1)), o.multiply(d.f2, o.derive(f, 2)));
}

Vec divergence(const DividedPowerAlgebra& o, const WittDerivation& d) {
    return vec_add(o.field, o.derive(d.f1, 1), o.derive(d.f2, 2));
}

WittDerivation witt_bracket(const DividedPowerAlgebra& o, const WittDerivation& d,
                            const WittDerivation& e) {
    return {vec_sub(o.field, apply_derivation(o, d, e.f1), apply_derivation(o, e, d.f1)),
            vec_sub(o.field, apply_derivation(o, d, e.f2), apply_derivation(o, e, d.f2))};
}

Vec twisted_action(const DividedPowerAlgebra& o, const WittDerivation& d, const Vec& f,
                   Scalar alpha) {
    Vec out = apply_derivation(o, d, f);
    if (alpha) out = vec_add(o.field, out, vec_scaled(o.field, o.multiply(divergence(o, d), f), alpha));
    return out;
}

WittDerivation o_bracket(const DividedPowerAlgebra& o, const Vec& f, const Vec& g) {
    const PrimeField& k = o.field;
    Vec c1 = vec_sub(k, o.multiply(f, o.derive(g, 2)), o.multiply(g, o.derive(f, 2)));
    Vec c2 = vec_sub(k, o.multiply(g, o.derive(f, 1)), o.multiply(f, o.derive(g, 1)));
    return {std::move(c1), std::move(c2)};
}

Vec ErmolaevAlgebra::embed_w(const WittDerivation& d) const {
    Vec v(3 * o.dim, 0);
    for (std::size_t m = 0; m < o.dim; ++m) {
        v[w_index(0, m)] = d.f1[m];
        v[w_index(1, m)] = d.f2[m];
    }
    return v;
}

Vec ErmolaevAlgebra::embed_o(const Vec& f) const {
    Vec v(3 * o.dim, 0);
    for (std::size_t m = 0; m < o.dim; ++m) v[o_index(m)] = f[m];
    return v;
}

WittDerivation ErmolaevAlgebra::w_part(const Vec& v) const {
    WittDerivation d{Vec(o.dim, 0), Vec(o.dim, 0)};
    for (std::size_t m = 0; m < o.dim; ++m) {
        d.f1[m] = v[w_index(0, m)];
        d.f2[m] = v[w_index(1, m)];
    }
    return d;
}

Vec ErmolaevAlgebra::o_part(const Vec& v) const {
    Vec f(o.dim, 0);
    for (std::size_t m = 0; m < o.dim; ++m) f[m] = v[o_index(m)];
    return f;
}

ErmolaevAlgebra build_ermolaev(int n1, int n2, PrimeField f, Scalar alpha) {
    DividedPowerAlgebra o = make_divided_power(f, n1, n2);
    const std::size_t dim = 3 * o.dim;
    std::vector<std::string> labels(dim);
    std::vector<int> degrees(dim, 0);
    for (std::size_t m = 0; m < o.dim; ++m) {
        const auto [a1, a2] = o.exponents(m);
        const int total = static_cast<int>(a1 + a2);
        labels[m] = o.mono_label(m) + "*D1";
        labels[o.dim + m] = o.mono_label(m) + "*D2";
        labels[2 * o.dim + m] = o.mono_label(m);
        degrees[m] = total - 1;
        degrees[o.dim + m] = total - 1;
        degrees[2 * o.dim + m] = total - 1;
    }

    auto unit_w = [&](int which, std::size_t m) {
        WittDerivation d{Vec(o.dim, 0), Vec(o.dim, 0)};
        (which == 0 ? d.f1 : d.f2)[m] = 1;
        return d;
    };

    std::vector<SparseRow> table(dim * dim);
    auto put = [&](std::size_t i, std::size_t j, const Vec& full) {
        SparseRow row, neg;
        for (std::size_t t = 0; t < dim; ++t)
            if (full[t]) {
                row.emplace_back(static_cast<std::uint32_t>(t), full[t]);
                neg.emplace_back(static_cast<std::uint32_t>(t), f.neg(full[t]));
            }
        table[i * dim + j] = std::move(row);
        table[j * dim + i] = std::move(neg);
    };

    ErmolaevAlgebra out{std::move(o), alpha, LieAlgebra(f, 0, {}, {}), std::move(degrees)};
    const DividedPowerAlgebra& oa = out.o;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            const bool iw = i < 2 * oa.dim, jw = j < 2 * oa.dim;
            Vec full(dim, 0);
            if (iw && jw) {
                const WittDerivation d = unit_w(static_cast<int>(i / oa.dim), i % oa.dim);
                const WittDerivation e = unit_w(static_cast<int>(j / oa.dim), j % oa.dim);
                full = out.embed_w(witt_bracket(oa, d, e));
            } else if (iw && !jw) {
                // [D, f] = D.f, the twisted module action
                const WittDerivation d = unit_w(static_cast<int>(i / oa.dim), i % oa.dim);
                full = out.embed_o(twisted_action(
                    oa, d,
                    oa.monomial(oa.exponents(j - 2 * oa.dim).first,
                                oa.exponents(j - 2 * oa.dim).second),
                    alpha));
            } else {
                const Vec fm = oa.monomial(oa.exponents(i - 2 * oa.dim).first,
                                           oa.exponents(i - 2 * oa.dim).second);
                const Vec gm = oa.monomial(oa.exponents(j - 2 * oa.dim).first,
                                           oa.exponents(j - 2 * oa.dim).second);
                full = out.embed_w(o_bracket(oa, fm, gm));
            }
            put(i, j, full);
        }
    }
    out.alg = LieAlgebra(f, dim, std::move(labels), std::move(table));
    return out;
}

Subspace o_prime_submodule(const DividedPowerAlgebra& o, Scalar alpha) {
    EchelonAccumulator acc(o.field, o.dim);
    std::vector<Vec> work;
    const Vec one = o.monomial(0, 0);
    acc.insert(one);
    work.push_back(one);
    for (std::size_t t = 0; t < work.size(); ++t) {
        const Vec cur = work[t];
        for (std::size_t m = 0; m < o.dim; ++m)
            for (int which = 0; which < 2; ++which) {
                WittDerivation d{Vec(o.dim, 0), Vec(o.dim, 0)};
                (which == 0 ? d.f1 : d.f2)[m] = 1;
                Vec w = twisted_action(o, d, cur, alpha);
                if (acc.insert(w)) work.push_back(std::move(w));
            }
    }
    return acc.to_subspace();
}

std::map<int, Subspace> ermolaev_grading(const ErmolaevAlgebra& er) {
    std::map<int, std::vector<Vec>> rows;
    for (std::size_t i = 0; i < er.alg.dim(); ++i) {
        Vec v(er.alg.dim(), 0);
        v[i] = 1;
        rows[er.degrees[i]].push_back(std::move(v));
    }
    std::map<int, Subspace> comps;
    for (auto& [deg, r] : rows)
        comps.emplace(deg, Subspace::from_spanning(er.alg.field(), er.alg.dim(), r));
    return comps;
}

std::map<int, std::size_t> witt_profile(PrimeField f, int n1, int n2) {
    const DividedPowerAlgebra o = make_divided_power(f, n1, n2);
    std::map<int, std::size_t> profile;
    for (std::size_t m = 0; m < o.dim; ++m) {
        const auto [a1, a2] = o.exponents(m);
        profile[static_cast<int>(a1 + a2) - 1] += 2;
    }
    return profile;
}

JacobiDefect jacobi_defect(PrimeField f) {
    const ErmolaevAlgebra er = build_ermolaev(1, 1, f, 1);
    const DividedPowerAlgebra& o = er.o;
    WittDerivation x1d1{o.monomial(1, 0), Vec(o.dim, 0)};
    const Vec a = er.embed_w(x1d1);
    const Vec b = er.embed_o(o.monomial(1, 0));
    const Vec c = er.embed_o(o.monomial(0, 1));
    const LieAlgebra& alg = er.alg;
    Vec j = alg.bracket(a, alg.bracket(b, c));
    j = vec_add(f, j, alg.bracket(c, alg.bracket(a, b)));
    j = vec_add(f, j, alg.bracket(b, alg.bracket(c, a)));
    JacobiDefect out{er.w_part(j), er.o_part(j), vec_is_zero(j), alg.render(j)};
    return out;
}

} // namespace modlie::cartantype
