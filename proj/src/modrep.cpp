#include "modlie/modrep.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "modlie/kernels.hpp"

namespace modlie::modrep {

namespace {

/// splitmix64; deterministic across platforms, seeded from the caller.
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

Matrix transpose_of(const Matrix& m) { return m.transpose(); }

std::vector<Matrix> transposed_generators(const MatrixRepresentation& rep) {
    std::vector<Matrix> out;
    out.reserve(rep.generators.size());
    for (const Matrix& g : rep.generators) out.push_back(transpose_of(g));
    return out;
}

Subspace spin_matrices(PrimeField f, std::size_t degree, const std::vector<Matrix>& gens,
                       const Vec& v) {
    EchelonAccumulator acc(f, degree);
    std::vector<Vec> work;
    if (acc.insert(v)) work.push_back(v);
    for (std::size_t t = 0; t < work.size() && acc.dim() < degree; ++t) {
        const Vec cur = work[t];
        for (const Matrix& g : gens) {
            Vec w = g.apply(cur);
            if (acc.insert(w)) work.push_back(std::move(w));
            if (acc.dim() == degree) break; // already the full module
        }
    }
    return acc.to_subspace();
}

Vec combo_of(const PrimeField& f, const Subspace& basis, const Vec& coeff) {
    Vec v(basis.ambient_dim(), 0);
    for (std::size_t i = 0; i < basis.dim(); ++i)
        if (coeff[i]) v = vec_add(f, v, vec_scaled(f, basis.basis_row(i), coeff[i]));
    return v;
}

/// Orthogonal complement {x : u . x = 0 for all u in the row space}.
Subspace perp(const Subspace& u) { return kernel(u.basis()); }

bool is_invariant(const MatrixRepresentation& rep, const Subspace& s) {
    for (const Matrix& g : rep.generators)
        for (std::size_t i = 0; i < s.dim(); ++i)
            if (!s.contains(g.apply(s.basis_row(i)))) return false;
    return true;
}

constexpr std::size_t kKernelEnumCap = 1u << 16; // projective points per theta
constexpr std::size_t kSocleEnumCap = 1u << 19;  // covers GF(3)^12 exhaustively

std::size_t projective_count(Scalar p, std::size_t d, std::size_t cap) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (n > cap * 4) return cap * 4;
        n *= p;
    }
    return (n - 1) / (p - 1);
}

/// Decide irreducibility with one singular theta, or give up (nullopt) when
/// theta's kernel is too large to enumerate and no quick witness appears.
std::optional<IrreducibilityVerdict> decide_with_theta(const MatrixRepresentation& rep,
                                                       const Matrix& theta,
                                                       const std::string& how) {
    const Subspace ker_theta = kernel(theta);
    if (ker_theta.dim() == 0) return std::nullopt;
    const bool enumerable =
        projective_count(rep.field.modulus(), ker_theta.dim(), kKernelEnumCap) <= kKernelEnumCap;
    // quick reducibility probe on the kernel basis either way
    std::optional<Subspace> proper;
    for (std::size_t i = 0; i < ker_theta.dim() && !proper; ++i) {
        Subspace s = spin(rep, ker_theta.basis_row(i));
        if (s.dim() < rep.degree) proper = std::move(s);
    }
    if (!proper && enumerable) {
        for_each_projective_rep(rep.field, ker_theta.dim(), [&](const Vec& coeff) {
            Subspace s = spin(rep, combo_of(rep.field, ker_theta, coeff));
            if (s.dim() < rep.degree) {
                proper = std::move(s);
                return false;
            }
            return true;
        });
    }
    if (proper)
        return IrreducibilityVerdict{false, std::move(proper),
                                     how + "; kernel vector spins to a proper submodule"};
    if (!enumerable) return std::nullopt;
    // every kernel vector spins full; one transpose-side kernel vector decides
    const std::vector<Matrix> tgens = transposed_generators(rep);
    const Subspace ker_t = kernel(transpose_of(theta));
    if (ker_t.dim() == 0)
        throw std::logic_error("is_irreducible: transpose kernel empty for singular theta");
    const Subspace dual_spin = spin_matrices(rep.field, rep.degree, tgens, ker_t.basis_row(0));
    if (dual_spin.dim() == rep.degree)
        return IrreducibilityVerdict{true, std::nullopt,
                                     how + "; nullity " + std::to_string(ker_theta.dim()) +
                                         ", all kernel vectors and a dual kernel vector spin full"};
    Subspace witness = perp(dual_spin);
    if (!is_invariant(rep, witness))
        throw std::logic_error("is_irreducible: dual witness is not invariant");
    return IrreducibilityVerdict{false, std::move(witness),
                                 how + "; dual kernel vector spins to a proper submodule"};
}

} // namespace

MatrixRepresentation regular_adjoint(const LieAlgebra& a) {
    MatrixRepresentation rep{a.field(), a.dim(), {}};
    rep.generators.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec b(a.dim(), 0);
        b[i] = 1;
        rep.generators.push_back(a.ad(b));
    }
    return rep;
}

MatrixRepresentation adjoint_representation(const SubalgebraHandle& s) {
    return regular_adjoint(materialize(s).alg);
}

Subspace spin(const MatrixRepresentation& rep, const Vec& v) {
    return spin_matrices(rep.field, rep.degree, rep.generators, v);
}

IrreducibilityVerdict is_irreducible(const MatrixRepresentation& rep, std::uint64_t seed) {
    if (rep.degree == 0) throw std::invalid_argument("is_irreducible: zero degree");
    if (rep.degree == 1) return {true, std::nullopt, "degree 1"};
    if (rep.generators.empty()) {
        Vec e0(rep.degree, 0);
        e0[0] = 1;
        return {false, Subspace::from_spanning(rep.field, rep.degree, {e0}),
                "no generators; every line is invariant"};
    }
    // Random elements of the unital envelope: a combination of the generators
    // (every fourth attempt a product of two such), shifted by each scalar.
    // Any matrix in the unital envelope preserves all submodules, so the
    // kernel-spinning criterion applies; shifts expose eigenvalues of small
    // multiplicity. Kernel enumeration costs grow as p^nullity full spins,
    // so small-nullity candidates are decided at once and the best seen is
    // kept as a fallback.
    Rng rng{seed * 0x100000001b3ULL + 0xcbf29ce484222325ULL};
    const std::size_t ngen = rep.generators.size();
    const Scalar p = rep.field.modulus();
    std::optional<Matrix> best;
    std::size_t best_nullity = rep.degree + 1;
    std::string best_how;
    const auto random_combo = [&] {
        Matrix x(rep.field, rep.degree, rep.degree);
        for (std::size_t i = 0; i < ngen; ++i) {
            const Scalar c = static_cast<Scalar>(rng.below(p));
            if (c) x = x + rep.generators[i].scaled(c);
        }
        return x;
    };
    for (int attempt = 0; attempt < 200; ++attempt) {
        Matrix x = random_combo();
        if (attempt % 4 == 3) x = kernels::matmul(x, random_combo());
        const Scalar max_shift = std::min<Scalar>(p, 8);
        for (Scalar lambda = 0; lambda < max_shift; ++lambda) {
            Matrix theta = x - Matrix::identity(rep.field, rep.degree).scaled(lambda);
            if (theta.is_zero()) continue;
            auto [red, rank] = rref(theta);
            (void)red;
            const std::size_t nullity = rep.degree - rank;
            if (nullity == 0) continue;
            const std::string how = "random element, attempt " + std::to_string(attempt) +
                                    ", shift " + std::to_string(lambda);
            if (nullity <= 4) {
                auto verdict = decide_with_theta(rep, theta, how);
                if (verdict) return *verdict;
            }
            if (nullity < best_nullity) {
                best_nullity = nullity;
                best = std::move(theta);
                best_how = how;
            }
        }
    }
    if (best) {
        auto verdict = decide_with_theta(rep, *best, best_how);
        if (verdict) return *verdict;
    }
    // deterministic fallback: the basis-element actions themselves
    for (std::size_t i = 0; i < ngen; ++i) {
        if (rep.generators[i].is_zero()) continue;
        auto verdict =
            decide_with_theta(rep, rep.generators[i], "generator " + std::to_string(i));
        if (verdict) return *verdict;
    }
    // all generator actions zero (or kernels too large): for a zero action any
    // line is invariant; otherwise give a spin witness from a unit vector
    Vec e0(rep.degree, 0);
    e0[0] = 1;
    Subspace s = spin(rep, e0);
    if (s.dim() < rep.degree) return {false, std::move(s), "unit vector spins proper"};
    // No singular element surfaced: the envelope may be a division algebra
    // (think of a single matrix with irreducible characteristic polynomial).
    // For small degrees fall through to the spin-all decision.
    if (projective_count(rep.field.modulus(), rep.degree, kKernelEnumCap) <= kKernelEnumCap) {
        bool irreducible = true;
        Subspace witness(rep.field, rep.degree);
        for_each_projective_rep(rep.field, rep.degree, [&](const Vec& v) {
            Subspace sp = spin(rep, v);
            if (sp.dim() < rep.degree) {
                irreducible = false;
                witness = std::move(sp);
                return false;
            }
            return true;
        });
        if (irreducible) return {true, std::nullopt, "spin-all: every projective vector spins full"};
        return {false, std::move(witness), "spin-all: a vector spins to a proper submodule"};
    }
    throw std::runtime_error("is_irreducible: no decisive singular element found");
}

CommutantVerdict is_absolutely_irreducible(const MatrixRepresentation& rep) {
    const std::size_t n = rep.degree;
    const PrimeField& f = rep.field;
    if (n == 0) throw std::invalid_argument("is_absolutely_irreducible: zero degree");
    // standard-basis method: spin a cyclic vector recording how each basis
    // vector arises; a commuting X is determined by w = X(v), and every
    // closure event imposes linear conditions on w
    Vec v(n, 0);
    v[0] = 1;
    struct Origin {
        std::size_t gen, parent;
    };
    std::vector<Vec> basis{v};
    std::vector<Origin> origin{{0, 0}}; // basis[0] has no origin
    // echelon with combination bookkeeping: red = C * basis
    std::vector<Vec> red{v};
    std::vector<Vec> combo{Vec{1}};
    std::vector<std::size_t> pivots;
    {
        std::size_t lead = 0;
        while (v[lead] == 0) ++lead;
        pivots.push_back(lead);
        const Scalar inv = f.inv(v[lead]);
        if (inv != 1) red[0] = vec_scaled(f, v, inv), combo[0] = Vec{inv};
    }
    struct Event {
        std::size_t gen, idx;
        Vec coords; // over basis list
    };
    std::vector<Event> events;
    for (std::size_t t = 0; t < basis.size(); ++t) {
        for (std::size_t gi = 0; gi < rep.generators.size(); ++gi) {
            Vec w = rep.generators[gi].apply(basis[t]);
            Vec coords(basis.size(), 0);
            Vec r = w;
            for (std::size_t i = 0; i < red.size(); ++i) {
                const Scalar c = r[pivots[i]];
                if (!c) continue;
                r = vec_sub(f, r, vec_scaled(f, red[i], c));
                for (std::size_t s = 0; s < combo[i].size(); ++s)
                    coords[s] = f.add(coords[s], f.mul(c, combo[i][s]));
            }
            std::size_t lead = 0;
            while (lead < n && r[lead] == 0) ++lead;
            if (lead == n) {
                events.push_back({gi, t, std::move(coords)});
                continue;
            }
            // new basis vector w = gen * basis[t]
            basis.push_back(w);
            origin.push_back({gi, t});
            const Scalar inv = f.inv(r[lead]);
            Vec nr = vec_scaled(f, r, inv);
            Vec nc(basis.size(), 0);
            for (std::size_t s = 0; s < coords.size(); ++s) nc[s] = f.mul(f.neg(coords[s]), inv);
            nc[basis.size() - 1] = inv;
            for (Vec& cv : combo) cv.resize(basis.size(), 0);
            red.push_back(std::move(nr));
            combo.push_back(std::move(nc));
            pivots.push_back(lead);
        }
    }
    if (basis.size() < n)
        throw std::invalid_argument("is_absolutely_irreducible: module is reducible");
    // T[t] maps w to X(basis[t])
    std::vector<Matrix> transfer;
    transfer.reserve(n);
    transfer.push_back(Matrix::identity(f, n));
    for (std::size_t t = 1; t < n; ++t)
        transfer.push_back(kernels::matmul(rep.generators[origin[t].gen], transfer[origin[t].parent]));
    EchelonAccumulator constraints(f, n);
    for (const Event& ev : events) {
        Matrix m = kernels::matmul(rep.generators[ev.gen], transfer[ev.idx]);
        for (std::size_t s = 0; s < ev.coords.size(); ++s)
            if (ev.coords[s]) m = m - transfer[s].scaled(ev.coords[s]);
        for (std::size_t r = 0; r < n; ++r) constraints.insert(m.row(r));
        if (constraints.dim() == n - 1) break; // commutant cannot drop below dim 1
    }
    const std::size_t dim = n - constraints.dim();
    return {dim == 1, dim};
}

Subspace socle_minimal_submodule(const MatrixRepresentation& rep) {
    if (rep.degree == 0) throw std::invalid_argument("socle_minimal_submodule: zero degree");
    const PrimeField& f = rep.field;
    Vec seed;
    for (const Matrix& g : rep.generators) {
        const Subspace k = kernel(g);
        if (k.dim() > 0 && k.dim() < rep.degree) {
            seed = k.basis_row(0);
            break;
        }
    }
    if (seed.empty()) {
        seed.assign(rep.degree, 0);
        seed[0] = 1;
    }
    Subspace current = spin(rep, seed);
    while (true) {
        bool improved = false;
        if (projective_count(f.modulus(), current.dim(), kSocleEnumCap) <= kSocleEnumCap) {
            for_each_projective_rep(f, current.dim(), [&](const Vec& coeff) {
                const Subspace s = spin(rep, combo_of(f, current, coeff));
                if (s.dim() > 0 && s.dim() < current.dim()) {
                    current = s;
                    improved = true;
                    return false;
                }
                return true;
            });
        } else {
            for (std::size_t i = 0; i < current.dim() && !improved; ++i) {
                const Subspace s = spin(rep, current.basis_row(i));
                if (s.dim() > 0 && s.dim() < current.dim()) {
                    current = s;
                    improved = true;
                }
            }
        }
        if (!improved) return current;
    }
}

std::vector<BilinearForm> invariant_symmetric_forms(const LieAlgebra& a) {
    const std::size_t n = a.dim();
    const PrimeField& f = a.field();
    // symmetric ansatz basis E_ab + E_ba (a<b) and E_aa
    std::vector<Matrix> current;
    current.reserve(n * (n + 1) / 2);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
            Matrix g(f, n, n);
            g.at(r, c) = 1;
            g.at(c, r) = 1;
            current.push_back(std::move(g));
        }
    // invariance under ad(b_j) for every j: ad^T G + G ad = 0; diagonal
    // actions first since they cut the ansatz down almost for free
    std::vector<Matrix> ads;
    ads.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec b(n, 0);
        b[i] = 1;
        ads.push_back(a.ad(b));
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    auto is_diagonal = [&](const Matrix& m) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (r != c && m.at(r, c)) return false;
        return true;
    };
    std::stable_partition(order.begin(), order.end(),
                          [&](std::size_t i) { return is_diagonal(ads[i]); });
    for (std::size_t oi : order) {
        if (current.empty()) break;
        // sparse ad application: rows of the big system are the output entries
        std::vector<std::array<std::size_t, 3>> nz; // (r, c, v)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (ads[oi].at(r, c)) nz.push_back({r, c, ads[oi].at(r, c)});
        Matrix sys(f, n * n, current.size());
        for (std::size_t t = 0; t < current.size(); ++t) {
            const Matrix& g = current[t];
            // out = ad^T g + g ad, accumulated sparsely
            for (const auto& [r, c, v] : nz) {
                const auto s = static_cast<Scalar>(v);
                for (std::size_t j = 0; j < n; ++j) {
                    // (ad^T g)[c][j] += v * g[r][j]
                    if (g.at(r, j)) {
                        auto& cell = sys.at(c * n + j, t);
                        cell = f.add(cell, f.mul(s, g.at(r, j)));
                    }
                    // (g ad)[j][c] += v * g[j][r]
                    if (g.at(j, r)) {
                        auto& cell = sys.at(j * n + c, t);
                        cell = f.add(cell, f.mul(s, g.at(j, r)));
                    }
                }
            }
        }
        const Subspace coeff = kernel(sys);
        std::vector<Matrix> next;
        next.reserve(coeff.dim());
        for (std::size_t r = 0; r < coeff.dim(); ++r) {
            const Vec cf = coeff.basis_row(r);
            Matrix g(f, n, n);
            for (std::size_t t = 0; t < current.size(); ++t)
                if (cf[t]) g = g + current[t].scaled(cf[t]);
            next.push_back(std::move(g));
        }
        current = std::move(next);
    }
    std::vector<BilinearForm> out;
    out.reserve(current.size());
    for (Matrix& g : current) out.push_back({std::move(g)});
    return out;
}

BilinearForm restrict_form(const BilinearForm& b, const SubalgebraHandle& s) {
    const PrimeField& f = b.gram.field();
    const std::size_t k = s.dim();
    Matrix gram(f, k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const Vec bi = b.gram.apply(s.space.basis_row(i));
        for (std::size_t j = 0; j < k; ++j) {
            const Vec uj = s.space.basis_row(j);
            std::uint64_t acc = 0;
            for (std::size_t t = 0; t < bi.size(); ++t)
                acc += static_cast<std::uint64_t>(uj[t]) * bi[t];
            gram.at(j, i) = static_cast<Scalar>(acc % f.modulus());
        }
    }
    return {gram};
}

bool is_totally_isotropic(const BilinearForm& b, const SubalgebraHandle& s) {
    return restrict_form(b, s).gram.is_zero();
}

std::size_t form_rank(const BilinearForm& b) {
    auto [red, rank] = rref(b.gram);
    (void)red;
    return rank;
}

std::optional<std::array<std::size_t, 3>> form_invariance_violation(const LieAlgebra& a,
                                                                    const BilinearForm& b) {
    const std::size_t n = a.dim();
    const PrimeField& f = a.field();
    auto pair_value = [&](const SparseRow& row, std::size_t z) {
        Scalar acc = 0;
        for (const auto& [k, c] : row) acc = f.add(acc, f.mul(c, b.gram.at(k, z)));
        return acc;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const Scalar lhs = pair_value(a.pair_bracket(x, y), z);
                // B(x, [y,z]) with the Gram symmetric
                Scalar rhs = 0;
                for (const auto& [k, c] : a.pair_bracket(y, z))
                    rhs = f.add(rhs, f.mul(c, b.gram.at(x, k)));
                if (lhs != rhs) return std::array<std::size_t, 3>{x, y, z};
            }
    return std::nullopt;
}

} // namespace modlie::modrep
