#include "modlie/grading.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "modlie/modrep.hpp"

namespace modlie::grading {

namespace {

struct Frac {
    long long num = 0, den = 1;
    void normalize() {
        if (den < 0) {
            den = -den;
            num = -num;
        }
        const long long g = std::gcd(std::abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }
};

Frac frac_sub(Frac a, Frac b) {
    Frac r{a.num * b.den - b.num * a.den, a.den * b.den};
    r.normalize();
    return r;
}

Frac frac_mul(Frac a, Frac b) {
    Frac r{a.num * b.num, a.den * b.den};
    r.normalize();
    return r;
}

Frac frac_div(Frac a, Frac b) {
    if (b.num == 0) throw std::invalid_argument("division by zero fraction");
    Frac r{a.num * b.den, a.den * b.num};
    r.normalize();
    return r;
}

} // namespace

CocharacterSolution derive_cocharacter(const rootdata::RootDatum& rd,
                                       const std::vector<rootdata::RootVec>& roots,
                                       long long target_degree) {
    const std::size_t n = static_cast<std::size_t>(rd.rank);
    const std::size_t m = roots.size();
    // rational Gauss on the m x (n+1) augmented system
    std::vector<std::vector<Frac>> a(m, std::vector<Frac>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = {roots[i][j], 1};
        a[i][n] = {target_degree, 1};
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col <= n && rank < m; ++col) {
        std::size_t pr = rank;
        while (pr < m && a[pr][col].num == 0) ++pr;
        if (pr == m) continue;
        std::swap(a[rank], a[pr]);
        const Frac piv = a[rank][col];
        for (std::size_t j = col; j <= n; ++j) a[rank][j] = frac_div(a[rank][j], piv);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || a[i][col].num == 0) continue;
            const Frac c = a[i][col];
            for (std::size_t j = col; j <= n; ++j)
                a[i][j] = frac_sub(a[i][j], frac_mul(c, a[rank][j]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    CocharacterSolution out{CocharacterSolution::Kind::Unique, {}, {}};
    if (!pivot_col.empty() && pivot_col.back() == n) {
        out.kind = CocharacterSolution::Kind::Inconsistent;
        return out;
    }
    std::vector<bool> is_piv(n, false);
    for (std::size_t c : pivot_col) is_piv[c] = true;
    if (rank < n) {
        out.kind = CocharacterSolution::Kind::Underdetermined;
        for (std::size_t fc = 0; fc < n; ++fc) {
            if (is_piv[fc]) continue;
            // primitive kernel direction with 1 at the free column
            std::vector<Frac> dir(n, Frac{0, 1});
            dir[fc] = {1, 1};
            for (std::size_t i = 0; i < rank; ++i)
                dir[pivot_col[i]] = Frac{-a[i][fc].num, a[i][fc].den};
            long long lcm = 1;
            for (const Frac& x : dir) lcm = std::lcm(lcm, x.den);
            std::vector<long long> iv(n);
            for (std::size_t j = 0; j < n; ++j) iv[j] = dir[j].num * (lcm / dir[j].den);
            out.kernel.push_back(std::move(iv));
        }
        return out;
    }
    out.weights.assign(n, 0);
    for (std::size_t i = 0; i < rank; ++i) {
        const Frac& v = a[i][n];
        if (v.den != 1)
            throw std::runtime_error("derive_cocharacter: non-integral unique solution");
        out.weights[pivot_col[i]] = v.num;
    }
    return out;
}

std::vector<std::pair<int, std::size_t>> Grading::profile() const {
    std::vector<std::pair<int, std::size_t>> out;
    for (const auto& [deg, sub] : components)
        if (sub.dim()) out.emplace_back(deg, sub.dim());
    return out;
}

int Grading::lowest() const {
    for (const auto& [deg, sub] : components)
        if (sub.dim()) return deg;
    throw std::invalid_argument("Grading::lowest: empty grading");
}

int Grading::highest() const {
    int best = 0;
    bool seen = false;
    for (const auto& [deg, sub] : components)
        if (sub.dim()) {
            best = deg;
            seen = true;
        }
    if (!seen) throw std::invalid_argument("Grading::highest: empty grading");
    return best;
}

std::size_t Grading::total_dim() const {
    std::size_t s = 0;
    for (const auto& [deg, sub] : components) s += sub.dim();
    return s;
}

const Subspace* Grading::component(int degree) const {
    auto it = components.find(degree);
    return it == components.end() ? nullptr : &it->second;
}

std::optional<int> Grading::degree_of(const Vec& v) const {
    if (vec_is_zero(v)) return std::nullopt;
    for (const auto& [deg, sub] : components)
        if (sub.contains(v)) return deg;
    return std::nullopt;
}

Grading cocharacter_grading(const rootdata::ChevalleyBasis& cb, PrimeField f,
                            const Cocharacter& tau) {
    if (tau.weights.size() != static_cast<std::size_t>(cb.rd.rank))
        throw std::invalid_argument("cocharacter_grading: weight count mismatch");
    std::map<int, std::vector<Vec>> rows;
    for (std::size_t b = 0; b < cb.dim; ++b) {
        Vec v(cb.dim, 0);
        v[b] = 1;
        rows[static_cast<int>(cb.basis_degree(b, tau.weights))].push_back(std::move(v));
    }
    std::map<int, Subspace> comps;
    for (auto& [deg, r] : rows) comps.emplace(deg, Subspace::from_spanning(f, cb.dim, r));
    return {std::move(comps)};
}

Grading grading_from_components(std::map<int, Subspace> components) {
    return {std::move(components)};
}

Grading grade_subalgebra(const SubalgebraHandle& s, const Grading& ambient) {
    std::map<int, Subspace> comps;
    std::size_t total = 0;
    for (const auto& [deg, sub] : ambient.components) {
        Subspace piece = intersect(s.space, sub);
        total += piece.dim();
        if (piece.dim()) comps.emplace(deg, std::move(piece));
    }
    if (total != s.dim())
        throw std::invalid_argument("grade_subalgebra: subalgebra is not homogeneous");
    return {std::move(comps)};
}

std::optional<std::pair<int, int>> grading_axiom_violation(const LieAlgebra& a, const Grading& g) {
    for (const auto& [di, ci] : g.components)
        for (const auto& [dj, cj] : g.components) {
            if (dj < di) continue;
            const Subspace* target = g.component(di + dj);
            for (std::size_t r = 0; r < ci.dim(); ++r)
                for (std::size_t t = 0; t < cj.dim(); ++t) {
                    const Vec br = a.bracket(ci.basis_row(r), cj.basis_row(t));
                    if (vec_is_zero(br)) continue;
                    if (!target || !target->contains(br)) return std::make_pair(di, dj);
                }
        }
    return std::nullopt;
}

bool is_direct_decomposition(const Grading& g, const Subspace& space) {
    std::size_t total = 0;
    Subspace acc(space.field(), space.ambient_dim());
    for (const auto& [deg, sub] : g.components) {
        if (!space.contains(sub)) return false;
        total += sub.dim();
        acc = sum(acc, sub);
    }
    return total == space.dim() && acc == space;
}

VDecomposition build_V_decomposition(const SubalgebraHandle& L, const SubalgebraHandle& W,
                                     const Vec& e, const Grading& ambient, int kernel_degree) {
    const LieAlgebra& a = *L.parent;
    const Subspace* top = ambient.component(kernel_degree);
    if (!top) throw std::invalid_argument("build_V_decomposition: empty ambient component");
    Subspace cut = intersect(intersect(kernel(a.ad(e)), L.space), *top);
    if (cut.dim() != 1)
        throw std::invalid_argument(
            "build_V_decomposition: kernel intersection is not one-dimensional (dim " +
            std::to_string(cut.dim()) + ")");
    const Vec w = cut.basis_row(0);
    std::vector<Vec> w_rows{w};
    std::vector<Vec> wbasis;
    for (std::size_t i = 0; i < W.dim(); ++i) wbasis.push_back(W.space.basis_row(i));
    Subspace V = sum(Subspace::from_spanning(a.field(), a.dim(), w_rows),
                     span_of_brackets(a, wbasis, w_rows));
    std::vector<Vec> vbasis;
    for (std::size_t i = 0; i < V.dim(); ++i) vbasis.push_back(V.basis_row(i));
    Subspace vv = span_of_brackets(a, vbasis, vbasis);
    return {w, std::move(V), std::move(vv)};
}

Grading regrade_by_table(const SubalgebraHandle& L, const std::map<int, Subspace>& v_components,
                         const std::map<int, int>& degree_map) {
    const LieAlgebra& a = *L.parent;
    auto new_degree = [&](int tau_deg) {
        auto it = degree_map.find(tau_deg);
        if (it == degree_map.end())
            throw std::invalid_argument("regrade_by_table: missing degree-map entry");
        return it->second;
    };
    std::map<int, Subspace> comps;
    auto add_to = [&](int deg, const Subspace& piece) {
        auto it = comps.find(deg);
        if (it == comps.end())
            comps.emplace(deg, piece);
        else
            it->second = sum(it->second, piece);
    };
    for (const auto& [ti, vi] : v_components) add_to(new_degree(ti), vi);
    for (const auto& [ti, vi] : v_components)
        for (const auto& [tj, vj] : v_components) {
            if (tj < ti) continue;
            std::vector<Vec> ri, rj;
            for (std::size_t r = 0; r < vi.dim(); ++r) ri.push_back(vi.basis_row(r));
            for (std::size_t r = 0; r < vj.dim(); ++r) rj.push_back(vj.basis_row(r));
            const Subspace prod = span_of_brackets(a, ri, rj);
            if (prod.dim()) add_to(new_degree(ti) + new_degree(tj), prod);
        }
    Grading g{std::move(comps)};
    if (!is_direct_decomposition(g, L.space))
        throw std::invalid_argument(
            "regrade_by_table: induced degrees are ill-defined (components overlap or miss L)");
    return g;
}

bool is_sl2_triple(const LieAlgebra& a, const Vec& e, const Vec& h, const Vec& f) {
    if (vec_is_zero(e) || vec_is_zero(h) || vec_is_zero(f)) return false;
    const PrimeField& k = a.field();
    return a.bracket(h, e) == vec_scaled(k, e, k.reduce(2)) &&
           a.bracket(h, f) == vec_scaled(k, f, k.reduce(-2)) && a.bracket(e, f) == h;
}

std::optional<Sl2Triple> find_sl2_triple(const SubalgebraHandle& s) {
    const LieAlgebra& a = *s.parent;
    a.require_lie("find_sl2_triple");
    const std::size_t k = s.dim();
    if (k > 12) throw std::invalid_argument("find_sl2_triple: dimension cap (12) exceeded");
    const PrimeField& f = a.field();
    std::size_t points = 1;
    for (std::size_t i = 0; i < k; ++i) {
        points *= f.modulus();
        if (points > (1u << 20))
            throw std::invalid_argument("find_sl2_triple: enumeration cap exceeded");
    }
    const MaterializedSubalgebra sub = materialize(s);
    const LieAlgebra& b = sub.alg;
    std::optional<Sl2Triple> found;
    for_each_projective_rep(f, k, [&](const Vec& cand) {
        if (!is_ad_nilpotent(b, cand).nilpotent) return true;
        // solve [h, e1] = 2 e1 for h, then f1 from the remaining relations
        const Matrix ad_e = b.ad(cand);
        Matrix neg_ad_e(f, k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) neg_ad_e.at(r, c) = f.neg(ad_e.at(r, c));
        AffineSolution hs = solve_simultaneous(f, k, {{neg_ad_e, vec_scaled(f, cand, f.reduce(2))}});
        if (!hs.consistent) return true;
        // enumerate the h coset (small homogeneous part)
        std::vector<Vec> h_cands;
        if (hs.homogeneous.dim() == 0)
            h_cands.push_back(hs.particular);
        else {
            if (hs.homogeneous.dim() > 6) return true;
            std::size_t combos = 1;
            for (std::size_t i = 0; i < hs.homogeneous.dim(); ++i) combos *= f.modulus();
            for (std::size_t code = 0; code < combos; ++code) {
                Vec h = hs.particular;
                std::size_t c = code;
                for (std::size_t i = 0; i < hs.homogeneous.dim(); ++i, c /= f.modulus()) {
                    const Scalar coeff = static_cast<Scalar>(c % f.modulus());
                    if (coeff) h = vec_add(f, h, vec_scaled(f, hs.homogeneous.basis_row(i), coeff));
                }
                h_cands.push_back(std::move(h));
            }
        }
        for (const Vec& h : h_cands) {
            if (vec_is_zero(h)) continue;
            // [h, f1] = -2 f1 and [e1, f1] = h
            const Matrix ad_h = b.ad(h);
            Matrix rel(f, k, k);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c)
                    rel.at(r, c) = f.add(ad_h.at(r, c), r == c ? f.reduce(2) : 0);
            AffineSolution fs = solve_simultaneous(f, k, {{rel, Vec(k, 0)}, {ad_e, h}});
            if (!fs.consistent) continue;
            const Vec& fe = fs.particular;
            if (is_sl2_triple(b, cand, h, fe)) {
                found = Sl2Triple{sub.to_parent(cand), sub.to_parent(h), sub.to_parent(fe)};
                return false;
            }
        }
        return true;
    });
    return found;
}

namespace {

void push_check(RecognitionReport& rep, const std::string& name, bool ok) {
    rep.checklist.emplace_back(name, ok);
}

bool profiles_equal(const std::vector<std::pair<int, std::size_t>>& a,
                    const std::vector<std::pair<int, std::size_t>>& b) {
    return a == b;
}

/// Generators of the action of the null component on the lowest component,
/// in the lowest component's own coordinates.
bool lowest_component_irreducible(const LieAlgebra& a, const Subspace& zero, const Subspace& low) {
    if (low.dim() == 0) return false;
    modrep::MatrixRepresentation rep{a.field(), low.dim(), {}};
    for (std::size_t i = 0; i < zero.dim(); ++i) {
        Matrix m(a.field(), low.dim(), low.dim());
        for (std::size_t j = 0; j < low.dim(); ++j) {
            const Vec br = a.bracket(zero.basis_row(i), low.basis_row(j));
            auto coords = low.coordinates(br);
            if (!coords) return false;
            for (std::size_t t = 0; t < low.dim(); ++t) m.at(t, j) = (*coords)[t];
        }
        rep.generators.push_back(std::move(m));
    }
    return modrep::is_irreducible(rep).irreducible;
}

} // namespace

RecognitionReport ermolaev_recognition(const SubalgebraHandle& L, const Grading& g,
                                       bool simplicity_verified,
                                       const std::vector<std::pair<int, std::size_t>>& expected_profile) {
    RecognitionReport rep;
    rep.hypothesis_set = "depth-one, non-semisimple null component";
    rep.depth = -g.lowest();
    rep.component_dims = g.profile();
    push_check(rep, "depth exactly one", g.lowest() == -1);
    push_check(rep, "component profile matches the reference algebra",
               profiles_equal(rep.component_dims, expected_profile));
    push_check(rep, "grading axiom", !grading_axiom_violation(*L.parent, g).has_value());
    push_check(rep, "components decompose the algebra", is_direct_decomposition(g, L.space));
    push_check(rep, "simplicity verified", simplicity_verified);
    const Subspace* zero = g.component(0);
    bool rad_ok = false, rad_nilpotent = false, rad_noncentral = false, quot_sl2 = false;
    if (zero && zero->dim()) {
        SubalgebraHandle l0 = make_subalgebra(*L.parent, *zero);
        SubalgebraHandle rad = solvable_radical(l0);
        rep.radical_dim = rad.dim();
        rad_ok = rad.dim() > 0;
        if (rad_ok) {
            auto lcs = lower_central_series(rad);
            rad_nilpotent = lcs.back().dim() == 0;
            // non-central: some bracket of the radical with L0 is nonzero
            std::vector<Vec> rrows, zrows;
            for (std::size_t i = 0; i < rad.dim(); ++i) rrows.push_back(rad.space.basis_row(i));
            for (std::size_t i = 0; i < zero->dim(); ++i) zrows.push_back(zero->basis_row(i));
            rad_noncentral = span_of_brackets(*L.parent, rrows, zrows).dim() > 0;
            const MaterializedSubalgebra m0 = materialize(l0);
            std::vector<Vec> rad_in_sub;
            for (const Vec& r : rrows) rad_in_sub.push_back(m0.to_sub(r));
            const QuotientAlgebra q =
                quotient(m0.alg, Subspace::from_spanning(m0.alg.field(), m0.alg.dim(), rad_in_sub));
            if (q.alg.dim() > 0) {
                SubalgebraHandle whole{&q.alg, Subspace::full(q.alg.field(), q.alg.dim())};
                quot_sl2 = find_sl2_triple(whole).has_value();
            }
        }
        rep.sl2_witness = find_sl2_triple(l0);
        const Subspace* low = g.component(-1);
        if (low) rep.reported_lowest_irreducible =
            lowest_component_irreducible(*L.parent, *zero, *low);
    }
    push_check(rep, "null-component radical nonzero", rad_ok);
    push_check(rep, "null-component radical nilpotent", rad_nilpotent);
    push_check(rep, "null-component radical non-central", rad_noncentral);
    push_check(rep, "null component has sl2 modulo the radical", quot_sl2);
    rep.all_ok = std::all_of(rep.checklist.begin(), rep.checklist.end(),
                             [](const auto& c) { return c.second; });
    return rep;
}

RecognitionReport witt_recognition(const SubalgebraHandle& W, const Grading& g,
                                   bool simplicity_verified,
                                   const std::vector<std::pair<int, std::size_t>>& expected_profile) {
    RecognitionReport rep;
    rep.hypothesis_set = "depth-one, classical null component";
    rep.depth = -g.lowest();
    rep.component_dims = g.profile();
    push_check(rep, "depth exactly one", g.lowest() == -1);
    push_check(rep, "component profile matches the reference algebra",
               profiles_equal(rep.component_dims, expected_profile));
    push_check(rep, "grading axiom", !grading_axiom_violation(*W.parent, g).has_value());
    push_check(rep, "components decompose the algebra", is_direct_decomposition(g, W.space));
    push_check(rep, "simplicity verified", simplicity_verified);
    const Subspace* zero = g.component(0);
    bool center_1 = false, split_ok = false, derived_sl2 = false;
    if (zero && zero->dim()) {
        SubalgebraHandle w0 = make_subalgebra(*W.parent, *zero);
        const Subspace c = center(w0);
        rep.center_dim = c.dim();
        center_1 = c.dim() == 1;
        SubalgebraHandle der = derived_subalgebra(w0);
        split_ok = der.dim() + c.dim() == zero->dim() && intersect(der.space, c).dim() == 0;
        rep.sl2_witness = find_sl2_triple(der);
        derived_sl2 = rep.sl2_witness.has_value() && der.dim() == 3;
        const Subspace* low = g.component(-1);
        if (low) rep.reported_lowest_irreducible =
            lowest_component_irreducible(*W.parent, *zero, *low);
    }
    push_check(rep, "null component splits as derived plus center", split_ok);
    push_check(rep, "null-component center is one-dimensional", center_1);
    push_check(rep, "null-component derived part is an sl2", derived_sl2);
    rep.all_ok = std::all_of(rep.checklist.begin(), rep.checklist.end(),
                             [](const auto& c) { return c.second; });
    return rep;
}

DualityVerdict duality_check(const Grading& g) {
    const Subspace* low = g.component(g.lowest());
    const Subspace* top = g.component(g.highest());
    const std::size_t ld = low ? low->dim() : 0, td = top ? top->dim() : 0;
    return {ld, td, ld != td};
}

bool is_bracket_preserving(const LieAlgebra& a, const LieAlgebra& b, const Matrix& map) {
    if (map.rows() != b.dim() || map.cols() != a.dim())
        throw std::invalid_argument("is_bracket_preserving: shape mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec bi(a.dim(), 0);
        bi[i] = 1;
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            Vec bj(a.dim(), 0);
            bj[j] = 1;
            const Vec lhs = map.apply(a.bracket(bi, bj));
            const Vec rhs = b.bracket(map.apply(bi), map.apply(bj));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

} // namespace modlie::grading
