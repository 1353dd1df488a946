#include "modlie/liealgebra.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "modlie/kernels.hpp"
#include "modlie/modrep.hpp"

namespace modlie {

namespace {

Vec sparse_to_vec(const SparseRow& r, std::size_t dim) {
    Vec v(dim, 0);
    for (const auto& [k, c] : r) v[k] = c;
    return v;
}

template <bool Parallel>
std::optional<std::array<std::size_t, 3>> jacobi_violation_impl(const LieAlgebra& a) {
    const std::size_t n = a.dim();
    const PrimeField& f = a.field();
    auto triple_ok = [&](std::size_t i, std::size_t j, std::size_t k) {
        const Vec jk = sparse_to_vec(a.pair_bracket(j, k), n);
        const Vec ij = sparse_to_vec(a.pair_bracket(i, j), n);
        const Vec ki = sparse_to_vec(a.pair_bracket(k, i), n);
        Vec acc(n, 0);
        auto add_bracket = [&](std::size_t lhs, const Vec& rhs) {
            for (std::size_t t = 0; t < n; ++t) {
                if (!rhs[t]) continue;
                for (const auto& [u, c] : a.pair_bracket(lhs, t))
                    acc[u] = f.add(acc[u], f.mul(c, rhs[t]));
            }
        };
        add_bracket(i, jk);
        add_bracket(k, ij);
        add_bracket(j, ki);
        return vec_is_zero(acc);
    };
    std::array<std::size_t, 3> best{n, n, n};
    bool found = false;
    if constexpr (Parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::array<std::size_t, 3> local{n, n, n};
            bool local_found = false;
#pragma omp for schedule(dynamic, 1) nowait
            for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
                const auto i = static_cast<std::size_t>(ii);
                for (std::size_t j = i + 1; j < n; ++j)
                    for (std::size_t k = j + 1; k < n; ++k)
                        if (!triple_ok(i, j, k)) {
                            const std::array<std::size_t, 3> t{i, j, k};
                            if (!local_found || t < local) local = t;
                            local_found = true;
                        }
            }
#pragma omp critical
            if (local_found && (!found || local < best)) {
                best = local;
                found = true;
            }
        }
#endif
    } else {
        for (std::size_t i = 0; i < n && !found; ++i)
            for (std::size_t j = i + 1; j < n && !found; ++j)
                for (std::size_t k = j + 1; k < n && !found; ++k)
                    if (!triple_ok(i, j, k)) {
                        best = {i, j, k};
                        found = true;
                    }
    }
    if (!found) return std::nullopt;
    return best;
}

} // namespace

std::optional<std::array<std::size_t, 3>> jacobi_violation_serial(const LieAlgebra& a) {
    return jacobi_violation_impl<false>(a);
}

std::optional<std::array<std::size_t, 3>> jacobi_violation(const LieAlgebra& a) {
#ifdef _OPENMP
    if (kernels::exec_mode() != kernels::ExecMode::ForceSerial && a.dim() >= 24)
        return jacobi_violation_impl<true>(a);
#endif
    return jacobi_violation_impl<false>(a);
}

LieAlgebra::LieAlgebra(PrimeField f, std::size_t dim, std::vector<std::string> labels,
                       std::vector<SparseRow> table)
    : field_(f), dim_(dim), labels_(std::move(labels)), table_(std::move(table)),
      jacobi_ok_(false) {
    if (labels_.size() != dim_ || table_.size() != dim_ * dim_)
        throw std::invalid_argument("LieAlgebra: table or label size mismatch");
    for (std::size_t i = 0; i < dim_; ++i) {
        for (const auto& [k, c] : pair_bracket(i, i))
            if (c) throw std::invalid_argument("LieAlgebra: [b_i, b_i] != 0");
        for (std::size_t j = i + 1; j < dim_; ++j) {
            Vec lhs = sparse_to_vec(pair_bracket(i, j), dim_);
            Vec rhs = sparse_to_vec(pair_bracket(j, i), dim_);
            for (std::size_t t = 0; t < dim_; ++t)
                if (field_.add(lhs[t], rhs[t]) != 0)
                    throw std::invalid_argument("LieAlgebra: antisymmetry violated");
        }
    }
    jacobi_witness_ = jacobi_violation(*this);
    jacobi_ok_ = !jacobi_witness_.has_value();
}

void LieAlgebra::require_lie(const char* op) const {
    if (!jacobi_ok_)
        throw std::invalid_argument(std::string(op) +
                                    ": table does not satisfy the Jacobi identity");
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("LieAlgebra::bracket: dimension mismatch");
    std::vector<std::uint64_t> acc(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!y[j]) continue;
            const std::uint64_t xy = static_cast<std::uint64_t>(x[i]) * y[j] % field_.modulus();
            for (const auto& [k, c] : pair_bracket(i, j)) acc[k] += xy * c;
        }
    }
    Vec out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out[k] = static_cast<Scalar>(acc[k] % field_.modulus());
    return out;
}

Matrix LieAlgebra::ad(const Vec& x) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        for (std::size_t i = 0; i < dim_; ++i) {
            if (!x[i]) continue;
            for (const auto& [k, c] : pair_bracket(i, j))
                m.at(k, j) = field_.add(m.at(k, j), field_.mul(x[i], c));
        }
    }
    return m;
}

std::string LieAlgebra::render(const Vec& v) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!v[i]) continue;
        if (!first) os << " + ";
        if (v[i] != 1) os << v[i] << "*";
        os << labels_[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

SubalgebraHandle make_subalgebra(const LieAlgebra& a, Subspace space) {
    for (std::size_t i = 0; i < space.dim(); ++i)
        for (std::size_t j = i + 1; j < space.dim(); ++j)
            if (!space.contains(a.bracket(space.basis_row(i), space.basis_row(j))))
                throw std::invalid_argument("make_subalgebra: subspace is not bracket-closed");
    return {&a, std::move(space)};
}

namespace {

template <bool Parallel>
Subspace span_of_brackets_impl(const LieAlgebra& a, const std::vector<Vec>& lhs,
                               const std::vector<Vec>& rhs) {
    const std::size_t k = lhs.size(), l = rhs.size();
    Matrix rows(a.field(), k * l, a.dim());
    if constexpr (Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (long long t = 0; t < static_cast<long long>(k * l); ++t) {
            const auto idx = static_cast<std::size_t>(t);
            rows.set_row(idx, a.bracket(lhs[idx / l], rhs[idx % l]));
        }
#endif
    } else {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < l; ++j) rows.set_row(i * l + j, a.bracket(lhs[i], rhs[j]));
    }
    return Subspace::from_spanning(rows);
}

} // namespace

Subspace span_of_brackets_serial(const LieAlgebra& a, const std::vector<Vec>& lhs,
                                 const std::vector<Vec>& rhs) {
    return span_of_brackets_impl<false>(a, lhs, rhs);
}

Subspace span_of_brackets(const LieAlgebra& a, const std::vector<Vec>& lhs,
                          const std::vector<Vec>& rhs) {
#ifdef _OPENMP
    if (kernels::exec_mode() != kernels::ExecMode::ForceSerial && lhs.size() * rhs.size() >= 256)
        return span_of_brackets_impl<true>(a, lhs, rhs);
#endif
    return span_of_brackets_impl<false>(a, lhs, rhs);
}

SubalgebraHandle subalgebra_closure(const LieAlgebra& a, const std::vector<Vec>& generators) {
    a.require_lie("subalgebra_closure");
    if (generators.empty()) throw std::invalid_argument("subalgebra_closure: no generators");
    EchelonAccumulator acc(a.field(), a.dim());
    std::vector<Vec> gens; // raw spanning vectors; their span equals acc's span
    for (const Vec& g : generators)
        if (acc.insert(g)) gens.push_back(g);
    std::size_t next_pair = 0; // pairs (i, j) with j < i processed for i < next_pair
    while (true) {
        const std::size_t count = gens.size();
        bool grew = false;
        for (std::size_t i = next_pair; i < count; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                Vec w = a.bracket(gens[i], gens[j]);
                if (acc.insert(w)) {
                    gens.push_back(std::move(w));
                    grew = true;
                }
            }
        next_pair = count;
        if (!grew && gens.size() == count) break;
    }
    return {&a, acc.to_subspace()};
}

SubalgebraHandle centralizer_of_element(const LieAlgebra& a, const Vec& x) {
    a.require_lie("centralizer_of_element");
    return make_subalgebra(a, kernel(a.ad(x)));
}

Subspace centralizer_of_subspace(const LieAlgebra& a, const Subspace& s) {
    if (s.dim() == 0) return Subspace::full(a.field(), a.dim());
    Matrix stacked(a.field(), s.dim() * a.dim(), a.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
        // condition ad(u_j) * x = 0 written as rows
        const Matrix adj = a.ad(s.basis_row(j));
        for (std::size_t r = 0; r < a.dim(); ++r)
            for (std::size_t c = 0; c < a.dim(); ++c) stacked.at(j * a.dim() + r, c) = adj.at(r, c);
    }
    return kernel(stacked);
}

SubalgebraHandle normalizer(const SubalgebraHandle& s) {
    const LieAlgebra& a = *s.parent;
    a.require_lie("normalizer");
    const std::size_t n = a.dim(), k = s.dim();
    if (k == 0) return {&a, Subspace::full(a.field(), n)};
    // x is in the normalizer iff [x, u_j] reduces to zero modulo s for all
    // basis u_j; the residual after reduction is linear in x.
    std::vector<std::size_t> free_pos;
    {
        std::vector<bool> is_piv(n, false);
        for (std::size_t c : s.space.pivots()) is_piv[c] = true;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_piv[c]) free_pos.push_back(c);
    }
    Matrix constraints(a.field(), k * free_pos.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec bi(n, 0);
        bi[i] = 1;
        for (std::size_t j = 0; j < k; ++j) {
            const Vec res = s.space.reduce(a.bracket(bi, s.space.basis_row(j)));
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                constraints.at(j * free_pos.size() + t, i) = res[free_pos[t]];
        }
    }
    return make_subalgebra(a, kernel(constraints));
}

SubalgebraHandle derived_subalgebra(const SubalgebraHandle& s) {
    const LieAlgebra& a = *s.parent;
    a.require_lie("derived_subalgebra");
    std::vector<Vec> rows;
    rows.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(s.space.basis_row(i));
    return {&a, span_of_brackets(a, rows, rows)};
}

std::vector<SubalgebraHandle> derived_series(const SubalgebraHandle& s) {
    std::vector<SubalgebraHandle> series{s};
    while (true) {
        SubalgebraHandle next = derived_subalgebra(series.back());
        if (next.space == series.back().space) break;
        series.push_back(next);
        if (series.back().dim() == 0) break;
    }
    return series;
}

std::vector<SubalgebraHandle> lower_central_series(const SubalgebraHandle& s) {
    const LieAlgebra& a = *s.parent;
    a.require_lie("lower_central_series");
    std::vector<Vec> base;
    for (std::size_t i = 0; i < s.dim(); ++i) base.push_back(s.space.basis_row(i));
    std::vector<SubalgebraHandle> series{s};
    while (true) {
        std::vector<Vec> cur;
        for (std::size_t i = 0; i < series.back().dim(); ++i)
            cur.push_back(series.back().space.basis_row(i));
        Subspace next = span_of_brackets(a, base, cur);
        if (next == series.back().space) break;
        series.push_back({&a, next});
        if (series.back().dim() == 0) break;
    }
    return series;
}

Subspace center(const SubalgebraHandle& s) {
    const LieAlgebra& a = *s.parent;
    const std::size_t n = a.dim(), k = s.dim();
    if (k == 0) return Subspace(a.field(), n);
    // x = sum c_i u_i with [x, u_j] = 0 for all j
    Matrix constraints(a.field(), k * n, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const Vec br = a.bracket(s.space.basis_row(i), s.space.basis_row(j));
            for (std::size_t t = 0; t < n; ++t) constraints.at(j * n + t, i) = br[t];
        }
    Subspace coeffs = kernel(constraints);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < coeffs.dim(); ++r) {
        Vec c = coeffs.basis_row(r), v(n, 0);
        for (std::size_t i = 0; i < k; ++i)
            if (c[i]) v = vec_add(a.field(), v, vec_scaled(a.field(), s.space.basis_row(i), c[i]));
        rows.push_back(std::move(v));
    }
    return Subspace::from_spanning(a.field(), n, rows);
}

NilpotencyVerdict is_ad_nilpotent(const LieAlgebra& a, const Vec& x) {
    const Matrix m = a.ad(x);
    Matrix power = m;
    for (std::size_t k = 1; k <= a.dim(); ++k) {
        if (power.is_zero()) return {true, k};
        power = kernels::matmul(m, power);
    }
    return {false, 0};
}

std::vector<Vec> scan_partners(const LieAlgebra& a, const Vec& e, const Subspace& candidates,
                               std::size_t target_dim) {
    a.require_lie("scan_partners");
    if (candidates.dim() > 4)
        throw std::invalid_argument("scan_partners: candidate space too large to enumerate");
    std::vector<Vec> hits;
    for_each_projective_rep(a.field(), candidates.dim(), [&](const Vec& coeff) {
        Vec v(a.dim(), 0);
        for (std::size_t i = 0; i < candidates.dim(); ++i)
            if (coeff[i])
                v = vec_add(a.field(), v, vec_scaled(a.field(), candidates.basis_row(i), coeff[i]));
        if (subalgebra_closure(a, {e, v}).dim() == target_dim) hits.push_back(std::move(v));
        return true;
    });
    return hits;
}

Vec MaterializedSubalgebra::to_parent(const Vec& sub_coords) const {
    if (sub_coords.size() != alg.dim())
        throw std::invalid_argument("to_parent: dimension mismatch");
    Vec v(parent->dim(), 0);
    for (std::size_t i = 0; i < alg.dim(); ++i)
        if (sub_coords[i])
            v = vec_add(parent->field(), v, vec_scaled(parent->field(), rows.row(i), sub_coords[i]));
    return v;
}

Vec MaterializedSubalgebra::to_sub(const Vec& parent_vec) const {
    Subspace sp = Subspace::from_spanning(rows);
    auto c = sp.coordinates(parent_vec);
    if (!c) throw std::invalid_argument("to_sub: vector not in the subalgebra");
    return *c;
}

MaterializedSubalgebra materialize(const SubalgebraHandle& s) {
    const LieAlgebra& a = *s.parent;
    const std::size_t k = s.dim();
    Matrix rows(a.field(), k, a.dim());
    for (std::size_t i = 0; i < k; ++i) rows.set_row(i, s.space.basis_row(i));
    std::vector<SparseRow> table(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            const Vec br = a.bracket(rows.row(i), rows.row(j));
            auto coords = s.space.coordinates(br);
            if (!coords) throw std::invalid_argument("materialize: handle is not bracket-closed");
            for (std::size_t t = 0; t < k; ++t)
                if ((*coords)[t]) table[i * k + j].emplace_back(static_cast<std::uint32_t>(t), (*coords)[t]);
        }
    std::vector<std::string> labels(k);
    for (std::size_t i = 0; i < k; ++i) labels[i] = "u" + std::to_string(i);
    return {LieAlgebra(a.field(), k, std::move(labels), std::move(table)), &a, std::move(rows)};
}

Vec QuotientAlgebra::project(const Vec& parent_vec) const {
    const Vec res = ideal.reduce(parent_vec);
    Vec out(free_pos.size(), 0);
    for (std::size_t t = 0; t < free_pos.size(); ++t) out[t] = res[free_pos[t]];
    return out;
}

QuotientAlgebra quotient(const LieAlgebra& a, const Subspace& ideal) {
    a.require_lie("quotient");
    const std::size_t n = a.dim();
    if (ideal.ambient_dim() != n) throw std::invalid_argument("quotient: ambient mismatch");
    std::vector<std::size_t> free_pos;
    {
        std::vector<bool> is_piv(n, false);
        for (std::size_t c : ideal.pivots()) is_piv[c] = true;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_piv[c]) free_pos.push_back(c);
    }
    const std::size_t q = free_pos.size();
    Matrix section(a.field(), q, n);
    for (std::size_t t = 0; t < q; ++t) section.at(t, free_pos[t]) = 1;
    std::vector<SparseRow> table(q * q);
    std::vector<std::string> labels(q);
    QuotientAlgebra out{LieAlgebra(a.field(), 0, {}, {}), section, ideal, free_pos};
    for (std::size_t i = 0; i < q; ++i) labels[i] = a.labels()[free_pos[i]];
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            if (i == j) continue;
            const Vec br = a.bracket(section.row(i), section.row(j));
            const Vec pr = out.project(br);
            for (std::size_t t = 0; t < q; ++t)
                if (pr[t]) table[i * q + j].emplace_back(static_cast<std::uint32_t>(t), pr[t]);
        }
    out.alg = LieAlgebra(a.field(), q, std::move(labels), std::move(table));
    return out;
}

bool is_abelian(const LieAlgebra& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (!a.pair_bracket(i, j).empty()) return false;
    return true;
}

bool is_abelian_subspace(const LieAlgebra& a, const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i + 1; j < s.dim(); ++j)
            if (!vec_is_zero(a.bracket(s.basis_row(i), s.basis_row(j)))) return false;
    return true;
}

namespace {

/// Radical of a materialized algebra, in its own coordinates.
Subspace radical_local(const LieAlgebra& a) {
    const std::size_t n = a.dim();
    if (n == 0) return Subspace(a.field(), 0);
    const modrep::MatrixRepresentation ad_rep = modrep::regular_adjoint(a);
    const Subspace minimal = modrep::socle_minimal_submodule(ad_rep);
    if (is_abelian_subspace(a, minimal)) {
        const QuotientAlgebra q = quotient(a, minimal);
        if (q.alg.dim() == 0) return Subspace::full(a.field(), n);
        const Subspace rad_q = radical_local(q.alg);
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < minimal.dim(); ++i) rows.push_back(minimal.basis_row(i));
        for (std::size_t i = 0; i < rad_q.dim(); ++i) {
            Vec lift(n, 0);
            const Vec rq = rad_q.basis_row(i);
            for (std::size_t t = 0; t < q.alg.dim(); ++t)
                if (rq[t]) lift = vec_add(a.field(), lift,
                                          vec_scaled(a.field(), q.section.row(t), rq[t]));
            rows.push_back(std::move(lift));
        }
        return Subspace::from_spanning(a.field(), n, rows);
    }
    // minimal ideal is non-abelian, hence perfect and outside the radical;
    // the radical lives in its centralizer, a proper ideal
    const Subspace cent = centralizer_of_subspace(a, minimal);
    if (cent.dim() == 0) return Subspace(a.field(), n);
    const MaterializedSubalgebra sub = materialize(make_subalgebra(a, cent));
    const Subspace rad_sub = radical_local(sub.alg);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < rad_sub.dim(); ++i) rows.push_back(sub.to_parent(rad_sub.basis_row(i)));
    return Subspace::from_spanning(a.field(), n, rows);
}

} // namespace

SubalgebraHandle solvable_radical(const SubalgebraHandle& s) {
    const LieAlgebra& a = *s.parent;
    a.require_lie("solvable_radical");
    if (s.dim() > 12) throw std::invalid_argument("solvable_radical: dimension cap (12) exceeded");
    const MaterializedSubalgebra sub = materialize(s);
    const Subspace rad = radical_local(sub.alg);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < rad.dim(); ++i) rows.push_back(sub.to_parent(rad.basis_row(i)));
    return make_subalgebra(a, Subspace::from_spanning(a.field(), a.dim(), rows));
}

} // namespace modlie
