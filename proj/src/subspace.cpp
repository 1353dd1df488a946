#include "modlie/subspace.hpp"

#include <algorithm>

namespace modlie {

namespace {

std::vector<std::size_t> pivot_columns(const Matrix& reduced, std::size_t rank) {
    std::vector<std::size_t> piv;
    piv.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t j = 0;
        while (j < reduced.cols() && reduced.at(i, j) == 0) ++j;
        piv.push_back(j);
    }
    return piv;
}

} // namespace

std::pair<Matrix, std::size_t> rref(const Matrix& m) {
    Matrix r = m;
    std::size_t rank = kernels::rref_inplace(r);
    return {std::move(r), rank};
}

Subspace Subspace::from_spanning(const Matrix& rows) {
    auto [red, rank] = rref(rows);
    Matrix basis(rows.field(), rank, rows.cols());
    for (std::size_t i = 0; i < rank; ++i) basis.set_row(i, red.row(i));
    auto piv = pivot_columns(basis, rank);
    return Subspace(std::move(basis), std::move(piv));
}

Subspace Subspace::from_spanning(PrimeField f, std::size_t ambient_dim,
                                 const std::vector<Vec>& rows) {
    if (rows.empty()) return Subspace(f, ambient_dim);
    return from_spanning(Matrix::from_rows(f, rows));
}

Subspace Subspace::full(PrimeField f, std::size_t ambient_dim) {
    return from_spanning(Matrix::identity(f, ambient_dim));
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("Subspace::reduce: ambient mismatch");
    const PrimeField& f = field();
    Vec r = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        const Scalar c = r[pivots_[i]];
        if (!c) continue;
        const Scalar k = f.neg(c);
        const Scalar* row = basis_.row_ptr(i);
        for (std::size_t j = pivots_[i]; j < r.size(); ++j)
            r[j] = f.add(r[j], f.mul(k, row[j]));
    }
    return r;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_row(i))) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.field() != b.field() || a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("Subspace sum: ambient mismatch");
    Matrix stacked(a.field(), a.dim() + b.dim(), a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis_row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis_row(i));
    return Subspace::from_spanning(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.field() != b.field() || a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("Subspace intersect: ambient mismatch");
    const PrimeField f = a.field();
    const std::size_t n = a.ambient_dim(), ka = a.dim(), kb = b.dim();
    if (ka == 0 || kb == 0) return Subspace(f, n);
    // Solve u^T A = w^T B: kernel of the n x (ka+kb) matrix [A^T | -B^T].
    Matrix m(f, n, ka + kb);
    for (std::size_t j = 0; j < ka; ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = a.basis().at(j, i);
    for (std::size_t j = 0; j < kb; ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, ka + j) = f.neg(b.basis().at(j, i));
    Subspace ker = kernel(m);
    std::vector<Vec> pts;
    pts.reserve(ker.dim());
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        Vec coeff = ker.basis_row(r);
        Vec pt(n, 0);
        for (std::size_t j = 0; j < ka; ++j)
            if (coeff[j]) pt = vec_add(f, pt, vec_scaled(f, a.basis_row(j), coeff[j]));
        pts.push_back(std::move(pt));
    }
    return Subspace::from_spanning(f, n, pts);
}

Subspace kernel(const Matrix& m) {
    const PrimeField f = m.field();
    const std::size_t n = m.cols();
    auto [red, rank] = rref(m);
    std::vector<std::size_t> piv = pivot_columns(red, rank);
    std::vector<bool> is_piv(n, false);
    for (std::size_t c : piv) is_piv[c] = true;
    std::vector<Vec> rows;
    rows.reserve(n - rank);
    for (std::size_t c = 0; c < n; ++c) {
        if (is_piv[c]) continue;
        Vec x(n, 0);
        x[c] = 1;
        for (std::size_t i = 0; i < rank; ++i) x[piv[i]] = f.neg(red.at(i, c));
        rows.push_back(std::move(x));
    }
    return Subspace::from_spanning(f, n, rows);
}

AffineSolution solve_simultaneous(PrimeField f, std::size_t unknowns,
                                  const std::vector<std::pair<Matrix, Vec>>& constraints) {
    std::size_t total_rows = 0;
    for (const auto& [a, b] : constraints) {
        if (a.cols() != unknowns || a.rows() != b.size() || a.field() != f)
            throw std::invalid_argument("solve_simultaneous: malformed constraint");
        total_rows += a.rows();
    }
    Matrix aug(f, total_rows, unknowns + 1);
    std::size_t r = 0;
    for (const auto& [a, b] : constraints) {
        for (std::size_t i = 0; i < a.rows(); ++i, ++r) {
            for (std::size_t j = 0; j < unknowns; ++j) aug.at(r, j) = a.at(i, j);
            aug.at(r, unknowns) = b[i];
        }
    }
    auto [red, rank] = rref(aug);
    auto piv = pivot_columns(red, rank);
    if (!piv.empty() && piv.back() == unknowns)
        return {false, {}, Subspace(f, unknowns)};
    Vec particular(unknowns, 0);
    for (std::size_t i = 0; i < rank; ++i) particular[piv[i]] = red.at(i, unknowns);
    Matrix homo(f, total_rows, unknowns);
    r = 0;
    for (const auto& [a, b] : constraints)
        for (std::size_t i = 0; i < a.rows(); ++i, ++r)
            for (std::size_t j = 0; j < unknowns; ++j) homo.at(r, j) = a.at(i, j);
    return {true, std::move(particular), kernel(homo)};
}

bool EchelonAccumulator::insert(Vec v) {
    if (v.size() != n_) throw std::invalid_argument("EchelonAccumulator: ambient mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar c = v[pivots_[i]];
        if (!c) continue;
        const Scalar k = f_.neg(c);
        for (std::size_t j = pivots_[i]; j < n_; ++j) v[j] = f_.add(v[j], f_.mul(k, rows_[i][j]));
    }
    std::size_t lead = 0;
    while (lead < n_ && v[lead] == 0) ++lead;
    if (lead == n_) return false;
    const Scalar inv = f_.inv(v[lead]);
    if (inv != 1)
        for (std::size_t j = lead; j < n_; ++j) v[j] = f_.mul(v[j], inv);
    // clear the new pivot column in existing rows, then keep rows sorted
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar c = rows_[i][lead];
        if (!c) continue;
        const Scalar k = f_.neg(c);
        for (std::size_t j = lead; j < n_; ++j)
            rows_[i][j] = f_.add(rows_[i][j], f_.mul(k, v[j]));
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    const auto idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

Subspace EchelonAccumulator::to_subspace() const {
    return Subspace::from_spanning(f_, n_, rows_);
}

bool EchelonAccumulator::contains(const Vec& v) const {
    Vec r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar c = r[pivots_[i]];
        if (!c) continue;
        const Scalar k = f_.neg(c);
        for (std::size_t j = pivots_[i]; j < n_; ++j)
            r[j] = f_.add(r[j], f_.mul(k, rows_[i][j]));
    }
    return vec_is_zero(r);
}

void for_each_projective_rep(PrimeField f, std::size_t d,
                             const std::function<bool(const Vec&)>& fn) {
    const Scalar p = f.modulus();
    Vec v(d, 0);
    // first nonzero coordinate pinned to 1, remaining coordinates count in base p
    for (std::size_t lead = 0; lead < d; ++lead) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        const std::size_t tail = d - lead - 1;
        while (true) {
            if (!fn(v)) return;
            std::size_t j = 0;
            for (; j < tail; ++j) {
                const std::size_t idx = d - 1 - j;
                if (v[idx] + 1 < p) {
                    ++v[idx];
                    break;
                }
                v[idx] = 0;
            }
            if (j == tail) break;
        }
    }
}

} // namespace modlie
