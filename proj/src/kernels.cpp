#include "modlie/kernels.hpp"

#include <atomic>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modlie::kernels {

namespace {

std::atomic<ExecMode> g_mode{ExecMode::Auto};

bool use_parallel(std::size_t work) {
#ifdef _OPENMP
    switch (g_mode.load()) {
        case ExecMode::ForceSerial: return false;
        case ExecMode::ForceParallel: return true;
        case ExecMode::Auto: return work >= 1u << 18;
    }
    return false;
#else
    (void)work;
    return false;
#endif
}

// row_i -= c * row_piv, entries canonical mod p. 250^2 + 250 fits in 32 bits.
inline void eliminate_row(Scalar* row, const Scalar* piv, Scalar c, std::size_t n, Scalar p) {
    const Scalar k = p - c;
    for (std::size_t j = 0; j < n; ++j) row[j] = (row[j] + k * piv[j]) % p;
}

template <bool Parallel>
std::size_t rref_impl(Matrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    const Scalar p = m.field().modulus();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t pr = rank;
        while (pr < nr && m.at(pr, col) == 0) ++pr;
        if (pr == nr) continue;
        if (pr != rank)
            for (std::size_t j = 0; j < nc; ++j) std::swap(m.at(rank, j), m.at(pr, j));
        const Scalar piv_inv = m.field().inv(m.at(rank, col));
        if (piv_inv != 1) {
            Scalar* r = m.row_ptr(rank);
            for (std::size_t j = 0; j < nc; ++j) r[j] = (r[j] * piv_inv) % p;
        }
        const Scalar* prow = m.row_ptr(rank);
        if constexpr (Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
            for (long long ir = 0; ir < static_cast<long long>(nr); ++ir) {
                const auto i = static_cast<std::size_t>(ir);
                if (i == rank) continue;
                const Scalar c = m.at(i, col);
                if (c) eliminate_row(m.row_ptr(i), prow, c, nc, p);
            }
#endif
        } else {
            for (std::size_t i = 0; i < nr; ++i) {
                if (i == rank) continue;
                const Scalar c = m.at(i, col);
                if (c) eliminate_row(m.row_ptr(i), prow, c, nc, p);
            }
        }
        ++rank;
    }
    return rank;
}

template <bool Parallel>
Matrix matmul_impl(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field() || a.cols() != b.rows())
        throw std::invalid_argument("matmul: shape or field mismatch");
    const std::size_t n = a.rows(), k = a.cols(), mcols = b.cols();
    const Scalar p = a.field().modulus();
    Matrix c(a.field(), n, mcols);
    const auto body = [&](std::size_t i) {
        std::vector<std::uint64_t> acc(mcols, 0);
        for (std::size_t t = 0; t < k; ++t) {
            const Scalar av = a.at(i, t);
            if (!av) continue;
            const Scalar* brow = b.row_ptr(t);
            for (std::size_t j = 0; j < mcols; ++j)
                acc[j] += static_cast<std::uint64_t>(av) * brow[j];
        }
        Scalar* crow = c.row_ptr(i);
        for (std::size_t j = 0; j < mcols; ++j) crow[j] = static_cast<Scalar>(acc[j] % p);
    };
    if constexpr (Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) body(static_cast<std::size_t>(i));
#endif
    } else {
        for (std::size_t i = 0; i < n; ++i) body(i);
    }
    return c;
}

} // namespace

void set_exec_mode(ExecMode m) { g_mode.store(m); }
ExecMode exec_mode() { return g_mode.load(); }

std::size_t rref_inplace_serial(Matrix& m) { return rref_impl<false>(m); }

std::size_t rref_inplace_parallel(Matrix& m) {
#ifdef _OPENMP
    return rref_impl<true>(m);
#else
    return rref_impl<false>(m);
#endif
}

std::size_t rref_inplace(Matrix& m) {
    return use_parallel(m.rows() * m.cols()) ? rref_inplace_parallel(m) : rref_inplace_serial(m);
}

Matrix matmul_serial(const Matrix& a, const Matrix& b) { return matmul_impl<false>(a, b); }

Matrix matmul_parallel(const Matrix& a, const Matrix& b) {
#ifdef _OPENMP
    return matmul_impl<true>(a, b);
#else
    return matmul_impl<false>(a, b);
#endif
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    return use_parallel(a.rows() * a.cols() * b.cols()) ? matmul_parallel(a, b)
                                                        : matmul_serial(a, b);
}

} // namespace modlie::kernels
