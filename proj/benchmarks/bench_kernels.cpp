// Serial-vs-OpenMP comparison for the data-parallel kernels: rref, matmul,
// the exhaustive Jacobi scans, bracket-span batches and the spin-all
// reducibility oracle. Results are checked for agreement while timing.

#include <chrono>
#include <cstdio>
#include <cstdint>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "modlie/cartantype.hpp"
#include "modlie/kernels.hpp"
#include "modlie/liealgebra.hpp"
#include "modlie/rootdata.hpp"
#include "../tests/support/oracles.hpp"

using namespace modlie;
using Clock = std::chrono::steady_clock;

namespace {

struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

Matrix random_matrix(Rng& rng, PrimeField f, std::size_t rows, std::size_t cols) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = static_cast<Scalar>(rng.next() % f.modulus());
    return m;
}

template <typename F>
double time_ms(F&& fn, int reps) {
    const auto start = Clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto end = Clock::now();
    return std::chrono::duration<double, std::milli>(end - start).count() / reps;
}

void row(const char* name, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-28s %10.2f ms %10.2f ms   x%.2f   %s\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                agree ? "results agree" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel variants fall back to serial\n");
#endif
    std::printf("%-28s %13s %13s\n", "kernel", "serial", "parallel");

    PrimeField f3(3);
    Rng rng{20240601};

    {
        const Matrix m = random_matrix(rng, f3, 700, 900);
        Matrix a = m, b = m;
        const double ts = time_ms([&] { a = m; kernels::rref_inplace_serial(a); }, 3);
        const double tp = time_ms([&] { b = m; kernels::rref_inplace_parallel(b); }, 3);
        row("rref 700x900 GF(3)", ts, tp, a == b);
    }
    {
        const Matrix a = random_matrix(rng, f3, 384, 384);
        const Matrix b = random_matrix(rng, f3, 384, 384);
        Matrix cs(f3, 0, 0), cp(f3, 0, 0);
        const double ts = time_ms([&] { cs = kernels::matmul_serial(a, b); }, 3);
        const double tp = time_ms([&] { cp = kernels::matmul_parallel(a, b); }, 3);
        row("matmul 384x384 GF(3)", ts, tp, cs == cp);
    }
    {
        const auto cb = rootdata::chevalley_structure_constants(rootdata::build_root_datum("F4"));
        bool agree = true;
        const double ts = time_ms([&] { (void)rootdata::jacobi_violation_int_serial(cb); }, 3);
        kernels::set_exec_mode(kernels::ExecMode::ForceParallel);
        const double tp = time_ms([&] { (void)rootdata::jacobi_violation_int(cb); }, 3);
        kernels::set_exec_mode(kernels::ExecMode::Auto);
        agree = rootdata::jacobi_violation_int_serial(cb) == rootdata::jacobi_violation_int(cb);
        row("integer jacobi scan F4", ts, tp, agree);
    }
    {
        const auto er = cartantype::build_ermolaev(1, 2, f3, 1);
        const double ts = time_ms([&] { (void)jacobi_violation_serial(er.alg); }, 1);
        kernels::set_exec_mode(kernels::ExecMode::ForceParallel);
        const double tp = time_ms([&] { (void)jacobi_violation(er.alg); }, 1);
        kernels::set_exec_mode(kernels::ExecMode::Auto);
        row("mod-3 jacobi scan dim 81", ts, tp,
            jacobi_violation_serial(er.alg) == jacobi_violation(er.alg));
    }
    {
        const auto er = cartantype::build_ermolaev(1, 2, f3, 1);
        std::vector<Vec> rows_;
        for (std::size_t i = 0; i < er.alg.dim(); ++i) {
            Vec v(er.alg.dim(), 0);
            v[i] = 1;
            rows_.push_back(std::move(v));
        }
        Subspace ss(f3, 0), sp(f3, 0);
        const double ts = time_ms([&] { ss = span_of_brackets_serial(er.alg, rows_, rows_); }, 2);
        kernels::set_exec_mode(kernels::ExecMode::ForceParallel);
        const double tp = time_ms([&] { sp = span_of_brackets(er.alg, rows_, rows_); }, 2);
        kernels::set_exec_mode(kernels::ExecMode::Auto);
        row("bracket span 81x81", ts, tp, ss == sp);
    }
    {
        testsupport::ModuleGen gen{99};
        const auto rep = gen.random_module(f3, 7, 2);
        bool rs = false, rp = false;
        const double ts = time_ms([&] { rs = testsupport::oracle_irreducible_serial(rep); }, 1);
        const double tp = time_ms([&] { rp = testsupport::oracle_irreducible_parallel(rep); }, 1);
        row("spin-all oracle degree 7", ts, tp, rs == rp);
    }
    return 0;
}
