#pragma once

#include <cstddef>

#include "modlie/matrix.hpp"

// Data-parallel compute cores. Every kernel ships in two variants: a serial
// reference implementation and an OpenMP one. Results are identical (exact
// arithmetic, canonical algorithms), which the test suite asserts; the
// dispatching entry points pick a variant from the execution mode and the
// problem size.
namespace modlie::kernels {

enum class ExecMode { Auto, ForceSerial, ForceParallel };

/// Process-wide execution mode, Auto by default. Affects speed only, never
/// results.
void set_exec_mode(ExecMode m);
ExecMode exec_mode();

/// In-place reduced row echelon form; returns the rank. The RREF of a matrix
/// is unique, so both variants produce byte-identical output.
std::size_t rref_inplace_serial(Matrix& m);
std::size_t rref_inplace_parallel(Matrix& m);
std::size_t rref_inplace(Matrix& m);

Matrix matmul_serial(const Matrix& a, const Matrix& b);
Matrix matmul_parallel(const Matrix& a, const Matrix& b);
Matrix matmul(const Matrix& a, const Matrix& b);

} // namespace modlie::kernels
