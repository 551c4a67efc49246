#pragma once
/* Exact dense linear algebra over the coefficient field.
 *
 * Row reduction comes in two builds of the same algorithm: a serial
 * reference and an OpenMP version parallelized over rows.  Pivoting is
 * positional (first nonzero row), so both produce the identical reduced
 * row-echelon form; the serial build is the oracle in tests and the
 * comparison partner in the benchmark.
 */

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "foliate/ring.hpp"

namespace foliate {

struct Matrix {
    RingPtr ring;  // field context only; variables are irrelevant here
    std::size_t rows = 0, cols = 0;
    std::vector<mpq_class> a;  // row-major

    Matrix() = default;
    Matrix(RingPtr r, std::size_t m, std::size_t n)
        : ring(std::move(r)), rows(m), cols(n), a(m * n, mpq_class(0)) {}

    mpq_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/* In-place reduced row-echelon form; returns the pivot column of each pivot
   row in order (so its size is the rank). */
std::vector<std::size_t> rref_serial(Matrix& m);
std::vector<std::size_t> rref_parallel(Matrix& m);
std::vector<std::size_t> rref(Matrix& m, bool parallel = true);

/* Basis of the right null space { x : M x = 0 }, one vector per free column,
   in ascending free-column order; canonical given the RREF. */
std::vector<std::vector<mpq_class>> kernel_basis(const Matrix& m, bool parallel = true);

std::size_t rank(Matrix m, bool parallel = true);

}  // namespace foliate
