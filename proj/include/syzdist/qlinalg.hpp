#ifndef SYZDIST_QLINALG_HPP
#define SYZDIST_QLINALG_HPP

#include <vector>

#include "syzdist/rational.hpp"

namespace syzdist {

// Dense exact-rational matrix. Row reduction is the data-parallel kernel
// behind the graded-piece, span and kernel computations; the serial routine
// is the reference, the OpenMP routine must produce bit-identical output.
struct QMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    void append_row(const std::vector<Rat>& row);
    bool operator==(const QMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

enum class RrefMode { Auto, Serial, Parallel };

// reduced row echelon form in place; returns the rank
int rref_serial(QMatrix& m);
int rref_parallel(QMatrix& m);
int rref(QMatrix& m, RrefMode mode = RrefMode::Auto);

int rank(QMatrix m, RrefMode mode = RrefMode::Auto);

// canonical reduced span: rref with zero rows dropped
QMatrix row_space_basis(QMatrix m, RrefMode mode = RrefMode::Auto);

// basis of {v : m v = 0}, one kernel vector per free column, deterministic
std::vector<std::vector<Rat>> kernel_basis(QMatrix m, RrefMode mode = RrefMode::Auto);

} // namespace syzdist

#endif
