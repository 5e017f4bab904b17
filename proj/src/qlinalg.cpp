#include "syzdist/qlinalg.hpp"

#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace syzdist {

void QMatrix::append_row(const std::vector<Rat>& row) {
    if (cols == 0) cols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols)
        throw std::invalid_argument("append_row: width mismatch");
    a.insert(a.end(), row.begin(), row.end());
    ++rows;
}

namespace {

// Gauss-Jordan with first-nonzero pivoting. The elimination of the other
// rows at each pivot is the data-parallel loop.
template <bool Parallel>
int rref_impl(QMatrix& m) {
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = c; j < m.cols; ++j) swap(m.at(pivot, j), m.at(rank, j));
        if (m.at(rank, c) != 1) {
            Rat inv = 1 / m.at(rank, c);
            for (int j = c; j < m.cols; ++j)
                if (m.at(rank, j) != 0) m.at(rank, j) *= inv;
        }
        auto eliminate_row = [&](int r) {
            if (r == rank) return;
            if (m.at(r, c) == 0) return;
            Rat factor = m.at(r, c);
            for (int j = c; j < m.cols; ++j) {
                const Rat& p = m.at(rank, j);
                if (p != 0) m.at(r, j) -= factor * p;
            }
        };
        if constexpr (Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (int r = 0; r < m.rows; ++r) eliminate_row(r);
        } else {
            for (int r = 0; r < m.rows; ++r) eliminate_row(r);
        }
        ++rank;
    }
    return rank;
}

RrefMode mode_from_env() {
    const char* e = std::getenv("SYZDIST_RREF");
    if (!e) return RrefMode::Auto;
    std::string s(e);
    if (s == "serial") return RrefMode::Serial;
    if (s == "parallel") return RrefMode::Parallel;
    return RrefMode::Auto;
}

} // namespace

int rref_serial(QMatrix& m) { return rref_impl<false>(m); }

int rref_parallel(QMatrix& m) { return rref_impl<true>(m); }

int rref(QMatrix& m, RrefMode mode) {
    if (mode == RrefMode::Auto) mode = mode_from_env();
    if (mode == RrefMode::Auto)
        mode = (static_cast<long>(m.rows) * m.cols >= 4096) ? RrefMode::Parallel : RrefMode::Serial;
    return mode == RrefMode::Parallel ? rref_parallel(m) : rref_serial(m);
}

int rank(QMatrix m, RrefMode mode) { return rref(m, mode); }

QMatrix row_space_basis(QMatrix m, RrefMode mode) {
    int r = rref(m, mode);
    QMatrix out(r, m.cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

std::vector<std::vector<Rat>> kernel_basis(QMatrix m, RrefMode mode) {
    int r = rref(m, mode);
    // locate pivot column of each echelon row
    std::vector<int> pivot_col(r, -1);
    std::vector<bool> is_pivot(m.cols, false);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            if (m.at(i, j) != 0) {
                pivot_col[i] = j;
                is_pivot[j] = true;
                break;
            }
        }
    }
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[free] = 1;
        for (int i = 0; i < r; ++i) v[pivot_col[i]] = -m.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace syzdist
