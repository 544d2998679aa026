#include "qhelly/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace qhelly {

RatVec zero_vec(int dim) {
    return RatVec(static_cast<std::size_t>(dim), Rational(0));
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: dimension mismatch");
    }
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    RatVec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    RatVec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

RatVec scale(const Rational& s, const RatVec& a) {
    RatVec out(a);
    for (auto& x : out) x *= s;
    return out;
}

RatVec negate(const RatVec& a) {
    return scale(Rational(-1), a);
}

bool is_zero(const RatVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

Rational squared_norm(const RatVec& a) {
    Rational acc(0);
    for (const auto& x : a) acc += x * x;
    return acc;
}

namespace {

// Row-reduce in place; returns pivot column per pivot row.
std::vector<int> reduce(RatMat& m) {
    std::vector<int> pivot_cols;
    if (m.empty()) return pivot_cols;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    return pivot_cols;
}

}  // namespace

int rank(RatMat m) {
    return static_cast<int>(reduce(m).size());
}

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
    const std::size_t n = a.size();
    if (n == 0) return RatVec{};
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("solve_square: not square");
        a[i].push_back(b[i]);
    }
    auto pivots = reduce(a);
    if (pivots.size() != n) return std::nullopt;
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

std::optional<RatVec> kernel_vector(RatMat m, int cols) {
    const std::size_t n = static_cast<std::size_t>(cols);
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("kernel_vector: ragged matrix");
    }
    auto pivots = reduce(m);
    if (pivots.size() >= n) return std::nullopt;
    // First free column, set to 1; back-substitute the pivot columns.
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::size_t free_col = 0;
    while (free_col < n && is_pivot[free_col]) ++free_col;
    RatVec x = zero_vec(cols);
    x[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        x[static_cast<std::size_t>(pivots[i])] = -m[i][free_col];
    }
    return x;
}

std::vector<RatVec> orthogonal_complement_basis(const RatVec& v) {
    const int d = static_cast<int>(v.size());
    int pivot = -1;
    for (int i = 0; i < d; ++i) {
        if (v[static_cast<std::size_t>(i)] != 0) {
            pivot = i;
            break;
        }
    }
    if (pivot < 0) throw std::invalid_argument("orthogonal_complement_basis: zero vector");
    std::vector<RatVec> basis;
    for (int j = 0; j < d; ++j) {
        if (j == pivot) continue;
        RatVec u = zero_vec(d);
        u[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(pivot)];
        u[static_cast<std::size_t>(pivot)] = -v[static_cast<std::size_t>(j)];
        basis.push_back(std::move(u));
    }
    // Gram-Schmidt without normalization keeps everything rational.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rational coef = dot(basis[i], basis[j]) / dot(basis[j], basis[j]);
            basis[i] = sub(basis[i], scale(coef, basis[j]));
        }
        assert(!is_zero(basis[i]));
    }
    return basis;
}

}  // namespace qhelly
