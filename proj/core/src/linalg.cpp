#include "sv/linalg.hpp"

namespace sv {

Mat identity_matrix(std::size_t n) {
    Mat m(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = GaussRat(1);
    return m;
}

std::optional<std::pair<std::size_t, std::size_t>> hermitian_violation(const Mat& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g[i].size(); ++j)
            if (g[i][j] != conj(g[j][i])) return std::make_pair(i, j);
    return std::nullopt;
}

std::vector<std::size_t> rref(Mat& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        GaussRat inv = inverse(a[r][c]);
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            GaussRat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<Vec> nullspace(const Mat& a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    Mat m = a;
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec x(cols);
        x[f] = GaussRat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

GaussRat sesquilinear(const Vec& u, const Mat& g, const Vec& v) {
    GaussRat total;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        GaussRat row;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero()) continue;
            row += g[i][j] * v[j];
        }
        total += conj(u[i]) * row;
    }
    return total;
}

bool in_span(const std::vector<Vec>& span, const Vec& v) {
    if (span.empty()) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    const std::size_t n = v.size();
    // Solve span^T c = v: stack as columns with v appended, check consistency.
    Mat m(n, Vec(span.size() + 1));
    for (std::size_t j = 0; j < span.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m[i][j] = span[j][i];
    for (std::size_t i = 0; i < n; ++i) m[i][span.size()] = v[i];
    std::vector<std::size_t> pivots = rref(m);
    for (auto c : pivots)
        if (c == span.size()) return false;
    return true;
}

} // namespace sv
