#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sv/gauss_rational.hpp"

namespace sv {

using Vec = std::vector<GaussRat>;
using Mat = std::vector<Vec>;

Mat identity_matrix(std::size_t n);

// First cell (row-major) violating G[i][j] == conj(G[j][i]), if any.
std::optional<std::pair<std::size_t, std::size_t>> hermitian_violation(const Mat& g);

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Mat& a);

// Deterministic nullspace basis (one vector per free column, ascending).
std::vector<Vec> nullspace(const Mat& a);

// conj-transpose(u) * G * v
GaussRat sesquilinear(const Vec& u, const Mat& g, const Vec& v);

// True iff v lies in the span of the given vectors.
bool in_span(const std::vector<Vec>& span, const Vec& v);

} // namespace sv
