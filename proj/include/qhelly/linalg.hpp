#pragma once

#include <optional>
#include <vector>

#include "qhelly/rational.hpp"

namespace qhelly {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

RatVec zero_vec(int dim);
Rational dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rational& s, const RatVec& a);
RatVec negate(const RatVec& a);
bool is_zero(const RatVec& a);
Rational squared_norm(const RatVec& a);

// Exact Gauss-Jordan elimination.
int rank(RatMat m);

// Unique solution of a square nonsingular system, nullopt when singular.
std::optional<RatVec> solve_square(RatMat a, RatVec b);

// A nonzero vector x with Mx = 0 for a wide system (cols > rank),
// nullopt when the kernel is trivial.
std::optional<RatVec> kernel_vector(RatMat m, int cols);

// Orthogonal (not normalized) rational basis of the hyperplane v^T x = 0.
std::vector<RatVec> orthogonal_complement_basis(const RatVec& v);

}  // namespace qhelly
