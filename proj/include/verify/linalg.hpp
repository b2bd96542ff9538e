#ifndef VERIFY_LINALG_HPP
#define VERIFY_LINALG_HPP

#include <optional>
#include <vector>

#include "verify/basics.hpp"

namespace verify {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;  // row major

RatMat rat_mat(size_t rows, size_t cols);

// Reduced row echelon form in place; returns pivot column indices.
// Pivoting is deterministic: first row (top to bottom) with a nonzero entry
// in the leftmost unfinished column.
std::vector<size_t> rref(RatMat& m);

size_t rank(RatMat m);

// Basis of {x : m x = 0}, deterministic (one vector per free column, free
// coordinate set to 1, in ascending column order).
std::vector<RatVec> nullspace(RatMat m);

// Unique solution of a (possibly overdetermined, consistent) full-column-rank
// system m x = b; nullopt when inconsistent; throws when the solution is not
// unique.
std::optional<RatVec> solve(RatMat m, RatVec b);

Rat det(RatMat m);

// Greedy column basis: indices of the lexicographically first maximal
// independent set of columns, scanned left to right.
std::vector<size_t> greedy_column_basis(const RatMat& m);

RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_apply(const RatMat& a, const RatVec& x);

}  // namespace verify

#endif
