#pragma once

#include <cstddef>
#include <vector>

#include "cubicspan/gf.hpp"

namespace cubicspan {

/// Row-major dense matrix of field codes. Small and exact: used for RREF
/// canonicalization of subspaces and for rank tests.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Fe> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  Fe* row(std::size_t i) { return a.data() + i * cols; }
  const Fe* row(std::size_t i) const { return a.data() + i * cols; }
  Fe& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Fe at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// In-place reduced row echelon form. Returns the pivot columns (their count
/// is the rank). Exact Gaussian elimination; pivots are the first nonzero
/// entry in each column, no magnitude pivoting.
std::vector<int> rref_in_place(const Field& f, Mat& m);

std::size_t rank(const Field& f, Mat m);

/// Basis of the right null space {x : M x = 0}, canonical per RREF
/// back-substitution, each vector with first nonzero entry scaled to 1.
std::vector<std::vector<Fe>> null_space(const Field& f, Mat m);

/// Rank of a matrix over GF(2) with rows packed into 64-bit words.
/// `words` is the number of words per row.
std::size_t rank_gf2(std::vector<std::uint64_t>& rows, std::size_t nrows,
                     std::size_t words);

/// Rank of a byte matrix over GF(3); entries must be in {0,1,2}. Destroys the
/// input. Vectorizable branchless update loop (census hot path).
std::size_t rank_gf3(std::vector<std::uint8_t>& a, std::size_t nrows,
                     std::size_t ncols);

}  // namespace cubicspan
