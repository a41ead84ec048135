#pragma once

// Integral simplicial homology: oriented boundary matrices, exact Smith normal
// form, Betti numbers and torsion coefficients.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dmorse/complex.hpp"

namespace dmorse {

using BigInt = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// columns[j] holds (row, value) with distinct rows and nonzero values.
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> columns;

  static SparseIntMatrix from_dense(const std::vector<std::vector<BigInt>>& dense);
  std::vector<std::vector<BigInt>> to_dense() const;
};

/// ∂_k with rows the (k-1)-faces and columns the k-faces, both in lexicographic order.
struct BoundaryMatrix {
  int k = 0;
  std::vector<Face> rows;
  std::vector<Face> cols;
  /// columns[j] holds (row, ±1).
  std::vector<std::vector<std::pair<std::size_t, int>>> columns;

  SparseIntMatrix as_int_matrix() const;
};

/// Boundary operator ∂_k; k = 0 gives a matrix without rows (empty face excluded).
BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k);

/// ∂_{k-1} ∘ ∂_k vanishes for every k.
bool boundary_squares_to_zero(const SimplicialComplex& c);

struct SmithForm {
  /// Invariant factors d_1 | d_2 | ... | d_r, all positive.
  std::vector<BigInt> factors;
  std::size_t rank = 0;
};

/// Exact over ℤ. Pivots on the smallest nonzero magnitude, ties by lowest row then column.
SmithForm smith_normal_form(const SparseIntMatrix& m);
SmithForm smith_normal_form(const std::vector<std::vector<BigInt>>& dense);

inline constexpr std::size_t kMaxBoundaryColumns = 5000;

struct HomologyProfile {
  std::vector<std::size_t> betti;
  /// torsion[k]: invariant factors > 1 of ∂_{k+1}.
  std::vector<std::vector<BigInt>> torsion;
  long long euler = 0;
};

/// Unreduced integral homology. Throws PreconditionError on the void complex
/// and SizeError if a boundary matrix has more than kMaxBoundaryColumns columns.
HomologyProfile homology(const SimplicialComplex& c);

/// Equal after padding with zero Betti numbers and empty torsion lists.
bool profiles_equal(const HomologyProfile& a, const HomologyProfile& b);

}  // namespace dmorse
