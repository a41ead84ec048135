#include "dmorse/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <map>
#include <set>
#include <tuple>

#include "dmorse/error.hpp"

namespace dmorse {

namespace {

struct Overflow {};

// Checked 64-bit arithmetic; Overflow triggers a restart in BigInt.
inline std::int64_t mul_sub(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
  return out;
}
inline std::int64_t quotient(std::int64_t a, std::int64_t b) {
  if (a == std::numeric_limits<std::int64_t>::min() && b == -1) throw Overflow{};
  return a / b;
}
inline std::int64_t magnitude(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return a < 0 ? -a : a;
}

inline BigInt mul_sub(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }
inline BigInt quotient(const BigInt& a, const BigInt& b) { return a / b; }
inline BigInt magnitude(const BigInt& a) { return boost::multiprecision::abs(a); }

template <typename Int>
using Triplet = std::tuple<std::size_t, std::size_t, Int>;

// Sparse unimodular elimination to a diagonal form. Rows are ordered maps so
// that scanning rows then columns realizes the (row, column) tie-break.
template <typename Int>
class Eliminator {
 public:
  Eliminator(std::size_t rows, std::size_t cols, const std::vector<Triplet<Int>>& entries)
      : rows_(rows), cols_(cols) {
    for (const auto& [i, j, v] : entries) {
      if (v == 0) continue;
      rows_[i][j] = v;
      cols_[j].insert(i);
    }
  }

  std::vector<Int> diagonal() {
    std::vector<Int> diag;
    while (auto pivot = global_pivot()) {
      auto [r, c] = *pivot;
      while (true) {
        clear_column(r, c);
        clear_row(r, c);
        auto next = residual_pivot(r, c);
        if (!next) break;
        std::tie(r, c) = *next;
      }
      diag.push_back(magnitude(rows_[r].at(c)));
      rows_[r].erase(c);
      cols_[c].erase(r);
    }
    return diag;
  }

 private:
  using Pos = std::pair<std::size_t, std::size_t>;

  std::optional<Pos> global_pivot() const {
    std::optional<Pos> best;
    Int best_mag = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (const auto& [j, v] : rows_[i]) {
        Int m = magnitude(v);
        if (!best || m < best_mag) {
          best = Pos{i, j};
          best_mag = m;
          if (best_mag == 1) return best;
        }
      }
    }
    return best;
  }

  // Entries left in row r or column c after a reduction pass, all smaller than the pivot.
  std::optional<Pos> residual_pivot(std::size_t r, std::size_t c) const {
    std::optional<Pos> best;
    Int best_mag = 0;
    auto consider = [&](std::size_t i, std::size_t j) {
      if (i == r && j == c) return;
      Int m = magnitude(rows_[i].at(j));
      if (!best || m < best_mag || (m == best_mag && Pos{i, j} < *best)) {
        best = Pos{i, j};
        best_mag = m;
      }
    };
    for (std::size_t i : cols_[c]) consider(i, c);
    for (const auto& [j, v] : rows_[r]) consider(r, j);
    return best;
  }

  void set_entry(std::size_t i, std::size_t j, Int v) {
    if (v == 0) {
      rows_[i].erase(j);
      cols_[j].erase(i);
    } else {
      rows_[i][j] = std::move(v);
      cols_[j].insert(i);
    }
  }

  Int entry(std::size_t i, std::size_t j) const {
    auto it = rows_[i].find(j);
    return it == rows_[i].end() ? Int(0) : it->second;
  }

  // row_i -= q * row_r for every other row i meeting column c.
  void clear_column(std::size_t r, std::size_t c) {
    const Int p = rows_[r].at(c);
    const std::vector<std::size_t> targets(cols_[c].begin(), cols_[c].end());
    const std::vector<std::pair<std::size_t, Int>> pivot_row(rows_[r].begin(), rows_[r].end());
    for (std::size_t i : targets) {
      if (i == r) continue;
      const Int q = quotient(rows_[i].at(c), p);
      if (q == 0) continue;
      for (const auto& [j, v] : pivot_row) set_entry(i, j, mul_sub(entry(i, j), q, v));
    }
  }

  // col_j -= q * col_c for every other column j meeting row r.
  void clear_row(std::size_t r, std::size_t c) {
    const Int p = rows_[r].at(c);
    std::vector<std::size_t> targets;
    for (const auto& [j, v] : rows_[r]) {
      if (j != c) targets.push_back(j);
    }
    const std::vector<std::size_t> pivot_col(cols_[c].begin(), cols_[c].end());
    for (std::size_t j : targets) {
      const Int q = quotient(rows_[r].at(j), p);
      if (q == 0) continue;
      for (std::size_t i : pivot_col) set_entry(i, j, mul_sub(entry(i, j), q, rows_[i].at(c)));
    }
  }

  std::vector<std::map<std::size_t, Int>> rows_;
  std::vector<std::set<std::size_t>> cols_;
};

SmithForm normalize(std::vector<BigInt> diag) {
  // Pairwise (gcd, lcm) sweeps turn any diagonal form into the divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
      const BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  }
  SmithForm out;
  out.rank = diag.size();
  out.factors = std::move(diag);
  return out;
}

SmithForm snf_small(std::size_t rows, std::size_t cols, const std::vector<Triplet<std::int64_t>>& entries) {
  try {
    auto diag = Eliminator<std::int64_t>(rows, cols, entries).diagonal();
    return normalize(std::vector<BigInt>(diag.begin(), diag.end()));
  } catch (const Overflow&) {
    std::vector<Triplet<BigInt>> big;
    big.reserve(entries.size());
    for (const auto& [i, j, v] : entries) big.emplace_back(i, j, BigInt(v));
    return normalize(Eliminator<BigInt>(rows, cols, big).diagonal());
  }
}

}  // namespace

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<BigInt>>& dense) {
  SparseIntMatrix m;
  m.rows = dense.size();
  m.cols = dense.empty() ? 0 : dense.front().size();
  m.columns.assign(m.cols, {});
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].size() != m.cols) throw ConstructionError("ragged dense matrix");
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (dense[i][j] != 0) m.columns[j].emplace_back(i, dense[i][j]);
    }
  }
  return m;
}

std::vector<std::vector<BigInt>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<BigInt>> out(rows, std::vector<BigInt>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [i, v] : columns[j]) out[i][j] = v;
  }
  return out;
}

SparseIntMatrix BoundaryMatrix::as_int_matrix() const {
  SparseIntMatrix m;
  m.rows = rows.size();
  m.cols = cols.size();
  m.columns.resize(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (auto [i, v] : columns[j]) m.columns[j].emplace_back(i, BigInt(v));
  }
  return m;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k) {
  BoundaryMatrix b;
  b.k = k;
  b.cols = c.faces_of_dim(k);
  if (k > 0) b.rows = c.faces_of_dim(k - 1);
  b.columns.resize(b.cols.size());
  if (k == 0) return b;
  FaceMap<std::size_t> row_index;
  row_index.reserve(b.rows.size());
  for (std::size_t i = 0; i < b.rows.size(); ++i) row_index.emplace(b.rows[i], i);
  for (std::size_t j = 0; j < b.cols.size(); ++j) {
    int sign = 1;
    b.cols[j].for_each([&](std::size_t v) {
      b.columns[j].emplace_back(row_index.at(b.cols[j].without(v)), sign);
      sign = -sign;
    });
    std::sort(b.columns[j].begin(), b.columns[j].end());
  }
  return b;
}

bool boundary_squares_to_zero(const SimplicialComplex& c) {
  const int top = c.dimension();
  for (int k = 2; k <= top; ++k) {
    const auto outer = boundary_matrix(c, k - 1);
    const auto inner = boundary_matrix(c, k);
    for (const auto& col : inner.columns) {
      std::map<std::size_t, long long> acc;
      for (auto [mid, v] : col) {
        for (auto [low, w] : outer.columns[mid]) acc[low] += static_cast<long long>(v) * w;
      }
      for (const auto& [row, total] : acc) {
        if (total != 0) return false;
      }
    }
  }
  return true;
}

SmithForm smith_normal_form(const SparseIntMatrix& m) {
  std::vector<Triplet<std::int64_t>> small;
  bool fits = true;
  for (std::size_t j = 0; j < m.columns.size() && fits; ++j) {
    for (const auto& [i, v] : m.columns[j]) {
      if (i >= m.rows) throw ConstructionError("matrix entry outside the declared row range");
      if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        fits = false;
        break;
      }
      small.emplace_back(i, j, static_cast<std::int64_t>(v));
    }
  }
  if (fits) return snf_small(m.rows, m.cols, small);
  std::vector<Triplet<BigInt>> big;
  for (std::size_t j = 0; j < m.columns.size(); ++j) {
    for (const auto& [i, v] : m.columns[j]) big.emplace_back(i, j, v);
  }
  return normalize(Eliminator<BigInt>(m.rows, m.cols, big).diagonal());
}

SmithForm smith_normal_form(const std::vector<std::vector<BigInt>>& dense) {
  return smith_normal_form(SparseIntMatrix::from_dense(dense));
}

HomologyProfile homology(const SimplicialComplex& c) {
  if (c.is_void()) throw PreconditionError("homology of the void complex is undefined here; it has no empty face");
  const int top = c.dimension();
  HomologyProfile p;
  if (top < 0) return p;

  const auto fv = f_vector(c);
  std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
  std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(top) + 2);
  for (int k = 1; k <= top; ++k) {
    const auto b = boundary_matrix(c, k);
    if (b.cols.size() > kMaxBoundaryColumns || b.rows.size() > kMaxBoundaryColumns) {
      throw SizeError("boundary matrix in dimension " + std::to_string(k) + " is " + std::to_string(b.rows.size()) +
                      "x" + std::to_string(b.cols.size()) + "; the cap is " + std::to_string(kMaxBoundaryColumns));
    }
    std::vector<Triplet<std::int64_t>> entries;
    for (std::size_t j = 0; j < b.columns.size(); ++j) {
      for (auto [i, v] : b.columns[j]) entries.emplace_back(i, j, v);
    }
    auto snf = snf_small(b.rows.size(), b.cols.size(), entries);
    rank[k] = snf.rank;
    factors[k] = std::move(snf.factors);
  }

  p.betti.resize(static_cast<std::size_t>(top) + 1);
  p.torsion.resize(static_cast<std::size_t>(top) + 1);
  long long betti_sum = 0;
  for (int k = 0; k <= top; ++k) {
    p.betti[k] = fv[k] - rank[k] - rank[k + 1];
    for (const auto& d : factors[k + 1]) {
      if (d > 1) p.torsion[k].push_back(d);
    }
    betti_sum += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(p.betti[k]);
  }
  p.euler = euler_characteristic(fv);
  if (betti_sum != p.euler) throw std::logic_error("Euler characteristic mismatch between faces and Betti numbers");
  return p;
}

bool profiles_equal(const HomologyProfile& a, const HomologyProfile& b) {
  const std::size_t n = std::max({a.betti.size(), b.betti.size(), a.torsion.size(), b.torsion.size()});
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t ba = k < a.betti.size() ? a.betti[k] : 0;
    const std::size_t bb = k < b.betti.size() ? b.betti[k] : 0;
    if (ba != bb) return false;
    static const std::vector<BigInt> kNone;
    const auto& ta = k < a.torsion.size() ? a.torsion[k] : kNone;
    const auto& tb = k < b.torsion.size() ? b.torsion[k] : kNone;
    if (ta != tb) return false;
  }
  return true;
}

}  // namespace dmorse
