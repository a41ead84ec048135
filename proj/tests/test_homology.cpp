#include <numeric>
#include <random>

#include "doctest.h"

#include "common.hpp"
#include "dmorse/dowker.hpp"
#include "dmorse/error.hpp"
#include "dmorse/homology.hpp"
#include "dmorse/pipeline.hpp"
#include "oracle.hpp"

using namespace dmorse;

namespace {

using Dense = std::vector<std::vector<BigInt>>;

Dense dense(std::initializer_list<std::initializer_list<long long>> rows) {
  Dense out;
  for (auto r : rows) {
    std::vector<BigInt> row;
    for (auto v : r) row.emplace_back(v);
    out.push_back(row);
  }
  return out;
}

BigInt det(Dense a) {
  // Fraction-free Bareiss elimination.
  const std::size_t n = a.size();
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// d_1 ⋯ d_k is the gcd of all k×k minors.
std::vector<BigInt> determinantal_factors(const Dense& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<BigInt> divisors;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    BigInt g = 0;
    for (std::uint32_t rm = 0; rm < (1u << rows); ++rm) {
      if (static_cast<std::size_t>(std::popcount(rm)) != k) continue;
      for (std::uint32_t cm = 0; cm < (1u << cols); ++cm) {
        if (static_cast<std::size_t>(std::popcount(cm)) != k) continue;
        Dense sub;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!((rm >> i) & 1u)) continue;
          std::vector<BigInt> row;
          for (std::size_t j = 0; j < cols; ++j) {
            if ((cm >> j) & 1u) row.push_back(m[i][j]);
          }
          sub.push_back(row);
        }
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(det(sub)));
      }
    }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<BigInt> factors;
  for (std::size_t k = 0; k < divisors.size(); ++k) factors.push_back(k == 0 ? divisors[0] : divisors[k] / divisors[k - 1]);
  return factors;
}

// Six-vertex real projective plane.
SimplicialComplex projective_plane() {
  return SimplicialComplex::closure(Universe({"1", "2", "3", "4", "5", "6"}),
                                    {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "6", "2"},
                                     {"2", "3", "5"}, {"3", "4", "6"}, {"4", "5", "2"}, {"5", "6", "3"}, {"6", "2", "4"}});
}

}  // namespace

TEST_CASE("boundary matrices") {
  const auto edge = SimplicialComplex::closure(Universe({"a", "b"}), {{"a", "b"}});
  const auto b1 = boundary_matrix(edge, 1);
  REQUIRE(b1.cols.size() == 1);
  REQUIRE(b1.rows.size() == 2);
  CHECK(b1.rows[0] == Face{0});
  CHECK(b1.rows[1] == Face{1});
  CHECK(b1.as_int_matrix().to_dense() == dense({{-1}, {1}}));
  const auto b0 = boundary_matrix(edge, 0);
  CHECK(b0.rows.empty());
  CHECK(b0.cols.size() == 2);
  const auto tri = SimplicialComplex::closure(Universe({"1", "2", "3"}), {{"1", "2", "3"}});
  CHECK(boundary_squares_to_zero(tri));
  for (const auto& col : boundary_matrix(tri, 2).columns) CHECK(col.size() == 3);
}

TEST_CASE("boundary of a boundary vanishes on random complexes") {
  std::mt19937_64 gen(1);
  for (int t = 0; t < 100; ++t) CHECK(boundary_squares_to_zero(oracle::random_complex(gen, 7)));
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto r = random_relation(4, 4, 0.6, s);
    CHECK(boundary_squares_to_zero(biclique_complex(r)));
    CHECK(boundary_squares_to_zero(rectangle_complex(r)));
  }
}

TEST_CASE("Smith normal form") {
  SUBCASE("identity") {
    const auto s = smith_normal_form(dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(s.rank == 3);
    CHECK(s.factors == std::vector<BigInt>{1, 1, 1});
  }
  SUBCASE("two by two") {
    const auto s = smith_normal_form(dense({{2, 4}, {6, 8}}));
    CHECK(s.rank == 2);
    CHECK(s.factors == std::vector<BigInt>{2, 4});
  }
  SUBCASE("zero and empty") {
    CHECK(smith_normal_form(dense({{0, 0}, {0, 0}})).rank == 0);
    CHECK(smith_normal_form(dense({{0, 0}, {0, 0}})).factors.empty());
    CHECK(smith_normal_form(SparseIntMatrix{0, 3, std::vector<std::vector<std::pair<std::size_t, BigInt>>>(3)}).rank == 0);
  }
  SUBCASE("diagonal that needs gcd normalization") {
    CHECK(smith_normal_form(dense({{4, 0}, {0, 6}})).factors == std::vector<BigInt>{2, 12});
    CHECK(smith_normal_form(dense({{6, 0, 0}, {0, 10, 0}, {0, 0, 15}})).factors == std::vector<BigInt>{1, 30, 30});
  }
  SUBCASE("entries past 64 bits") {
    const BigInt big = BigInt(1) << 80;
    Dense m{{big, BigInt(0)}, {BigInt(0), big * 3}};
    const auto s = smith_normal_form(m);
    CHECK(s.factors == std::vector<BigInt>{big, big * 3});
    const long long h = 3037000500LL;  // h*h overflows int64 during elimination.
    const auto t = smith_normal_form(dense({{h, h + 1}, {h + 1, h}}));
    CHECK(t.factors == determinantal_factors(dense({{h, h + 1}, {h + 1, h}})));
  }
  SUBCASE("agrees with determinantal divisors on random matrices") {
    std::mt19937_64 gen(2);
    std::uniform_int_distribution<int> dim(1, 4), val(-6, 6), zero(0, 2);
    for (int t = 0; t < 300; ++t) {
      const int r = dim(gen), c = dim(gen);
      Dense m(r, std::vector<BigInt>(c));
      for (auto& row : m)
        for (auto& e : row) e = zero(gen) == 0 ? 0 : val(gen);
      const auto s = smith_normal_form(m);
      const auto expect = determinantal_factors(m);
      CHECK(s.factors == expect);
      CHECK(s.rank == expect.size());
      for (std::size_t i = 1; i < s.factors.size(); ++i) CHECK(s.factors[i] % s.factors[i - 1] == 0);
      CHECK(smith_normal_form(SparseIntMatrix::from_dense(m)).factors == s.factors);
    }
  }
}

TEST_CASE("homology of small complexes") {
  SUBCASE("Dowker complexes of the divides relation") {
    const auto r = testing::divides();
    const auto cy = homology(dowker_right(r));
    CHECK(cy.betti == std::vector<std::size_t>{1, 0, 0, 0});
    for (const auto& t : cy.torsion) CHECK(t.empty());
    const auto cx = homology(dowker_left(r));
    CHECK(cx.betti == std::vector<std::size_t>{1, 0, 0});
    CHECK(cx.euler == 1);
  }
  SUBCASE("hollow triangle") {
    const auto c = SimplicialComplex::closure(Universe({"1", "2", "3"}), {{"1", "2"}, {"2", "3"}, {"3", "1"}});
    CHECK(homology(c).betti == std::vector<std::size_t>{1, 1});
    CHECK(homology(c).euler == 0);
  }
  SUBCASE("projective plane has 2-torsion") {
    const auto p = homology(projective_plane());
    CHECK(p.betti == std::vector<std::size_t>{1, 0, 0});
    CHECK(p.torsion[1] == std::vector<BigInt>{2});
    CHECK(p.euler == 1);
  }
  SUBCASE("degenerate inputs") {
    CHECK_THROWS_AS(homology(SimplicialComplex{}), PreconditionError);
    const auto e = homology(SimplicialComplex::closure(Universe({"a"}), {{}}));
    CHECK(e.betti.empty());
    CHECK(e.euler == 0);
    const auto pt = homology(SimplicialComplex::closure(Universe({"a"}), {{"a"}}));
    CHECK(pt.betti == std::vector<std::size_t>{1});
  }
  SUBCASE("size cap") {
    std::vector<std::string> v;
    for (int i = 0; i < 15; ++i) v.push_back(std::to_string(i));
    CHECK_THROWS_AS(homology(SimplicialComplex::closure(Universe(v), {v})), SizeError);
  }
}

TEST_CASE("Betti numbers match the rational oracle and Euler characteristics agree") {
  std::mt19937_64 gen(4);
  for (int t = 0; t < 150; ++t) {
    const auto c = oracle::random_complex(gen, 6);
    const auto p = homology(c);
    auto expect = oracle::betti(oracle::labels(c));
    auto got = p.betti;
    while (!got.empty() && got.back() == 0 && got.size() > expect.size()) got.pop_back();
    CHECK(got == expect);
    CHECK(p.euler == euler_characteristic(f_vector(c)));
    long long alt = 0;
    for (std::size_t k = 0; k < p.betti.size(); ++k) alt += (k % 2 ? -1 : 1) * static_cast<long long>(p.betti[k]);
    CHECK(alt == p.euler);
  }
}

TEST_CASE("profiles_equal pads") {
  HomologyProfile a{{1, 0}, {{}, {}}, 1};
  HomologyProfile b{{1, 0, 0}, {{}, {}, {}}, 1};
  HomologyProfile c{{1, 1}, {{}, {}}, 0};
  HomologyProfile d{{1, 0}, {{}, {BigInt(2)}}, 1};
  CHECK(profiles_equal(a, b));
  CHECK_FALSE(profiles_equal(a, c));
  CHECK_FALSE(profiles_equal(a, d));
}

TEST_CASE("Dowker, biclique and rectangle homology coincide") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto r = random_relation(1 + s % 5, 1 + (s / 5) % 5, 0.3 + 0.2 * static_cast<double>(s % 3), s);
    const auto h = homology(dowker_left(r));
    CHECK(profiles_equal(h, homology(dowker_right(r))));
    CHECK(profiles_equal(h, homology(biclique_complex(disjointify(r).relation))));
    CHECK(profiles_equal(h, homology(rectangle_complex(r))));
  }
}
