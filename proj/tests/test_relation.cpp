#include <random>

#include "doctest.h"

#include "common.hpp"
#include "dmorse/dowker.hpp"
#include "dmorse/error.hpp"
#include "dmorse/pipeline.hpp"
#include "dmorse/relation.hpp"
#include "oracle.hpp"

using namespace dmorse;

TEST_CASE("bold R on the divides relation") {
  const auto r = testing::divides();
  CHECK(bold_r(r, {"1", "2"}, {"6", "8"}));
  CHECK_FALSE(bold_r(r, {"1", "2", "4"}, {"6", "8"}));
  CHECK(bold_r(r, {}, {"5", "6", "7", "8"}));
  CHECK(bold_r(r, {"3", "4"}, {}));
  CHECK_THROWS_AS(bold_r(r, {"9"}, {"5"}), DomainError);
}

TEST_CASE("neighbors") {
  const auto r = testing::divides();
  CHECK(y_neighbors(r, x_face(r, {"1", "2"})) == y_face(r, {"6", "8"}));
  CHECK(y_neighbors(r, Face{}) == r.all_y());
  CHECK(y_neighbors(r, x_face(r, {"3", "4"})).empty());
  CHECK(x_neighbors(r, y_face(r, {"6", "8"})) == x_face(r, {"1", "2"}));
  CHECK(x_neighbors(r, Face{}) == r.all_x());
  for (std::uint64_t v = 0; v < 16; ++v) CHECK(x_neighbors(r, Face(v)).contains(0));
}

TEST_CASE("neighbor laws on random relations") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto r = random_relation(5, 4, 0.5, seed);
    for (std::uint64_t u = 0; u < 32; ++u) {
      for (std::uint64_t u2 = 0; u2 < 32; ++u2) {
        if (Face(u).subset_of(Face(u2))) CHECK(y_neighbors(r, Face(u2)).subset_of(y_neighbors(r, Face(u))));
      }
      for (std::uint64_t v = 0; v < 16; ++v) {
        const bool b = bold_r(r, Face(u), Face(v));
        CHECK(b == Face(v).subset_of(y_neighbors(r, Face(u))));
        CHECK(b == Face(u).subset_of(x_neighbors(r, Face(v))));
      }
    }
  }
}

TEST_CASE("relation construction") {
  CHECK_THROWS_AS(Relation::from_labels({"a"}, {"b"}, {{"a", "c"}}), ConstructionError);
  const auto r = Relation::from_labels({"a", "b"}, {"c"}, {{"b", "c"}, {"a", "c"}, {"b", "c"}});
  CHECK(r.pairs() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 0}});
  CHECK(r.bipartite());
  CHECK_FALSE(Relation::from_labels({"a"}, {"a"}, {}).bipartite());
  CHECK(r.transpose().transpose() == r);
}

TEST_CASE("disjointify") {
  const auto r = testing::divides();
  const auto d = disjointify(r);
  CHECK(d.relation.x().labels() == std::vector<std::string>{"(1,0)", "(2,0)", "(3,0)", "(4,0)"});
  CHECK(d.relation.y().labels() == std::vector<std::string>{"(5,1)", "(6,1)", "(7,1)", "(8,1)"});
  CHECK(d.relation.pairs() == r.pairs());
  CHECK(d.relation.bipartite());

  SUBCASE("forgetting tags recovers the pairs") {
    std::set<std::pair<std::string, std::string>> back;
    for (auto [a, b] : d.relation.pairs()) {
      const auto& xl = d.relation.x().label(a);
      const auto& yl = d.relation.y().label(b);
      back.emplace(xl.substr(1, xl.size() - 4), yl.substr(1, yl.size() - 4));
    }
    CHECK(back == oracle::pair_set(r));
  }
  SUBCASE("clashing labels") {
    const auto c = disjointify(Relation::from_labels({"a"}, {"a"}, {}));
    CHECK(c.relation.bipartite());
    CHECK(c.relation.pairs().empty());
    CHECK(c.relation.x().label(0) == "(a,0)");
  }
  SUBCASE("morphism is the tagging") {
    CHECK(d.tagging.phi_l() == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(d.tagging.phi_r() == std::vector<std::size_t>{0, 1, 2, 3});
  }
}

TEST_CASE("relation morphisms") {
  const auto r = testing::divides();
  CHECK_NOTHROW(RelationMorphism::identity(r));
  // 4 -> 3 would send (4,8) to (3,8), which is not a pair.
  CHECK_THROWS_AS(RelationMorphism(r, r, {0, 1, 2, 2}, {0, 1, 2, 3}), ConstructionError);
  const auto d = disjointify(r);
  const auto id = RelationMorphism::identity(r);
  const auto comp = d.tagging.after(id);
  CHECK(comp.phi_l() == d.tagging.phi_l());
  CHECK(comp.target() == d.relation);
}

TEST_CASE("containment relation") {
  SUBCASE("single vertex") {
    const auto c = SimplicialComplex::closure(Universe({"a"}), {{"a"}});
    const auto r = containment_relation(c);
    CHECK(r.x().labels() == std::vector<std::string>{"a"});
    CHECK(r.y().labels() == std::vector<std::string>{"F:", "F:a"});
    CHECK(oracle::pair_set(r) == oracle::PairSet{{"a", "F:a"}});
  }
  SUBCASE("edge") {
    const auto c = SimplicialComplex::closure(Universe({"1", "2"}), {{"1", "2"}});
    const auto r = containment_relation(c);
    CHECK(r.y().size() == 4);
    CHECK(oracle::pair_set(r) ==
          oracle::PairSet{{"1", "F:1"}, {"1", "F:1,2"}, {"2", "F:1,2"}, {"2", "F:2"}});
  }
  SUBCASE("Dowker complex of the divides relation") {
    CHECK(containment_relation(dowker_left(testing::divides())).y().size() == 12);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(containment_relation(SimplicialComplex{}), PreconditionError);
    const auto bad = SimplicialComplex::closure(Universe({"F:x"}), {{"F:x"}});
    CHECK_THROWS_AS(containment_relation(bad), ConstructionError);
  }
  SUBCASE("the left Dowker complex recovers the complex") {
    std::mt19937_64 gen(11);
    for (int t = 0; t < 60; ++t) {
      const auto c = oracle::random_complex(gen, 5);
      const auto back = dowker_left(containment_relation(c));
      CHECK(oracle::labels(back) == oracle::labels(c));
    }
  }
}
