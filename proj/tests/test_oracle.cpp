#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "coxcay/oracle.hpp"
#include "tests/support/fixtures.hpp"

using namespace coxcay;
using namespace coxcay::testsupport;

TEST_CASE("exhaustive search on the square", "[oracle]") {
  DefiningGraph k2 = load_fixture("k2");
  auto ball = build_ball(k2, 2);  // the whole four-element group

  std::vector<BallAutomorphism> all = enumerate_ball_autos(ball, {});
  CHECK(all.size() == 8);  // dihedral symmetries of a 4-cycle
  CHECK(all.front() == identity_auto(ball));

  std::vector<BallAutomorphism> fix_e = enumerate_ball_autos(ball, {0});
  CHECK(fix_e.size() == 2);
  for (const BallAutomorphism& a : fix_e) CHECK(a.image(0) == 0);

  auto point = build_ball(k2, 0);
  std::vector<BallAutomorphism> trivial = enumerate_ball_autos(point, {});
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.front().image(0) == 0);
}

TEST_CASE("the hexagon has more symmetries than the group has elements", "[oracle]") {
  DefiningGraph d3 = load_fixture("dihedral3");
  auto hexagon = build_ball(d3, 3);
  REQUIRE(hexagon->size() == 6);
  // the search sees the bare cycle, not the edge labels
  CHECK(enumerate_ball_autos(hexagon, {}).size() == 12);
  CHECK(enumerate_ball_autos(hexagon, {0}).size() == 2);
}

TEST_CASE("search results form a group and respect fixed vertices", "[oracle]") {
  DefiningGraph delta = load_fixture("delta");
  auto ball = build_ball(delta, 2);
  std::vector<BallAutomorphism> autos = enumerate_ball_autos(ball, {0});
  REQUIRE(!autos.empty());

  std::set<std::string> keys;
  for (const BallAutomorphism& a : autos) keys.insert(a.key());
  CHECK(keys.size() == autos.size());  // no duplicates

  for (const BallAutomorphism& a : autos) {
    CHECK(a.total());
    CHECK(a.image(0) == 0);
    // distances from the fixed center are preserved
    for (std::size_t i = 0; i < ball->size(); ++i)
      CHECK(ball->distance(a.image(static_cast<int>(i))) ==
            ball->distance(static_cast<int>(i)));
    CHECK(keys.count(a.inverse().key()) == 1);
  }
  for (const BallAutomorphism& a : autos)
    for (const BallAutomorphism& b : autos)
      CHECK(keys.count(compose(a, b).key()) == 1);
}

TEST_CASE("stabilizer restrictions that survive one extra ring", "[oracle]") {
  DefiningGraph p4 = load_fixture("p4");
  std::vector<BallAutomorphism> stable_p4 = stable_restrictions(p4, 2, true);
  CHECK(stable_p4.size() == 2);

  DefiningGraph c4 = load_fixture("c4");
  CHECK(stable_restrictions(c4, 2, true).size() == 8);

  // the non-discrete example keeps extra maps no matter the padding
  DefiningGraph delta = load_fixture("delta");
  std::size_t outer3 = stable_restrictions_outer(delta, 2, 3, true).size();
  std::size_t outer4 = stable_restrictions_outer(delta, 2, 4, true).size();
  CHECK(outer3 > 2);
  CHECK(outer4 > 2);
  CHECK(outer4 <= outer3);  // more padding can only cut the list down

  CHECK_THROWS_AS(stable_restrictions_outer(p4, 3, 2, true), DomainError);
}

TEST_CASE("restriction sets nest as key sets", "[oracle]") {
  DefiningGraph delta = load_fixture("delta");
  std::set<std::string> k3, k4;
  for (const BallAutomorphism& a : stable_restrictions_outer(delta, 2, 3, true))
    k3.insert(a.key());
  for (const BallAutomorphism& a : stable_restrictions_outer(delta, 2, 4, true))
    k4.insert(a.key());
  for (const std::string& k : k4) CHECK(k3.count(k) == 1);
}

TEST_CASE("cross validation accepts genuine maps", "[oracle]") {
  DefiningGraph delta = load_fixture("delta");
  auto ball = build_ball(delta, 2);

  std::vector<BallAutomorphism> constructed;
  constructed.push_back(identity_auto(ball));
  VertexSet side({delta.vertex("a"), delta.vertex("b")});
  constructed.push_back(synthesize(
      make_coset_config(ball, side, GraphAutomorphism({1, 0}),
                        {canonical(delta, {delta.vertex("c")})})));

  CrossValidationReport report = cross_validate(ball, constructed, {0});
  CHECK(report.constructed_count == 2);
  CHECK(report.matched == 2);
  CHECK(report.unmatched.empty());
  CHECK(report.all_matched());
  CHECK(report.oracle_count >= 2);
}

TEST_CASE("cross validation accepts translations of the full square", "[oracle]") {
  DefiningGraph k2 = load_fixture("k2");
  auto ball = build_ball(k2, 2);  // complete Cayley graph, shifts act inside it
  std::vector<BallAutomorphism> constructed;
  constructed.push_back(translation(ball, canonical(k2, w(k2, "a"))));
  constructed.push_back(translation(ball, canonical(k2, w(k2, "a b"))));
  CrossValidationReport report = cross_validate(ball, constructed, {});
  CHECK(report.all_matched());
}

TEST_CASE("cross validation flags maps no automorphism extends", "[oracle]") {
  DefiningGraph delta = load_fixture("delta");
  auto ball = build_ball(delta, 1);  // a star: the center is structurally pinned
  std::vector<BallAutomorphism> constructed;
  constructed.push_back(translation(ball, canonical(delta, {delta.vertex("a")})));
  CrossValidationReport report = cross_validate(ball, constructed, {});
  CHECK(report.matched == 0);
  CHECK_FALSE(report.all_matched());
  CHECK(report.unmatched.size() == 1);
}

TEST_CASE("the node budget stops runaway searches", "[oracle]") {
  DefiningGraph c4 = load_fixture("c4");
  auto ball = build_ball(c4, 3);
  Limits tiny;
  tiny.max_nodes = 5;
  CHECK_THROWS_AS(enumerate_ball_autos(ball, {}, tiny), LimitError);
}

TEST_CASE("twin factored enumeration on a small wing", "[oracle]") {
  DefiningGraph delta = load_fixture("delta");
  auto ball = build_ball(delta, 2);

  TwinFactoredAutos fac = enumerate_ball_autos_mod_twins(ball, {0});
  // the outer twins are the two ends of the c-wing, c a and c b
  REQUIRE(fac.twin_classes.size() == 1);
  REQUIRE(fac.twin_classes[0].size() == 2);
  NormalForm ca = canonical(delta, {delta.vertex("c"), delta.vertex("a")});
  NormalForm cb = canonical(delta, {delta.vertex("c"), delta.vertex("b")});
  CHECK(fac.twin_classes[0][0] == *ball->index_of(ca));
  CHECK(fac.twin_classes[0][1] == *ball->index_of(cb));
  CHECK(fac.twin_perms == 2);

  // representatives times twin permutations give the whole group, and every
  // representative really is in it
  std::vector<BallAutomorphism> full = enumerate_ball_autos(ball, {0});
  CHECK(fac.representatives.size() * fac.twin_perms == full.size());
  std::set<std::string> keys;
  for (const BallAutomorphism& a : full) keys.insert(a.key());
  for (const BallAutomorphism& r : fac.representatives)
    CHECK(keys.count(r.key()) == 1);
}

TEST_CASE("twin classes really are twins", "[oracle]") {
  for (const std::string& name : {"delta", "c5", "tripend"}) {
    DefiningGraph g = load_fixture(name);
    auto ball = build_ball(g, 3);
    TwinFactoredAutos fac = enumerate_ball_autos_mod_twins(ball, {0});
    for (const std::vector<int>& cls : fac.twin_classes) {
      REQUIRE(cls.size() >= 2);
      auto nbrs = [&](int v) {
        std::set<int> out;
        for (const auto& [x, j] : ball->neighbors(v)) {
          (void)x;
          out.insert(j);
        }
        return out;
      };
      for (int v : cls) {
        CHECK(ball->distance(v) == ball->radius());
        CHECK(nbrs(v) == nbrs(cls[0]));
      }
    }
  }
}

TEST_CASE("twin factored counts match full enumeration", "[oracle]") {
  // the pentagon ball: ten graph symmetries times ten independent leaf pairs
  DefiningGraph c5 = load_fixture("c5");
  auto ball = build_ball(c5, 3);
  TwinFactoredAutos fac = enumerate_ball_autos_mod_twins(ball, {0});
  CHECK(fac.representatives.size() == 10);
  CHECK(fac.twin_classes.size() == 10);
  CHECK(fac.twin_perms == 1024);
  CHECK(enumerate_ball_autos(ball, {0}).size() == 10240);

  // no twins at all: the factoring degenerates to the plain search
  DefiningGraph k2 = load_fixture("k2");
  auto square = build_ball(k2, 2);
  TwinFactoredAutos plain = enumerate_ball_autos_mod_twins(square, {0});
  CHECK(plain.twin_classes.empty());
  CHECK(plain.twin_perms == 1);
  CHECK(plain.representatives.size() == 2);
}

TEST_CASE("twin factoring tames a boundary explosion", "[oracle]") {
  // the full stabilizer here has order 764411904; the plain search cannot
  // finish inside the default budget but the factored one is quick
  DefiningGraph g = load_fixture("oneended");
  auto ball = build_ball(g, 3);
  TwinFactoredAutos fac = enumerate_ball_autos_mod_twins(ball, {0});
  CHECK(fac.representatives.size() == 16);
  CHECK(fac.twin_perms == 47775744);
  for (const BallAutomorphism& r : fac.representatives) {
    CHECK(r.total());
    CHECK(r.image(0) == 0);
  }
}
