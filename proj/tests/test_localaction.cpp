#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>

#include "coxcay/localaction.hpp"
#include "tests/support/fixtures.hpp"

using namespace coxcay;
using namespace coxcay::testsupport;

namespace {

GraphAutomorphism swap_ab_of(const DefiningGraph& g, const std::string& a,
                             const std::string& b) {
  std::vector<VertexId> img(g.size());
  std::iota(img.begin(), img.end(), 0);
  std::swap(img[static_cast<std::size_t>(g.vertex(a))],
            img[static_cast<std::size_t>(g.vertex(b))]);
  return GraphAutomorphism(std::move(img));
}

}  // namespace

TEST_CASE("identity map carries identity local actions", "[localaction]") {
  DefiningGraph delta = load_fixture("delta");
  auto ball = build_ball(delta, 2);
  BallAutomorphism id = identity_auto(ball);
  CHECK(id.total());
  for (std::size_t i = 0; i < ball->size(); ++i)
    if (ball->interior(static_cast<int>(i)))
      CHECK(extract_local_action(id, static_cast<int>(i)).is_identity());
}

TEST_CASE("reflecting the square ball", "[localaction]") {
  DefiningGraph k2 = load_fixture("k2");
  auto ball = build_ball(k2, 2);
  GraphAutomorphism swap = swap_ab_of(k2, "a", "b");

  Configuration cfg = make_constant_config(ball, swap);
  CHECK(check_star_condition(cfg));
  BallAutomorphism refl = synthesize(cfg);

  CHECK(refl.image(0) == 0);
  CHECK(refl.image(1) == 2);  // a -> b
  CHECK(refl.image(2) == 1);  // b -> a
  CHECK(refl.image(3) == 3);  // ab is fixed
  for (std::size_t i = 0; i < ball->size(); ++i)
    if (ball->interior(static_cast<int>(i)))
      CHECK(extract_local_action(refl, static_cast<int>(i)) == swap);
}

TEST_CASE("constant tables always satisfy the star compatibility check", "[localaction]") {
  for (const std::string& name : fixture_names()) {
    DefiningGraph g = load_fixture(name);
    auto ball = build_ball(g, 2);
    for (const GraphAutomorphism& sigma : enumerate_aut(g)) {
      Configuration cfg = make_constant_config(ball, sigma);
      CHECK(check_star_condition(cfg));
      BallAutomorphism a = synthesize(cfg);
      CHECK(a.total());
    }
  }
}

TEST_CASE("a lone twist at the center flunks the star check", "[localaction]") {
  DefiningGraph delta = load_fixture("delta");
  auto ball = build_ball(delta, 2);
  std::vector<GraphAutomorphism> table(ball->size(),
                                       GraphAutomorphism::identity(delta.size()));
  table[0] = swap_ab_of(delta, "a", "b");
  Configuration cfg = Configuration::explicit_table(ball, std::move(table));
  CHECK_FALSE(check_star_condition(cfg));
  CHECK_THROWS_AS(synthesize(cfg), SynthesisError);
}

TEST_CASE("coset-driven tables place the twist along one wing", "[localaction]") {
  DefiningGraph delta = load_fixture("delta");
  VertexId a = delta.vertex("a"), b = delta.vertex("b"), c = delta.vertex("c");
  auto ball = build_ball(delta, 2);
  VertexSet side({a, b});
  GraphAutomorphism nu({1, 0});  // swap on the induced side

  Configuration cfg =
      make_coset_config(ball, side, nu, {canonical(delta, {c})});
  GraphAutomorphism swap = swap_ab_of(delta, "a", "b");
  GraphAutomorphism id = GraphAutomorphism::identity(delta.size());
  // the c-coset vertices c, ca, cb get the twist, everything else is clean
  for (std::size_t i = 0; i < ball->size(); ++i) {
    const Word& w = ball->vertex(static_cast<int>(i)).word();
    bool in_chi = !w.empty() && w.front() == c;
    CHECK(cfg.at(static_cast<int>(i)) == (in_chi ? swap : id));
  }
  CHECK(cfg.kind() == ConfigKind::kCoset);
}

TEST_CASE("synthesis of the one-wing twist", "[localaction]") {
  DefiningGraph delta = load_fixture("delta");
  VertexId a = delta.vertex("a"), b = delta.vertex("b"), c = delta.vertex("c");
  auto ball = build_ball(delta, 2);
  Configuration cfg = make_coset_config(ball, VertexSet({a, b}),
                                        GraphAutomorphism({1, 0}),
                                        {canonical(delta, {c})});
  CHECK(check_star_condition(cfg));
  BallAutomorphism m = synthesize(cfg);

  int ca = *ball->index_of(canonical(delta, {c, a}));
  int cb = *ball->index_of(canonical(delta, {c, b}));
  CHECK(m.image(ca) == cb);
  CHECK(m.image(cb) == ca);
  for (std::size_t i = 0; i < ball->size(); ++i)
    if (static_cast<int>(i) != ca && static_cast<int>(i) != cb)
      CHECK(m.image(static_cast<int>(i)) == static_cast<int>(i));

  // flipping one table entry by hand breaks compatibility
  std::vector<GraphAutomorphism> table;
  for (std::size_t i = 0; i < ball->size(); ++i) table.push_back(cfg.at(static_cast<int>(i)));
  table[static_cast<std::size_t>(ca)] = GraphAutomorphism::identity(delta.size());
  Configuration bad = Configuration::explicit_table(ball, std::move(table));
  CHECK_FALSE(check_star_condition(bad));
  CHECK_THROWS_AS(synthesize(bad), SynthesisError);
}

TEST_CASE("coset tables demand a usable side", "[localaction]") {
  DefiningGraph delta = load_fixture("delta");
  VertexId a = delta.vertex("a"), c = delta.vertex("c");
  auto ball = build_ball(delta, 2);
  CHECK_THROWS_AS(make_coset_config(ball, VertexSet({a, c}), GraphAutomorphism({1, 0}),
                                    {NormalForm{}}),
                  DomainError);
}

TEST_CASE("sweep of coset selections at radius two", "[localaction]") {
  DefiningGraph delta = load_fixture("delta");
  VertexId a = delta.vertex("a"), b = delta.vertex("b");
  auto ball = build_ball(delta, 2);
  VertexSet side({a, b});
  GraphAutomorphism nu({1, 0});

  // collect every coset key present in the ball
  std::set<NormalForm> keys;
  for (std::size_t i = 0; i < ball->size(); ++i)
    keys.insert(coset_key(delta, ball->vertex(static_cast<int>(i)), side));
  REQUIRE(keys.size() == 4);  // e, c, ac, bc

  std::vector<NormalForm> key_list(keys.begin(), keys.end());
  std::set<std::string> distinct;
  for (unsigned mask = 0; mask < (1u << key_list.size()); ++mask) {
    std::vector<NormalForm> chi;
    for (std::size_t t = 0; t < key_list.size(); ++t)
      if (mask & (1u << t)) chi.push_back(key_list[t]);
    Configuration cfg = make_coset_config(ball, side, nu, chi);
    distinct.insert(synthesize(cfg).key());
  }
  // only the keys that can reach into the interior matter: e and c
  CHECK(distinct.size() == 4);
}

TEST_CASE("translations shift words and keep labels", "[localaction]") {
  DefiningGraph k2 = load_fixture("k2");
  auto ball = build_ball(k2, 1);
  NormalForm a = canonical(k2, w(k2, "a"));
  BallAutomorphism t = translation(ball, a);

  CHECK(t.target().center() == a);
  CHECK(t.total());
  auto word_at = [&](const BallAutomorphism& m, const char* s) {
    return m.target().vertex(m.image(*m.source().index_of(canonical(k2, w(k2, s))))).word();
  };
  CHECK(word_at(t, "") == w(k2, "a"));
  CHECK(word_at(t, "a") == Word{});
  CHECK(word_at(t, "b") == reduce(k2, w(k2, "a b")));

  // labels survive: every source edge maps to a target edge with the same label
  for (const auto& [i, j, x] : t.source().edges()) {
    bool found = false;
    for (const auto& [y, n] : t.target().neighbors(t.image(i)))
      if (n == t.image(j) && y == x) found = true;
    CHECK(found);
  }

  // round trip through the inverse is the identity
  BallAutomorphism back = compose(t.inverse(), t);
  CHECK(back == identity_auto(ball));
}

TEST_CASE("a pure twist at the identity equals constant synthesis", "[localaction]") {
  DefiningGraph k2 = load_fixture("k2");
  auto ball = build_ball(k2, 2);
  GraphAutomorphism swap = swap_ab_of(k2, "a", "b");
  BallAutomorphism via_pair = almost_translation(ball, NormalForm{}, swap);
  BallAutomorphism via_table = synthesize(make_constant_config(ball, swap));
  CHECK(via_pair.key() == via_table.key());

  DefiningGraph delta = load_fixture("delta");
  auto dball = build_ball(delta, 2);
  GraphAutomorphism dswap = swap_ab_of(delta, "a", "b");
  CHECK(almost_translation(dball, NormalForm{}, dswap).key() ==
        synthesize(make_constant_config(dball, dswap)).key());
}

TEST_CASE("twisted shifts compose like a semidirect product", "[localaction]") {
  std::mt19937 rng(37);
  for (const std::string& name : {"delta", "p4"}) {
    DefiningGraph g = load_fixture(name);
    auto ball = build_ball(g, 2);
    std::vector<GraphAutomorphism> auts = enumerate_aut(g);
    std::uniform_int_distribution<std::size_t> pick_aut(0, auts.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_v(0, ball->size() - 1);
    for (int trial = 0; trial < 12; ++trial) {
      NormalForm w1 = ball->vertex(static_cast<int>(pick_v(rng)));
      NormalForm w2 = ball->vertex(static_cast<int>(pick_v(rng)));
      GraphAutomorphism s1 = auts[pick_aut(rng)], s2 = auts[pick_aut(rng)];

      BallAutomorphism inner = almost_translation(ball, w2, s2);
      BallAutomorphism outer = almost_translation(inner.target_ptr(), w1, s1);
      BallAutomorphism lhs = compose(outer, inner);

      NormalForm prod = multiply(g, w1, detail::apply_letterwise(g, s1, w2, Limits{}));
      BallAutomorphism rhs = almost_translation(ball, prod, s1.compose(s2));
      CHECK(lhs.key() == rhs.key());
    }
  }
}

TEST_CASE("restriction onto a smaller ball", "[localaction]") {
  DefiningGraph delta = load_fixture("delta");
  auto big = build_ball(delta, 2);
  auto small = build_ball(delta, 1);

  BallAutomorphism wing = synthesize(make_coset_config(
      big, VertexSet({delta.vertex("a"), delta.vertex("b")}), GraphAutomorphism({1, 0}),
      {canonical(delta, {delta.vertex("c")})}));
  // the twist only moves the outer sphere, so the restriction is the identity
  CHECK(restrict_onto(wing, small, small) == identity_auto(small));

  BallAutomorphism refl = synthesize(
      make_constant_config(big, swap_ab_of(delta, "a", "b")));
  BallAutomorphism refl_small = synthesize(
      make_constant_config(small, swap_ab_of(delta, "a", "b")));
  CHECK(restrict_onto(refl, small, small) == refl_small);
}

TEST_CASE("maps that scramble edges are rejected outright", "[localaction]") {
  DefiningGraph k2 = load_fixture("k2");
  auto ball = build_ball(k2, 2);
  CHECK_THROWS_AS(BallAutomorphism(ball, ball, std::vector<int>{0, 3, 2, 1}),
                  DomainError);
  CHECK_THROWS_AS(BallAutomorphism(ball, ball, std::vector<int>{0, 1, 1, 3}),
                  DomainError);
}

TEST_CASE("label-fixed reachability", "[localaction]") {
  DefiningGraph delta = load_fixture("delta");
  auto ball = build_ball(delta, 1);
  GraphAutomorphism swap = swap_ab_of(delta, "a", "b");
  int c = *ball->index_of(canonical(delta, {delta.vertex("c")}));
  CHECK(fixed_point_component(*ball, 0, swap) == std::vector<int>{0, c});

  DefiningGraph k2 = load_fixture("k2");
  auto kball = build_ball(k2, 2);
  CHECK(fixed_point_component(*kball, 0, GraphAutomorphism::identity(2)) ==
        std::vector<int>{0, 1, 2, 3});
}
