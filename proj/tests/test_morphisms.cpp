#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace leavitt;
using namespace leavitt::testing;

namespace {

  using E = Element<Rational>;

  Generator gen(Graph const& g, std::string const& key) {
    return detail::parse_generator(g, key);
  }

  template <typename Image>
  std::string image_of(GeneratorMap<Image> const& h, std::string const& key) {
    return to_string(h.image(gen(h.domain()->graph, key)));
  }

  template <typename Image>
  std::string apply_text(GeneratorMap<Image> const& h, std::string const& expr) {
    return to_string(leavitt::apply(h, parse_element<Rational>(h.domain(), expr)));
  }

  template <typename Image>
  void expect_valid_and_graded(GeneratorMap<Image> const& h) {
    auto r = validate(h);
    for (auto rel : all_relations) {
      EXPECT_TRUE(r.at(rel).ok) << h.name() << " " << label(rel) << ": "
                                << r.at(rel).instance;
    }
    EXPECT_TRUE(r.graded) << h.name() << ": " << r.ungraded_generator;
  }

  std::set<std::string> texts(std::vector<E> const& es) {
    std::set<std::string> out;
    for (auto const& e : es) {
      out.insert(to_string(e));
    }
    return out;
  }

}  // namespace

TEST(Maps, Pi1) {
  auto q   = display7();
  auto pi1 = make_pi1<Rational>(q, "v0");
  expect_valid_and_graded(pi1);
  EXPECT_FALSE(pi1.report().vertex_images_nonzero);
  EXPECT_EQ(pi1.report().zero_vertex, "[v0]");
  EXPECT_EQ(image_of(pi1, "e1"), "e1");
  EXPECT_EQ(image_of(pi1, "x0"), "0");
  EXPECT_EQ(image_of(pi1, "e2"), "0");
  EXPECT_EQ(image_of(pi1, "e2*"), "0");
  EXPECT_EQ(apply_text(pi1, "e2 . e2^*"), "0");
  EXPECT_THROW(make_pi1<Rational>(display8(), "v0"), NotTrimmable);
}

TEST(Maps, Pi2) {
  auto pi2 = make_pi2<Rational>(display7_double_prime(), "v0");
  expect_valid_and_graded(pi2);
  EXPECT_EQ(image_of(pi2, "[v0]"), "0");
  EXPECT_EQ(image_of(pi2, "e1*"), "e1^*");
  EXPECT_EQ(image_of(pi2, "e2"), "0");
  EXPECT_THROW(make_pi2<Rational>(display7(), "v0"), GraphError);
  EXPECT_THROW(make_pi2<Rational>(display7_double_prime(), "zz"), GraphError);
}

TEST(Maps, F) {
  auto f = make_f<Rational>(display7(), "v0");
  expect_valid_and_graded(f);
  EXPECT_TRUE(f.report().vertex_images_nonzero);
  EXPECT_EQ(image_of(f, "x0"), "[v0] (x) u");
  EXPECT_EQ(image_of(f, "x0*"), "[v0] (x) u^-1");
  EXPECT_EQ(image_of(f, "e2"), "e2 (x) u");
  EXPECT_EQ(image_of(f, "[v1]"), "[v1] (x) 1");
  EXPECT_EQ(apply_text(f, "x0 . x0^*"), "[v0] (x) 1");
  EXPECT_THROW(make_f<Rational>(display8(), "v0"), NotTrimmable);
}

TEST(Maps, Delta) {
  auto d = make_delta<Rational>(display7_prime());
  expect_valid_and_graded(d);
  EXPECT_EQ(image_of(d, "[v2]"), "[v2] (x) 1");
  EXPECT_EQ(image_of(d, "e1"), "e1 (x) u");
  EXPECT_EQ(image_of(d, "e1*"), "e1^* (x) u^-1");
  EXPECT_EQ(apply_text(d, "[v1]"), "[v1] (x) 1");
}

TEST(Maps, AllFourValidUnderBothPolicies) {
  for (auto policy : {SpecialEdgePolicy::lexicographic, SpecialEdgePolicy::rotated}) {
    auto m = standard_maps<Rational>(display7(), "v0", policy);
    expect_valid_and_graded(m.pi1);
    expect_valid_and_graded(m.pi2);
    expect_valid_and_graded(m.f);
    expect_valid_and_graded(m.delta);
  }
}

TEST(Maps, AllFourValidOnRandomTrimmableGraphs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    auto q = random_trimmable(rng, 1 + trial % 3, trial % 3, 1 + trial % 2);
    ASSERT_TRUE(is_trimmable(q, "v0").verdict);
    auto m = standard_maps<Rational>(q, "v0", SpecialEdgePolicy::lexicographic);
    expect_valid_and_graded(m.pi1);
    expect_valid_and_graded(m.pi2);
    expect_valid_and_graded(m.f);
    expect_valid_and_graded(m.delta);
  }
}

// Applying a map is multiplicative on words.
TEST(Maps, ApplyIsMultiplicative) {
  std::mt19937_64 rng(8);
  auto            m   = standard_maps<Rational>(display7(), "v0",
                                                SpecialEdgePolicy::lexicographic);
  auto            alg = m.f.domain();
  for (int i = 0; i < 300; ++i) {
    auto a = normal_form<Rational>(alg, random_path_word(alg->graph, rng, 4));
    auto b = normal_form<Rational>(alg, random_path_word(alg->graph, rng, 4));
    EXPECT_EQ(leavitt::apply(m.f, multiply(a, b)),
              multiply(leavitt::apply(m.f, a), leavitt::apply(m.f, b)));
    EXPECT_EQ(leavitt::apply(m.pi1, multiply(a, b)),
              multiply(leavitt::apply(m.pi1, a), leavitt::apply(m.pi1, b)));
  }
}

TEST(Maps, CorruptedLoopImageBreaksL2) {
  auto f   = make_f<Rational>(display7(), "v0");
  auto bad = detail::override_map(f, {{"x0", "[v1] (x) u"}});
  auto r   = validate(bad);
  EXPECT_FALSE(bad.is_valid());
  EXPECT_FALSE(r.at(Relation::edge_endpoints).ok);
  EXPECT_EQ(r.at(Relation::edge_endpoints).witness, "x0");
  EXPECT_EQ(r.first_failure(), Relation::edge_endpoints);
  EXPECT_TRUE(r.graded);
  EXPECT_THROW(leavitt::apply(bad, E::unit(bad.domain())), InvalidMap);
  EXPECT_NO_THROW(leavitt::apply(bad, E::unit(bad.domain()), MapUse::allow_invalid));
}

TEST(Maps, UngradedImageIsReported) {
  auto d   = make_delta<Rational>(display7_prime());
  auto bad = detail::override_map(d, {{"e1", "e1 (x) u^2"}});
  EXPECT_FALSE(validate(bad).graded);
  EXPECT_EQ(validate(bad).ungraded_generator, "e1");
}

TEST(Maps, IncompleteTablesAreRejected) {
  auto alg = make_algebra(display7_prime());
  std::map<Generator, E> images{{Generator::vertex(0), E::unit(alg)}};
  EXPECT_THROW(GeneratorMap<E>("partial", alg, alg, images), InvalidMap);
}

TEST(IdealSpan, Examples) {
  auto q = display7();
  auto s = texts(ideal_span<Rational>(q, "v0", 2));
  for (auto const& want : {"[v0]", "x0", "x0^*", "e2", "e2^*", "e2 . e2^*",
                           "x0 . e2^*", "e2 . x0^*", "x0/x0", "x0/x0^*", "e2/x0",
                           "e2/x0^*"}) {
    EXPECT_TRUE(s.count(want)) << want;
  }
  EXPECT_EQ(s.size(), 12u);

  EXPECT_EQ(texts(ideal_span<Rational>(q, "v2", 0)), (std::set<std::string>{"[v2]"}));
  EXPECT_EQ(texts(ideal_span<Rational>(q, "v2", 1)),
            (std::set<std::string>{"[v2]", "e1", "e1^*"}));
  EXPECT_THROW(ideal_span<Rational>(q, "v1", 2), std::invalid_argument);
}

TEST(IdealSpan, MatchesKernelOfPi1) {
  for (auto policy : {SpecialEdgePolicy::lexicographic, SpecialEdgePolicy::rotated}) {
    auto pi1 = make_pi1<Rational>(display7(), "v0", policy);
    for (std::size_t L = 0; L <= 4; ++L) {
      auto r = check_kernel_ideal(pi1, "v0", L);
      EXPECT_TRUE(r.ok) << "L=" << L << " " << (r.witness ? r.witness->text : "");
      EXPECT_GT(r.kernel_rank, 0u);
    }
  }
}
