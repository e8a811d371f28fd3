#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qconcept/scop.hpp"

using namespace qconcept::scop;

namespace {

// Small entity with one deterministic and one probabilistic context.
ScopEntity example_entity() {
  std::vector<TransitionRule> rules;
  rules.push_back({"p_concept", "e_item", {{"p_item", 1.0}}});
  rules.push_back({"p_item", "e_decision", {{"yes", 0.87}, {"no", 0.13}}});
  return ScopEntity({"p_concept", "p_item", "yes", "no"}, {"e_item", "e_decision"},
                    std::move(rules));
}

}  // namespace

TEST_CASE("transition probabilities") {
  const auto entity = example_entity();
  CHECK(transition_probability(entity, "p_item", "e_item", "p_concept") == 1.0);
  CHECK(entity.deterministic_at("p_concept", "e_item"));
  CHECK_FALSE(entity.deterministic_at("p_item", "e_decision"));

  // outside the support
  CHECK(transition_probability(entity, "no", "e_item", "p_concept") == 0.0);

  CHECK_THROWS_AS(transition_probability(entity, "nowhere", "e_item", "p_concept"),
                  std::invalid_argument);
  CHECK_THROWS_AS(transition_probability(entity, "yes", "e_item", "p_item"),
                  std::invalid_argument);  // no distribution stored there
}

TEST_CASE("identity context is deterministic everywhere") {
  std::vector<TransitionRule> rules;
  for (const auto* s : {"s1", "s2", "s3"})
    rules.push_back({s, "e_id", {{s, 1.0}}});
  const ScopEntity entity({"s1", "s2", "s3"}, {"e_id"}, std::move(rules));
  for (const auto& s : entity.states()) {
    CHECK(transition_probability(entity, s, "e_id", s) == 1.0);
    CHECK(entity.deterministic_at(s, "e_id"));
  }
}

TEST_CASE("invalid entities are rejected at construction") {
  CHECK_THROWS_AS(ScopEntity({"a"}, {"e"}, {{"a", "e", {{"a", 0.5}}}}),
                  std::invalid_argument);  // not normalized
  CHECK_THROWS_AS(ScopEntity({"a"}, {"e"}, {{"a", "e", {{"a", 1.5}, {"a", -0.5}}}}),
                  std::invalid_argument);  // negative entry
  CHECK_THROWS_AS(ScopEntity({"a"}, {"e"}, {{"b", "e", {{"a", 1.0}}}}),
                  std::invalid_argument);  // unknown source
  CHECK_THROWS_AS(ScopEntity({"a"}, {"e"}, {{"a", "f", {{"a", 1.0}}}}),
                  std::invalid_argument);  // unknown context
}

TEST_CASE("membership weight is the product of the two transitions") {
  const auto entity = example_entity();
  // deterministic first step: the weight equals the decision probability
  CHECK(membership_weight(entity, "p_concept", "e_item", "p_item", "e_decision", "yes") ==
        0.87);

  // both steps deterministic
  std::vector<TransitionRule> rules;
  rules.push_back({"a", "e1", {{"b", 1.0}}});
  rules.push_back({"b", "e2", {{"c", 1.0}}});
  const ScopEntity chain({"a", "b", "c"}, {"e1", "e2"}, std::move(rules));
  CHECK(membership_weight(chain, "a", "e1", "b", "e2", "c") == 1.0);

  // product law
  std::vector<TransitionRule> half;
  half.push_back({"a", "e1", {{"b", 0.5}, {"a", 0.5}}});
  half.push_back({"b", "e2", {{"c", 0.5}, {"b", 0.5}}});
  const ScopEntity halves({"a", "b", "c"}, {"e1", "e2"}, std::move(half));
  CHECK(membership_weight(halves, "a", "e1", "b", "e2", "c") == 0.25);
}

TEST_CASE("point mass sampling puts every draw on the single target") {
  const auto entity = example_entity();
  const auto counts = sample_outcomes(entity, "p_concept", "e_item", 1000, 7);
  REQUIRE(counts.counts.size() == 1);
  CHECK(counts.counts[0].first == "p_item");
  CHECK(counts.counts[0].second == 1000);
}

TEST_CASE("sampled frequencies concentrate on the distribution") {
  std::vector<TransitionRule> rules;
  rules.push_back({"s", "e", {{"hit", 0.9}, {"miss", 0.1}}});
  const ScopEntity entity({"s", "hit", "miss"}, {"e"}, std::move(rules));

  const std::int64_t draws = 100000;
  const auto counts = sample_outcomes(entity, "s", "e", draws, 42);
  REQUIRE(counts.counts.size() == 2);
  const double hit_rate = static_cast<double>(counts.counts[0].second) / draws;
  // binomial: 3 sigma is about 0.003 at this sample size
  CHECK(std::abs(hit_rate - 0.9) <= 0.01);

  std::vector<TransitionRule> fair;
  fair.push_back({"s", "e", {{"hit", 0.5}, {"miss", 0.5}}});
  const ScopEntity coin({"s", "hit", "miss"}, {"e"}, std::move(fair));
  const auto coin_counts = sample_outcomes(coin, "s", "e", draws, 43);
  for (const auto& [state, count] : coin_counts.counts)
    CHECK(std::abs(static_cast<double>(count) / draws - 0.5) <= 0.01);
}

TEST_CASE("sampling is bit-identical for equal seeds") {
  std::vector<TransitionRule> rules;
  rules.push_back({"s", "e", {{"x", 0.3}, {"y", 0.3}, {"z", 0.4}}});
  const ScopEntity entity({"s", "x", "y", "z"}, {"e"}, std::move(rules));

  const auto first = sample_outcomes(entity, "s", "e", 10000, 1234);
  const auto second = sample_outcomes(entity, "s", "e", 10000, 1234);
  REQUIRE(first.counts.size() == second.counts.size());
  for (std::size_t i = 0; i < first.counts.size(); ++i) {
    CHECK(first.counts[i].first == second.counts[i].first);
    CHECK(first.counts[i].second == second.counts[i].second);
  }

  const auto other_seed = sample_outcomes(entity, "s", "e", 10000, 1235);
  bool any_difference = false;
  for (std::size_t i = 0; i < first.counts.size(); ++i)
    any_difference |= first.counts[i].second != other_seed.counts[i].second;
  CHECK(any_difference);
}

TEST_CASE("membership entity wires the two-step chain") {
  const auto entity = make_membership_entity("p_food", "p_mint", 0.87);
  CHECK(entity.deterministic_at("p_food", "item"));
  CHECK(membership_weight(entity, "p_food", "item", "p_mint", "decision", "yes") == 0.87);
  CHECK(membership_weight(entity, "p_food", "item", "p_mint", "decision", "no") ==
        doctest::Approx(0.13).epsilon(1e-15));
}
