#include "qconcept/scop.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qconcept::scop {

namespace {

constexpr double kNormalizationTol = 1e-10;

[[noreturn]] void reject(const std::string& what) { throw std::invalid_argument(what); }

// Uniform double in [0, 1) from the top 53 bits of the generator output;
// independent of library distribution internals, so sequences are
// reproducible across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

ScopEntity::ScopEntity(std::vector<std::string> states, std::vector<std::string> contexts,
                       std::vector<TransitionRule> rules)
    : states_(std::move(states)), contexts_(std::move(contexts)) {
  if (states_.empty()) reject("ScopEntity: at least one state is required");
  for (auto& rule : rules) {
    if (!has_state(rule.source)) reject("ScopEntity: unknown source state " + rule.source);
    if (!has_context(rule.context)) reject("ScopEntity: unknown context " + rule.context);
    double total = 0.0;
    for (const auto& [target, p] : rule.distribution) {
      if (!has_state(target)) reject("ScopEntity: unknown target state " + target);
      if (p < 0.0) reject("ScopEntity: negative probability for target " + target);
      total += p;
    }
    if (std::abs(total - 1.0) > kNormalizationTol)
      reject("ScopEntity: distribution at (" + rule.source + ", " + rule.context +
             ") is not normalized");
    // Keep support in entity state order so reports are stable.
    auto dist = std::move(rule.distribution);
    std::sort(dist.begin(), dist.end(), [this](const auto& x, const auto& y) {
      const auto pos = [this](const std::string& s) {
        return std::find(states_.begin(), states_.end(), s) - states_.begin();
      };
      return pos(x.first) < pos(y.first);
    });
    auto key = std::make_pair(rule.source, rule.context);
    if (!transitions_.emplace(std::move(key), std::move(dist)).second)
      reject("ScopEntity: duplicate transition rule for (" + rule.source + ", " +
             rule.context + ")");
  }
}

bool ScopEntity::has_state(const std::string& label) const {
  return std::find(states_.begin(), states_.end(), label) != states_.end();
}

bool ScopEntity::has_context(const std::string& label) const {
  return std::find(contexts_.begin(), contexts_.end(), label) != contexts_.end();
}

bool ScopEntity::has_transition(const std::string& source, const std::string& context) const {
  return transitions_.count({source, context}) != 0;
}

bool ScopEntity::deterministic_at(const std::string& source, const std::string& context) const {
  const auto& dist = distribution(source, context);
  return std::any_of(dist.begin(), dist.end(),
                     [](const auto& entry) { return entry.second == 1.0; });
}

const std::vector<std::pair<std::string, double>>& ScopEntity::distribution(
    const std::string& source, const std::string& context) const {
  if (!has_state(source)) reject("ScopEntity: unknown state " + source);
  if (!has_context(context)) reject("ScopEntity: unknown context " + context);
  const auto it = transitions_.find({source, context});
  if (it == transitions_.end())
    reject("ScopEntity: no transition distribution for (" + source + ", " + context + ")");
  return it->second;
}

double transition_probability(const ScopEntity& entity, const std::string& target,
                              const std::string& context, const std::string& source) {
  if (!entity.has_state(target)) reject("transition_probability: unknown target " + target);
  const auto& dist = entity.distribution(source, context);
  for (const auto& [state, p] : dist)
    if (state == target) return p;
  return 0.0;
}

double membership_weight(const ScopEntity& entity, const std::string& p_a,
                         const std::string& e_x, const std::string& p_x,
                         const std::string& e, const std::string& p) {
  return transition_probability(entity, p_x, e_x, p_a) *
         transition_probability(entity, p, e, p_x);
}

OutcomeCounts sample_outcomes(const ScopEntity& entity, const std::string& source,
                              const std::string& context, std::int64_t count,
                              std::uint64_t seed) {
  if (count < 1) reject("sample_outcomes: count must be at least 1");
  const auto& dist = entity.distribution(source, context);

  OutcomeCounts out;
  out.total = count;
  out.counts.reserve(dist.size());
  for (const auto& [state, p] : dist) out.counts.emplace_back(state, 0);

  std::mt19937_64 rng(seed);
  for (std::int64_t draw = 0; draw < count; ++draw) {
    const double u = uniform01(rng);
    double cumulative = 0.0;
    std::size_t chosen = dist.size() - 1;  // guards against roundoff at u ~ 1
    for (std::size_t i = 0; i < dist.size(); ++i) {
      cumulative += dist[i].second;
      if (u < cumulative) {
        chosen = i;
        break;
      }
    }
    ++out.counts[chosen].second;
  }
  return out;
}

ScopEntity make_membership_entity(const std::string& concept_state,
                                  const std::string& item_state, double decision_weight) {
  if (!(decision_weight >= 0.0 && decision_weight <= 1.0))
    reject("make_membership_entity: decision weight must lie in [0, 1]");
  std::vector<TransitionRule> rules;
  rules.push_back({concept_state, "item", {{item_state, 1.0}}});
  rules.push_back(
      {item_state, "decision", {{"yes", decision_weight}, {"no", 1.0 - decision_weight}}});
  return ScopEntity({concept_state, item_state, "yes", "no"}, {"item", "decision"},
                    std::move(rules));
}

}  // namespace qconcept::scop
