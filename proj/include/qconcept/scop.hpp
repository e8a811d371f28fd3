#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

// Operational state-context description of a conceptual entity: labeled
// states, labeled contexts, and per (source state, context) transition
// distributions over states. Membership weights arise as products of
// transition probabilities along a two-step chain (item context, then
// decision context). No Hilbert-space structure is imposed at this layer.

namespace qconcept::scop {

struct TransitionRule {
  std::string source;
  std::string context;
  std::vector<std::pair<std::string, double>> distribution;  // over target states
};

/// Immutable after construction; the constructor validates that every
/// label is declared and every distribution is normalized (1e-10) with
/// nonnegative entries.
class ScopEntity {
 public:
  ScopEntity(std::vector<std::string> states, std::vector<std::string> contexts,
             std::vector<TransitionRule> rules);

  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& contexts() const { return contexts_; }

  bool has_state(const std::string& label) const;
  bool has_context(const std::string& label) const;
  bool has_transition(const std::string& source, const std::string& context) const;

  /// A context acts deterministically at a source state when its
  /// distribution there is a point mass.
  bool deterministic_at(const std::string& source, const std::string& context) const;

  const std::vector<std::pair<std::string, double>>& distribution(
      const std::string& source, const std::string& context) const;

 private:
  std::vector<std::string> states_;
  std::vector<std::string> contexts_;
  std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::string, double>>>
      transitions_;
};

/// Probability that `context` sends `source` to `target`; 0 when the target
/// is outside the distribution's support. Unknown labels are rejected.
double transition_probability(const ScopEntity& entity, const std::string& target,
                              const std::string& context, const std::string& source);

/// Two-step membership weight mu(p_x, e_x, p_a) * mu(p, e, p_x): the item
/// context e_x takes the concept state p_a to the item state p_x, the
/// decision context e then takes p_x to the outcome p.
double membership_weight(const ScopEntity& entity, const std::string& p_a,
                         const std::string& e_x, const std::string& p_x,
                         const std::string& e, const std::string& p);

/// Frequencies over target states from `count` seeded draws; counts are
/// listed for every state in the distribution's support, in entity state
/// order, and are bit-identical for equal seeds.
struct OutcomeCounts {
  std::vector<std::pair<std::string, std::int64_t>> counts;
  std::int64_t total = 0;
};

OutcomeCounts sample_outcomes(const ScopEntity& entity, const std::string& source,
                              const std::string& context, std::int64_t count,
                              std::uint64_t seed);

/// The canonical two-step judgment entity: context "item" sends
/// `concept_state` to `item_state` deterministically; context "decision"
/// then sends `item_state` to "yes" with probability decision_weight, else
/// to "no".
ScopEntity make_membership_entity(const std::string& concept_state,
                                  const std::string& item_state, double decision_weight);

}  // namespace qconcept::scop
