#pragma once

#include <string>
#include <utility>

// Tests membership triples against the Kolmogorovian representability
// inequalities and classifies over-/under-extension of the combined weight.

namespace qconcept {

enum class Connective { Conjunction, Disjunction };

/// One item's measured membership weights for two concepts and their
/// combination ("X is a member of A", "of B", "of A and/or B").
struct MembershipTriple {
  std::string item;
  std::string concept_a;
  std::string concept_b;
  Connective connective = Connective::Conjunction;
  double mu_a = 0.0;
  double mu_b = 0.0;
  double mu_combined = 0.0;
};

/// Throws std::invalid_argument unless all three weights lie in [0, 1].
void validate(const MembershipTriple& t);

enum class ExtensionClass {
  Classical,
  Overextended,
  DoubleOverextended,
  Underextended,
  DoubleUnderextended,
};

/// Outcome of the classicality audit for one triple. deficit_1 > 0 always
/// witnesses a violation of the fuzzy-set minimum (conjunction) or maximum
/// (disjunction) rule.
struct ClassicalityVerdict {
  double deficit_1 = 0.0;
  double deficit_2 = 0.0;
  bool kolmogorovian = false;
  ExtensionClass extension_class = ExtensionClass::Classical;
};

// Representability deficits. A conjunction triple embeds in a single
// classical probability space iff d1 <= 0 and d2 <= 0, where
//   d1 = mu(A and B) - min[mu(A), mu(B)]
//   d2 = mu(A) + mu(B) - mu(A and B) - 1.
// A disjunction triple embeds iff d1 <= 0 and d2 >= 0, where
//   d1 = max[mu(A), mu(B)] - mu(A or B)
//   d2 = mu(A) + mu(B) - mu(A or B).
// Weights are empirical frequencies reported at short decimal precision;
// when the inputs are exactly such decimals the linear arithmetic is done
// in decimal fixed point, so reported deficits carry no binary-float
// artifacts (0.90 - 0.81 yields exactly 0.09).
std::pair<double, double> conjunction_deficits(const MembershipTriple& t);
std::pair<double, double> disjunction_deficits(const MembershipTriple& t);

/// Full verdict: deficits from the matching operation above, the
/// representability flag, and the extension class. Extension comparisons
/// are strict; equality at a boundary counts as Classical.
ClassicalityVerdict classify(const MembershipTriple& t);

const char* to_string(ExtensionClass c);
const char* to_string(Connective c);

}  // namespace qconcept
