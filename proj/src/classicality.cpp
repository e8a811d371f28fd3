#include "qconcept/classicality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace qconcept {

namespace {

constexpr int kMaxDecimalDigits = 9;

// A weight together with its exact decimal reading k / 10^digits, when the
// double is precisely the nearest double to such a short decimal.
struct DecimalWeight {
  std::int64_t numerator = 0;
  int digits = 0;
};

std::optional<DecimalWeight> as_decimal(double w) {
  double scale = 1.0;
  for (int digits = 0; digits <= kMaxDecimalDigits; ++digits, scale *= 10.0) {
    const auto k = static_cast<std::int64_t>(std::llround(w * scale));
    if (static_cast<double>(k) / scale == w) return DecimalWeight{k, digits};
  }
  return std::nullopt;
}

std::int64_t pow10(int digits) {
  std::int64_t p = 1;
  for (int i = 0; i < digits; ++i) p *= 10;
  return p;
}

std::optional<std::pair<double, double>> decimal_deficits(const MembershipTriple& t,
                                                          bool conjunction) {
  const auto da = as_decimal(t.mu_a);
  const auto db = as_decimal(t.mu_b);
  const auto dc = as_decimal(t.mu_combined);
  if (!da || !db || !dc) return std::nullopt;
  const int digits = std::max({da->digits, db->digits, dc->digits});
  const std::int64_t one = pow10(digits);
  const std::int64_t a = da->numerator * pow10(digits - da->digits);
  const std::int64_t b = db->numerator * pow10(digits - db->digits);
  const std::int64_t c = dc->numerator * pow10(digits - dc->digits);
  const auto scale = static_cast<double>(one);
  if (conjunction) {
    return std::make_pair(static_cast<double>(c - std::min(a, b)) / scale,
                          static_cast<double>(a + b - c - one) / scale);
  }
  return std::make_pair(static_cast<double>(std::max(a, b) - c) / scale,
                        static_cast<double>(a + b - c) / scale);
}

std::pair<double, double> deficits(const MembershipTriple& t, bool conjunction) {
  validate(t);
  if (auto exact = decimal_deficits(t, conjunction)) return *exact;
  if (conjunction) {
    return {t.mu_combined - std::min(t.mu_a, t.mu_b),
            t.mu_a + t.mu_b - t.mu_combined - 1.0};
  }
  return {std::max(t.mu_a, t.mu_b) - t.mu_combined, t.mu_a + t.mu_b - t.mu_combined};
}

}  // namespace

void validate(const MembershipTriple& t) {
  const auto in_range = [](double w) { return w >= 0.0 && w <= 1.0; };
  if (!in_range(t.mu_a) || !in_range(t.mu_b) || !in_range(t.mu_combined))
    throw std::invalid_argument("MembershipTriple: weights must lie in [0, 1]");
}

std::pair<double, double> conjunction_deficits(const MembershipTriple& t) {
  if (t.connective != Connective::Conjunction)
    throw std::invalid_argument("conjunction_deficits: triple is not a conjunction");
  return deficits(t, /*conjunction=*/true);
}

std::pair<double, double> disjunction_deficits(const MembershipTriple& t) {
  if (t.connective != Connective::Disjunction)
    throw std::invalid_argument("disjunction_deficits: triple is not a disjunction");
  return deficits(t, /*conjunction=*/false);
}

ClassicalityVerdict classify(const MembershipTriple& t) {
  validate(t);
  ClassicalityVerdict v;
  const double lo = std::min(t.mu_a, t.mu_b);
  const double hi = std::max(t.mu_a, t.mu_b);
  if (t.connective == Connective::Conjunction) {
    std::tie(v.deficit_1, v.deficit_2) = conjunction_deficits(t);
    v.kolmogorovian = v.deficit_1 <= 0.0 && v.deficit_2 <= 0.0;
    if (t.mu_combined > hi)
      v.extension_class = ExtensionClass::DoubleOverextended;
    else if (t.mu_combined > lo)
      v.extension_class = ExtensionClass::Overextended;
    else
      v.extension_class = ExtensionClass::Classical;
  } else {
    std::tie(v.deficit_1, v.deficit_2) = disjunction_deficits(t);
    v.kolmogorovian = v.deficit_1 <= 0.0 && v.deficit_2 >= 0.0;
    if (t.mu_combined < lo)
      v.extension_class = ExtensionClass::DoubleUnderextended;
    else if (t.mu_combined < hi)
      v.extension_class = ExtensionClass::Underextended;
    else
      v.extension_class = ExtensionClass::Classical;
  }
  return v;
}

const char* to_string(ExtensionClass c) {
  switch (c) {
    case ExtensionClass::Classical: return "Classical";
    case ExtensionClass::Overextended: return "Overextended";
    case ExtensionClass::DoubleOverextended: return "DoubleOverextended";
    case ExtensionClass::Underextended: return "Underextended";
    case ExtensionClass::DoubleUnderextended: return "DoubleUnderextended";
  }
  return "Classical";
}

const char* to_string(Connective c) {
  return c == Connective::Conjunction ? "and" : "or";
}

}  // namespace qconcept
