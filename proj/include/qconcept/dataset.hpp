#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qconcept/classicality.hpp"

// CSV ingestion and emission of membership triples. Schema (UTF-8, comma
// separated, '.' decimal separator, no quoting):
//
//   item,concept_a,concept_b,connective,mu_a,mu_b,mu_combined
//
// with connective in {and, or}. Duplicate (item, concept pair, connective)
// keys are rejected.

namespace qconcept {

struct Dataset {
  std::vector<MembershipTriple> rows;
  std::string source_name;
};

/// Parse failure with the 1-based data row index (header excluded) and the
/// offending column name.
class ParseError : public std::runtime_error {
 public:
  ParseError(int row, std::string column, const std::string& message)
      : std::runtime_error("row " + std::to_string(row) + ", column " + column + ": " +
                           message),
        row_(row),
        column_(std::move(column)) {}

  int row() const { return row_; }
  const std::string& column() const { return column_; }

 private:
  int row_;
  std::string column_;
};

Dataset parse_dataset(std::string_view csv, std::string source_name = "");

/// Reads and parses a CSV file; throws std::runtime_error when unreadable.
Dataset read_dataset_file(const std::string& path);

/// Inverse of parse_dataset on valid data: emits the schema above with
/// shortest round-trip number formatting.
std::string write_csv(const Dataset& dataset);

/// Resamples every weight as a relative frequency of `draws` seeded
/// Bernoulli outcomes, yielding a synthetic dataset with the sampling noise
/// of a finite experiment. Deterministic for a fixed seed.
Dataset synthesize_dataset(const Dataset& truth, std::int64_t draws, std::uint64_t seed);

}  // namespace qconcept
