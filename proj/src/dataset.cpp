#include "qconcept/dataset.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "qconcept/scop.hpp"

namespace qconcept {

namespace {

constexpr std::array<const char*, 7> kColumns = {
    "item", "concept_a", "concept_b", "connective", "mu_a", "mu_b", "mu_combined"};

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      return fields;
    }
    fields.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_weight(const std::string& text, int row, const char* column) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(row, column, "malformed number '" + text + "'");
  if (!(value >= 0.0 && value <= 1.0))
    throw ParseError(row, column, "weight " + text + " outside [0, 1]");
  return value;
}

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

}  // namespace

Dataset parse_dataset(std::string_view csv, std::string source_name) {
  Dataset dataset;
  dataset.source_name = std::move(source_name);

  std::size_t pos = 0;
  int row = 0;  // 0 is the header
  bool saw_header = false;
  std::set<std::tuple<std::string, std::string, std::string, Connective>> keys;

  while (pos <= csv.size()) {
    const std::size_t eol = csv.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos ? csv.substr(pos) : csv.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? csv.size() + 1 : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    auto fields = split_fields(line);
    if (!saw_header) {
      for (std::size_t i = 0; i < kColumns.size(); ++i)
        if (i >= fields.size() || fields[i] != kColumns[i])
          throw ParseError(0, kColumns[std::min(i, fields.size())],
                           "missing or malformed header; expected "
                           "item,concept_a,concept_b,connective,mu_a,mu_b,mu_combined");
      if (fields.size() != kColumns.size())
        throw ParseError(0, "header", "too many header fields");
      saw_header = true;
      continue;
    }

    ++row;
    if (fields.size() != kColumns.size())
      throw ParseError(row, "row",
                       "expected 7 fields, found " + std::to_string(fields.size()));

    MembershipTriple t;
    t.item = fields[0];
    t.concept_a = fields[1];
    t.concept_b = fields[2];
    if (fields[3] == "and")
      t.connective = Connective::Conjunction;
    else if (fields[3] == "or")
      t.connective = Connective::Disjunction;
    else
      throw ParseError(row, "connective",
                       "unknown connective '" + fields[3] + "' (expected 'and' or 'or')");
    t.mu_a = parse_weight(fields[4], row, "mu_a");
    t.mu_b = parse_weight(fields[5], row, "mu_b");
    t.mu_combined = parse_weight(fields[6], row, "mu_combined");

    if (!keys.emplace(t.item, t.concept_a, t.concept_b, t.connective).second)
      throw ParseError(row, "item",
                       "duplicate (item, concept pair, connective) key '" + t.item + "'");
    dataset.rows.push_back(std::move(t));
  }

  if (!saw_header) throw ParseError(0, "header", "empty input; header row required");
  return dataset;
}

Dataset read_dataset_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dataset(buffer.str(), path);
}

std::string write_csv(const Dataset& dataset) {
  std::ostringstream out;
  out << "item,concept_a,concept_b,connective,mu_a,mu_b,mu_combined\n";
  for (const auto& t : dataset.rows) {
    out << t.item << ',' << t.concept_a << ',' << t.concept_b << ','
        << to_string(t.connective) << ',' << format_double(t.mu_a) << ','
        << format_double(t.mu_b) << ',' << format_double(t.mu_combined) << '\n';
  }
  return out.str();
}

Dataset synthesize_dataset(const Dataset& truth, std::int64_t draws, std::uint64_t seed) {
  if (draws < 1) throw std::invalid_argument("synthesize_dataset: draws must be >= 1");
  Dataset out;
  out.source_name = truth.source_name.empty() ? "synthetic" : truth.source_name + ":synthetic";

  std::uint64_t stream = 0;
  const auto frequency = [&](double weight) {
    const auto entity = scop::make_membership_entity("concept", "considered", weight);
    const auto counts = scop::sample_outcomes(entity, "considered", "decision", draws,
                                              seed + 0x9e3779b97f4a7c15ULL * ++stream);
    for (const auto& [state, count] : counts.counts)
      if (state == "yes") return static_cast<double>(count) / static_cast<double>(draws);
    return 0.0;
  };

  for (const auto& t : truth.rows) {
    MembershipTriple noisy = t;
    noisy.mu_a = frequency(t.mu_a);
    noisy.mu_b = frequency(t.mu_b);
    noisy.mu_combined = frequency(t.mu_combined);
    out.rows.push_back(std::move(noisy));
  }
  return out;
}

}  // namespace qconcept
