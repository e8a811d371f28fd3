#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qconcept/dataset.hpp"

using namespace qconcept;

namespace {

const char* kHeader = "item,concept_a,concept_b,connective,mu_a,mu_b,mu_combined\n";

std::string with_header(const std::string& rows) { return std::string(kHeader) + rows; }

}  // namespace

TEST_CASE("parses single rows of both connectives") {
  const auto conj = parse_dataset(with_header("Mint,Food,Plant,and,0.87,0.81,0.90\n"));
  REQUIRE(conj.rows.size() == 1);
  CHECK(conj.rows[0].item == "Mint");
  CHECK(conj.rows[0].concept_a == "Food");
  CHECK(conj.rows[0].concept_b == "Plant");
  CHECK(conj.rows[0].connective == Connective::Conjunction);
  CHECK(conj.rows[0].mu_a == 0.87);
  CHECK(conj.rows[0].mu_b == 0.81);
  CHECK(conj.rows[0].mu_combined == 0.90);

  const auto disj = parse_dataset(
      with_header("Refrigerator,House Furnishings,Furniture,or,0.9,0.7,0.575\n"));
  REQUIRE(disj.rows.size() == 1);
  CHECK(disj.rows[0].connective == Connective::Disjunction);
  CHECK(disj.rows[0].mu_combined == 0.575);
}

TEST_CASE("reports the row and column of the first error") {
  try {
    parse_dataset(with_header("X,A,B,and,1.2,0.5,0.5\n"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.row() == 1);
    CHECK(e.column() == "mu_a");
  }

  try {
    parse_dataset(with_header("X,A,B,and,0.5,0.5,0.5\nY,A,B,xor,0.5,0.5,0.5\n"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.row() == 2);
    CHECK(e.column() == "connective");
  }

  try {
    parse_dataset(with_header("X,A,B,and,0.5,not_a_number,0.5\n"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.row() == 1);
    CHECK(e.column() == "mu_b");
  }

  CHECK_THROWS_AS(parse_dataset("wrong,header\n"), ParseError);
  CHECK_THROWS_AS(parse_dataset(""), ParseError);
  CHECK_THROWS_AS(parse_dataset(with_header("X,A,B,and,0.5,0.5\n")), ParseError);
}

TEST_CASE("duplicate keys are rejected, distinct connectives are not") {
  CHECK_THROWS_AS(parse_dataset(with_header("X,A,B,and,0.5,0.5,0.5\n"
                                            "X,A,B,and,0.6,0.6,0.6\n")),
                  ParseError);
  // same item and pair under the other connective is a different key
  const auto ok = parse_dataset(with_header("X,A,B,and,0.5,0.5,0.5\n"
                                            "X,A,B,or,0.5,0.5,0.75\n"));
  CHECK(ok.rows.size() == 2);
}

TEST_CASE("windows line endings and blank lines are tolerated") {
  const auto d = parse_dataset("item,concept_a,concept_b,connective,mu_a,mu_b,mu_combined\r\n"
                               "X,A,B,or,0.4,0.2,0.1\r\n\r\n");
  REQUIRE(d.rows.size() == 1);
  CHECK(d.rows[0].mu_a == 0.4);
}

TEST_CASE("emit then parse is the identity on triples") {
  const auto fixture = parse_dataset(
      with_header("Mint,Food,Plant,and,0.87,0.81,0.9\n"
                  "Sunglasses,Sportswear,Sports Equipment,or,0.4,0.2,0.1\n"
                  "Refrigerator,House Furnishings,Furniture,or,0.9,0.7,0.575\n"
                  "TV,Furniture,Household Appliances,and,0.7,0.9,0.925\n"),
      "fixture");
  const auto round_tripped = parse_dataset(write_csv(fixture), "fixture");
  REQUIRE(round_tripped.rows.size() == fixture.rows.size());
  for (std::size_t i = 0; i < fixture.rows.size(); ++i) {
    CHECK(round_tripped.rows[i].item == fixture.rows[i].item);
    CHECK(round_tripped.rows[i].concept_a == fixture.rows[i].concept_a);
    CHECK(round_tripped.rows[i].concept_b == fixture.rows[i].concept_b);
    CHECK(round_tripped.rows[i].connective == fixture.rows[i].connective);
    CHECK(round_tripped.rows[i].mu_a == fixture.rows[i].mu_a);
    CHECK(round_tripped.rows[i].mu_b == fixture.rows[i].mu_b);
    CHECK(round_tripped.rows[i].mu_combined == fixture.rows[i].mu_combined);
  }
}

TEST_CASE("synthetic datasets are seed-deterministic and schema-compatible") {
  const auto truth = parse_dataset(with_header("X,A,B,and,0.9,0.5,0.6\n"), "truth");
  const auto synth_a = synthesize_dataset(truth, 100000, 7);
  const auto synth_b = synthesize_dataset(truth, 100000, 7);
  REQUIRE(synth_a.rows.size() == 1);
  CHECK(synth_a.rows[0].mu_a == synth_b.rows[0].mu_a);
  CHECK(synth_a.rows[0].mu_b == synth_b.rows[0].mu_b);
  CHECK(synth_a.rows[0].mu_combined == synth_b.rows[0].mu_combined);

  // frequencies concentrate near the true weights
  CHECK(std::abs(synth_a.rows[0].mu_a - 0.9) <= 0.01);
  CHECK(std::abs(synth_a.rows[0].mu_b - 0.5) <= 0.01);
  CHECK(std::abs(synth_a.rows[0].mu_combined - 0.6) <= 0.01);

  // emitted CSV parses back under the ingestion schema
  const auto reparsed = parse_dataset(write_csv(synth_a));
  CHECK(reparsed.rows.size() == 1);

  CHECK_THROWS_AS(synthesize_dataset(truth, 0, 7), std::invalid_argument);
}
