#include <brlb/io/json_io.hpp>
#include <brlb/io/report.hpp>
#include <brlb/io/source.hpp>

#include <gtest/gtest.h>

#include <filesystem>

using namespace brlb;

namespace {

TensorFile from_text(const std::string& s) { return tensor_file_from_json(Json::parse(s)); }

}  // namespace

TEST(TensorFile, RoundTripPreservesRationals) {
  SeededRng rng(1);
  TensorFile tf;
  tf.tensor = Tensor3<Rational>(2, 3, 2);
  tf.tensor(0, 1, 1) = Rational(-7, 3);
  tf.tensor(1, 2, 0) = Rational(5);
  tf.tensor(1, 0, 1) = Rational(1, 1000000007);
  tf.metadata = {{"name", "sample"}};
  const auto j = tensor_file_to_json(tf);
  const auto back = tensor_file_from_json(Json::parse(j.dump()));
  EXPECT_TRUE(back.tensor == tf.tensor);
  EXPECT_EQ(back.metadata, tf.metadata);
  EXPECT_EQ(tensor_file_to_json(back).dump(), j.dump());
  EXPECT_EQ(j["entries"][0]["value"], "-7/3");
}

TEST(TensorFile, HashIgnoresEntryOrderAndFormatting) {
  const auto a = from_text(R"({"dims":[2,2,2],"entries":[{"i":0,"j":0,"k":1,"value":"2/4"},{"i":1,"j":1,"k":1,"value":3}]})");
  const auto b = from_text(R"({"dims":[2,2,2],"entries":[{"i":1,"j":1,"k":1,"value":"3"},{"i":0,"j":0,"k":1,"value":"1/2"}]})");
  EXPECT_EQ(content_hash(a), content_hash(b));
  auto c = b;
  c.tensor(0, 0, 0) = 1;
  EXPECT_NE(content_hash(a), content_hash(c));
}

TEST(TensorFile, MalformedInputs) {
  const char* bad[] = {
      R"([1,2,3])",
      R"({"dims":[2,2],"entries":[]})",
      R"({"dims":[2,2,0],"entries":[]})",
      R"({"dims":[2,2,2]})",
      R"({"dims":[2,2,2],"entries":[{"i":2,"j":0,"k":0,"value":1}]})",
      R"({"dims":[2,2,2],"entries":[{"i":0,"j":0,"k":0,"value":1},{"i":0,"j":0,"k":0,"value":2}]})",
      R"({"dims":[2,2,2],"entries":[{"i":0,"j":0,"k":0,"value":"1/0"}]})",
      R"({"dims":[2,2,2],"entries":[{"i":0,"j":0,"k":0,"value":1.5}]})",
      R"({"dims":[2,2,2],"entries":[{"i":-1,"j":0,"k":0,"value":1}]})",
      R"({"dims":[2,2,2],"field":"prime:100","entries":[]})",
      R"({"dims":[2,2,2],"field":"real","entries":[]})",
  };
  for (const char* s : bad) EXPECT_THROW(from_text(s), MalformedInput) << s;
  EXPECT_THROW(read_tensor_file("/nonexistent/file.json"), MalformedInput);
  EXPECT_NO_THROW(from_text(R"({"dims":[1,1,1],"field":"prime:7","entries":[]})"));
}

TEST(Certificate, RoundTrip) {
  EpsDecomposition<Rational> dec;
  dec.h = 1;
  dec.terms.push_back({{{1}, {0, 1}}, {{1}, {0, 1}}, {{1}, {0, Rational(1, 2)}}});
  const auto back = certificate_from_json(Json::parse(certificate_to_json(dec).dump()));
  EXPECT_EQ(back.h, 1u);
  ASSERT_EQ(back.r(), 1u);
  EXPECT_EQ(back.terms[0].c[1][1], Rational(1, 2));
  EXPECT_THROW(certificate_from_json(Json::parse(R"({"h":0,"terms":[{"a":[[1]],"b":[[1]]}]})")), MalformedInput);
}

TEST(AlgebraTable, RoundTripAndValidation) {
  const auto alg = cw_algebra<Rational>(2);
  const auto back = algebra_from_json(Json::parse(algebra_to_json(alg).dump()));
  EXPECT_TRUE(structure_tensor(back) == structure_tensor(alg));
  EXPECT_THROW(algebra_from_json(Json::parse(R"({"m":2,"unit":0,"products":[]})")), MalformedInput);
}

TEST(LedgerFile, RoundTrip) {
  Ledger l;
  l.add({"x", FactKind::UPPER, 4, "p"});
  l.register_kronecker({"x^2", {"x", "x"}});
  const auto back = ledger_from_json(Json::parse(ledger_to_json(l).dump()));
  EXPECT_EQ(back.facts, l.facts);
  EXPECT_EQ(back.kronecker, l.kronecker);
  EXPECT_THROW(ledger_from_json(Json::parse(R"({"facts":[{"tensor_id":"x","kind":"MAYBE","value":1}]})")), MalformedInput);
}

TEST(Source, ZooSpecs) {
  EXPECT_TRUE(resolve_source("zoo:matmul:2").file.tensor == matmul<Rational>(2, 2, 2));
  EXPECT_TRUE(resolve_source("zoo:matmul:2:2:3").file.tensor == matmul<Rational>(2, 2, 3));
  const auto sq = resolve_source("zoo:small_cw:2^2");
  EXPECT_EQ(sq.file.tensor.dims(), (Dims{9, 9, 9}));
  ASSERT_TRUE(sq.power_of.has_value());
  EXPECT_EQ(sq.power_of->factor_ids, (std::vector<std::string>{"zoo:small_cw:2", "zoo:small_cw:2"}));
  EXPECT_THROW(resolve_source("zoo:nonsense"), std::invalid_argument);
  EXPECT_THROW(resolve_source("zoo:unit"), std::invalid_argument);
  EXPECT_THROW(resolve_source("zoo:unit:x"), std::invalid_argument);
}

TEST(Report, HashIgnoresWallTime) {
  Json a = {{"x", 1}, {"obstructions", {{{"wall_ms", 3.5}, {"v", "PASS"}}}}};
  Json b = {{"x", 1}, {"obstructions", {{{"wall_ms", 9.0}, {"v", "PASS"}}}}};
  EXPECT_EQ(reproducibility_hash(a), reproducibility_hash(b));
  b["x"] = 2;
  EXPECT_NE(reproducibility_hash(a), reproducibility_hash(b));
}
