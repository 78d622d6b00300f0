#include <gtest/gtest.h>

#include "test_support.hpp"
#include "trigspec/errors.hpp"
#include "trigspec/io.hpp"

namespace trigspec {
namespace {

TEST(FormatNumber, SeventeenDigits) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(format_number(-1.5e-20), "-1.5000000000000001e-20");
  EXPECT_EQ(format_number(1e-300), "1e-300");
  EXPECT_EQ(format_number(static_cast<long long>(42)), "42");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(std::stod(format_number(testing::kPi)), testing::kPi);
}

TEST(Csv, HeaderRowsAndLineEndings) {
  CsvTable t({"k", "a", "b"});
  t.add(1, 0.5, -0.25);
  t.add(2, 1e-300, 0.0);
  EXPECT_EQ(t.str(), "k,a,b\n1,0.5,-0.25\n2,1e-300,0\n");
  EXPECT_THROW(t.add(1, 2.0), DomainError);
  EXPECT_EQ(t.rows(), 2u);
}

TEST(Csv, JsonRendering) {
  CsvTable t({"k", "holds"});
  t.add(3, true);
  EXPECT_EQ(t.json(), "{\"columns\":[\"k\",\"holds\"],\"rows\":[[3,true]]}\n");
}

TEST(SignalJson, RoundTrip) {
  for (const auto& entry : testing::suite()) {
    const auto text = signal_to_json(entry.signal);
    const auto back = parse_signal_json(text);
    EXPECT_EQ(back.kind(), entry.signal.kind());
    EXPECT_EQ(back.p(), entry.signal.p());
    EXPECT_EQ(back.smoothness().r, entry.signal.smoothness().r);
    EXPECT_EQ(back.smoothness().variation, entry.signal.smoothness().variation);
    EXPECT_EQ(signal_to_json(back), text);
    for (double t : {0.0, 1.0, 4.0}) EXPECT_EQ(eval(back, t), eval(entry.signal, t));
  }
}

TEST(SignalJson, FieldNames) {
  const auto f = parse_signal_json(R"({"kind":"HarmonicSum","terms":[[1,1.0,0.0],[3,0,-2]],"r":2})");
  EXPECT_EQ(f.terms().size(), 2u);
  EXPECT_EQ(f.smoothness().r, 2);
  const auto g = parse_signal_json(R"({"kind":"PowerDecaySine","p":3,"r":2,"variation":6.2831853071795862})");
  EXPECT_EQ(g.kind(), SignalKind::PowerDecaySine);
}

TEST(SignalJson, Errors) {
  EXPECT_THROW(parse_signal_json("{"), DomainError);
  EXPECT_THROW(parse_signal_json("[1,2]"), DomainError);
  EXPECT_THROW(parse_signal_json(R"({"terms":[]})"), DomainError);
  EXPECT_THROW(parse_signal_json(R"({"kind":"Square"})"), UnsupportedSignalError);
  EXPECT_THROW(parse_signal_json(R"({"kind":"HarmonicSum","terms":[[1.5,1,0]]})"), DomainError);
  EXPECT_THROW(parse_signal_json(R"({"kind":"PowerDecayCosine","p":4})"), DomainError);
  EXPECT_THROW(parse_signal_json(R"({"kind":"PowerDecayCosine","p":"x","r":1,"variation":1})"), DomainError);
}

TEST(SplineJson, ConstantSignalHasNoCoefficients) {
  KernelConfig cfg;
  cfg.r = 2;
  cfg.grid = make_grid(2);
  const auto s = build_spline(sample(AnalyticSignal::harmonic_sum({{0, 2.0, 0.0}}), cfg.grid), cfg);
  const auto text = spline_to_json(s);
  EXPECT_NE(text.find("\"coeffs\":[]"), std::string::npos) << text;
  EXPECT_NE(text.find("\"variant\":\"abs-sinc\""), std::string::npos);
  EXPECT_NE(text.find("\"N\":5"), std::string::npos);
  EXPECT_NE(text.find("\"a0\":2"), std::string::npos);
}

TEST(Files, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "trigspec_io_test.txt";
  write_text_file(path, "a,b\n1,2\n");
  EXPECT_EQ(read_text_file(path), "a,b\n1,2\n");
  std::filesystem::remove(path);
  EXPECT_THROW(read_text_file(path), DomainError);
}

}  // namespace
}  // namespace trigspec
