#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "harmonic/json_io.hpp"
#include "oracle.hpp"

namespace harmonic {
namespace {

Rational R(std::int64_t n, std::int64_t d) { return rat(BigInt(n), BigInt(d)); }

TEST(FractionJson, Shape) {
  const auto j = fraction_json(R(-2525, 1491));
  EXPECT_EQ(j.dump(), R"({"den":"1491","num":"-2525"})");
  EXPECT_EQ(fraction_from_json(j), R(-2525, 1491));
  const Rational big(BigInt::pow(10, 40) + BigInt(1), BigInt(3));
  EXPECT_EQ(fraction_from_json(fraction_json(big)), big);
}

TEST(InstanceJson, Format) {
  const KnapsackInstance inst({R(101, 200), Rational(1), Rational(0)});
  EXPECT_EQ(instance_to_json(inst), R"(["101/200","1/1","0/1"])");
}

TEST(InstanceJson, AcceptedElements) {
  const auto inst = instance_from_json(R"(["1/2", "0.25", 1, "1", 0])");
  EXPECT_EQ(inst.items(), (std::vector<Rational>{R(1, 2), R(1, 4), Rational(1), Rational(1), Rational(0)}));
}

TEST(InstanceJson, Errors) {
  EXPECT_THROW(instance_from_json("{}"), std::invalid_argument);
  EXPECT_THROW(instance_from_json("[0.5]"), std::invalid_argument);
  EXPECT_THROW(instance_from_json(R"(["abc"])"), std::invalid_argument);
  EXPECT_THROW(instance_from_json(R"(["3/2"])"), std::invalid_argument);
  EXPECT_THROW(instance_from_json("[1,"), std::invalid_argument);
}

TEST(Properties, RoundTrip) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    KnapsackInstance inst;
    for (int i = 0; i < trial % 17; ++i) inst.push_back(oracle::random_unit(rng, 1'000'000));
    const std::string text = instance_to_json(inst);
    const auto back = instance_from_json(text);
    ASSERT_EQ(back.items(), inst.items());
    ASSERT_EQ(instance_to_json(back), text);
  }
}

}  // namespace
}  // namespace harmonic
