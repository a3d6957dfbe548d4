#include <gtest/gtest.h>

#include "circdet/properties.hpp"

using namespace circdet;

namespace {

void expect_clean(const PropertyResult& r) {
  EXPECT_GE(r.cases, 10000u) << r.name;
  EXPECT_EQ(r.failures, 0u) << r.name << ": " << r.first_failure;
  EXPECT_TRUE(r.ok()) << r.name;
}

}  // namespace

TEST(Properties, NormIsMultiplicative) { expect_clean(prop_norm_multiplicativity()); }

TEST(Properties, ProfileMultipliesToTheDeterminant) { expect_clean(prop_profile_product()); }

TEST(Properties, MatrixAgreesWithResultant) { expect_clean(prop_matrix_vs_resultant()); }

TEST(Properties, NormCongruences) { expect_clean(prop_norm_congruences()); }

TEST(Properties, ClassificationLaws) { expect_clean(prop_classify_laws()); }

TEST(Properties, CyclotomicResultants) { expect_clean(prop_cyclotomic_resultants()); }

TEST(Properties, PellCycle) { expect_clean(prop_pell_cycle()); }

// A different seed should be just as clean.
TEST(Properties, OtherSeed) {
  expect_clean(prop_norm_multiplicativity(7));
  expect_clean(prop_norm_congruences(7));
}
