#include "figeight/tight_counts.hpp"

#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

namespace figeight {
namespace {

Slope S(const char* t) { return Slope::parse(t); }

// Nonzero block sizes of the solid-torus expansion of x, listed from the
// last coefficient to the first.
std::vector<std::size_t> cf_blocks(const Rational& x) {
  const auto c = neg_cfrac(x, CfracForm::solid_torus).coefficients();
  std::vector<std::size_t> out;
  for (std::size_t i = c.size(); i-- > 0;) {
    const Integer size = abs(c[i] + (i + 1 == c.size() ? 1 : 2));
    if (size != 0) out.push_back(size.convert_to<std::size_t>());
  }
  return out;
}

TEST(BasicSlice, Count) {
  EXPECT_EQ(basic_slice_count(S("0"), Slope::infinity()), 2);
  EXPECT_EQ(basic_slice_count(S("-1"), S("-1/2")), 2);
  EXPECT_THROW(basic_slice_count(S("-1"), S("-1/3")), std::domain_error);
}

TEST(Descent, Examples) {
  auto c = descent_path(S("-1"), S("-3/8"));
  ASSERT_EQ(c.slope_path.size(), 4u);
  EXPECT_EQ(c.slope_path[1], S("-2/5"));
  EXPECT_EQ(c.slope_path[2], S("-1/2"));
  EXPECT_EQ(c.blocks, (std::vector<std::size_t>{2, 1}));

  c = descent_path(S("-1"), S("-1/3"));
  EXPECT_EQ(c.edges(), 2u);
  EXPECT_EQ(c.blocks, (std::vector<std::size_t>{2}));

  // −2/3 normalizes −5/3 (meridian ∞): [−2,−2] has a single edge
  c = descent_path(S("-1"), S("-2/3"));
  EXPECT_EQ(c.edges(), 1u);
  EXPECT_EQ(c.blocks, (std::vector<std::size_t>{1}));

  EXPECT_THROW(descent_path(S("-1"), S("-1")), std::invalid_argument);
}

TEST(Descent, IsAGeodesicWithContinuedFractionBlocks) {
  for (long q = 2; q <= 13; ++q) {
    for (long p = 1; p < q; ++p) {
      if (boost::multiprecision::gcd(Integer(p), Integer(q)) != 1) continue;
      const Slope d(Integer(-p), Integer(q));
      const auto c = descent_path(S("-1"), d);
      const auto between = [&](const Slope& x) {
        return !x.is_infinite() && x.value() >= -1 && x.value() <= d.value();
      };
      EXPECT_EQ(long(c.edges()), testing::farey_distance(d, S("-1"), q, between)) << d;
      EXPECT_EQ(c.blocks, cf_blocks(Rational(-q, p))) << d;
      for (std::size_t i = 1; i < c.slope_path.size(); ++i) {
        EXPECT_TRUE(is_farey_adjacent(c.slope_path[i - 1], c.slope_path[i]));
      }
    }
  }
}

TEST(Signs, Enumeration) {
  const BasicSliceChain single{{S("0"), Slope::infinity()}, {1}};
  const auto one = enumerate_sign_sequences(single);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].str(), "-");
  EXPECT_EQ(one[1].str(), "+");

  // 1/d expands to [−2,−2] and [−2,−3]
  EXPECT_EQ(enumerate_sign_sequences(descent_path(S("-1"), S("-2/3"))).size(), 2u);
  const auto three = enumerate_sign_sequences(descent_path(S("-1"), S("-3/5")));
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(three[1].str(), "-+");
  EXPECT_EQ(neg_cfrac(Rational(-5, 3), CfracForm::solid_torus).str(), "[-2,-3]:st");

  const auto six = enumerate_sign_sequences(descent_path(S("-1"), S("-3/8")));
  ASSERT_EQ(six.size(), 6u);
  EXPECT_EQ(six.front().str(), "--|-");
  EXPECT_EQ(six.back().str(), "++|+");
}

TEST(Signs, CanonicalFormsAreSortedAndDistinct) {
  for (int i = 0; i < 100; ++i) {
    const long q = testing::uniform(2, 30);
    const long p = testing::uniform(1, q - 1);
    const auto chain = descent_path(S("-1"), Slope(Integer(-p), Integer(q)));
    std::set<std::string> seen;
    for (const auto& s : enumerate_sign_sequences(chain)) {
      EXPECT_EQ(canonicalize(s), s);
      EXPECT_TRUE(seen.insert(s.str()).second);
      // no + before − inside a block
      EXPECT_EQ(s.str().find("+-"), std::string::npos);
    }
  }
}

TEST(SolidTorus, Examples) {
  const SolidTorusSpec spec(Slope::infinity(), S("-5/3"));
  EXPECT_EQ(spec.k(), 1);
  EXPECT_EQ(spec.normalized_dividing(), S("-2/3"));
  EXPECT_EQ(solid_torus_count(spec), 2);
  EXPECT_EQ(enumerate_sign_sequences(solid_torus_chain(spec)).size(), 2u);

  EXPECT_EQ(tight_count_n_minus_three(S("-5")), psi(-5).value);
  EXPECT_EQ(tight_count_n_minus_three(S("-5")), 2);
  EXPECT_EQ(solid_torus_count(SolidTorusSpec(Slope::infinity(), S("-1"))), 1);
  EXPECT_EQ(enumerate_sign_sequences(solid_torus_chain(SolidTorusSpec(Slope::infinity(), S("-1")))).size(), 1u);
  EXPECT_THROW(SolidTorusSpec(S("2"), S("2")), std::invalid_argument);
}

TEST(SolidTorus, NormalizationInvariant) {
  for (int i = 0; i < 300; ++i) {
    const Slope m = testing::random_slope(40, 40), d = testing::random_slope(40, 40);
    if (m == d) continue;
    const SolidTorusSpec spec(m, d);
    EXPECT_EQ(spec.normalization().det(), 1);
    EXPECT_EQ(apply_unimodular(spec.normalization(), m), Slope::infinity());
    const Rational v = spec.normalized_dividing().value();
    EXPECT_TRUE(v >= -1 && v < 0) << m << " " << d;
  }
}

TEST(SolidTorus, NormalizedCounts) {
  for (int i = 0; i < 300; ++i) {
    const Slope r(testing::random_rational(150, 60));
    EXPECT_EQ(tight_count_n_infinity(r), phi(r.value()).value) << r;
    if (r.value() < -3) EXPECT_EQ(tight_count_n_minus_three(r), psi(r.value()).value) << r;
  }
}

TEST(SolidTorus, CountsTheSignSequences) {
  for (int i = 0; i < 150; ++i) {
    const Slope m = testing::random_slope(40, 40), d = testing::random_slope(40, 40);
    if (m == d) continue;
    const SolidTorusSpec spec(m, d);
    EXPECT_EQ(Integer(enumerate_sign_sequences(solid_torus_chain(spec)).size()),
              solid_torus_count(spec));
  }
}

TEST(SolidTorus, InvariantUnderSimultaneousChange) {
  for (int i = 0; i < 300; ++i) {
    const Slope m = testing::random_slope(20, 20), d = testing::random_slope(20, 20);
    if (m == d) continue;
    UnimodularMatrix a = UnimodularMatrix::identity();
    for (int j = 0; j < 3; ++j) {
      const long k = testing::uniform(-3, 3);
      a = a * (testing::uniform(0, 1) ? UnimodularMatrix(1, k, 0, 1) : UnimodularMatrix(1, 0, k, 1));
    }
    EXPECT_EQ(solid_torus_count(SolidTorusSpec(apply_unimodular(a, m), apply_unimodular(a, d))),
              solid_torus_count(SolidTorusSpec(m, d)));
  }
}

TEST(Factorization, Matrix) {
  EXPECT_EQ(factorization_matrix({{-1}, CfracForm::standard}), UnimodularMatrix(1, 1, -1, 0));
  EXPECT_EQ(factorization_matrix({{-2, -2}, CfracForm::standard}), UnimodularMatrix(3, 2, -2, -1));
  for (int i = 0; i < 200; ++i) {
    const Rational x = -Rational(testing::uniform(1, 300), testing::uniform(1, 100));
    const auto c = neg_cfrac(x, CfracForm::standard);
    const auto m = factorization_matrix(c);
    EXPECT_EQ(abs(m.det()), 1);
    EXPECT_EQ(ratio(m.a(), m.c()), eval_cfrac(c));
    // reversing the expansion transposes the product, up to conjugation by diag(1, −1)
    if (c.coefficients().front() > -2 && c.size() > 1) continue;
    const auto t = factorization_matrix({std::vector<Integer>(c.coefficients().rbegin(),
                                                              c.coefficients().rend()),
                                         CfracForm::standard});
    EXPECT_EQ(t, UnimodularMatrix(m.a(), -m.c(), -m.b(), m.d()));
  }
}

}  // namespace
}  // namespace figeight
