#include <gtest/gtest.h>

#include <latintrade/latintrade.hpp>

using namespace latintrade;

namespace {

std::vector<Entry> triples(std::initializer_list<std::array<long long, 3>> list) {
  std::vector<Entry> out;
  for (const auto &t : list)
    out.emplace_back(t[0], t[1], t[2]);
  return out;
}

} // namespace

TEST(Label, IntegersOrderNumericallyBeforeText) {
  EXPECT_LT(Label(Axis::row, 2), Label(Axis::row, 10));
  EXPECT_LT(Label(Axis::row, 10), Label(Axis::row, "a"));
  EXPECT_EQ(Label(Axis::row, "7"), Label(Axis::row, 7));
  EXPECT_NE(Label(Axis::row, 1), Label(Axis::column, 1));
  EXPECT_THROW(Label(Axis::row, ""), std::invalid_argument);
  EXPECT_THROW(Label(Axis::row, "a b"), std::invalid_argument);
}

TEST(ValidatePls, IntercalateHalfIsOk) {
  EXPECT_TRUE(validate_pls(intercalate().t_dia().entries()).ok());
}

TEST(ValidatePls, DuplicateCell) {
  const auto r = validate_pls(triples({{0, 0, 0}, {0, 0, 1}}));
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(r.has(Rule::pls));
  EXPECT_NE(r.violations.front().witness.find("0"), std::string::npos);
}

TEST(ValidatePls, SymbolRepeatedInRow) {
  const auto r = validate_pls(triples({{0, 0, 0}, {0, 1, 0}}));
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(r.has(Rule::pls));
}

TEST(ValidatePls, SymbolRepeatedInColumn) {
  EXPECT_TRUE(validate_pls(triples({{0, 0, 0}, {1, 0, 0}})).has(Rule::pls));
}

TEST(ValidateBitrade, FixturesAreOk) {
  const auto a = intercalate();
  EXPECT_TRUE(validate_bitrade(a.t_dia().entries(), a.t_oti().entries()).ok());
  const auto b = example2();
  EXPECT_TRUE(validate_bitrade(b.t_dia().entries(), b.t_oti().entries()).ok());
}

TEST(ValidateBitrade, SelfPairViolatesR1) {
  const auto a = intercalate();
  const auto r = validate_bitrade(a.t_dia().entries(), a.t_dia().entries());
  EXPECT_TRUE(r.has(Rule::r1));
}

TEST(ValidateBitrade, BrokenPartnerViolatesR2) {
  // Replace (1,1,1) in T-oti by (1,1,0): row 1 of T-oti now lacks symbol 1
  // while T-dia still has it.
  auto dia = triples({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  auto oti = triples({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 2}});
  const auto r = validate_bitrade(dia, oti);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(r.has(Rule::r2) || r.has(Rule::r3));
  for (const auto &v : r.violations)
    EXPECT_FALSE(v.witness.empty());
  EXPECT_THROW(Bitrade::make(dia, oti), InvalidInput);
}

TEST(BitradeFromSquares, CyclicTableAgainstShift) {
  std::vector<Entry> l1, l2;
  for (long long i = 0; i < 3; ++i)
    for (long long j = 0; j < 3; ++j) {
      l1.emplace_back(i, j, (i + j) % 3);
      l2.emplace_back(i, j, (i + j + 1) % 3);
    }
  const auto b = bitrade_from_squares(PartialLatinSquare::from_entries(l1),
                                      PartialLatinSquare::from_entries(l2));
  EXPECT_EQ(b.size(), 9u);
  EXPECT_TRUE(validate_bitrade(b.t_dia().entries(), b.t_oti().entries()).ok());
  EXPECT_TRUE(is_k_homogeneous(b, 3));
}

TEST(BitradeFromSquares, IdenticalSquaresGiveEmpty) {
  const auto l = PartialLatinSquare::from_entries(triples({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  EXPECT_TRUE(bitrade_from_squares(l, l).empty());
}

TEST(BitradeFromSquares, OrderTwoSquaresGiveTheIntercalate) {
  const auto l1 = PartialLatinSquare::from_entries(triples({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  const auto l2 = PartialLatinSquare::from_entries(triples({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}}));
  EXPECT_EQ(bitrade_from_squares(l1, l2), intercalate());
}

TEST(BitradeFromSquares, RejectsPartialSquares) {
  const auto full = PartialLatinSquare::from_entries(triples({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  const auto partial = PartialLatinSquare::from_entries(triples({{0, 0, 0}}));
  EXPECT_THROW(bitrade_from_squares(full, partial), InvalidInput);
}

TEST(Homogeneity, Fixtures) {
  EXPECT_TRUE(is_k_homogeneous(example2(), 3));
  EXPECT_FALSE(is_k_homogeneous(intercalate(), 3));
  EXPECT_TRUE(is_k_homogeneous(intercalate(), 2));
}

TEST(Transversal, Example2) {
  const auto b = example2();
  EXPECT_TRUE(is_transversal(triples({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {4, 4, 4}}), b));
  EXPECT_FALSE(is_transversal(triples({{1, 1, 1}, {1, 4, 2}}), b));
  EXPECT_FALSE(is_transversal({}, b));
  EXPECT_THROW(is_transversal(triples({{1, 1, 3}}), b), InvalidInput);
}

TEST(Bitrade, SwappedIsABitrade) {
  const auto b = example2().swapped();
  EXPECT_TRUE(validate_bitrade(b.t_dia().entries(), b.t_oti().entries()).ok());
  EXPECT_EQ(b.swapped(), example2());
}
