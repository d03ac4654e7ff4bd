#include <gtest/gtest.h>

#include <latintrade/latintrade.hpp>

using namespace latintrade;

namespace {

// Direct search over the halves: x.tau(p) is reached by changing position
// p+1 of x to land in T-oti, then changing position p+2 to land back in T-dia.
Entry tau_by_search(const Bitrade &b, std::size_t p, const Entry &x) {
  const std::size_t r = (p + 1) % 3, s = (p + 2) % 3;
  std::vector<Entry> ys;
  for (const auto &y : b.t_oti().entries())
    if (y[p] == x[p] && y[s] == x[s])
      ys.push_back(y);
  EXPECT_EQ(ys.size(), 1u);
  std::vector<Entry> zs;
  for (const auto &z : b.t_dia().entries())
    if (z[p] == ys.at(0)[p] && z[r] == ys.at(0)[r])
      zs.push_back(z);
  EXPECT_EQ(zs.size(), 1u);
  return zs.at(0);
}

void expect_tau_matches_search(const Bitrade &b) {
  const auto t = tau_representation(b);
  for (std::size_t p = 0; p < 3; ++p)
    for (const auto &x : b.t_dia().entries())
      EXPECT_EQ(t.tau(p).image(x), tau_by_search(b, p, x)) << "p=" << p << " x=" << to_string(x);
}

TauRep<char> chars(std::vector<std::vector<char>> a, std::vector<std::vector<char>> b,
                   std::vector<std::vector<char>> c) {
  return TauRep<char>({Permutation<char>::from_cycles(a), Permutation<char>::from_cycles(b),
                       Permutation<char>::from_cycles(c)});
}

Bitrade relabelled(const Bitrade &b, const std::string &prefix) {
  auto half = [&](std::span<const Entry> es) {
    std::vector<Entry> out;
    for (const auto &e : es)
      out.emplace_back(prefix + e.row().value(), prefix + e.col().value(), prefix + e.sym().value());
    return out;
  };
  return Bitrade::make(half(b.t_dia().entries()), half(b.t_oti().entries()));
}

} // namespace

TEST(BetaMaps, IntercalateValues) {
  const auto beta = beta_maps(intercalate());
  EXPECT_EQ(beta.apply(2, Entry(0, 0, 1)), Entry(0, 0, 0));
  EXPECT_EQ(beta.apply(0, Entry(0, 0, 1)), Entry(1, 0, 1));
}

TEST(BetaMaps, Example2Value) {
  EXPECT_EQ(beta_maps(example2()).apply(2, Entry(1, 1, 3)), Entry(1, 1, 1));
}

TEST(BetaMaps, InverseUndoesApply) {
  const auto b = example2();
  const auto beta = beta_maps(b);
  for (std::size_t r = 0; r < 3; ++r)
    for (const auto &y : b.t_oti().entries())
      EXPECT_EQ(beta.inverse(r, beta.apply(r, y)), y);
}

TEST(TauRepresentation, Example2Golden) {
  const auto t = tau_representation(example2());
  EXPECT_EQ(format_cycles(t.tau(0)),
            "(1:1:1,1:4:2,1:2:3)(2:1:3,2:3:4,2:2:2)(3:2:4,3:4:1,3:3:3)(4:1:2,4:4:4,4:3:1)");
  EXPECT_EQ(format_cycles(t.tau(1)),
            "(1:1:1,2:1:3,4:1:2)(1:2:3,2:2:2,3:2:4)(1:4:2,3:4:1,4:4:4)(2:3:4,3:3:3,4:3:1)");
  EXPECT_EQ(format_cycles(t.tau(2)),
            "(1:1:1,4:3:1,3:4:1)(1:2:3,3:3:3,2:1:3)(1:4:2,4:1:2,2:2:2)(2:3:4,4:4:4,3:2:4)");
}

TEST(TauRepresentation, IntercalateGolden) {
  const auto t = tau_representation(intercalate());
  EXPECT_EQ(format_cycles(t.tau(0)), "(0:0:0,0:1:1)(1:0:1,1:1:0)");
  EXPECT_EQ(format_cycles(t.tau(1)), "(0:0:0,1:0:1)(0:1:1,1:1:0)");
  EXPECT_EQ(format_cycles(t.tau(2)), "(0:0:0,1:1:0)(0:1:1,1:0:1)");
}

TEST(TauRepresentation, AgreesWithDirectSearch) {
  expect_tau_matches_search(intercalate());
  expect_tau_matches_search(example2());
  expect_tau_matches_search(cyclic_shift_bitrade(3));
  expect_tau_matches_search(cyclic_shift_bitrade(5));
}

TEST(TauRepresentation, CyclicOrderThreeHasThreeTripleCycles) {
  const auto t = tau_representation(cyclic_shift_bitrade(3));
  for (std::size_t p = 0; p < 3; ++p) {
    ASSERT_EQ(t.tau(p).cycle_count(), 3u);
    for (const auto &c : t.tau(p).cycles())
      EXPECT_EQ(c.size(), 3u);
  }
}

TEST(TConditions, Example2AllHold) {
  const auto c = check_t_conditions(tau_representation(example2()));
  EXPECT_TRUE(c.t1 && c.t2 && c.t3 && c.t4);
}

TEST(TConditions, IdentityThirdPermutationFailsT3) {
  const auto c = check_t_conditions(chars({{'a', 'b'}}, {{'a', 'b'}}, {}));
  EXPECT_FALSE(c.t3);
  EXPECT_TRUE(c.t1);
}

TEST(TConditions, DisjointUnionIsNotTransitive) {
  const auto u = disjoint_union(intercalate(), relabelled(intercalate(), "x"));
  const auto t = tau_representation(u);
  const auto c = t.t_status();
  EXPECT_TRUE(c.t1 && c.t2 && c.t3);
  EXPECT_FALSE(c.t4);
  const auto o = orbits(t);
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0].size(), 4u);
  EXPECT_EQ(o[1].size(), 4u);
  EXPECT_FALSE(is_primary(u));
}

TEST(TConditions, SharedPairOfCyclesFailsT2) {
  const auto c = check_t_conditions(chars({{'a', 'b', 'c'}}, {{'a', 'c', 'b'}}, {}));
  EXPECT_FALSE(c.t2);
}

TEST(Orbits, Example2AndEmpty) {
  const auto o = orbits(tau_representation(example2()));
  ASSERT_EQ(o.size(), 1u);
  EXPECT_EQ(o[0].size(), 12u);
  EXPECT_TRUE(orbits(TauRep<char>({Permutation<char>{}, Permutation<char>{}, Permutation<char>{}})).empty());
}

TEST(Primary, Fixtures) {
  EXPECT_TRUE(is_primary(intercalate()));
  EXPECT_TRUE(is_primary(example2()));
}

TEST(BitradeFromTau, IntercalateCycleLabels) {
  const auto u = bitrade_from_tau(tau_representation(intercalate()));
  // Row (000,011), column (000,101) holds symbol (000,110) in U-dia and
  // (011,101) in U-oti.
  const Label row(Axis::row, "(0:0:0,0:1:1)");
  const Label col(Axis::column, "(0:0:0,1:0:1)");
  EXPECT_EQ(u.t_dia().at(row, col)->value(), "(0:0:0,1:1:0)");
  EXPECT_EQ(u.t_oti().at(row, col)->value(), "(0:1:1,1:0:1)");
  const Label row2(Axis::row, "(1:0:1,1:1:0)");
  const Label col2(Axis::column, "(0:1:1,1:1:0)");
  EXPECT_EQ(u.t_dia().at(row2, col2)->value(), "(0:0:0,1:1:0)");
  EXPECT_EQ(u.t_oti().at(row2, col2)->value(), "(0:1:1,1:0:1)");
}

TEST(BitradeFromTau, Example2CellThroughDart111) {
  const auto u = bitrade_from_tau(tau_representation(example2()));
  const Label row(Axis::row, "(1:1:1,1:4:2,1:2:3)");
  const Label col(Axis::column, "(1:1:1,2:1:3,4:1:2)");
  const auto s = u.t_dia().at(row, col);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->value(), "(1:1:1,4:3:1,3:4:1)");
}

TEST(BitradeFromTau, RoundtripRestoresFixtures) {
  for (const auto &b : {intercalate(), example2(), cyclic_shift_bitrade(3), cyclic_shift_bitrade(4),
                        disjoint_union(intercalate(), relabelled(example2(), "y"))}) {
    const auto t = tau_representation(b);
    EXPECT_EQ(restore_cycle_labels(bitrade_from_tau(t), t), b);
  }
}

TEST(BitradeFromTau, RejectsBrokenConditions) {
  EXPECT_THROW(bitrade_from_tau(chars({{'a', 'b'}}, {{'a', 'b'}}, {})), InvalidInput);
}

TEST(BitradeFromTau, CharDartsGiveTheIntercalateShape) {
  // sigma=(a,b)(c,d), alpha=(a,c)(b,d), phi=(sigma alpha)^-1
  const auto s = Permutation<char>::from_cycles({{'a', 'b'}, {'c', 'd'}});
  const auto a = Permutation<char>::from_cycles({{'a', 'c'}, {'b', 'd'}});
  const TauRep<char> t({s, a, (s * a).inverse()});
  ASSERT_TRUE(t.t_status().all());
  const auto b = bitrade_from_tau(t);
  EXPECT_EQ(b.size(), 4u);
  EXPECT_TRUE(is_k_homogeneous(b, 2));
}
