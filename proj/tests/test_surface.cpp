#include <gtest/gtest.h>

#include <latintrade/latintrade.hpp>

using namespace latintrade;

namespace {

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

TEST(Hypermap, BipartiteGraphExample) {
  const auto s = Permutation<char>::from_cycles({{'a', 'b'}, {'c', 'd'}});
  const auto a = Permutation<char>::from_cycles({{'a', 'c'}, {'b', 'd'}});
  const auto h = hypermap_from_tau(TauRep<char>({s, a, (s * a).inverse()}));
  EXPECT_EQ(h.black_vertices().size(), 2u);
  EXPECT_EQ(h.white_vertices().size(), 2u);
  EXPECT_EQ(h.edges.size(), 4u);
}

TEST(Hypermap, IntercalateHasTheSameShape) {
  const auto h = hypermap_from_tau(tau_representation(intercalate()));
  EXPECT_EQ(h.black_vertices().size(), 2u);
  EXPECT_EQ(h.white_vertices().size(), 2u);
  EXPECT_EQ(h.edges.size(), 4u);
  EXPECT_NE(to_dot(h).find("graph"), std::string::npos);
}

TEST(Hypermap, RejectsT2Violation) {
  const auto s = Permutation<char>::from_cycles({{'a', 'b', 'c'}});
  const TauRep<char> t({s, s.inverse(), (s * s.inverse()).inverse()});
  EXPECT_FALSE(t.t_status().t2);
  EXPECT_THROW(hypermap_from_tau(t), InvalidInput);
}

TEST(Faces, CountsMatchThirdPermutation) {
  EXPECT_EQ(faces(tau_representation(intercalate())).size(), 2u);
  EXPECT_EQ(faces(tau_representation(example2())).size(), 4u);
  EXPECT_TRUE(faces(TauRep<char>({Permutation<char>{}, Permutation<char>{}, Permutation<char>{}})).empty());
}

TEST(Genus, IntercalateIsASphere) {
  const auto g = genus(tau_representation(intercalate()));
  EXPECT_EQ(g.z_sigma, 2u);
  EXPECT_EQ(g.z_alpha, 2u);
  EXPECT_EQ(g.z_phi, 2u);
  EXPECT_EQ(g.omega_size, 4u);
  EXPECT_EQ(g.euler_rhs, 2);
  EXPECT_EQ(g.genus, 0u);
  EXPECT_EQ(g.surface_name, "sphere");
}

TEST(Genus, Example2IsATorus) {
  const auto g = genus(tau_representation(example2()));
  EXPECT_EQ(g.z_sigma, 4u);
  EXPECT_EQ(g.z_alpha, 4u);
  EXPECT_EQ(g.z_phi, 4u);
  EXPECT_EQ(g.omega_size, 12u);
  EXPECT_EQ(g.euler_rhs, 0);
  EXPECT_EQ(g.genus, 1u);
  EXPECT_EQ(g.surface_name, "torus");
}

TEST(Genus, ThreeHomogeneousFamiliesAreTori) {
  for (long long idx = 3; idx <= 12; ++idx) {
    for (const auto &spec : lattice_specs_up_to(idx)) {
      if (spec.index() != idx)
        continue;
      Bitrade b;
      try {
        b = lattice_quotient_bitrade(spec);
      } catch (const InvalidInput &) {
        continue;
      }
      for (const auto &g : genus_per_orbit(tau_representation(b))) {
        EXPECT_EQ(g.z_sigma * 3, g.omega_size);
        EXPECT_EQ(g.genus, 1u);
      }
    }
  }
  EXPECT_EQ(genus(tau_representation(cyclic_shift_bitrade(3))).genus, 1u);
}

TEST(Genus, NamesAndDisconnectedInput) {
  EXPECT_EQ(surface_name(2), "genus-2");
  const auto t = tau_representation(disjoint_union(intercalate(), relabelled(example2(), "z")));
  EXPECT_THROW(genus(t), InvalidInput);
  const auto parts = genus_per_orbit(t);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].genus + parts[1].genus, 1u);
}

TEST(Triangulation, CountsMatchHalves) {
  const auto a = canonical_triangulation(hypermap_from_tau(tau_representation(intercalate())));
  EXPECT_EQ(a.shaded.size(), 4u);
  EXPECT_EQ(a.unshaded.size(), 4u);
  const auto b = canonical_triangulation(hypermap_from_tau(tau_representation(example2())));
  EXPECT_EQ(b.shaded.size(), 12u);
  EXPECT_EQ(b.unshaded.size(), 12u);
}

TEST(Triangulation, UnshadedTrianglesAreTheOtherHalf) {
  for (const auto &b : {intercalate(), example2(), cyclic_shift_bitrade(4)}) {
    const auto t = tau_representation(b);
    const auto tri = canonical_triangulation(hypermap_from_tau(t));
    const auto u = bitrade_from_tau(t);
    std::vector<Entry> keys;
    for (const auto &v : tri.unshaded)
      keys.emplace_back(Label(Axis::row, format_cycle<Entry>(t.tau(0).cycles()[v.black])),
                        Label(Axis::column, format_cycle<Entry>(t.tau(1).cycles()[v.white])),
                        Label(Axis::symbol, format_cycle<Entry>(t.tau(2).cycles()[v.star])));
    std::sort(keys.begin(), keys.end());
    EXPECT_TRUE(std::equal(keys.begin(), keys.end(), u.t_oti().entries().begin(),
                           u.t_oti().entries().end()));
  }
}

TEST(Triangulation, SigmaRotationOfDart000) {
  const auto t = tau_representation(intercalate());
  const auto tri = canonical_triangulation(hypermap_from_tau(t));
  const auto i = static_cast<std::size_t>(
      std::find(tri.darts.begin(), tri.darts.end(), Entry(0, 0, 0)) - tri.darts.begin());
  EXPECT_EQ(tri.darts[tri.rotate_about_black(i)], Entry(0, 1, 1));
}

TEST(Triangulation, RotationsReproduceAllThreePermutations) {
  for (const auto &b : {intercalate(), example2(), cyclic_shift_bitrade(5)}) {
    const auto t = tau_representation(b);
    const auto tri = canonical_triangulation(hypermap_from_tau(t));
    for (std::size_t i = 0; i < tri.darts.size(); ++i) {
      const auto &x = tri.darts[i];
      EXPECT_EQ(tri.darts[tri.rotate_about_black(i)], t.tau(0).image(x));
      EXPECT_EQ(tri.darts[tri.rotate_about_white(i)], t.tau(1).image(x));
      EXPECT_EQ(tri.darts[tri.rotate_about_star(i)], t.tau(2).image(x));
      // Adjacent triangles share the two vertices of their common side.
      const auto &s = tri.shaded[i];
      const auto &bw = tri.unshaded[tri.shaded_sides[i].black_white];
      const auto &ws = tri.unshaded[tri.shaded_sides[i].white_star];
      const auto &bs = tri.unshaded[tri.shaded_sides[i].black_star];
      EXPECT_TRUE(bw.black == s.black && bw.white == s.white);
      EXPECT_TRUE(ws.white == s.white && ws.star == s.star);
      EXPECT_TRUE(bs.black == s.black && bs.star == s.star);
    }
  }
}
