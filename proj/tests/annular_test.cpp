#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "doctest.h"
#include "fluct/annular.hpp"
#include "fluct/combinatorics.hpp"
#include "fluct/composition.hpp"

using namespace fluct;

namespace {

Permutation P(const char* text, int n) { return Permutation::parse(text, n); }

std::vector<Permutation> all_perms(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// c_{p,q} = 2pq/(p+q) C(2p-1,p) C(2q-1,q).
mpz_class snc_closed(int p, int q) {
  mpq_class v(2 * p * q, p + q);
  v *= mpz_class(binomial(2 * p - 1, p)) * mpz_class(binomial(2 * q - 1, q));
  v.canonicalize();
  REQUIRE(v.get_den() == 1);
  return v.get_num();
}

// Sum of #(pi) over NC(n), counted by brute force over S_n.
long cycles_over_nc(int n) {
  long s = 0;
  const auto g = Permutation::full_cycle(n);
  for (const auto& a : all_perms(n)) {
    if (a.length() + (a.inverse() * g).length() == g.length()) s += a.cycle_count();
  }
  return s;
}

struct BoundGuard {
  int saved = enumeration_bound();
  ~BoundGuard() { set_enumeration_bound(saved); }
};

}  // namespace

TEST_CASE("disc non-crossing membership") {
  CHECK(is_nc_disc(Permutation::identity(5)));
  CHECK(is_nc_disc(Permutation::full_cycle(5)));
  CHECK_FALSE(is_nc_disc(P("(1,3)(2,4)", 4)));
  CHECK_FALSE(is_nc_disc(P("(1,3,2)", 3)));
}

TEST_CASE("NC(n) sizes are Catalan numbers") {
  CHECK(enumerate_nc(1).size() == 1);
  CHECK(enumerate_nc(3).size() == 5);
  CHECK(enumerate_nc(4).size() == 14);
  for (int n = 1; n <= 8; ++n) {
    CHECK(enumerate_nc(n).size() == static_cast<std::size_t>(catalan(n)));
  }
  const auto& nc4 = enumerate_nc(4);
  CHECK(std::is_sorted(nc4.begin(), nc4.end()));
}

TEST_CASE("annular membership") {
  const AnnulusShape s84(8, 4);
  CHECK(is_snc(P("(1,2,12,9,8)(3,4)(5,10,11)(6)(7)", 12), s84));
  CHECK_FALSE(is_snc(P("(1,2)(3,4)", 4), AnnulusShape(2, 2)));
  CHECK(is_nc_product(P("(1,2)(3,4)", 4), AnnulusShape(2, 2)));
  CHECK(has_through_cycle(P("(1,3)(2,4)", 4), 2));
  CHECK_THROWS_AS(is_snc(Permutation::identity(3), AnnulusShape(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(AnnulusShape(0, 2), std::invalid_argument);
}

TEST_CASE("S_NC(2,1) is the four diagrams") {
  const std::vector<Permutation> expected{P("(1)(2,3)", 3), P("(1,2,3)", 3), P("(1,3,2)", 3),
                                          P("(1,3)(2)", 3)};
  CHECK(enumerate_snc(AnnulusShape(2, 1)) == expected);
  CHECK(enumerate_snc(AnnulusShape(1, 1)) == std::vector<Permutation>{P("(1,2)", 2)});
}

TEST_CASE("S_NC counts match the closed form") {
  for (int total = 2; total <= 8; ++total) {
    for (int p = 1; p < total; ++p) {
      const int q = total - p;
      CAPTURE(p);
      CAPTURE(q);
      CHECK(mpz_class(enumerate_snc(AnnulusShape(p, q)).size()) == snc_closed(p, q));
    }
  }
  CHECK(enumerate_snc(AnnulusShape(2, 2)).size() == 18);
  CHECK(enumerate_snc(AnnulusShape(3, 3)).size() == 300);
  CHECK(enumerate_snc(AnnulusShape(4, 4)).size() == 4900);
}

TEST_CASE("S_NC agrees with a brute filter of S_n") {
  for (int total = 2; total <= 6; ++total) {
    for (int p = 1; p < total; ++p) {
      const AnnulusShape shape(p, total - p);
      const auto g = shape.gamma();
      std::vector<Permutation> brute;
      for (const auto& a : all_perms(total)) {
        if (has_through_cycle(a, p) &&
            a.cycle_count() + (a.inverse() * g).cycle_count() == total) {
          brute.push_back(a);
        }
      }
      CHECK(enumerate_snc(shape) == brute);
    }
  }
}

TEST_CASE("PS_NC(1,1) and the tunnel part of PS_NC(2,1)") {
  const auto& ps11 = enumerate_psnc(AnnulusShape(1, 1));
  REQUIRE(ps11.size() == 2);
  CHECK(ps11[0] == PartitionedPermutation(SetPartition::whole(2), P("(1,2)", 2)));
  CHECK(ps11[1] == PartitionedPermutation(SetPartition::whole(2), Permutation::identity(2)));

  const AnnulusShape s21(2, 1);
  const auto& ps21 = enumerate_psnc(s21);
  CHECK(ps21.size() == 7);
  CHECK(psnc_disc_count(s21) == 4);
  std::set<PartitionedPermutation> tunnels(ps21.begin() + 4, ps21.end());
  const std::set<PartitionedPermutation> expected{
      PartitionedPermutation(SetPartition::whole(3), Permutation::annular_cycle(2, 1)),
      PartitionedPermutation(SetPartition(3, {{1, 3}, {2}}), Permutation::identity(3)),
      PartitionedPermutation(SetPartition(3, {{1}, {2, 3}}), Permutation::identity(3))};
  CHECK(tunnels == expected);
}

TEST_CASE("PS_NC sizes") {
  for (int total = 2; total <= 7; ++total) {
    for (int p = 1; p < total; ++p) {
      const int q = total - p;
      const AnnulusShape shape(p, q);
      const auto& ps = enumerate_psnc(shape);
      const long tunnels = cycles_over_nc(p) * cycles_over_nc(q);
      CHECK(ps.size() == enumerate_snc(shape).size() + static_cast<std::size_t>(tunnels));
      for (std::size_t k = 0; k < ps.size(); ++k) {
        CHECK(ps[k].is_disc() == (k < psnc_disc_count(shape)));
        CHECK(is_psnc(ps[k], shape));
        CHECK(ps[k].length() <= total);
      }
    }
  }
}

TEST_CASE("partitioned permutations") {
  CHECK_THROWS_AS(PartitionedPermutation(SetPartition(3, {{1}, {2, 3}}), P("(1,2)", 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(PartitionedPermutation(SetPartition::whole(2), Permutation::identity(3)),
                  std::invalid_argument);
  const PartitionedPermutation t(SetPartition::whole(3), Permutation::annular_cycle(2, 1));
  CHECK(t.length() == 3);
  CHECK_FALSE(t.is_disc());
  CHECK(PartitionedPermutation::disc(P("(1,3)", 3)).length() == 1);
  const AnnulusShape s22(2, 2);
  CHECK(is_psnc(PartitionedPermutation(SetPartition::whole(4), P("(1,2)(3,4)", 4)), s22));
  CHECK_FALSE(is_psnc(PartitionedPermutation(SetPartition::whole(4), Permutation::identity(4)), s22));
  CHECK_FALSE(is_psnc(PartitionedPermutation(SetPartition(4, {{1, 3}, {2, 4}}), Permutation::identity(4)), s22));
}

TEST_CASE("pairings") {
  const std::vector<std::pair<AnnulusShape, std::size_t>> golden{
      {{1, 1}, 1}, {{1, 3}, 3}, {{2, 2}, 2}, {{1, 5}, 10}, {{2, 4}, 8},
      {{3, 3}, 12}, {{1, 7}, 35}, {{2, 6}, 30}, {{3, 5}, 45}, {{4, 4}, 36}};
  for (const auto& [shape, count] : golden) {
    CAPTURE(shape.to_string());
    const auto& pairings = enumerate_snc_pairings(shape);
    CHECK(pairings.size() == count);
    std::size_t brute = 0;
    for (const auto& a : enumerate_snc(shape)) {
      brute += std::all_of(a.cycles().begin(), a.cycles().end(),
                           [](const auto& c) { return c.size() == 2; });
    }
    CHECK(brute == count);
  }
  CHECK(enumerate_snc_pairings(AnnulusShape(1, 2)).empty());
}

TEST_CASE("enumeration bound") {
  BoundGuard guard;
  set_enumeration_bound(5);
  CHECK_THROWS_AS(enumerate_nc(6), BoundExceeded);
  CHECK_THROWS_AS(enumerate_snc(AnnulusShape(3, 3)), BoundExceeded);
  CHECK_NOTHROW(enumerate_nc(5));
}

TEST_CASE("fattening") {
  const Composition c234({2, 3, 4});
  CHECK(fatten(P("(1,3)(2)", 3), c234).to_string() == "(1,2,6,7,8,9)(3,4,5)");
  const Composition ones({1, 1, 1, 1});
  for (const auto& a : enumerate_nc(4)) CHECK(fatten(a, ones) == a);
  CHECK_THROWS_AS(fatten(Permutation::identity(2), c234), std::invalid_argument);
  CHECK(fatten(Permutation::identity(3), c234) == tau_of(c234));
}

TEST_CASE("tau of a composition") {
  CHECK(tau_of(Composition({3, 2, 4, 2, 1})).to_string() == "(1,2,3)(4,5)(6,7,8,9)(10,11)(12)");
  CHECK(tau_of(Composition({1, 1, 1})).is_identity());
  CHECK(tau_of(Composition({2, 2})).to_string() == "(1,2)(3,4)");
}

TEST_CASE("compositions") {
  CHECK_THROWS_AS(Composition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({2, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Composition({2, 1}).split(), std::logic_error);
  const Composition c({3, 2, 4, 2, 1}, 3);
  CHECK(c.to_string() == "(3,2,4|2,1)");
  CHECK(c.outer_total() == 9);
  CHECK(c.inner_total() == 3);
  CHECK(c.cut_points() == std::vector<int>{3, 5, 9, 11, 12});
  CHECK(c.part_of(6) == 3);
  CHECK(compositions_of(5).size() == 16);
  // Outer and inner compositions chosen independently.
  CHECK(split_compositions_of(AnnulusShape(3, 2)).size() == 4 * 2);
  std::size_t by_total = 0;
  for (int p = 1; p < 6; ++p) by_total += split_compositions_of(AnnulusShape(p, 6 - p)).size();
  CHECK(split_compositions_of(6).size() == by_total);
}

TEST_CASE("main summand filter") {
  const AnnulusShape s22(2, 2);
  const Composition c({2, 2}, 1);
  CHECK(main_summand_filter(s22, c, PartitionedPermutation::disc(P("(1,3)(2,4)", 4))));
  CHECK_FALSE(main_summand_filter(s22, c, PartitionedPermutation::disc(P("(1,4)(2,3)", 4))));
  CHECK_THROWS_AS(main_summand_filter(s22, Composition({2, 2}), PartitionedPermutation::disc(P("(1,3)(2,4)", 4))),
                  std::invalid_argument);
  CHECK_THROWS_AS(main_summand_filter(AnnulusShape(3, 1), c, PartitionedPermutation::disc(P("(1,3)(2,4)", 4))),
                  std::invalid_argument);
}

TEST_CASE("all-ones composition keeps only the top element") {
  for (int total = 2; total <= 6; ++total) {
    for (int p = 1; p < total; ++p) {
      const AnnulusShape shape(p, total - p);
      const Composition ones(std::vector<int>(static_cast<std::size_t>(total), 1), p);
      const PartitionedPermutation top(SetPartition::whole(total), shape.gamma());
      for (const auto& vp : enumerate_psnc(shape)) {
        CHECK(main_summand_filter(shape, ones, vp) == (vp == top));
      }
    }
  }
}

TEST_CASE("products of partitioned permutations") {
  const auto e2 = PartitionedPermutation::disc(Permutation::identity(2));
  const PartitionedPermutation vp(SetPartition::whole(2), Permutation::identity(2));
  CHECK(pp_product(vp, e2) == vp);

  const auto s = P("(1,2)", 2);
  const auto k = s.inverse() * Permutation::annular_cycle(1, 1);
  const auto prod = pp_product(PartitionedPermutation::disc(s), PartitionedPermutation::disc(k));
  REQUIRE(prod.has_value());
  CHECK(*prod == vp);

  const auto g3 = PartitionedPermutation::disc(Permutation::full_cycle(3));
  CHECK_FALSE(pp_product(g3, g3).has_value());
}

TEST_CASE("order on PS_NC(2,1)") {
  const PartitionedPermutation low(SetPartition(3, {{1, 3}, {2}}), Permutation::identity(3));
  const PartitionedPermutation top(SetPartition::whole(3), Permutation::annular_cycle(2, 1));
  CHECK(pp_leq(low, top));
  CHECK_FALSE(pp_leq(top, low));
  CHECK(pp_leq(low, low));
}

TEST_CASE("every element of PS_NC lies below the top") {
  for (int total = 2; total <= 6; ++total) {
    for (int p = 1; p < total; ++p) {
      const AnnulusShape shape(p, total - p);
      const PartitionedPermutation top(SetPartition::whole(total), shape.gamma());
      for (const auto& vp : enumerate_psnc(shape)) CHECK(pp_leq(vp, top));
    }
  }
}
