#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "fluct/annular.hpp"
#include "fluct/combinatorics.hpp"
#include "fluct/cumulants.hpp"
#include "fluct/spaces.hpp"

using namespace fluct;

namespace {

Word W(const char* text) { return Word::parse(text); }
Arguments xs(int n) { return letters_of(Word::power('x', n)); }
Arguments as(int n) { return letters_of(Word::power('a', n)); }

Arguments haar_args(const std::vector<int>& signs, std::size_t from, std::size_t to) {
  Arguments out;
  for (std::size_t i = from; i < to; ++i) out.push_back(Word{Letter{'u', signs[i]}});
  return out;
}

// Every sign vector of the given length, as vectors of +-1.
std::vector<std::vector<int>> sign_patterns(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
    out.push_back(s);
  }
  return out;
}

Arguments rotate(Arguments a, std::size_t k) {
  std::rotate(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k % a.size()), a.end());
  return a;
}

Polynomial alpha(int n) { return Polynomial::symbol(Symbol::alpha(n)); }
Polynomial alpha(int s, int t) { return Polynomial::symbol(Symbol::alpha(s, t)); }

}  // namespace

TEST_CASE("first-order cumulants of the semicircle") {
  const SemicircularSpace x;
  CumulantEngine<Rational> e(x);
  CHECK(e.kappa(xs(1)) == 0);
  CHECK(e.kappa(xs(2)) == 1);
  for (int n = 3; n <= 8; ++n) CHECK(e.kappa(xs(n)) == 0);
  CHECK(e.kappa_pi(xs(4), Permutation::parse("(1,2)(3,4)", 4)) == 1);
  CHECK(e.kappa_pi(xs(4), Permutation::full_cycle(4)) == e.kappa(xs(4)));
  CHECK(e.kappa_pi(xs(4), Permutation::identity(4)) == 0);
}

TEST_CASE("second-order cumulants of the semicircle vanish") {
  const SemicircularSpace x;
  CumulantEngine<Rational> e(x);
  for (int p = 1; p <= 5; ++p) {
    for (int q = 1; p + q <= 7; ++q) CHECK(e.kappa(xs(p), xs(q)) == 0);
  }
}

TEST_CASE("Haar first-order cumulants") {
  const HaarUnitarySpace u;
  CumulantEngine<Rational> e(u);
  CHECK(e.kappa(letters_of(W("u u* u u*"))) == -1);
  for (int n = 1; n <= 4; ++n) {
    Arguments args;
    for (int i = 0; i < n; ++i) {
      args.push_back(W("u"));
      args.push_back(W("u*"));
    }
    CHECK(e.kappa(args) == haar_alternating_kappa(n));
    const int sign = n % 2 ? 1 : -1;
    CHECK(haar_alternating_kappa(n) == sign * catalan(n - 1));
  }
  CHECK(e.kappa(letters_of(W("u u u* u*"))) == 0);
}

TEST_CASE("Haar second-order cumulants") {
  CHECK(haar_kappa_pq(1, 1, {1, -1}) == 0);
  CHECK(haar_kappa_pq(2, 2, {1, -1, 1, -1}) == 1);
  CHECK(haar_kappa_pq(2, 2, {1, 1, -1, -1}) == 0);
  CHECK(haar_kappa_pq(2, 4, {1, -1, 1, -1, -1, 1}) == 0);
  CHECK_FALSE(haar_alternating(2, 4, {1, -1, 1, -1, -1, 1}));
  CHECK_THROWS_AS(haar_kappa_pq(1, 1, {1}), std::invalid_argument);
  CHECK_THROWS_AS(haar_kappa_pq(1, 1, {1, 0}), std::invalid_argument);
  for (int total = 2; total <= 6; ++total) {
    for (int p = 1; p < total; ++p) {
      for (const auto& s : sign_patterns(total)) {
        CHECK(haar_kappa_pq(p, total - p, s) == haar_predicted_kappa(p, total - p, s));
      }
    }
  }
}

TEST_CASE("second-order Moebius values") {
  for (int n = 1; n <= 7; ++n) {
    const int sign = n % 2 ? 1 : -1;
    CHECK(mobius_disc(n) == sign * catalan(n - 1));
  }
  CHECK(mobius_annular(1, 1) == 1);
  CHECK(mobius_annular(2, 1) == -4);
  CHECK(mobius_annular(2, 2) == 18);
  CHECK(snc_count(3, 3) == 300);
  for (int total = 2; total <= 7; ++total) {
    for (int p = 1; p < total; ++p) CHECK(mobius_recurrence_residual(p, total - p) == 0);
  }
}

TEST_CASE("low-order cumulants from their defining relations") {
  const SemicircularSpace x;
  const HaarUnitarySpace u;
  CumulantEngine<Rational> ex(x);
  CumulantEngine<Rational> eu(u);
  CHECK(ex.kappa(xs(1), xs(1)) == 0);
  CHECK(eu.kappa({W("u")}, {W("u*")}) == 0);
  CHECK(eu.kappa({W("u u")}, {W("u* u*")}) == 1);
}

TEST_CASE("kappa_{2,1} expanded in moments") {
  const HaarUnitarySpace space;
  CumulantEngine<Rational> e(space);
  const std::vector<Word> choices{W("u"), W("u*"), W("u u"), W("u* u*"), W("u u*")};
  auto phi = [&](const Word& w) { return haar_phi(w); };
  auto phi2 = [&](const Word& a, const Word& b) { return haar_phi2(a, b); };
  for (const auto& a1 : choices) {
    for (const auto& a2 : choices) {
      for (const auto& b : choices) {
        const Rational expected = phi2(a1 + a2, b) - phi(a1) * phi2(a2, b) - phi(a2) * phi2(a1, b) -
                                  phi(a1 + a2 + b) - phi(a1 + b + a2) + 2 * phi(a1) * phi(a2 + b) +
                                  2 * phi(a1 + b) * phi(a2) + 2 * phi(a1 + a2) * phi(b) -
                                  4 * phi(a1) * phi(a2) * phi(b);
        CHECK(e.kappa({a1, a2}, {b}) == expected);
      }
    }
  }
}

TEST_CASE("cumulants over partitioned permutations") {
  const FormalMomentSpace space;
  CumulantEngine<Polynomial> e(space);
  const PartitionedPermutation tunnel(SetPartition::whole(2), Permutation::identity(2));
  CHECK(e.kappa_vp(as(2), tunnel) == e.kappa(as(1), as(1)));
  const PartitionedPermutation t3(SetPartition(3, {{1, 3}, {2}}), Permutation::identity(3));
  CHECK(e.kappa_vp(as(3), t3) == e.kappa(as(1), as(1)) * e.kappa(as(1)));
  const auto disc = PartitionedPermutation::disc(Permutation::parse("(1,3)(2)", 3));
  CHECK(e.kappa_vp(as(3), disc) == e.kappa_pi(as(3), disc.perm()));
  CHECK_THROWS_AS(e.kappa_vp(as(3), PartitionedPermutation(SetPartition::whole(3), Permutation::identity(3))),
                  std::invalid_argument);
  CHECK_THROWS_AS(e.kappa_pi(as(4), Permutation::parse("(1,3)(2,4)", 4)), std::invalid_argument);
  CHECK_THROWS_AS(e.kappa(Arguments{}), std::invalid_argument);
  CHECK_THROWS_AS(e.kappa(as(1), Arguments{}), std::invalid_argument);
}

TEST_CASE("grouping arguments") {
  const auto g = group_arguments(xs(5), Composition({2, 3}));
  REQUIRE(g.size() == 2);
  CHECK(g[0] == Word::power('x', 2));
  CHECK(g[1] == Word::power('x', 3));
  CHECK_THROWS_AS(group_arguments(xs(4), Composition({2, 3})), std::invalid_argument);
}

TEST_CASE("moment-cumulant reconstruction") {
  const SemicircularSpace x;
  const HaarUnitarySpace u;
  const FormalMomentSpace a;
  CumulantEngine<Rational> ex(x);
  CumulantEngine<Rational> eu(u);
  CumulantEngine<Polynomial> ea(a);
  for (int n = 1; n <= 7; ++n) {
    CHECK(ex.moment_from_cumulants(xs(n)) == semicircular_phi(Word::power('x', n)));
    CHECK(ea.moment_from_cumulants(as(n)) == alpha(n));
    for (const auto& s : sign_patterns(n)) {
      const auto args = haar_args(s, 0, s.size());
      CHECK(eu.moment_from_cumulants(args) == haar_phi(concatenate(args)));
    }
  }
  for (int total = 2; total <= 7; ++total) {
    for (int p = 1; p < total; ++p) {
      const int q = total - p;
      CHECK(ex.fluctuation_from_cumulants(xs(p), xs(q)) == semicircular_phi2(p, q));
      CHECK(ea.fluctuation_from_cumulants(as(p), as(q)) == alpha(p, q));
      for (const auto& s : sign_patterns(total)) {
        const auto first = haar_args(s, 0, static_cast<std::size_t>(p));
        const auto second = haar_args(s, static_cast<std::size_t>(p), s.size());
        CHECK(eu.fluctuation_from_cumulants(first, second) ==
              haar_phi2(concatenate(first), concatenate(second)));
      }
    }
  }
}

TEST_CASE("memoized and fresh engines agree") {
  const HaarUnitarySpace u;
  CumulantEngine<Rational> cached(u);
  CumulantEngine<Rational> fresh(u, false);
  for (int total = 2; total <= 6; ++total) {
    for (int p = 1; p < total; ++p) {
      for (const auto& s : sign_patterns(total)) {
        const auto first = haar_args(s, 0, static_cast<std::size_t>(p));
        const auto second = haar_args(s, static_cast<std::size_t>(p), s.size());
        CHECK(cached.kappa(first, second) == fresh.kappa(first, second));
      }
    }
  }
  CHECK(cached.cache_size() > 0);
  CHECK(fresh.cache_size() == 0);
  cached.clear_cache();
  CHECK(cached.cache_size() == 0);
  CHECK(cached.kappa(letters_of(W("u u*"))) == 1);
}

TEST_CASE("second-order cumulants are symmetric and rotation invariant") {
  const HaarUnitarySpace u;
  CumulantEngine<Rational> e(u);
  for (int total = 2; total <= 6; ++total) {
    for (int p = 1; p < total; ++p) {
      for (const auto& s : sign_patterns(total)) {
        const auto first = haar_args(s, 0, static_cast<std::size_t>(p));
        const auto second = haar_args(s, static_cast<std::size_t>(p), s.size());
        const auto value = e.kappa(first, second);
        CHECK(e.kappa(second, first) == value);
        for (std::size_t i = 0; i < first.size(); ++i) {
          for (std::size_t j = 0; j < second.size(); ++j) {
            CHECK(e.kappa(rotate(first, i), rotate(second, j)) == value);
          }
        }
      }
    }
  }
}

TEST_CASE("first-order cumulants are rotation invariant") {
  const HaarUnitarySpace u;
  CumulantEngine<Rational> e(u);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : sign_patterns(n)) {
      const auto args = haar_args(s, 0, s.size());
      for (std::size_t i = 1; i < args.size(); ++i) CHECK(e.kappa(rotate(args, i)) == e.kappa(args));
    }
  }
}

TEST_CASE("product cumulants") {
  const SemicircularSpace x;
  CumulantEngine<Rational> e(x);
  CHECK(e.main_product_cumulant(xs(4), Composition({2, 2}, 1)) == 1);
  CHECK(e.main_product_cumulant(xs(6), Composition({2, 2, 2}, 2)) == 2);
  CHECK(e.kappa({Word::power('x', 2), Word::power('x', 2)}, {Word::power('x', 2)}) == 2);
  CHECK_THROWS_AS(e.main_product_cumulant(xs(4), Composition({2, 2})), std::invalid_argument);

  CHECK(e.ks_product_cumulant(xs(4), Composition({4})) == e.kappa({Word::power('x', 4)}));
  CHECK(e.ks_product_cumulant(xs(4), Composition({1, 1, 1, 1})) == e.kappa(xs(4)));
  CHECK(e.ks_product_cumulant(xs(4), Composition({2, 2})) ==
        e.kappa({Word::power('x', 2), Word::power('x', 2)}));

  const auto comps = split_compositions_of(AnnulusShape(3, 2));
  const auto batch = e.main_product_cumulants(xs(5), comps);
  REQUIRE(batch.size() == comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    CHECK(batch[i] == e.main_product_cumulant(xs(5), comps[i]));
  }
}

TEST_CASE("main theorem on the formal model at small totals") {
  const FormalMomentSpace a;
  CumulantEngine<Polynomial> e(a);
  for (int total = 2; total <= 5; ++total) {
    for (const auto& c : split_compositions_of(total)) {
      CAPTURE(c.to_string());
      const auto g = group_arguments(as(total), c);
      const Arguments outer(g.begin(), g.begin() + c.outer_count());
      const Arguments inner(g.begin() + c.outer_count(), g.end());
      CHECK(e.main_product_cumulant(as(total), c) == e.kappa(outer, inner));
    }
  }
}

TEST_CASE("semicircular square") {
  const std::vector<std::tuple<int, int, int>> golden{{1, 1, 1}, {2, 1, 2}, {2, 2, 6}};
  for (const auto& [p, q, v] : golden) {
    CHECK(semicircular_square_sum(p, q) == v);
    CHECK(semicircular_square_closed(p, q) == v);
  }
  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; q <= 6; ++q) CHECK(semicircular_square_sum(p, q) == semicircular_square_closed(p, q));
  }
  const SemicircularSpace x;
  CumulantEngine<Rational> e(x);
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; p + q <= 5; ++q) {
      const Composition c(std::vector<int>(static_cast<std::size_t>(p + q), 2), p);
      const Integer expected = semicircular_square_closed(p, q);
      CHECK(semicircular_pairing_main_sum(c) == expected);
      CHECK(e.main_product_cumulant(xs(2 * (p + q)), c) == Rational(expected));
    }
  }
}
