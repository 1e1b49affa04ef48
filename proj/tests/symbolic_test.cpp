#include <string>
#include <vector>

#include "doctest.h"
#include "fluct/cumulants.hpp"

using namespace fluct;

namespace {

Polynomial k(int n) { return Polynomial::symbol(Symbol::kappa(n)); }
Polynomial k(int s, int t) { return Polynomial::symbol(Symbol::kappa(s, t)); }
Polynomial a(int n) { return Polynomial::symbol(Symbol::alpha(n)); }
Polynomial a(int s, int t) { return Polynomial::symbol(Symbol::alpha(s, t)); }

// alpha -> kappa, inverting the expansion.
Polynomial in_kappa(Symbol s) {
  return s.is_second_order() ? symbolic_phi2_expansion(s.first(), s.second())
                             : symbolic_phi_expansion(s.first());
}

}  // namespace

TEST_CASE("second-order moments in cumulants") {
  const std::vector<std::pair<std::pair<int, int>, std::string>> table{
      {{1, 1}, "κ_{1,1} + κ_2"},
      {{1, 2}, "κ_{1,2} + 2κ_1κ_{1,1} + 2κ_3 + 2κ_1κ_2"},
      {{2, 2}, "κ_{2,2} + 4κ_1κ_{1,2} + 4κ_1²κ_{1,1} + 4κ_4 + 8κ_1κ_3 + 2κ_2² + 4κ_1²κ_2"},
      {{1, 3}, "κ_{1,3} + 3κ_1κ_{1,2} + 3κ_2κ_{1,1} + 3κ_1²κ_{1,1} + 3κ_4 + 6κ_1κ_3 + 3κ_2² + 3κ_1²κ_2"},
      {{2, 3},
       "κ_{2,3} + 2κ_1κ_{1,3} + 3κ_1κ_{2,2} + 3κ_2κ_{1,2} + 9κ_1²κ_{1,2} + 6κ_1κ_2κ_{1,1} + "
       "6κ_1³κ_{1,1} + 6κ_5 + 18κ_1κ_4 + 12κ_2κ_3 + 18κ_1²κ_3 + 12κ_1κ_2² + 6κ_1³κ_2"},
      {{3, 3},
       "κ_{3,3} + 6κ_1κ_{2,3} + 6κ_2κ_{1,3} + 6κ_1²κ_{1,3} + 9κ_1²κ_{2,2} + 18κ_1κ_2κ_{1,2} + "
       "18κ_1³κ_{1,2} + 9κ_2²κ_{1,1} + 18κ_1²κ_2κ_{1,1} + 9κ_1⁴κ_{1,1} + 9κ_6 + 36κ_1κ_5 + "
       "27κ_2κ_4 + 54κ_1²κ_4 + 9κ_3² + 72κ_1κ_2κ_3 + 36κ_1³κ_3 + 12κ_2³ + 36κ_1²κ_2² + 9κ_1⁴κ_2"}};
  for (const auto& [pq, text] : table) {
    CAPTURE(pq.first);
    CAPTURE(pq.second);
    CHECK(symbolic_phi2_expansion(pq.first, pq.second).to_text() == text);
  }
  CHECK(symbolic_phi2_expansion(2, 1) == symbolic_phi2_expansion(1, 2));
  CHECK(symbolic_phi2_expansion(1, 1) == k(1, 1) + k(2));
}

TEST_CASE("coefficient sums count PS_NC") {
  // Setting every kappa to 1 counts the elements of PS_NC(p, q).
  const std::vector<std::pair<std::pair<int, int>, int>> sizes{{{1, 1}, 2}, {{2, 1}, 7}};
  for (const auto& [pq, size] : sizes) {
    const auto ones = symbolic_phi2_expansion(pq.first, pq.second).substitute([](Symbol) { return Polynomial(1); });
    CHECK(ones == Polynomial(size));
  }
}

TEST_CASE("first-order moments in cumulants") {
  CHECK(symbolic_phi_expansion(1) == k(1));
  CHECK(symbolic_phi_expansion(2) == k(2) + k(1) * k(1));
  CHECK(symbolic_phi_expansion(3).to_text() == "κ_3 + 3κ_1κ_2 + κ_1³");
  CHECK(symbolic_kappa_n(2) == a(2) - a(1) * a(1));
  CHECK(symbolic_kappa_n(3) == a(3) - Polynomial(3) * a(1) * a(2) + Polynomial(2) * a(1) * a(1) * a(1));
}

TEST_CASE("cumulants in moments") {
  CHECK(symbolic_kappa_pq(1, 1).to_text() == "α_{1,1} − α_2 + α_1²");
  CHECK(symbolic_kappa_pq(1, 1) == a(1, 1) + a(1) * a(1) - a(2));
  CHECK(symbolic_kappa_pq(1, 2).to_text() == "α_{1,2} − 2α_1α_{1,1} − 2α_3 + 6α_1α_2 − 4α_1³");
  CHECK(symbolic_kappa_pq(2, 1) == symbolic_kappa_pq(1, 2));
}

TEST_CASE("the two expansions are inverse") {
  for (int total = 2; total <= 6; ++total) {
    for (int p = 1; p < total; ++p) {
      const int q = total - p;
      CHECK(symbolic_kappa_pq(p, q).substitute(in_kappa) == k(p, q));
    }
  }
  for (int n = 1; n <= 6; ++n) CHECK(symbolic_kappa_n(n).substitute(in_kappa) == k(n));
}
