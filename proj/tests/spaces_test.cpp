#include <stdexcept>

#include "doctest.h"
#include "fluct/combinatorics.hpp"
#include "fluct/spaces.hpp"

using namespace fluct;

namespace {

Word W(const char* text) { return Word::parse(text); }
Polynomial alpha(int n) { return Polynomial::symbol(Symbol::alpha(n)); }
Polynomial alpha(int s, int t) { return Polynomial::symbol(Symbol::alpha(s, t)); }

}  // namespace

TEST_CASE("words") {
  const auto w = W("u u* u");
  CHECK(w.size() == 3);
  CHECK(w.exponent_sum('u') == 1);
  CHECK(w.to_string() == "u u* u");
  CHECK(W("1").empty());
  CHECK(W("").to_string() == "1");
  CHECK(Word::power('x', 3) == W("x x x"));
  CHECK(W("x x") + W("x") == Word::power('x', 3));
  CHECK(W("xy").uses_only('x') == false);
  CHECK_THROWS_AS(W("X"), std::invalid_argument);
  CHECK_THROWS_AS(Word::power('x', -1), std::invalid_argument);
  std::string key;
  W("u u*").append_key(key);
  CHECK(key == "uU");
}

TEST_CASE("semicircular moments") {
  CHECK(semicircular_phi(Word()) == 1);
  CHECK(semicircular_phi(Word::power('x', 1)) == 0);
  CHECK(semicircular_phi(Word::power('x', 2)) == 1);
  CHECK(semicircular_phi(Word::power('x', 4)) == 2);
  for (int k = 0; k <= 8; ++k) CHECK(semicircular_phi(Word::power('x', 2 * k)) == catalan(k));
  CHECK_THROWS_AS(semicircular_phi(W("y")), std::invalid_argument);
  CHECK_THROWS_AS(semicircular_phi(W("x*")), std::invalid_argument);
}

TEST_CASE("semicircular fluctuation moments") {
  CHECK(semicircular_phi2(1, 2) == 0);
  CHECK(semicircular_phi2(1, 1) == 1);
  CHECK(semicircular_phi2(2, 2) == 2);
  CHECK(semicircular_phi2_odd_form(1, 1) == 1);
  CHECK(semicircular_phi2_even_form(2, 2) == 2);
  for (int p = 1; p <= 9; ++p) {
    for (int q = 1; q <= 9; ++q) {
      if ((p + q) % 2) {
        CHECK(semicircular_phi2(p, q) == 0);
      } else if (p % 2) {
        CHECK(semicircular_phi2(p, q) == semicircular_phi2_odd_form(p, q));
      } else {
        CHECK(semicircular_phi2(p, q) == semicircular_phi2_even_form(p, q));
      }
      CHECK(semicircular_phi2(p, q) == semicircular_phi2(q, p));
    }
  }
  const SemicircularSpace x;
  CHECK(x.phi2(Word(), Word::power('x', 2)) == 0);
  CHECK(x.phi2(Word::power('x', 3), Word::power('x', 1)) == 3);
}

TEST_CASE("Haar moments") {
  CHECK(haar_phi(W("u u*")) == 1);
  CHECK(haar_phi(W("u u")) == 0);
  CHECK(haar_phi(W("u* u u*")) == 0);
  CHECK(haar_phi(Word()) == 1);
  CHECK(haar_phi2(W("u u"), W("u* u*")) == 2);
  CHECK(haar_phi2(W("u"), W("u")) == 0);
  CHECK(haar_phi2(W("u u*"), W("u u*")) == 0);
  CHECK(haar_phi2(W("u* u* u*"), W("u u u")) == 3);
  CHECK_THROWS_AS(haar_phi(W("x")), std::invalid_argument);
}

TEST_CASE("formal moments") {
  const FormalMomentSpace a;
  CHECK(a.phi(Word::power('a', 3)) == alpha(3));
  CHECK(a.phi(Word()) == Polynomial(1));
  CHECK(a.phi2(Word::power('a', 1), Word::power('a', 2)) == alpha(1, 2));
  CHECK(a.phi2(Word::power('a', 2), Word::power('a', 1)) == alpha(1, 2));
  CHECK(a.phi2(Word(), Word::power('a', 2)).is_zero());
  CHECK_THROWS_AS(a.phi(W("x")), std::invalid_argument);
}
