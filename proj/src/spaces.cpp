#include "fluct/spaces.hpp"

#include <stdexcept>

#include "fluct/combinatorics.hpp"

namespace fluct {

namespace {

// Length of a word in the single generator `symbol`, adjoints rejected.
int power_of(const Word& w, char symbol) {
  for (const auto& l : w.letters()) {
    if (l.symbol != symbol || l.exponent != 1) {
      throw std::invalid_argument(std::string("expected a word in ") + symbol + ", got " +
                                  w.to_string());
    }
  }
  return w.size();
}

int unitary_exponent(const Word& w) {
  if (!w.uses_only('u')) throw std::invalid_argument("expected a word in u, u*: " + w.to_string());
  return w.exponent_sum('u');
}

Rational binom(int n, int k) { return Rational(Integer(binomial(n, k))); }

}  // namespace

Rational semicircular_phi(const Word& w) {
  const int n = power_of(w, 'x');
  if (n % 2) return 0;
  return binom(n, n / 2) / (n / 2 + 1);
}

Rational semicircular_phi2(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("semicircular_phi2 needs p, q >= 0");
  if (p == 0 || q == 0 || (p + q) % 2) return 0;
  Rational total = 0;
  for (int k = p % 2 == 0 ? 2 : 1; k <= std::min(p, q); k += 2) {
    total += k * binom(p, (p - k) / 2) * binom(q, (q - k) / 2);
  }
  return total;
}

Rational semicircular_phi2_even_form(int p, int q) {
  if (p < 2 || q < 2 || p % 2 || q % 2) throw std::invalid_argument("even form needs even p, q > 0");
  Rational scale(p * q, 2 * p + 2 * q);
  scale.canonicalize();
  return scale * binom(p, p / 2) * binom(q, q / 2);
}

Rational semicircular_phi2_odd_form(int p, int q) {
  if (p < 1 || q < 1 || p % 2 == 0 || q % 2 == 0) throw std::invalid_argument("odd form needs odd p, q");
  Rational scale((p + 1) * (q + 1), 8 * p + 8 * q);
  scale.canonicalize();
  return scale * binom(p + 1, (p + 1) / 2) * binom(q + 1, (q + 1) / 2);
}

Rational haar_phi(const Word& w) { return unitary_exponent(w) == 0 ? 1 : 0; }

Rational haar_phi2(const Word& a, const Word& b) {
  const int k = unitary_exponent(a);
  const int l = unitary_exponent(b);
  return k == -l ? std::abs(k) : 0;
}

Rational SemicircularSpace::phi2(const Word& a, const Word& b) const {
  return semicircular_phi2(power_of(a, 'x'), power_of(b, 'x'));
}

Polynomial FormalMomentSpace::phi(const Word& w) const {
  const int n = power_of(w, 'a');
  return n == 0 ? Polynomial(1) : Polynomial::symbol(Symbol::alpha(n));
}

Polynomial FormalMomentSpace::phi2(const Word& a, const Word& b) const {
  const int p = power_of(a, 'a');
  const int q = power_of(b, 'a');
  if (p == 0 || q == 0) return Polynomial();
  return Polynomial::symbol(Symbol::alpha(p, q));
}

}  // namespace fluct
