#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace fluct {

using Integer = mpz_class;
using Rational = mpq_class;

/// One of kappa_n, kappa_{s,t}, alpha_n, alpha_{s,t}. Second-order symbols
/// are stored with s <= t: for a single variable kappa_{s,t} = kappa_{t,s}.
class Symbol {
 public:
  enum class Family : std::uint8_t { kappa, alpha };

  static Symbol kappa(int n) { return Symbol(Family::kappa, n, 0); }
  static Symbol kappa(int s, int t) { return second_order(Family::kappa, s, t); }
  static Symbol alpha(int n) { return Symbol(Family::alpha, n, 0); }
  static Symbol alpha(int s, int t) { return second_order(Family::alpha, s, t); }
  /// Inverse of name(): "k2", "k1,3", "a4", "a2,2".
  static Symbol from_name(std::string_view name);

  Family family() const { return family_; }
  int first() const { return first_; }
  /// 0 for a first-order symbol.
  int second() const { return second_; }
  bool is_second_order() const { return second_ > 0; }

  /// "k2", "k1,1", "a3", "a1,2".
  std::string name() const;
  /// "κ_2", "κ_{1,1}".
  std::string text() const;
  /// "\kappa_2", "\kappa_{1,1}".
  std::string latex() const;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;

 private:
  Symbol(Family f, int a, int b);
  static Symbol second_order(Family f, int s, int t);

  Family family_;
  std::uint8_t first_;
  std::uint8_t second_;
};

/// Sparse polynomial with integer coefficients in commuting symbols. The
/// representation is canonical: monomials are sorted multisets of symbols and
/// no stored coefficient is zero.
class Polynomial {
 public:
  using Monomial = std::vector<Symbol>;
  using Terms = std::map<Monomial, Integer>;

  Polynomial() = default;
  Polynomial(long constant);  // NOLINT: integers embed implicitly
  explicit Polynomial(const Integer& constant);
  static Polynomial symbol(Symbol s);
  /// Build from explicit terms; monomials need not be sorted.
  static Polynomial from_terms(const std::vector<std::pair<Integer, Monomial>>& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Coefficient of the monomial (any symbol order); zero when absent.
  Integer coefficient(Monomial m) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Integer& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Integer(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Replaces every symbol by a polynomial and expands.
  Polynomial substitute(const std::function<Polynomial(Symbol)>& value) const;

  /// Terms in table order: monomials carrying a second-order symbol first,
  /// then by largest first-order index, then by number of factors.
  std::vector<std::pair<Integer, Monomial>> ordered_terms() const;

  /// "κ_{1,1} + κ_2", with Unicode superscript powers and minus sign.
  std::string to_text() const;
  /// "\kappa_{1,1} + \kappa_2".
  std::string to_latex() const;
  /// [{"coeff": 1, "monomial": ["k1,1"]}, ...] in table order.
  nlohmann::json to_json() const;

 private:
  void add_term(const Monomial& m, const Integer& c);

  Terms terms_;
};

/// Sorts a list of symbols into a monomial.
Polynomial::Monomial make_monomial(std::vector<Symbol> symbols);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Polynomial& p) { return p.is_zero(); }
inline std::string scalar_to_string(const Rational& r) { return r.get_str(); }
inline std::string scalar_to_string(const Polynomial& p) { return p.to_text(); }

}  // namespace fluct
