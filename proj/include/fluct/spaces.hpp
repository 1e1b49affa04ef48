#pragma once

#include <string>

#include "fluct/polynomial.hpp"
#include "fluct/word.hpp"

namespace fluct {

/// A tracial state phi together with a fluctuation moment phi2. Scalar is
/// Rational for concrete models and Polynomial for the formal one.
template <class Scalar>
class SecondOrderSpace {
 public:
  virtual ~SecondOrderSpace() = default;

  /// Short identifier used in reports ("semicircular", "haar", "formal").
  virtual std::string name() const = 0;
  /// phi(unit) = 1.
  virtual Scalar phi(const Word& w) const = 0;
  /// Symmetric; phi2(unit, w) = 0.
  virtual Scalar phi2(const Word& a, const Word& b) const = 0;
};

using NumericSpace = SecondOrderSpace<Rational>;
using FormalSpace = SecondOrderSpace<Polynomial>;

/// phi(x^n): 0 for odd n, the Catalan number c_{n/2} otherwise. Throws
/// std::invalid_argument if w uses a generator other than x or an adjoint.
Rational semicircular_phi(const Word& w);

/// phi2(x^p, x^q) as the sum over k of k C(p, (p-k)/2) C(q, (q-k)/2),
/// the number of non-crossing pairings of the (p, q)-annulus.
Rational semicircular_phi2(int p, int q);
/// Closed form valid for p, q even and positive.
Rational semicircular_phi2_even_form(int p, int q);
/// Closed form valid for p, q odd.
Rational semicircular_phi2_odd_form(int p, int q);

/// 1 if the exponents of u sum to zero, else 0. Throws
/// std::invalid_argument on a generator other than u.
Rational haar_phi(const Word& w);
/// delta_{k,-l} |k| where k, l are the exponent sums.
Rational haar_phi2(const Word& a, const Word& b);

/// The semicircular element x.
class SemicircularSpace final : public NumericSpace {
 public:
  std::string name() const override { return "semicircular"; }
  Rational phi(const Word& w) const override { return semicircular_phi(w); }
  Rational phi2(const Word& a, const Word& b) const override;
};

/// The second-order Haar unitary u (u* is the letter with exponent -1).
class HaarUnitarySpace final : public NumericSpace {
 public:
  std::string name() const override { return "haar"; }
  Rational phi(const Word& w) const override { return haar_phi(w); }
  Rational phi2(const Word& a, const Word& b) const override { return haar_phi2(a, b); }
};

/// A single abstract generator a with phi(a^n) = alpha_n and
/// phi2(a^p, a^q) = alpha_{p,q}.
class FormalMomentSpace final : public FormalSpace {
 public:
  std::string name() const override { return "formal"; }
  Polynomial phi(const Word& w) const override;
  Polynomial phi2(const Word& a, const Word& b) const override;
};

}  // namespace fluct
