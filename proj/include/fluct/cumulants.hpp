#pragma once

#include <cstddef>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "fluct/annular.hpp"
#include "fluct/composition.hpp"
#include "fluct/permutation.hpp"
#include "fluct/polynomial.hpp"
#include "fluct/spaces.hpp"
#include "fluct/word.hpp"

namespace fluct {

/// Cumulant arguments: one word per slot. Slots are usually single letters;
/// a multi-letter slot stands for the product of its letters.
using Arguments = std::vector<Word>;

namespace detail {
// One cumulant factor: 0-based slot indices in cycle order. `second` is
// empty for a first-order factor.
struct Factor {
  std::vector<int> first;
  std::vector<int> second;
};
using Term = std::vector<Factor>;
}  // namespace detail

/// The letters of w, one per slot.
Arguments letters_of(const Word& w);

/// Multiplies the slots inside each part of comp. Throws
/// std::invalid_argument if the part sizes do not add up to args.size().
Arguments group_arguments(const Arguments& args, const Composition& comp);

/// First- and second-order free cumulants over one space.
///
/// kappa_n solves phi(a_1 ... a_n) = sum over NC(n) of kappa_pi; kappa_{p,q}
/// solves phi2 = sum over PS_NC(p,q) of kappa_(V,pi). Both recursions subtract
/// every term but the top one, and every subtracted term only involves
/// cumulants of smaller order. Cycle arguments are read from the cycle's
/// minimum; a two-cycle block passes the cycle with the smaller minimum first.
///
/// Results are memoized by the literal argument words. The cache is safe for
/// concurrent use; racing writers store equal values.
template <class Scalar>
class CumulantEngine {
 public:
  explicit CumulantEngine(const SecondOrderSpace<Scalar>& space, bool memoize = true);

  const SecondOrderSpace<Scalar>& space() const { return space_; }

  /// kappa_n(a_1, ..., a_n). Throws std::invalid_argument on no arguments.
  Scalar kappa(const Arguments& args);
  /// kappa_{p,q}(a_1, ..., a_p, b_1, ..., b_q). Throws std::invalid_argument
  /// if either group is empty.
  Scalar kappa(const Arguments& first, const Arguments& second);

  /// Product of kappa over the cycles of pi. Throws std::invalid_argument
  /// unless pi is non-crossing on [args.size()].
  Scalar kappa_pi(const Arguments& args, const Permutation& pi);
  /// Product over the blocks of V: kappa_n for a one-cycle block and
  /// kappa_{s,t} for a two-cycle block. Throws std::invalid_argument on a
  /// block holding three or more cycles.
  Scalar kappa_vp(const Arguments& args, const PartitionedPermutation& vp);

  /// Sum of kappa_sigma over sigma in NC(n) with 0_sigma v tau = 1_n.
  Scalar ks_product_cumulant(const Arguments& args, const Composition& comp);
  /// Sum of kappa_(V,pi) over PS_NC(p,q) with pi^-1 gamma_{p,q} separating
  /// the cut points of comp.
  Scalar main_product_cumulant(const Arguments& args, const Composition& comp);
  /// main_product_cumulant for several compositions of one shape, sharing
  /// the term table.
  std::vector<Scalar> main_product_cumulants(const Arguments& args,
                                             const std::vector<Composition>& comps);

  /// Sum over NC(n) of kappa_pi: reproduces phi(a_1 ... a_n).
  Scalar moment_from_cumulants(const Arguments& args);
  /// Sum over PS_NC(p,q) of kappa_(V,pi): reproduces phi2.
  Scalar fluctuation_from_cumulants(const Arguments& first, const Arguments& second);

  std::size_t cache_size() const;
  void clear_cache();

 private:
  using Factor = detail::Factor;
  using Term = detail::Term;

  Scalar evaluate(const Arguments& args, const Term& term);
  Scalar evaluate_factor(const Arguments& args, const Factor& f);
  Scalar signature_sum(const Arguments& args, const std::vector<Term>& terms,
                       const std::vector<int>& indices);
  Scalar compute_first(const Arguments& args);
  Scalar compute_second(const Arguments& first, const Arguments& second);
  bool lookup(const std::string& key, Scalar& out) const;
  void store(const std::string& key, const Scalar& value);

  const SecondOrderSpace<Scalar>& space_;
  bool memoize_;
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, Scalar> cache_;
};

extern template class CumulantEngine<Rational>;
extern template class CumulantEngine<Polynomial>;

/// alpha_n as a polynomial in kappa: the sum over NC(n) of the cycle-length
/// monomials.
Polynomial symbolic_phi_expansion(int n);
/// alpha_{p,q} in kappa: the sum over PS_NC(p,q), the two-cycle block giving
/// kappa_{s,t}.
Polynomial symbolic_phi2_expansion(int p, int q);
/// kappa_n as a polynomial in alpha.
Polynomial symbolic_kappa_n(int n);
/// kappa_{p,q} as a polynomial in alpha.
Polynomial symbolic_kappa_pq(int p, int q);

/// |S_NC(p,q)| by enumeration.
Integer snc_count(int p, int q);
/// mu(1_n, gamma_n) = (-1)^(n-1) c_{n-1}, with c_{n-1} = |NC(n-1)| by
/// enumeration (c_0 = 1).
Integer mobius_disc(int n);
/// mu(1_{p+q}, gamma_{p,q}) = (-1)^(p+q) c_{p,q}.
Integer mobius_annular(int p, int q);
/// Left side of the recurrence satisfied by the second-order Moebius
/// function; zero when the recurrence holds.
Integer mobius_recurrence_residual(int p, int q);

/// kappa_{p,q}(u^e_1, ..., u^e_{p+q}) for the Haar unitary. Throws
/// std::invalid_argument unless signs has p + q entries in {-1, 1}.
Rational haar_kappa_pq(int p, int q, const std::vector<int>& signs);
/// p, q even and the signs alternate inside each circle. Pairwise sums
/// e_1 + e_2 = e_3 + e_4 = ... = 0 alone are not enough: (2,4) with
/// signs + - | + - - + has kappa zero.
bool haar_alternating(int p, int q, const std::vector<int>& signs);
/// The predicted value: (-1)^(m+n) c_{m,n} when haar_alternating, else 0.
Integer haar_predicted_kappa(int p, int q, const std::vector<int>& signs);
/// kappa_{2n}(u, u*, ..., u, u*) = (-1)^(n-1) c_{n-1}.
Integer haar_alternating_kappa(int n);

/// sum_k k C(p,k) C(q,k): kappa_{p,q}(x^2, ..., x^2) for the semicircle.
Integer semicircular_square_sum(int p, int q);
/// p C(p+q-1, p), the coefficient of z^p w^q in zw / (1 - z - w)^2.
Integer semicircular_square_closed(int p, int q);
/// The main-theorem sum for slots all equal to x, kept to the terms that
/// survive for the semicircle: disc pairings whose complement separates the
/// cut points. Uses enumerate_snc_pairings, so reaches p + q up to the
/// pairing bound.
Integer semicircular_pairing_main_sum(const Composition& comp);

}  // namespace fluct
