#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fluct/composition.hpp"
#include "fluct/permutation.hpp"
#include "fluct/set_partition.hpp"

namespace fluct {

/// A partition V together with a permutation pi whose cycles each lie inside
/// a block of V.
class PartitionedPermutation {
 public:
  /// Throws std::invalid_argument on a size mismatch or if some cycle of
  /// perm straddles two blocks.
  PartitionedPermutation(SetPartition partition, Permutation perm);

  /// (0_pi, pi).
  static PartitionedPermutation disc(Permutation perm);

  const SetPartition& partition() const { return partition_; }
  const Permutation& perm() const { return perm_; }
  int size() const { return perm_.size(); }

  /// |(V, pi)| = 2|V| - |pi|.
  int length() const { return 2 * partition_.length() - perm_.length(); }

  /// V = 0_pi.
  bool is_disc() const { return partition_.block_count() == perm_.cycle_count(); }

  /// Cycles of perm grouped by block, in block order. Each group lists
  /// indices into perm().cycles() in increasing order.
  std::vector<std::vector<int>> cycles_by_block() const;

  std::string to_string() const;

  friend bool operator==(const PartitionedPermutation&, const PartitionedPermutation&) = default;
  friend std::strong_ordering operator<=>(const PartitionedPermutation& a,
                                          const PartitionedPermutation& b) {
    if (auto c = a.perm_ <=> b.perm_; c != 0) return c;
    return a.partition_ <=> b.partition_;
  }

 private:
  SetPartition partition_;
  Permutation perm_;
};

/// Raised when an enumeration is asked for more points than the configured
/// bound allows.
class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Largest n (or p + q) the brute-force enumerators accept. Default 10.
int enumeration_bound();
void set_enumeration_bound(int bound);

/// Largest p + q accepted by enumerate_snc_pairings. Default 16.
int pairing_bound();
void set_pairing_bound(int bound);

/// #(pi) + #(pi^-1 gamma_n) + #(gamma_n) = n + 2.
bool is_nc_disc(const Permutation& a);

/// Some cycle of a meets both [p] and [p+1, n].
bool has_through_cycle(const Permutation& a, int p);

/// a in S_NC(p, q): a through cycle exists and
/// #(a) + #(a^-1 gamma_{p,q}) + #(gamma_{p,q}) = p + q + 2.
/// Throws std::invalid_argument on a size mismatch.
bool is_snc(const Permutation& a, const AnnulusShape& shape);

/// a in NC(p) x NC(q).
bool is_nc_product(const Permutation& a, const AnnulusShape& shape);

/// Annular non-crossing relative to an arbitrary reference permutation with
/// exactly two cycles: a has a cycle meeting both, and
/// #(a) + #(a^-1 ref) + 2 = n + 2. Used for sub-annuli such as the union of
/// two cycles of a Kreweras complement.
bool is_snc_relative(const Permutation& a, const Permutation& ref);

/// (V, pi) in PS_NC(p, q).
bool is_psnc(const PartitionedPermutation& vp, const AnnulusShape& shape);

/// NC(n) in lexicographic order of the one-line image.
const std::vector<Permutation>& enumerate_nc(int n);

/// S_NC(p, q) in lexicographic order of the one-line image.
const std::vector<Permutation>& enumerate_snc(const AnnulusShape& shape);

/// PS_NC(p, q): the disc elements (0_pi, pi) for pi in S_NC(p, q) first, then
/// the tunnel elements ordered by (pi_1, pi_2, marked outer cycle, marked
/// inner cycle).
const std::vector<PartitionedPermutation>& enumerate_psnc(const AnnulusShape& shape);

/// Number of leading disc elements in enumerate_psnc(shape).
std::size_t psnc_disc_count(const AnnulusShape& shape);

/// The pairings in S_NC(p, q) (every cycle of length 2), found by a search
/// over perfect matchings. Reaches shapes far beyond enumerate_snc.
const std::vector<Permutation>& enumerate_snc_pairings(const AnnulusShape& shape);

/// Inflates a permutation of the parts to a permutation of the letters: a
/// letter that is not the last of its part goes to its successor, and the
/// last letter of part k goes to the first letter of part a(k).
/// Throws std::invalid_argument if a.size() != comp.count().
Permutation fatten(const Permutation& a, const Composition& comp);

/// tau: the permutation whose cycles are the consecutive parts.
Permutation tau_of(const Composition& comp);

/// pi^-1 gamma_{p,q} separates the cut points of comp.
/// Throws std::invalid_argument if comp has no split or the sizes disagree.
bool main_summand_filter(const AnnulusShape& shape, const Composition& comp,
                         const PartitionedPermutation& vp);

/// (V, pi) . (U, sigma) = (V v U, pi sigma) when the lengths add up,
/// otherwise nullopt.
std::optional<PartitionedPermutation> pp_product(const PartitionedPermutation& a,
                                                 const PartitionedPermutation& b);

/// a <= b iff a . (0_{pi^-1 sigma}, pi^-1 sigma) = b. No other witness can
/// work, so only this one is tried.
bool pp_leq(const PartitionedPermutation& a, const PartitionedPermutation& b);

}  // namespace fluct
