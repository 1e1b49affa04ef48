#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fluct/permutation.hpp"

namespace fluct {

/// The (p, q)-annulus: points 1..p on the outer circle, p+1..p+q on the
/// inner one.
class AnnulusShape {
 public:
  /// Throws std::invalid_argument unless p, q >= 1.
  AnnulusShape(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int total() const { return p_ + q_; }
  bool on_outer(int i) const { return i <= p_; }

  /// gamma_{p,q}.
  Permutation gamma() const { return Permutation::annular_cycle(p_, q_); }

  std::string to_string() const;

  friend auto operator<=>(const AnnulusShape&, const AnnulusShape&) = default;

 private:
  int p_;
  int q_;
};

/// A composition n_1, ..., n_{r+s} of the letters of a word into consecutive
/// groups. An annular composition also carries the split r: the first r
/// groups sit on the outer circle and the remaining s on the inner one.
class Composition {
 public:
  /// Disc composition. Throws std::invalid_argument if any part is < 1.
  explicit Composition(std::vector<int> parts);
  /// Annular composition; requires 1 <= split < parts.size().
  Composition(std::vector<int> parts, int split);

  const std::vector<int>& parts() const { return parts_; }
  int count() const { return static_cast<int>(parts_.size()); }
  int total() const { return prefix_.back(); }

  bool has_split() const { return split_ > 0; }
  /// r. Throws std::logic_error for a disc composition.
  int split() const;
  int outer_count() const { return split(); }
  int inner_count() const { return count() - split(); }
  /// p = n_1 + ... + n_r.
  int outer_total() const { return prefix_[static_cast<std::size_t>(split())]; }
  /// q = n_{r+1} + ... + n_{r+s}.
  int inner_total() const { return total() - outer_total(); }
  AnnulusShape shape() const { return AnnulusShape(outer_total(), inner_total()); }

  /// psi(i) = n_1 + ... + n_i for 0 <= i <= count().
  int cut_point(int i) const { return prefix_[static_cast<std::size_t>(i)]; }
  /// N = {psi(1), ..., psi(r + s)}.
  std::vector<int> cut_points() const;
  /// The group (1-based) containing letter j.
  int part_of(int j) const;

  /// "(2,3,4)" or "(2,3|4)".
  std::string to_string() const;

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_ && a.split_ == b.split_;
  }

 private:
  std::vector<int> parts_;
  std::vector<int> prefix_;
  int split_ = 0;
};

/// All 2^(n-1) compositions of n, in lexicographic order of the parts.
std::vector<Composition> compositions_of(int n);

/// Every annular composition with outer total p and inner total q.
std::vector<Composition> split_compositions_of(const AnnulusShape& shape);

/// Every annular composition of the given total (all shapes p + q = total).
std::vector<Composition> split_compositions_of(int total);

}  // namespace fluct
