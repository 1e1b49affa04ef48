#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fluct {

/// A permutation of the ground set [n] = {1, ..., n}.
///
/// Values are immutable; the cycle decomposition is computed once on
/// construction and kept in canonical form: every cycle starts at its least
/// element and cycles are ordered by that element.
///
/// Products act right to left: (a * b)(i) = a(b(i)). Every expression of the
/// form pi^-1 gamma in this library is evaluated under that convention.
class Permutation {
 public:
  using Cycle = std::vector<int>;

  /// Builds the permutation i -> images[i - 1]. Throws std::invalid_argument
  /// unless images is a bijection of [n] with n >= 1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// gamma_n = (1, 2, ..., n).
  static Permutation full_cycle(int n);
  /// gamma_{p,q} = (1, ..., p)(p + 1, ..., p + q).
  static Permutation annular_cycle(int p, int q);
  /// Cycles not mentioned are fixed points.
  static Permutation from_cycles(int n, const std::vector<Cycle>& cycles);
  /// Parses cycle notation such as "(1,2,12,9,8)(3,4)(5,10,11)(6)(7)".
  /// Whitespace is ignored. When n is 0 the size is the largest point named.
  static Permutation parse(std::string_view text, int n = 0);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  const std::vector<Cycle>& cycles() const { return cycles_; }
  int cycle_count() const { return static_cast<int>(cycles_.size()); }
  /// Index into cycles() of the cycle containing point i.
  int cycle_of(int i) const { return cycle_index_[static_cast<std::size_t>(i - 1)]; }

  /// Distance to the identity: n - #(pi).
  int length() const { return size() - cycle_count(); }
  bool is_identity() const { return cycle_count() == size(); }

  Permutation inverse() const;

  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  /// Lexicographic on the one-line image.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
  std::vector<Cycle> cycles_;
  std::vector<int> cycle_index_;
};

/// (a * b)(i) = a(b(i)). Throws std::invalid_argument on a size mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

/// |pi| = n - #(pi).
inline int metric_length(const Permutation& a) { return a.length(); }

/// The order induced by the metric: |a| + |a^-1 b| = |b|.
bool metric_leq(const Permutation& a, const Permutation& b);

/// a * b placed side by side: a acts on [1, a.size()], b on the following
/// b.size() points.
Permutation direct_sum(const Permutation& a, const Permutation& b);

/// pi|_N together with its point set. `perm` acts on {1, ..., |N|}, where
/// label k stands for the k-th smallest element of `points`.
struct Restriction {
  std::vector<int> points;
  Permutation perm;

  /// The induced map on the original labels.
  int at(int point) const;
};

/// First-return restriction of a to the nonempty set N: a point of N is sent
/// to the first element of N on its forward orbit. Throws
/// std::invalid_argument if N is empty or leaves [n].
Restriction restrict_to(const Permutation& a, std::span<const int> points);

/// True iff no cycle of a contains two points of N.
bool separates_points(const Permutation& a, std::span<const int> points);

/// True iff a maps N onto itself.
bool leaves_invariant(const Permutation& a, std::span<const int> points);

std::ostream& operator<<(std::ostream& os, const Permutation& a);

}  // namespace fluct
