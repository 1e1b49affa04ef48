#include "fluct/annular.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace fluct {

namespace {

std::atomic<int> g_enumeration_bound{10};
std::atomic<int> g_pairing_bound{16};

constexpr int kMaxKernelPoints = 32;

// Cycle count of a 0-based permutation array. When `split` > 0 also reports
// whether some cycle meets both [0, split) and [split, n).
int count_cycles(const int* img, int n, int split = 0, bool* through = nullptr) {
  std::array<char, kMaxKernelPoints> seen{};
  int cycles = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++cycles;
    bool outer = false;
    bool inner = false;
    int i = s;
    do {
      seen[static_cast<std::size_t>(i)] = 1;
      (i < split ? outer : inner) = true;
      i = img[i];
    } while (i != s);
    if (through && outer && inner) *through = true;
  }
  return cycles;
}

// #(a) + #(a^-1 ref) for 0-based arrays.
int geodesic_sum(const int* a, const int* ref, int n, int split, bool* through) {
  std::array<int, kMaxKernelPoints> inv{};
  std::array<int, kMaxKernelPoints> comp{};
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(a[i])] = i;
  for (int i = 0; i < n; ++i) comp[static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(ref[i])];
  return count_cycles(a, n, split, through) + count_cycles(comp.data(), n);
}

std::vector<int> zero_based(const Permutation& a) {
  std::vector<int> out(a.images());
  for (int& v : out) --v;
  return out;
}

Permutation from_zero_based(const int* img, int n) {
  std::vector<int> v(img, img + n);
  for (int& x : v) ++x;
  return Permutation(std::move(v));
}

void check_bound(int points, int bound, const char* what) {
  if (points > bound) {
    throw BoundExceeded(std::string(what) + ": " + std::to_string(points) +
                        " points exceeds the configured bound " + std::to_string(bound));
  }
}

template <class Key, class Value, class Make>
const Value& memoized(std::map<Key, std::unique_ptr<const Value>>& table, std::mutex& mu,
                      const Key& key, Make&& make) {
  {
    std::lock_guard lock(mu);
    if (auto it = table.find(key); it != table.end()) return *it->second;
  }
  auto fresh = std::make_unique<const Value>(make());
  std::lock_guard lock(mu);
  auto [it, inserted] = table.try_emplace(key, std::move(fresh));
  return *it->second;
}

std::vector<Permutation> brute_nc(int n) {
  std::vector<int> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 0);
  std::vector<int> gamma(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) gamma[static_cast<std::size_t>(i)] = (i + 1) % n;
  std::vector<Permutation> out;
  do {
    if (geodesic_sum(a.data(), gamma.data(), n, 0, nullptr) == n + 1) {
      out.push_back(from_zero_based(a.data(), n));
    }
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

std::vector<Permutation> brute_snc(const AnnulusShape& shape) {
  const int n = shape.total();
  std::vector<int> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 0);
  const std::vector<int> gamma = zero_based(shape.gamma());
  std::vector<Permutation> out;
  do {
    bool through = false;
    if (geodesic_sum(a.data(), gamma.data(), n, shape.p(), &through) == n && through) {
      out.push_back(from_zero_based(a.data(), n));
    }
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

std::vector<Permutation> search_snc_pairings(const AnnulusShape& shape) {
  const int n = shape.total();
  std::vector<Permutation> out;
  if (n % 2 != 0) return out;
  const std::vector<int> gamma = zero_based(shape.gamma());
  std::vector<int> a(static_cast<std::size_t>(n), -1);
  auto rec = [&](auto&& self) -> void {
    const auto first = std::find(a.begin(), a.end(), -1);
    if (first == a.end()) {
      bool through = false;
      if (geodesic_sum(a.data(), gamma.data(), n, shape.p(), &through) == n && through) {
        out.push_back(from_zero_based(a.data(), n));
      }
      return;
    }
    const int i = static_cast<int>(first - a.begin());
    for (int j = i + 1; j < n; ++j) {
      if (a[static_cast<std::size_t>(j)] != -1) continue;
      a[static_cast<std::size_t>(i)] = j;
      a[static_cast<std::size_t>(j)] = i;
      self(self);
      a[static_cast<std::size_t>(i)] = -1;
      a[static_cast<std::size_t>(j)] = -1;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartitionedPermutation> build_psnc(const AnnulusShape& shape) {
  std::vector<PartitionedPermutation> out;
  for (const auto& pi : enumerate_snc(shape)) out.push_back(PartitionedPermutation::disc(pi));
  for (const auto& outer : enumerate_nc(shape.p())) {
    for (const auto& inner : enumerate_nc(shape.q())) {
      const Permutation pi = direct_sum(outer, inner);
      const int outer_cycles = outer.cycle_count();
      for (int c1 = 0; c1 < outer_cycles; ++c1) {
        for (int c2 = 0; c2 < inner.cycle_count(); ++c2) {
          std::vector<SetPartition::Block> blocks;
          for (int k = 0; k < pi.cycle_count(); ++k) {
            if (k == outer_cycles + c2) continue;
            auto block = pi.cycles()[static_cast<std::size_t>(k)];
            if (k == c1) {
              const auto& extra = pi.cycles()[static_cast<std::size_t>(outer_cycles + c2)];
              block.insert(block.end(), extra.begin(), extra.end());
            }
            blocks.push_back(std::move(block));
          }
          out.emplace_back(SetPartition(shape.total(), std::move(blocks)), pi);
        }
      }
    }
  }
  return out;
}

}  // namespace

PartitionedPermutation::PartitionedPermutation(SetPartition partition, Permutation perm)
    : partition_(std::move(partition)), perm_(std::move(perm)) {
  if (!perm_refines(perm_, partition_)) {
    throw std::invalid_argument("partitioned permutation: a cycle straddles two blocks");
  }
}

PartitionedPermutation PartitionedPermutation::disc(Permutation perm) {
  SetPartition v = orbit_partition(perm);
  return PartitionedPermutation(std::move(v), std::move(perm));
}

std::vector<std::vector<int>> PartitionedPermutation::cycles_by_block() const {
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(partition_.block_count()));
  for (int k = 0; k < perm_.cycle_count(); ++k) {
    const int b = partition_.block_of(perm_.cycles()[static_cast<std::size_t>(k)].front());
    groups[static_cast<std::size_t>(b)].push_back(k);
  }
  return groups;
}

std::string PartitionedPermutation::to_string() const {
  return "(" + partition_.to_string() + ", " + perm_.to_string() + ")";
}

int enumeration_bound() { return g_enumeration_bound.load(); }
void set_enumeration_bound(int bound) {
  if (bound < 1) throw std::invalid_argument("enumeration bound must be positive");
  g_enumeration_bound.store(bound);
}

int pairing_bound() { return g_pairing_bound.load(); }
void set_pairing_bound(int bound) {
  if (bound < 1 || bound > kMaxKernelPoints) {
    throw std::invalid_argument("pairing bound must lie in [1, 32]");
  }
  g_pairing_bound.store(bound);
}

bool is_nc_disc(const Permutation& a) {
  const Permutation complement = compose(a.inverse(), Permutation::full_cycle(a.size()));
  return a.cycle_count() + complement.cycle_count() + 1 == a.size() + 2;
}

bool has_through_cycle(const Permutation& a, int p) {
  for (const auto& c : a.cycles()) {
    const bool outer = std::any_of(c.begin(), c.end(), [p](int x) { return x <= p; });
    const bool inner = std::any_of(c.begin(), c.end(), [p](int x) { return x > p; });
    if (outer && inner) return true;
  }
  return false;
}

bool is_snc(const Permutation& a, const AnnulusShape& shape) {
  if (a.size() != shape.total()) throw std::invalid_argument("is_snc: size mismatch");
  if (!has_through_cycle(a, shape.p())) return false;
  const Permutation complement = compose(a.inverse(), shape.gamma());
  return a.cycle_count() + complement.cycle_count() + 2 == shape.total() + 2;
}

bool is_nc_product(const Permutation& a, const AnnulusShape& shape) {
  if (a.size() != shape.total()) throw std::invalid_argument("is_nc_product: size mismatch");
  for (int i = 1; i <= shape.p(); ++i) {
    if (a(i) > shape.p()) return false;
  }
  const Permutation complement = compose(a.inverse(), shape.gamma());
  // Each circle contributes its own disc identity: (#pi_1 + #K_1) + (#pi_2 + #K_2) = (p+1) + (q+1).
  return a.cycle_count() + complement.cycle_count() == shape.total() + 2;
}

bool is_snc_relative(const Permutation& a, const Permutation& ref) {
  if (a.size() != ref.size()) throw std::invalid_argument("is_snc_relative: size mismatch");
  if (ref.cycle_count() != 2) throw std::invalid_argument("is_snc_relative: reference needs two cycles");
  bool through = false;
  for (const auto& c : a.cycles()) {
    const int side = ref.cycle_of(c.front());
    if (std::any_of(c.begin(), c.end(), [&](int x) { return ref.cycle_of(x) != side; })) {
      through = true;
      break;
    }
  }
  if (!through) return false;
  const Permutation complement = compose(a.inverse(), ref);
  return a.cycle_count() + complement.cycle_count() + 2 == a.size() + 2;
}

bool is_psnc(const PartitionedPermutation& vp, const AnnulusShape& shape) {
  if (vp.size() != shape.total()) return false;
  if (vp.is_disc()) return is_snc(vp.perm(), shape);
  if (!is_nc_product(vp.perm(), shape)) return false;
  int doubled = 0;
  for (const auto& group : vp.cycles_by_block()) {
    if (group.size() == 1) continue;
    if (group.size() != 2) return false;
    const auto& cycles = vp.perm().cycles();
    const bool first_outer = shape.on_outer(cycles[static_cast<std::size_t>(group[0])].front());
    const bool second_outer = shape.on_outer(cycles[static_cast<std::size_t>(group[1])].front());
    if (first_outer == second_outer) return false;
    ++doubled;
  }
  return doubled == 1;
}

const std::vector<Permutation>& enumerate_nc(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_nc needs n >= 1");
  check_bound(n, enumeration_bound(), "enumerate_nc");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const std::vector<Permutation>>> table;
  return memoized(table, mu, n, [n] { return brute_nc(n); });
}

const std::vector<Permutation>& enumerate_snc(const AnnulusShape& shape) {
  check_bound(shape.total(), enumeration_bound(), "enumerate_snc");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<Permutation>>> table;
  return memoized(table, mu, std::pair{shape.p(), shape.q()}, [&] { return brute_snc(shape); });
}

const std::vector<PartitionedPermutation>& enumerate_psnc(const AnnulusShape& shape) {
  check_bound(shape.total(), enumeration_bound(), "enumerate_psnc");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<PartitionedPermutation>>>
      table;
  return memoized(table, mu, std::pair{shape.p(), shape.q()}, [&] { return build_psnc(shape); });
}

std::size_t psnc_disc_count(const AnnulusShape& shape) { return enumerate_snc(shape).size(); }

const std::vector<Permutation>& enumerate_snc_pairings(const AnnulusShape& shape) {
  check_bound(shape.total(), pairing_bound(), "enumerate_snc_pairings");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<Permutation>>> table;
  return memoized(table, mu, std::pair{shape.p(), shape.q()},
                  [&] { return search_snc_pairings(shape); });
}

Permutation fatten(const Permutation& a, const Composition& comp) {
  if (a.size() != comp.count()) throw std::invalid_argument("fatten: size mismatch");
  std::vector<int> img(static_cast<std::size_t>(comp.total()));
  for (int i = 1; i <= comp.total(); ++i) img[static_cast<std::size_t>(i - 1)] = i + 1;
  for (int k = 1; k <= comp.count(); ++k) {
    img[static_cast<std::size_t>(comp.cut_point(k) - 1)] = comp.cut_point(a(k) - 1) + 1;
  }
  return Permutation(std::move(img));
}

Permutation tau_of(const Composition& comp) {
  return fatten(Permutation::identity(comp.count()), comp);
}

bool main_summand_filter(const AnnulusShape& shape, const Composition& comp,
                         const PartitionedPermutation& vp) {
  if (!comp.has_split() || comp.shape() != shape || vp.size() != shape.total()) {
    throw std::invalid_argument("main_summand_filter: inconsistent sizes");
  }
  const Permutation complement = compose(vp.perm().inverse(), shape.gamma());
  const std::vector<int> cuts = comp.cut_points();
  return separates_points(complement, cuts);
}

std::optional<PartitionedPermutation> pp_product(const PartitionedPermutation& a,
                                                 const PartitionedPermutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pp_product: size mismatch");
  SetPartition join = partition_join(a.partition(), b.partition());
  Permutation prod = compose(a.perm(), b.perm());
  if (a.length() + b.length() != 2 * join.length() - prod.length()) return std::nullopt;
  return PartitionedPermutation(std::move(join), std::move(prod));
}

bool pp_leq(const PartitionedPermutation& a, const PartitionedPermutation& b) {
  if (a.size() != b.size()) return false;
  const auto witness = PartitionedPermutation::disc(compose(a.perm().inverse(), b.perm()));
  const auto prod = pp_product(a, witness);
  return prod.has_value() && *prod == b;
}

}  // namespace fluct
