#include "fluct/cumulants.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "fluct/combinatorics.hpp"

namespace fluct {

using detail::Factor;
using detail::Term;

namespace {

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

std::vector<int> zero_based(const std::vector<int>& cycle) {
  std::vector<int> out(cycle);
  for (int& x : out) --x;
  return out;
}

Term term_of(const Permutation& pi) {
  Term t;
  for (const auto& c : pi.cycles()) t.push_back(Factor{zero_based(c), {}});
  return t;
}

Term term_of(const PartitionedPermutation& vp) {
  Term t;
  const auto& cycles = vp.perm().cycles();
  for (const auto& group : vp.cycles_by_block()) {
    if (group.size() > 2) throw std::invalid_argument("kappa_vp: a block holds more than two cycles");
    Factor f{zero_based(cycles[static_cast<std::size_t>(group[0])]), {}};
    if (group.size() == 2) f.second = zero_based(cycles[static_cast<std::size_t>(group[1])]);
    t.push_back(std::move(f));
  }
  return t;
}

struct TermTable {
  std::vector<Term> terms;
  int top = -1;
};

const TermTable& disc_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const TermTable>> table;
  return memoized(table, mu, n, [n] {
    TermTable t;
    const auto& all = enumerate_nc(n);
    const Permutation gamma = Permutation::full_cycle(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      t.terms.push_back(term_of(all[i]));
      if (all[i] == gamma) t.top = static_cast<int>(i);
    }
    return t;
  });
}

const TermTable& annular_table(const AnnulusShape& shape) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const TermTable>> table;
  return memoized(table, mu, std::pair{shape.p(), shape.q()}, [&shape] {
    TermTable t;
    const auto& all = enumerate_psnc(shape);
    const Permutation gamma = shape.gamma();
    for (std::size_t i = 0; i < all.size(); ++i) {
      t.terms.push_back(term_of(all[i]));
      if (!all[i].is_disc() && all[i].perm() == gamma) t.top = static_cast<int>(i);
    }
    return t;
  });
}

std::vector<int> all_but(std::size_t size, int skip) {
  std::vector<int> out;
  out.reserve(size);
  for (int i = 0; i < static_cast<int>(size); ++i) {
    if (i != skip) out.push_back(i);
  }
  return out;
}

using CompKey = std::pair<std::vector<int>, int>;

CompKey comp_key(const Composition& comp) {
  return {comp.parts(), comp.has_split() ? comp.split() : 0};
}

// Indices into enumerate_nc(n) passing 0_sigma v tau = 1_n.
const std::vector<int>& ks_indices(const Composition& comp) {
  static std::mutex mu;
  static std::map<CompKey, std::unique_ptr<const std::vector<int>>> table;
  return memoized(table, mu, comp_key(comp), [&comp] {
    const int n = comp.total();
    const SetPartition tau = orbit_partition(tau_of(comp));
    const SetPartition whole = SetPartition::whole(n);
    std::vector<int> out;
    const auto& all = enumerate_nc(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (partition_join(orbit_partition(all[i]), tau) == whole) out.push_back(static_cast<int>(i));
    }
    return out;
  });
}

// Indices into enumerate_psnc(shape) passing the separation filter.
const std::vector<int>& main_indices(const Composition& comp) {
  static std::mutex mu;
  static std::map<CompKey, std::unique_ptr<const std::vector<int>>> table;
  return memoized(table, mu, comp_key(comp), [&comp] {
    const AnnulusShape shape = comp.shape();
    std::vector<int> out;
    const auto& all = enumerate_psnc(shape);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (main_summand_filter(shape, comp, all[i])) out.push_back(static_cast<int>(i));
    }
    return out;
  });
}

std::vector<std::string> slot_keys(const Arguments& args) {
  std::vector<std::string> keys(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) args[i].append_key(keys[i]);
  return keys;
}

void append_slots(std::string& out, const std::vector<std::string>& keys, const std::vector<int>& idx) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ',';
    out += keys[static_cast<std::size_t>(idx[k])];
  }
}

std::string factor_key(const std::vector<std::string>& keys, const Factor& f) {
  std::string out = f.second.empty() ? "1:" : "2:";
  append_slots(out, keys, f.first);
  if (!f.second.empty()) {
    out += '|';
    append_slots(out, keys, f.second);
  }
  return out;
}

std::string first_key(const Arguments& args) {
  std::string out = "1:";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    args[i].append_key(out);
  }
  return out;
}

std::string second_key(const Arguments& first, const Arguments& second) {
  std::string out = "2:";
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (i) out += ',';
    first[i].append_key(out);
  }
  out += '|';
  for (std::size_t i = 0; i < second.size(); ++i) {
    if (i) out += ',';
    second[i].append_key(out);
  }
  return out;
}

Arguments pick(const Arguments& args, const std::vector<int>& idx) {
  Arguments out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(args[static_cast<std::size_t>(i)]);
  return out;
}

// Groups the terms by their multiset of factor keys: equal multisets have
// equal values.
struct Signatures {
  std::vector<int> of_term;
  std::vector<int> representative;
};

Signatures signatures(const Arguments& args, const std::vector<Term>& terms,
                      const std::vector<int>& indices) {
  const auto keys = slot_keys(args);
  Signatures s;
  s.of_term.assign(terms.size(), -1);
  std::map<std::string, int> ids;
  std::vector<std::string> factor_keys;
  for (int i : indices) {
    const Term& t = terms[static_cast<std::size_t>(i)];
    factor_keys.clear();
    for (const auto& f : t) factor_keys.push_back(factor_key(keys, f));
    std::sort(factor_keys.begin(), factor_keys.end());
    std::string sig;
    for (const auto& k : factor_keys) {
      sig += k;
      sig += ';';
    }
    auto [it, inserted] = ids.try_emplace(std::move(sig), static_cast<int>(s.representative.size()));
    if (inserted) s.representative.push_back(i);
    s.of_term[static_cast<std::size_t>(i)] = it->second;
  }
  return s;
}

void check_shape(const Arguments& args, const Composition& comp) {
  if (comp.total() != static_cast<int>(args.size())) {
    throw std::invalid_argument("composition total " + std::to_string(comp.total()) +
                                " does not match " + std::to_string(args.size()) + " arguments");
  }
}

}  // namespace

Arguments letters_of(const Word& w) { return w.split_letters(); }

Arguments group_arguments(const Arguments& args, const Composition& comp) {
  check_shape(args, comp);
  Arguments out;
  std::size_t next = 0;
  for (int part : comp.parts()) {
    Word w;
    for (int k = 0; k < part; ++k) w.append(args[next++]);
    out.push_back(std::move(w));
  }
  return out;
}

template <class Scalar>
CumulantEngine<Scalar>::CumulantEngine(const SecondOrderSpace<Scalar>& space, bool memoize)
    : space_(space), memoize_(memoize) {}

template <class Scalar>
bool CumulantEngine<Scalar>::lookup(const std::string& key, Scalar& out) const {
  if (!memoize_) return false;
  std::shared_lock lock(mu_);
  auto it = cache_.find(key);
  if (it == cache_.end()) return false;
  out = it->second;
  return true;
}

template <class Scalar>
void CumulantEngine<Scalar>::store(const std::string& key, const Scalar& value) {
  if (!memoize_) return;
  std::unique_lock lock(mu_);
  cache_.try_emplace(key, value);
}

template <class Scalar>
std::size_t CumulantEngine<Scalar>::cache_size() const {
  std::shared_lock lock(mu_);
  return cache_.size();
}

template <class Scalar>
void CumulantEngine<Scalar>::clear_cache() {
  std::unique_lock lock(mu_);
  cache_.clear();
}

template <class Scalar>
Scalar CumulantEngine<Scalar>::evaluate_factor(const Arguments& args, const Factor& f) {
  if (f.second.empty()) return kappa(pick(args, f.first));
  return kappa(pick(args, f.first), pick(args, f.second));
}

template <class Scalar>
Scalar CumulantEngine<Scalar>::evaluate(const Arguments& args, const Term& term) {
  Scalar product(1);
  for (const auto& f : term) {
    Scalar v = evaluate_factor(args, f);
    if (is_zero(v)) return Scalar();
    product *= v;
  }
  return product;
}

template <class Scalar>
Scalar CumulantEngine<Scalar>::signature_sum(const Arguments& args, const std::vector<Term>& terms,
                                             const std::vector<int>& indices) {
  const Signatures sig = signatures(args, terms, indices);
  std::vector<long> count(sig.representative.size(), 0);
  for (int i : indices) ++count[static_cast<std::size_t>(sig.of_term[static_cast<std::size_t>(i)])];
  Scalar total;
  for (std::size_t s = 0; s < sig.representative.size(); ++s) {
    Scalar v = evaluate(args, terms[static_cast<std::size_t>(sig.representative[s])]);
    if (is_zero(v)) continue;
    v *= Integer(count[s]);
    total += v;
  }
  return total;
}

template <class Scalar>
Scalar CumulantEngine<Scalar>::kappa(const Arguments& args) {
  if (args.empty()) throw std::invalid_argument("kappa_n needs at least one argument");
  const std::string key = first_key(args);
  Scalar value;
  if (lookup(key, value)) return value;
  value = compute_first(args);
  store(key, value);
  return value;
}

template <class Scalar>
Scalar CumulantEngine<Scalar>::compute_first(const Arguments& args) {
  Scalar value = space_.phi(concatenate(args));
  if (args.size() == 1) return value;
  const TermTable& table = disc_table(static_cast<int>(args.size()));
  value -= signature_sum(args, table.terms, all_but(table.terms.size(), table.top));
  return value;
}

template <class Scalar>
Scalar CumulantEngine<Scalar>::kappa(const Arguments& first, const Arguments& second) {
  if (first.empty() || second.empty()) {
    throw std::invalid_argument("kappa_{p,q} needs p, q >= 1");
  }
  const std::string key = second_key(first, second);
  Scalar value;
  if (lookup(key, value)) return value;
  value = compute_second(first, second);
  store(key, value);
  return value;
}

template <class Scalar>
Scalar CumulantEngine<Scalar>::compute_second(const Arguments& first, const Arguments& second) {
  Scalar value = space_.phi2(concatenate(first), concatenate(second));
  const AnnulusShape shape(static_cast<int>(first.size()), static_cast<int>(second.size()));
  Arguments args(first);
  args.insert(args.end(), second.begin(), second.end());
  const TermTable& table = annular_table(shape);
  value -= signature_sum(args, table.terms, all_but(table.terms.size(), table.top));
  return value;
}

template <class Scalar>
Scalar CumulantEngine<Scalar>::kappa_pi(const Arguments& args, const Permutation& pi) {
  if (pi.size() != static_cast<int>(args.size()) || !is_nc_disc(pi)) {
    throw std::invalid_argument("kappa_pi: " + pi.to_string() + " is not non-crossing on [" +
                                std::to_string(args.size()) + "]");
  }
  return evaluate(args, term_of(pi));
}

template <class Scalar>
Scalar CumulantEngine<Scalar>::kappa_vp(const Arguments& args, const PartitionedPermutation& vp) {
  if (vp.size() != static_cast<int>(args.size())) throw std::invalid_argument("kappa_vp: size mismatch");
  return evaluate(args, term_of(vp));
}

template <class Scalar>
Scalar CumulantEngine<Scalar>::ks_product_cumulant(const Arguments& args, const Composition& comp) {
  check_shape(args, comp);
  return signature_sum(args, disc_table(comp.total()).terms, ks_indices(comp));
}

template <class Scalar>
Scalar CumulantEngine<Scalar>::main_product_cumulant(const Arguments& args, const Composition& comp) {
  return main_product_cumulants(args, {comp}).front();
}

template <class Scalar>
std::vector<Scalar> CumulantEngine<Scalar>::main_product_cumulants(
    const Arguments& args, const std::vector<Composition>& comps) {
  if (comps.empty()) return {};
  for (const auto& c : comps) {
    if (!c.has_split()) throw std::invalid_argument("main_product_cumulant needs a split composition");
    check_shape(args, c);
    if (c.shape() != comps.front().shape()) {
      throw std::invalid_argument("main_product_cumulants: compositions of different shapes");
    }
  }
  const TermTable& table = annular_table(comps.front().shape());
  const Signatures sig = signatures(args, table.terms, all_but(table.terms.size(), -1));
  std::vector<std::optional<Scalar>> values(sig.representative.size());
  std::vector<Scalar> out;
  out.reserve(comps.size());
  std::vector<long> count(sig.representative.size());
  for (const auto& c : comps) {
    std::fill(count.begin(), count.end(), 0);
    for (int i : main_indices(c)) ++count[static_cast<std::size_t>(sig.of_term[static_cast<std::size_t>(i)])];
    Scalar total;
    for (std::size_t s = 0; s < count.size(); ++s) {
      if (count[s] == 0) continue;
      if (!values[s]) {
        values[s] = evaluate(args, table.terms[static_cast<std::size_t>(sig.representative[s])]);
      }
      if (is_zero(*values[s])) continue;
      Scalar v = *values[s];
      v *= Integer(count[s]);
      total += v;
    }
    out.push_back(std::move(total));
  }
  return out;
}

template <class Scalar>
Scalar CumulantEngine<Scalar>::moment_from_cumulants(const Arguments& args) {
  if (args.empty()) throw std::invalid_argument("moment_from_cumulants needs arguments");
  const TermTable& table = disc_table(static_cast<int>(args.size()));
  return signature_sum(args, table.terms, all_but(table.terms.size(), -1));
}

template <class Scalar>
Scalar CumulantEngine<Scalar>::fluctuation_from_cumulants(const Arguments& first,
                                                          const Arguments& second) {
  if (first.empty() || second.empty()) throw std::invalid_argument("fluctuation_from_cumulants needs p, q >= 1");
  Arguments args(first);
  args.insert(args.end(), second.begin(), second.end());
  const TermTable& table =
      annular_table(AnnulusShape(static_cast<int>(first.size()), static_cast<int>(second.size())));
  return signature_sum(args, table.terms, all_but(table.terms.size(), -1));
}

template class CumulantEngine<Rational>;
template class CumulantEngine<Polynomial>;

namespace {

Polynomial monomial_of(const Term& term) {
  std::vector<Symbol> symbols;
  for (const auto& f : term) {
    const int s = static_cast<int>(f.first.size());
    symbols.push_back(f.second.empty() ? Symbol::kappa(s)
                                       : Symbol::kappa(s, static_cast<int>(f.second.size())));
  }
  return Polynomial::from_terms({{Integer(1), symbols}});
}

FormalMomentSpace& formal_space() {
  static FormalMomentSpace space;
  return space;
}

CumulantEngine<Polynomial>& formal_engine() {
  static CumulantEngine<Polynomial> engine(formal_space());
  return engine;
}

Integer sign(int exponent) { return exponent % 2 ? Integer(-1) : Integer(1); }

}  // namespace

Polynomial symbolic_phi_expansion(int n) {
  Polynomial out;
  for (const auto& t : disc_table(n).terms) out += monomial_of(t);
  return out;
}

Polynomial symbolic_phi2_expansion(int p, int q) {
  Polynomial out;
  for (const auto& t : annular_table(AnnulusShape(p, q)).terms) out += monomial_of(t);
  return out;
}

Polynomial symbolic_kappa_n(int n) {
  if (n < 1) throw std::invalid_argument("symbolic_kappa_n needs n >= 1");
  return formal_engine().kappa(letters_of(Word::power('a', n)));
}

Polynomial symbolic_kappa_pq(int p, int q) {
  AnnulusShape shape(p, q);
  if (shape.total() > enumeration_bound()) {
    throw BoundExceeded("symbolic_kappa_pq: " + shape.to_string() + " exceeds the enumeration bound");
  }
  return formal_engine().kappa(letters_of(Word::power('a', p)), letters_of(Word::power('a', q)));
}

Integer snc_count(int p, int q) { return Integer(enumerate_snc(AnnulusShape(p, q)).size()); }

Integer mobius_disc(int n) {
  if (n < 1) throw std::invalid_argument("mobius_disc needs n >= 1");
  const Integer c = n == 1 ? Integer(1) : Integer(enumerate_nc(n - 1).size());
  return sign(n - 1) * c;
}

Integer mobius_annular(int p, int q) { return sign(p + q) * snc_count(p, q); }

Integer mobius_recurrence_residual(int p, int q) {
  Integer r = mobius_annular(p, q) + q * mobius_disc(p + q);
  for (int k = 1; k < p; ++k) {
    r += mobius_annular(k, q) * mobius_disc(p - k) + mobius_disc(k) * mobius_annular(p - k, q);
  }
  return r;
}

namespace {

void check_signs(int p, int q, const std::vector<int>& signs) {
  if (p < 1 || q < 1 || static_cast<int>(signs.size()) != p + q) {
    throw std::invalid_argument("expected p + q signs");
  }
  for (int e : signs) {
    if (e != 1 && e != -1) throw std::invalid_argument("signs must be +1 or -1");
  }
}

}  // namespace

Rational haar_kappa_pq(int p, int q, const std::vector<int>& signs) {
  check_signs(p, q, signs);
  static HaarUnitarySpace space;
  static CumulantEngine<Rational> engine(space);
  Arguments first;
  Arguments second;
  for (int i = 0; i < p + q; ++i) {
    (i < p ? first : second).push_back(Word{Letter{'u', signs[static_cast<std::size_t>(i)]}});
  }
  return engine.kappa(first, second);
}

bool haar_alternating(int p, int q, const std::vector<int>& signs) {
  check_signs(p, q, signs);
  if (p % 2 || q % 2) return false;
  for (int i = 0; i + 1 < p + q; ++i) {
    if (i + 1 == p) continue;
    if (signs[static_cast<std::size_t>(i)] == signs[static_cast<std::size_t>(i + 1)]) return false;
  }
  return true;
}

Integer haar_predicted_kappa(int p, int q, const std::vector<int>& signs) {
  if (!haar_alternating(p, q, signs)) return 0;
  return sign(p / 2 + q / 2) * snc_count(p / 2, q / 2);
}

Integer haar_alternating_kappa(int n) {
  if (n < 1) throw std::invalid_argument("haar_alternating_kappa needs n >= 1");
  return mobius_disc(n);
}

Integer semicircular_square_sum(int p, int q) {
  Integer total = 0;
  for (int k = 1; k <= std::min(p, q); ++k) {
    total += k * Integer(binomial(p, k)) * Integer(binomial(q, k));
  }
  return total;
}

Integer semicircular_square_closed(int p, int q) {
  return p * Integer(binomial(p + q - 1, p));
}

Integer semicircular_pairing_main_sum(const Composition& comp) {
  const AnnulusShape shape = comp.shape();
  const Permutation gamma = shape.gamma();
  const std::vector<int> cuts = comp.cut_points();
  Integer total = 0;
  for (const auto& pi : enumerate_snc_pairings(shape)) {
    if (separates_points(compose(pi.inverse(), gamma), cuts)) ++total;
  }
  return total;
}

}  // namespace fluct
