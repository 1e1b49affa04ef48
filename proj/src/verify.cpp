#include "fluct/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

#include "fluct/annular.hpp"
#include "fluct/combinatorics.hpp"
#include "fluct/composition.hpp"
#include "fluct/cumulants.hpp"
#include "fluct/spaces.hpp"

namespace fluct {

using nlohmann::json;

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

json SuiteReport::to_json() const {
  json out{{"suite", suite}, {"max", max}, {"passed", passed()}, {"checks", json::array()}};
  for (const auto& c : checks) {
    json j{{"name", c.name}, {"cases", c.cases}, {"passed", c.passed}};
    if (!c.passed) j["counterexample"] = c.counterexample;
    out["checks"].push_back(std::move(j));
  }
  return out;
}

namespace {

struct Partial {
  long cases = 0;
  std::optional<json> failure;

  // Counts one case; keeps the first failure.
  void record(bool ok, const std::function<json()>& describe) {
    ++cases;
    if (!ok && !failure) failure = describe();
  }
};

using Cell = std::function<Partial()>;

CheckResult run_check(std::string name, const std::vector<Cell>& cells, int jobs) {
  std::vector<Partial> parts(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        parts[i] = cells[i]();
      } catch (const std::exception& e) {
        parts[i].failure = json{{"error", e.what()}};
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  CheckResult r;
  r.name = std::move(name);
  for (auto& p : parts) {
    r.cases += p.cases;
    if (p.failure && r.passed) {
      r.passed = false;
      r.counterexample = std::move(*p.failure);
    }
  }
  return r;
}

std::vector<AnnulusShape> shapes_up_to(int max_total) {
  std::vector<AnnulusShape> out;
  for (int n = 2; n <= max_total; ++n) {
    for (int p = 1; p < n; ++p) out.emplace_back(p, n - p);
  }
  return out;
}

// Sign patterns of n letters, + before -, first letter most significant.
std::vector<std::vector<int>> sign_patterns(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1u ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

Arguments unitary_letters(const std::vector<int>& signs) {
  Arguments out;
  for (int e : signs) out.push_back(Word{Letter{'u', e}});
  return out;
}

std::string str(const Rational& r) { return r.get_str(); }
std::string str(const Integer& r) { return r.get_str(); }
std::string str(const Polynomial& p) { return p.to_text(); }

std::string words_text(const Arguments& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += args[i].to_string();
  }
  return out;
}

std::pair<Arguments, Arguments> split_at(const Arguments& args, int split) {
  return {Arguments(args.begin(), args.begin() + split), Arguments(args.begin() + split, args.end())};
}

// ---- main-theorem and ks -------------------------------------------------

template <class Scalar>
void main_theorem_cases(CumulantEngine<Scalar>& engine, const Arguments& args,
                        const AnnulusShape& shape, Partial& out) {
  const auto comps = split_compositions_of(shape);
  const auto values = engine.main_product_cumulants(args, comps);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto [first, second] = split_at(group_arguments(args, comps[i]), comps[i].split());
    const Scalar oracle = engine.kappa(first, second);
    out.record(values[i] == oracle, [&] {
      return json{{"model", engine.space().name()}, {"composition", comps[i].to_string()},
                  {"word", words_text(args)}, {"main", str(values[i])}, {"oracle", str(oracle)}};
    });
  }
}

template <class Scalar>
void ks_cases(CumulantEngine<Scalar>& engine, const Arguments& args, Partial& out) {
  for (const auto& comp : compositions_of(static_cast<int>(args.size()))) {
    const Scalar ks = engine.ks_product_cumulant(args, comp);
    const Scalar oracle = engine.kappa(group_arguments(args, comp));
    out.record(ks == oracle, [&] {
      return json{{"model", engine.space().name()}, {"composition", comp.to_string()},
                  {"word", words_text(args)}, {"ks", str(ks)}, {"oracle", str(oracle)}};
    });
  }
}

struct Models {
  SemicircularSpace semicircular;
  HaarUnitarySpace haar;
  FormalMomentSpace formal;
  CumulantEngine<Rational> semicircular_engine{semicircular};
  CumulantEngine<Rational> haar_engine{haar};
  CumulantEngine<Polynomial> formal_engine{formal};
};

SuiteReport main_theorem_suite(int max, int jobs) {
  Models m;
  SuiteReport report{"main-theorem", max, {}};
  const auto shapes = shapes_up_to(max);
  std::vector<Cell> semi, haar, formal;
  for (const auto& shape : shapes) {
    semi.push_back([&m, shape] {
      Partial p;
      main_theorem_cases(m.semicircular_engine, letters_of(Word::power('x', shape.total())), shape, p);
      return p;
    });
    haar.push_back([&m, shape] {
      Partial p;
      for (const auto& signs : sign_patterns(shape.total())) {
        main_theorem_cases(m.haar_engine, unitary_letters(signs), shape, p);
      }
      return p;
    });
    formal.push_back([&m, shape] {
      Partial p;
      main_theorem_cases(m.formal_engine, letters_of(Word::power('a', shape.total())), shape, p);
      return p;
    });
  }
  report.checks.push_back(run_check("semicircular", semi, jobs));
  report.checks.push_back(run_check("haar", haar, jobs));
  report.checks.push_back(run_check("formal", formal, jobs));
  return report;
}

SuiteReport ks_suite(int max, int jobs) {
  Models m;
  SuiteReport report{"ks", max, {}};
  std::vector<Cell> semi, haar, formal;
  for (int n = 1; n <= max; ++n) {
    semi.push_back([&m, n] {
      Partial p;
      ks_cases(m.semicircular_engine, letters_of(Word::power('x', n)), p);
      return p;
    });
    haar.push_back([&m, n] {
      Partial p;
      for (const auto& signs : sign_patterns(n)) ks_cases(m.haar_engine, unitary_letters(signs), p);
      return p;
    });
    formal.push_back([&m, n] {
      Partial p;
      ks_cases(m.formal_engine, letters_of(Word::power('a', n)), p);
      return p;
    });
  }
  report.checks.push_back(run_check("semicircular", semi, jobs));
  report.checks.push_back(run_check("haar", haar, jobs));
  report.checks.push_back(run_check("formal", formal, jobs));
  return report;
}

// ---- semicircle ------------------------------------------------------------

bool is_pairing(const Permutation& a) {
  return std::all_of(a.cycles().begin(), a.cycles().end(), [](const auto& c) { return c.size() == 2; });
}

SuiteReport semicircular_suite(int max, int jobs) {
  SemicircularSpace space;
  CumulantEngine<Rational> engine(space);
  SuiteReport report{"semicircular", max, {}};
  // Closed forms are cheap and run to 16 at least; the brute checks stop at
  // the enumeration bound.
  const int brute_max = std::min(max, enumeration_bound());
  auto even_shapes = [](int m) {
    std::vector<AnnulusShape> out;
    for (const auto& s : shapes_up_to(m)) {
      if (s.total() % 2 == 0) out.push_back(s);
    }
    return out;
  };
  const auto even = even_shapes(brute_max);

  std::vector<Cell> forms;
  for (const auto& s : even_shapes(std::max(max, 16))) {
    forms.push_back([s] {
      Partial p;
      const Rational sum = semicircular_phi2(s.p(), s.q());
      const bool even_parts = s.p() % 2 == 0;
      const Rational closed = even_parts ? semicircular_phi2_even_form(s.p(), s.q())
                                         : semicircular_phi2_odd_form(s.p(), s.q());
      p.record(sum == closed, [&] {
        return json{{"shape", s.to_string()}, {"sum", str(sum)}, {"closed", str(closed)}};
      });
      return p;
    });
  }
  report.checks.push_back(run_check("closed-forms", forms, jobs));

  std::vector<Cell> counts;
  for (const auto& s : even) {
    counts.push_back([s] {
      Partial p;
      const auto& all = enumerate_snc(s);
      const long brute = std::count_if(all.begin(), all.end(), is_pairing);
      const long searched = static_cast<long>(enumerate_snc_pairings(s).size());
      const Rational sum = semicircular_phi2(s.p(), s.q());
      p.record(sum == brute && searched == brute, [&] {
        return json{{"shape", s.to_string()}, {"sum", str(sum)}, {"brute", brute}, {"search", searched}};
      });
      return p;
    });
  }
  report.checks.push_back(run_check("pairing-count", counts, jobs));

  std::vector<Cell> first;
  for (int n = 1; n <= brute_max; ++n) {
    first.push_back([&engine, n] {
      Partial p;
      const Rational k = engine.kappa(letters_of(Word::power('x', n)));
      p.record(k == (n == 2 ? 1 : 0), [&] { return json{{"n", n}, {"kappa", str(k)}}; });
      return p;
    });
  }
  report.checks.push_back(run_check("first-order-cumulants", first, jobs));

  std::vector<Cell> second;
  for (const auto& s : shapes_up_to(brute_max)) {
    second.push_back([&engine, s] {
      Partial p;
      const Rational k = engine.kappa(letters_of(Word::power('x', s.p())), letters_of(Word::power('x', s.q())));
      p.record(k == 0, [&] { return json{{"shape", s.to_string()}, {"kappa", str(k)}}; });
      return p;
    });
  }
  report.checks.push_back(run_check("second-order-vanish", second, jobs));
  return report;
}

SuiteReport semicircular_square_suite(int max, int jobs) {
  SemicircularSpace space;
  CumulantEngine<Rational> engine(space);
  SuiteReport report{"semicircular-square", max, {}};
  std::vector<std::pair<int, int>> cells;
  for (int p = 1; p <= max; ++p) {
    for (int q = 1; q <= max; ++q) cells.emplace_back(p, q);
  }
  auto squares = [](int p, int q) {
    std::vector<int> parts(static_cast<std::size_t>(p + q), 2);
    return Composition(parts, p);
  };
  auto xs = [](int n) { return letters_of(Word::power('x', n)); };

  std::vector<Cell> closed, pairing, direct, full;
  for (auto [p, q] : cells) {
    closed.push_back([p, q] {
      Partial r;
      const Integer sum = semicircular_square_sum(p, q);
      const Integer c = semicircular_square_closed(p, q);
      r.record(sum == c, [&] { return json{{"p", p}, {"q", q}, {"sum", str(sum)}, {"closed", str(c)}}; });
      return r;
    });
    pairing.push_back([=] {
      Partial r;
      const Integer main = semicircular_pairing_main_sum(squares(p, q));
      const Integer sum = semicircular_square_sum(p, q);
      r.record(main == sum, [&] { return json{{"p", p}, {"q", q}, {"main", str(main)}, {"sum", str(sum)}}; });
      return r;
    });
    if (p + q <= enumeration_bound()) {
      direct.push_back([=, &engine] {
        Partial r;
        const Arguments sq(static_cast<std::size_t>(p + q), Word::power('x', 2));
        const auto [a, b] = split_at(sq, p);
        const Rational k = engine.kappa(a, b);
        const Integer sum = semicircular_square_sum(p, q);
        r.record(k == sum, [&] { return json{{"p", p}, {"q", q}, {"oracle", str(k)}, {"sum", str(sum)}}; });
        return r;
      });
    }
    if (2 * (p + q) <= enumeration_bound()) {
      full.push_back([=, &engine] {
        Partial r;
        const Rational main = engine.main_product_cumulant(xs(2 * (p + q)), squares(p, q));
        const Integer pairs = semicircular_pairing_main_sum(squares(p, q));
        r.record(main == pairs, [&] {
          return json{{"p", p}, {"q", q}, {"full", str(main)}, {"pairings", str(pairs)}};
        });
        return r;
      });
    }
  }
  report.checks.push_back(run_check("sum-equals-closed-form", closed, jobs));
  report.checks.push_back(run_check("main-theorem-pairings", pairing, jobs));
  report.checks.push_back(run_check("direct-oracle", direct, jobs));
  report.checks.push_back(run_check("full-sum-equals-pairing-sum", full, jobs));
  return report;
}

// ---- Haar unitary ----------------------------------------------------------

SuiteReport haar_suite(int max, int jobs) {
  SuiteReport report{"haar", max, {}};
  const auto shapes = shapes_up_to(max);
  std::vector<Cell> vanish, values;
  for (const auto& s : shapes) {
    vanish.push_back([s] {
      Partial r;
      for (const auto& signs : sign_patterns(s.total())) {
        const Rational k = haar_kappa_pq(s.p(), s.q(), signs);
        const bool predicted = haar_alternating(s.p(), s.q(), signs);
        r.record((k != 0) == predicted, [&] {
          return json{{"shape", s.to_string()}, {"signs", signs}, {"kappa", str(k)}, {"alternating", predicted}};
        });
      }
      return r;
    });
    values.push_back([s] {
      Partial r;
      for (const auto& signs : sign_patterns(s.total())) {
        if (!haar_alternating(s.p(), s.q(), signs)) continue;
        const Rational k = haar_kappa_pq(s.p(), s.q(), signs);
        const Integer expected = haar_predicted_kappa(s.p(), s.q(), signs);
        r.record(k == expected, [&] {
          return json{{"shape", s.to_string()}, {"signs", signs}, {"kappa", str(k)}, {"expected", str(expected)}};
        });
      }
      return r;
    });
  }
  report.checks.push_back(run_check("vanishing", vanish, jobs));
  report.checks.push_back(run_check("alternating-values", values, jobs));

  HaarUnitarySpace space;
  CumulantEngine<Rational> engine(space);
  std::vector<Cell> first;
  for (int n = 1; 2 * n <= max; ++n) {
    first.push_back([n, &engine] {
      Partial r;
      for (int lead : {1, -1}) {
        std::vector<int> signs;
        for (int i = 0; i < 2 * n; ++i) signs.push_back(i % 2 ? -lead : lead);
        const Rational k = engine.kappa(unitary_letters(signs));
        const Integer expected = haar_alternating_kappa(n);
        r.record(k == expected, [&] {
          return json{{"signs", signs}, {"kappa", str(k)}, {"expected", str(expected)}};
        });
      }
      return r;
    });
  }
  report.checks.push_back(run_check("first-order-alternating", first, jobs));
  return report;
}

// ---- Moebius ---------------------------------------------------------------

SuiteReport mobius_suite(int max, int jobs) {
  SuiteReport report{"mobius", max, {}};
  std::vector<Cell> residual, symmetry, catalan_counts;
  for (const auto& s : shapes_up_to(max)) {
    residual.push_back([s] {
      Partial r;
      const Integer res = mobius_recurrence_residual(s.p(), s.q());
      r.record(res == 0, [&] { return json{{"shape", s.to_string()}, {"residual", str(res)}}; });
      return r;
    });
    symmetry.push_back([s] {
      Partial r;
      const Integer a = snc_count(s.p(), s.q());
      const Integer b = snc_count(s.q(), s.p());
      r.record(a == b, [&] { return json{{"shape", s.to_string()}, {"c_pq", str(a)}, {"c_qp", str(b)}}; });
      return r;
    });
  }
  for (int n = 1; n <= max; ++n) {
    catalan_counts.push_back([n] {
      Partial r;
      const auto count = static_cast<std::int64_t>(enumerate_nc(n).size());
      r.record(count == catalan(n), [&] { return json{{"n", n}, {"count", count}, {"catalan", catalan(n)}}; });
      return r;
    });
  }
  report.checks.push_back(run_check("recurrence-residual", residual, jobs));
  report.checks.push_back(run_check("count-symmetry", symmetry, jobs));
  report.checks.push_back(run_check("disc-counts", catalan_counts, jobs));
  return report;
}

// ---- order on PS_NC --------------------------------------------------------

// #(a) + #(a^-1 ref) = |points| + 1 for a permutation of the points of one
// reference cycle.
bool nc_in_cycle(const Permutation& a, const Permutation& ref) {
  return a.cycle_count() + compose(a.inverse(), ref).cycle_count() == a.size() + 1;
}

// The characterization of a <= b in PS_NC(p,q) through inclusion of blocks
// and non-crossing restrictions.
bool characterized_leq(const PartitionedPermutation& a, const PartitionedPermutation& b) {
  if (!a.partition().refines(b.partition())) return false;
  const Permutation& pi = a.perm();
  const Permutation& sigma = b.perm();
  if (b.is_disc() && !a.is_disc()) return false;
  for (const auto& block : b.partition().blocks()) {
    const Restriction rp = restrict_to(pi, block);
    const Restriction rs = restrict_to(sigma, block);
    if (rs.perm.cycle_count() == 1) {
      if (!leaves_invariant(pi, block) || !nc_in_cycle(rp.perm, rs.perm)) return false;
      continue;
    }
    // The tunnel block of b: two cycles of sigma, one per circle.
    if (!leaves_invariant(pi, block)) return false;
    const bool annular = is_snc_relative(rp.perm, rs.perm);
    bool product = true;
    for (const auto& c : rp.perm.cycles()) {
      const int side = rs.perm.cycle_of(c.front());
      for (int x : c) product = product && rs.perm.cycle_of(x) == side;
    }
    product = product && rp.perm.cycle_count() + compose(rp.perm.inverse(), rs.perm).cycle_count() ==
                             rp.perm.size() + 2;
    if (!annular && !product) return false;
  }
  return true;
}

// Every partition W >= 0_w with W <= u, built by merging cycles of w inside
// each block of u.
std::vector<SetPartition> witnesses(const Permutation& w, const SetPartition& u) {
  const int n = w.size();
  std::vector<std::vector<int>> by_block(static_cast<std::size_t>(u.block_count()));
  for (int k = 0; k < w.cycle_count(); ++k) {
    by_block[static_cast<std::size_t>(u.block_of(w.cycles()[static_cast<std::size_t>(k)].front()))].push_back(k);
  }
  std::vector<int> label(static_cast<std::size_t>(w.cycle_count()), 0);
  std::vector<SetPartition> out;
  // Restricted growth strings per block, offset so blocks never share labels.
  auto rec = [&](auto&& self, std::size_t block, std::size_t pos, int used, int offset) -> void {
    if (block == by_block.size()) {
      std::vector<int> point_label(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) point_label[static_cast<std::size_t>(i - 1)] = label[static_cast<std::size_t>(w.cycle_of(i))];
      out.push_back(SetPartition::from_labels(point_label));
      return;
    }
    const auto& cyc = by_block[block];
    if (pos == cyc.size()) {
      self(self, block + 1, 0, 0, offset + used);
      return;
    }
    for (int l = 0; l <= used; ++l) {
      label[static_cast<std::size_t>(cyc[pos])] = offset + l;
      self(self, block, pos + 1, std::max(used, l + 1), offset);
    }
  };
  rec(rec, 0, 0, 0, 0);
  return out;
}

SuiteReport order_suite(int max, int jobs) {
  SuiteReport report{"order", max, {}};
  const auto shapes = shapes_up_to(max);
  auto leq_matrix = [](const std::vector<PartitionedPermutation>& all) {
    std::vector<std::vector<char>> m(all.size(), std::vector<char>(all.size()));
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) m[i][j] = pp_leq(all[i], all[j]);
    }
    return m;
  };
  std::vector<Cell> axioms, tunnel, structure, characterization;
  for (const auto& s : shapes) {
    axioms.push_back([s, leq_matrix] {
      Partial r;
      const auto& all = enumerate_psnc(s);
      const auto m = leq_matrix(all);
      const std::size_t n = all.size();
      for (std::size_t i = 0; i < n; ++i) {
        r.record(m[i][i], [&] { return json{{"axiom", "reflexive"}, {"a", all[i].to_string()}}; });
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && m[i][j]) {
            r.record(!m[j][i], [&] {
              return json{{"axiom", "antisymmetric"}, {"a", all[i].to_string()}, {"b", all[j].to_string()}};
            });
          }
          if (!m[i][j]) continue;
          for (std::size_t k = 0; k < n; ++k) {
            if (!m[j][k]) continue;
            r.record(m[i][k], [&] {
              return json{{"axiom", "transitive"}, {"a", all[i].to_string()}, {"b", all[j].to_string()},
                          {"c", all[k].to_string()}};
            });
          }
        }
      }
      return r;
    });
    tunnel.push_back([s] {
      Partial r;
      const auto& all = enumerate_psnc(s);
      for (const auto& a : all) {
        if (a.is_disc()) continue;
        for (const auto& b : all) {
          if (!b.is_disc()) continue;
          r.record(!pp_leq(a, b), [&] { return json{{"tunnel", a.to_string()}, {"disc", b.to_string()}}; });
        }
      }
      return r;
    });
    structure.push_back([s] {
      Partial r;
      const auto& all = enumerate_psnc(s);
      for (const auto& a : all) {
        for (const auto& b : all) {
          if (!a.partition().refines(b.partition())) {
            r.record(!pp_leq(a, b), [&] {
              return json{{"claim", "leq needs V <= U"}, {"a", a.to_string()}, {"b", b.to_string()}};
            });
            continue;
          }
          const Permutation w = compose(a.perm().inverse(), b.perm());
          const Permutation left = compose(b.perm(), a.perm().inverse());
          bool any = false;
          for (const auto& part : witnesses(w, b.partition())) {
            const auto prod = pp_product(a, PartitionedPermutation(part, w));
            if (!prod || *prod != b) continue;
            any = true;
            const bool zero = part == orbit_partition(w);
            const bool join = b.partition() == partition_join(a.partition(), orbit_partition(left));
            const auto other = pp_product(PartitionedPermutation::disc(left), a);
            const bool swapped = other && *other == b;
            r.record(zero && join && swapped, [&] {
              return json{{"a", a.to_string()}, {"b", b.to_string()}, {"witness", part.to_string()},
                          {"witness_is_orbit", zero}, {"join", join}, {"left_product", swapped}};
            });
          }
          r.record(any == pp_leq(a, b), [&] {
            return json{{"claim", "some witness iff pp_leq"}, {"a", a.to_string()}, {"b", b.to_string()}};
          });
        }
      }
      return r;
    });
    characterization.push_back([s] {
      Partial r;
      const auto& all = enumerate_psnc(s);
      for (const auto& a : all) {
        for (const auto& b : all) {
          const bool leq = pp_leq(a, b);
          const bool by_blocks = characterized_leq(a, b);
          r.record(leq == by_blocks, [&] {
            return json{{"a", a.to_string()}, {"b", b.to_string()}, {"pp_leq", leq}, {"characterized", by_blocks}};
          });
        }
      }
      return r;
    });
  }
  report.checks.push_back(run_check("partial-order-axioms", axioms, jobs));
  report.checks.push_back(run_check("tunnel-not-below-disc", tunnel, jobs));
  report.checks.push_back(run_check("order-structure", structure, jobs));
  report.checks.push_back(run_check("characterization", characterization, jobs));
  return report;
}

// ---- lemmas ----------------------------------------------------------------

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Cycle count of a^-1 b on 0-based images, given a^-1.
int cycles_of(const std::vector<int>& a_inv, const std::vector<int>& b) {
  const int n = static_cast<int>(b.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int cycles = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++cycles;
    for (int i = s; !seen[static_cast<std::size_t>(i)]; i = a_inv[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])]) {
      seen[static_cast<std::size_t>(i)] = 1;
    }
  }
  return cycles;
}

std::vector<int> zero_images(const Permutation& a) {
  std::vector<int> out(a.images());
  for (int& x : out) --x;
  return out;
}

std::vector<Permutation> nc_products(const AnnulusShape& s) {
  std::vector<Permutation> out;
  for (const auto& a : enumerate_nc(s.p())) {
    for (const auto& b : enumerate_nc(s.q())) out.push_back(direct_sum(a, b));
  }
  return out;
}

// gamma_p^u gamma_q^v as one permutation of [p+q].
Permutation rotation(const AnnulusShape& s, int u, int v) {
  std::vector<int> img(static_cast<std::size_t>(s.total()));
  for (int i = 1; i <= s.p(); ++i) img[static_cast<std::size_t>(i - 1)] = (i - 1 + u) % s.p() + 1;
  for (int i = 1; i <= s.q(); ++i) img[static_cast<std::size_t>(s.p() + i - 1)] = s.p() + (i - 1 + v) % s.q() + 1;
  return Permutation(std::move(img));
}

std::vector<int> subset(unsigned mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) out.push_back(i + 1);
  }
  return out;
}

struct Lemma {
  const char* name;
  int cap;
  std::function<std::vector<Cell>(int)> cells;
};

std::vector<Cell> per_size(int from, int to, std::function<Partial(int)> f) {
  std::vector<Cell> out;
  for (int n = from; n <= to; ++n) out.push_back([f, n] { return f(n); });
  return out;
}

std::vector<Cell> per_shape(int max, std::function<Partial(const AnnulusShape&)> f) {
  std::vector<Cell> out;
  for (const auto& s : shapes_up_to(max)) out.push_back([f, s] { return f(s); });
  return out;
}

Partial transitive_lemma(int n) {
  Partial r;
  const auto perms = all_permutations(n);
  const std::size_t m = perms.size();
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index[perms[i].images()] = i;
  std::vector<std::bitset<720>> leq(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto inv = zero_images(perms[i].inverse());
    for (std::size_t j = 0; j < m; ++j) {
      const int d = n - cycles_of(inv, zero_images(perms[j]));
      if (perms[i].length() + d == perms[j].length()) leq[i].set(j);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!leq[i][j]) continue;
      const auto missing = leq[j] & ~leq[i];
      r.record(missing.none(), [&] {
        std::size_t k = 0;
        while (!missing[k]) ++k;
        return json{{"pi", perms[i].to_string()}, {"sigma", perms[j].to_string()}, {"tau", perms[k].to_string()}};
      });
    }
  }
  return r;
}

Partial metric_order_lemma(int n) {
  Partial r;
  const auto perms = all_permutations(n);
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      if (!metric_leq(a, b)) continue;
      r.record(perm_refines(a, orbit_partition(b)), [&] {
        return json{{"pi", a.to_string()}, {"sigma", b.to_string()}};
      });
    }
  }
  return r;
}

Partial invariant_lemma(int n) {
  Partial r;
  const auto sigmas = all_permutations(n);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const auto pts = subset(mask, n);
    const int k = static_cast<int>(pts.size());
    for (const auto& local : all_permutations(k)) {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 1);
      for (int i = 0; i < k; ++i) img[static_cast<std::size_t>(pts[static_cast<std::size_t>(i)] - 1)] = pts[static_cast<std::size_t>(local(i + 1) - 1)];
      const Permutation pi(std::move(img));
      const Permutation pi_n = restrict_to(pi, pts).perm;
      for (const auto& sigma : sigmas) {
        const Permutation lhs = restrict_to(compose(sigma, pi), pts).perm;
        const Permutation rhs = compose(restrict_to(sigma, pts).perm, pi_n);
        r.record(lhs == rhs, [&] {
          return json{{"sigma", sigma.to_string()}, {"pi", pi.to_string()}, {"N", pts}};
        });
      }
    }
  }
  return r;
}

Partial conjugation_invariance(int n) {
  Partial r;
  const auto perms = all_permutations(n);
  for (const auto& a : perms) {
    for (const auto& g : perms) {
      const Permutation c = compose(compose(g, a), g.inverse());
      r.record(c.length() == a.length(), [&] { return json{{"a", a.to_string()}, {"g", g.to_string()}}; });
    }
  }
  return r;
}

Partial first_sep_lemma(int n) {
  Partial r;
  const Permutation gamma = Permutation::full_cycle(n);
  const SetPartition whole = SetPartition::whole(n);
  for (const auto& comp : compositions_of(n)) {
    const SetPartition tau = orbit_partition(tau_of(comp));
    const auto cuts = comp.cut_points();
    for (const auto& sigma : enumerate_nc(n)) {
      const bool joined = partition_join(orbit_partition(sigma), tau) == whole;
      const bool separated = separates_points(compose(sigma.inverse(), gamma), cuts);
      r.record(joined == separated, [&] {
        return json{{"sigma", sigma.to_string()}, {"composition", comp.to_string()}, {"joined", joined},
                    {"separated", separated}};
      });
    }
  }
  return r;
}

Partial separates_theorem(int n) {
  Partial r;
  for (const auto& comp : compositions_of(n)) {
    const SetPartition tau = orbit_partition(tau_of(comp));
    const auto cuts = comp.cut_points();
    for (const auto& pi : enumerate_nc(comp.count())) {
      const Permutation fat = fatten(pi, comp);
      const SetPartition fat_blocks = orbit_partition(fat);
      for (const auto& sigma : enumerate_nc(n)) {
        if (!metric_leq(sigma, fat)) continue;
        const bool joined = partition_join(orbit_partition(sigma), tau) == fat_blocks;
        const bool separated = separates_points(compose(sigma.inverse(), fat), cuts);
        r.record(joined == separated, [&] {
          return json{{"pi", pi.to_string()}, {"composition", comp.to_string()}, {"sigma", sigma.to_string()},
                      {"joined", joined}, {"separated", separated}};
        });
      }
    }
  }
  return r;
}

Partial tracial_lemma(int n) {
  Partial r;
  const Permutation gamma = Permutation::full_cycle(n);
  for (const auto& tau : enumerate_nc(n)) {
    for (const auto& sigma : enumerate_nc(n)) {
      const bool left = metric_leq(tau, compose(sigma.inverse(), gamma));
      const bool right = metric_leq(sigma, compose(gamma, tau.inverse()));
      r.record(left == right, [&] { return json{{"tau", tau.to_string()}, {"sigma", sigma.to_string()}}; });
    }
  }
  return r;
}

Partial restriction_lemma(const AnnulusShape& s) {
  Partial r;
  const int n = s.total();
  for (const auto& pi : enumerate_snc(s)) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      const auto pts = subset(mask, n);
      const int n1 = static_cast<int>(std::count_if(pts.begin(), pts.end(), [&](int x) { return s.on_outer(x); }));
      const int n2 = static_cast<int>(pts.size()) - n1;
      const Permutation res = restrict_to(pi, pts).perm;
      bool ok;
      if (n1 == 0 || n2 == 0) {
        ok = is_nc_disc(res);
      } else {
        const AnnulusShape sub(n1, n2);
        ok = is_snc(res, sub) || is_nc_product(res, sub);
      }
      r.record(ok, [&] { return json{{"pi", pi.to_string()}, {"shape", s.to_string()}, {"N", pts}}; });
    }
  }
  return r;
}

Partial fat_nc_lemma() {
  Partial r;
  for (int count = 1; count <= 4; ++count) {
    std::vector<int> parts(static_cast<std::size_t>(count), 1);
    while (true) {
      const Composition comp(parts);
      for (const auto& pi : enumerate_nc(count)) {
        const Permutation fat = fatten(pi, comp);
        const Permutation k = compose(pi.inverse(), Permutation::full_cycle(count));
        const Permutation fat_k = compose(fat.inverse(), Permutation::full_cycle(comp.total()));
        bool intertwined = true;
        for (int i = 1; i <= count; ++i) {
          intertwined = intertwined && comp.cut_point(k(i)) == fat_k(comp.cut_point(i));
        }
        r.record(is_nc_disc(fat) && intertwined, [&] {
          return json{{"pi", pi.to_string()}, {"composition", comp.to_string()}};
        });
      }
      std::size_t i = 0;
      while (i < parts.size() && parts[i] == 3) parts[i++] = 1;
      if (i == parts.size()) break;
      ++parts[i];
    }
  }
  return r;
}

Partial intertwining_lemma(int total) {
  Partial r;
  for (const auto& comp : split_compositions_of(total)) {
    const AnnulusShape parts_shape(comp.outer_count(), comp.inner_count());
    const AnnulusShape shape = comp.shape();
    const Permutation gamma_parts = parts_shape.gamma();
    const Permutation gamma = shape.gamma();
    for (const auto& pi : enumerate_snc(parts_shape)) {
      const Permutation fat = fatten(pi, comp);
      const Permutation k = compose(pi.inverse(), gamma_parts);
      const Permutation fat_k = compose(fat.inverse(), gamma);
      bool intertwined = true;
      for (int i = 1; i <= comp.count(); ++i) {
        intertwined = intertwined && comp.cut_point(k(i)) == fat_k(comp.cut_point(i));
      }
      r.record(intertwined && is_snc(fat, shape), [&] {
        return json{{"pi", pi.to_string()}, {"composition", comp.to_string()}, {"fat", fat.to_string()}};
      });
    }
  }
  return r;
}

Partial annular_order_lemma(const AnnulusShape& s) {
  Partial r;
  const auto& all = enumerate_snc(s);
  const Permutation gamma = s.gamma();
  const int n = s.total();
  struct Pre {
    std::vector<int> inv;        // pi^-1
    std::vector<int> img;        // pi
    std::vector<int> kreweras;   // pi^-1 gamma
    std::vector<int> right;      // gamma pi^-1
    int length;
  };
  std::vector<Pre> pre;
  for (const auto& a : all) {
    pre.push_back({zero_images(a.inverse()), zero_images(a), zero_images(compose(a.inverse(), gamma)),
                   zero_images(compose(gamma, a.inverse())), a.length()});
  }
  auto len = [n](const std::vector<int>& img) {
    std::vector<int> id(img.size());
    std::iota(id.begin(), id.end(), 0);
    return n - cycles_of(id, img);
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      // pi = all[i], sigma = all[j]; hypothesis pi <= sigma^-1 gamma.
      const auto& k_sigma = pre[j].kreweras;
      if (pre[i].length + (n - cycles_of(pre[i].inv, k_sigma)) != len(k_sigma)) continue;
      const auto& right = pre[i].right;
      const bool concl = pre[j].length + (n - cycles_of(pre[j].inv, right)) == len(right);
      r.record(concl, [&] { return json{{"pi", all[i].to_string()}, {"sigma", all[j].to_string()}}; });
    }
  }
  return r;
}

// Lemma on pi in NC(p) x NC(q) below the complement of sigma, with its
// corollary (i)-(iv).
Partial second_annular_order_lemma(const AnnulusShape& s) {
  Partial r;
  const Permutation gamma = s.gamma();
  for (const auto& sigma : enumerate_snc(s)) {
    const Permutation k_sigma = compose(sigma.inverse(), gamma);
    std::vector<bool> through(static_cast<std::size_t>(sigma.cycle_count()));
    for (int c = 0; c < sigma.cycle_count(); ++c) {
      const auto& cyc = sigma.cycles()[static_cast<std::size_t>(c)];
      through[static_cast<std::size_t>(c)] = std::any_of(cyc.begin(), cyc.end(), [&](int x) { return s.on_outer(x); }) &&
                                             std::any_of(cyc.begin(), cyc.end(), [&](int x) { return !s.on_outer(x); });
    }
    for (const auto& pi : nc_products(s)) {
      if (!metric_leq(pi, k_sigma)) continue;
      const Permutation right = compose(gamma, pi.inverse());
      const SetPartition right_blocks = orbit_partition(right);
      auto fail = [&](const char* item) {
        return json{{"item", item}, {"pi", pi.to_string()}, {"sigma", sigma.to_string()}};
      };
      const auto prod = pp_product(PartitionedPermutation::disc(sigma),
                                   PartitionedPermutation::disc(compose(k_sigma, pi.inverse())));
      const PartitionedPermutation expected(partition_join(orbit_partition(sigma), right_blocks), right);
      r.record(prod && *prod == expected, [&] { return fail("product"); });

      // (i) non-through cycles of sigma lie in a cycle of gamma pi^-1.
      bool item1 = true;
      std::set<int> met;
      std::vector<int> through_points;
      for (int c = 0; c < sigma.cycle_count(); ++c) {
        const auto& cyc = sigma.cycles()[static_cast<std::size_t>(c)];
        if (through[static_cast<std::size_t>(c)]) {
          for (int x : cyc) met.insert(right.cycle_of(x));
          through_points.insert(through_points.end(), cyc.begin(), cyc.end());
          continue;
        }
        for (int x : cyc) item1 = item1 && right.cycle_of(x) == right.cycle_of(cyc.front());
      }
      r.record(item1, [&] { return fail("i"); });

      // (ii) the through cycles meet exactly one cycle of gamma pi^-1 on each circle.
      int outer = 0;
      int inner = 0;
      for (int c : met) (s.on_outer(right.cycles()[static_cast<std::size_t>(c)].front()) ? outer : inner)++;
      r.record(outer == 1 && inner == 1, [&] { return fail("ii"); });

      // (iii) inside a cycle not met by a through cycle sigma is non-crossing.
      bool item3 = true;
      for (int c = 0; c < right.cycle_count(); ++c) {
        if (met.count(c)) continue;
        const auto& cyc = right.cycles()[static_cast<std::size_t>(c)];
        std::vector<int> pts(cyc.begin(), cyc.end());
        std::sort(pts.begin(), pts.end());
        item3 = item3 && leaves_invariant(sigma, pts) &&
                nc_in_cycle(restrict_to(sigma, pts).perm, restrict_to(right, pts).perm);
      }
      r.record(item3, [&] { return fail("iii"); });

      // (iv) the through cycles are annular non-crossing relative to the two met cycles.
      std::sort(through_points.begin(), through_points.end());
      bool item4 = outer == 1 && inner == 1;
      if (item4) {
        item4 = is_snc_relative(restrict_to(sigma, through_points).perm,
                                restrict_to(right, through_points).perm);
      }
      r.record(item4, [&] { return fail("iv"); });
    }
  }
  return r;
}

Partial conjugation_lemma(const AnnulusShape& s) {
  Partial r;
  for (const auto& sigma : enumerate_snc(s)) {
    bool found = false;
    for (int u = 0; u < s.p() && !found; ++u) {
      for (int v = 0; v < s.q() && !found; ++v) {
        const Permutation rot = rotation(s, u, v);
        found = is_nc_disc(compose(compose(rot, sigma), rot.inverse()));
      }
    }
    r.record(found, [&] { return json{{"sigma", sigma.to_string()}, {"shape", s.to_string()}}; });
  }
  return r;
}

SuiteReport lemma_suite(int max, int jobs) {
  SuiteReport report{"lemmas", max, {}};
  const std::vector<Lemma> lemmas = {
      {"transitive", 6, [](int m) { return per_size(1, m, transitive_lemma); }},
      {"metric-order", 6, [](int m) { return per_size(1, m, metric_order_lemma); }},
      {"invariant", 6, [](int m) { return per_size(1, m, invariant_lemma); }},
      {"conjugation-invariance", 5, [](int m) { return per_size(1, m, conjugation_invariance); }},
      {"nc-count", 9,
       [](int m) {
         return per_size(1, m, [](int n) {
           Partial r;
           const auto count = static_cast<std::int64_t>(enumerate_nc(n).size());
           r.record(count == catalan(n), [&] { return json{{"n", n}, {"count", count}}; });
           return r;
         });
       }},
      {"first-sep", 8, [](int m) { return per_size(1, m, first_sep_lemma); }},
      {"separates", 8, [](int m) { return per_size(1, m, separates_theorem); }},
      {"tracial-inequality", 6, [](int m) { return per_size(1, m, tracial_lemma); }},
      {"restriction", 8, [](int m) { return per_shape(m, restriction_lemma); }},
      {"fat-nc", 12, [](int) { return std::vector<Cell>{[] { return fat_nc_lemma(); }}; }},
      {"intertwining", 9, [](int m) { return per_size(2, m, intertwining_lemma); }},
      {"annular-order", 7, [](int m) { return per_shape(m, annular_order_lemma); }},
      {"second-annular-order", 6, [](int m) { return per_shape(m, second_annular_order_lemma); }},
      {"rotation-to-disc", 8, [](int m) { return per_shape(m, conjugation_lemma); }},
  };
  for (const auto& l : lemmas) {
    report.checks.push_back(run_check(l.name, l.cells(std::min(l.cap, max)), jobs));
  }
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"main-theorem", "ks",     "semicircular", "semicircular-square",
                                                 "haar",         "mobius", "order",        "lemmas"};
  return names;
}

int default_max(const std::string& suite) {
  static const std::map<std::string, int> defaults = {
      {"main-theorem", 8}, {"ks", 8},     {"semicircular", 10}, {"semicircular-square", 4},
      {"haar", 8},         {"mobius", 8}, {"order", 6},         {"lemmas", 9}};
  auto it = defaults.find(suite);
  if (it == defaults.end()) throw std::invalid_argument("unknown suite: " + suite);
  return it->second;
}

SuiteReport run_suite(const std::string& suite, int max, int jobs) {
  if (max <= 0) max = default_max(suite);
  else default_max(suite);
  if (suite == "main-theorem") return main_theorem_suite(max, jobs);
  if (suite == "ks") return ks_suite(max, jobs);
  if (suite == "semicircular") return semicircular_suite(max, jobs);
  if (suite == "semicircular-square") return semicircular_square_suite(max, jobs);
  if (suite == "haar") return haar_suite(max, jobs);
  if (suite == "mobius") return mobius_suite(max, jobs);
  if (suite == "order") return order_suite(max, jobs);
  return lemma_suite(max, jobs);
}

}  // namespace fluct
