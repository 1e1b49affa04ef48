#include "fluct/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace fluct {

namespace {

const char* const kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(int k) {
  std::string digits = std::to_string(k);
  std::string out;
  for (char d : digits) out += kSuperscripts[d - '0'];
  return out;
}

// Symbols in reading order: first-order by increasing index, second-order last.
std::vector<std::pair<Symbol, int>> powers(const Polynomial::Monomial& m) {
  std::vector<std::pair<Symbol, int>> out;
  for (const Symbol& s : m) {
    if (!out.empty() && out.back().first == s) {
      ++out.back().second;
    } else {
      out.emplace_back(s, 1);
    }
  }
  std::stable_partition(out.begin(), out.end(),
                        [](const auto& e) { return !e.first.is_second_order(); });
  return out;
}

// Sort key that reproduces the layout of the classical moment-cumulant table.
auto table_key(const Polynomial::Monomial& m) {
  int has_second = 0;
  int second_weight = 0;
  int second_first = 0;
  int largest = 0;
  int factors = 0;
  std::vector<int> firsts;
  for (const Symbol& s : m) {
    if (s.is_second_order()) {
      has_second = 1;
      second_weight = s.first() + s.second();
      second_first = s.first();
    } else {
      largest = std::max(largest, s.first());
      ++factors;
      firsts.push_back(-s.first());
    }
  }
  std::sort(firsts.begin(), firsts.end());
  return std::make_tuple(-has_second, -second_weight, second_first, -largest, factors, firsts);
}

}  // namespace

Symbol::Symbol(Family f, int a, int b) : family_(f) {
  if (a < 1 || a > 255 || b < 0 || b > 255) throw std::invalid_argument("symbol index out of range");
  first_ = static_cast<std::uint8_t>(a);
  second_ = static_cast<std::uint8_t>(b);
}

Symbol Symbol::second_order(Family f, int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("second-order symbol needs s, t >= 1");
  return Symbol(f, std::min(s, t), std::max(s, t));
}

Symbol Symbol::from_name(std::string_view name) {
  if (name.size() < 2 || (name[0] != 'k' && name[0] != 'a')) {
    throw std::invalid_argument("bad symbol name");
  }
  const Family f = name[0] == 'k' ? Family::kappa : Family::alpha;
  const std::string rest(name.substr(1));
  const auto comma = rest.find(',');
  try {
    if (comma == std::string::npos) return Symbol(f, std::stoi(rest), 0);
    return second_order(f, std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad symbol name");
  }
}

std::string Symbol::name() const {
  std::string out(1, family_ == Family::kappa ? 'k' : 'a');
  out += std::to_string(first_);
  if (second_) out += "," + std::to_string(second_);
  return out;
}

std::string Symbol::text() const {
  std::string out = family_ == Family::kappa ? "κ_" : "α_";
  if (second_) return out + "{" + std::to_string(first_) + "," + std::to_string(second_) + "}";
  if (first_ >= 10) return out + "{" + std::to_string(first_) + "}";
  return out + std::to_string(first_);
}

std::string Symbol::latex() const {
  std::string out = family_ == Family::kappa ? "\\kappa_" : "\\alpha_";
  if (second_) return out + "{" + std::to_string(first_) + "," + std::to_string(second_) + "}";
  if (first_ >= 10) return out + "{" + std::to_string(first_) + "}";
  return out + std::to_string(first_);
}

Polynomial::Monomial make_monomial(std::vector<Symbol> symbols) {
  std::sort(symbols.begin(), symbols.end());
  return symbols;
}

Polynomial::Polynomial(long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, Integer(constant));
}

Polynomial::Polynomial(const Integer& constant) {
  if (sgn(constant) != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::symbol(Symbol s) {
  Polynomial p;
  p.terms_.emplace(Monomial{s}, Integer(1));
  return p;
}

Polynomial Polynomial::from_terms(const std::vector<std::pair<Integer, Monomial>>& terms) {
  Polynomial p;
  for (const auto& [c, m] : terms) p.add_term(make_monomial(m), c);
  return p;
}

Integer Polynomial::coefficient(Monomial m) const {
  std::sort(m.begin(), m.end());
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  Polynomial::Monomial m;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      m.clear();
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::substitute(const std::function<Polynomial(Symbol)>& value) const {
  std::map<Symbol, Polynomial> memo;
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial term(c);
    for (const Symbol& s : m) {
      auto it = memo.find(s);
      if (it == memo.end()) it = memo.emplace(s, value(s)).first;
      term *= it->second;
    }
    out += term;
  }
  return out;
}

std::vector<std::pair<Integer, Polynomial::Monomial>> Polynomial::ordered_terms() const {
  std::vector<std::pair<Integer, Monomial>> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.emplace_back(c, m);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return table_key(x.second) < table_key(y.second);
  });
  return out;
}

namespace {

template <class SymbolFormat, class PowerFormat>
std::string render(const Polynomial& p, const char* minus, SymbolFormat sym, PowerFormat pow,
                   const char* separator) {
  const auto terms = p.ordered_terms();
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, m] : terms) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += minus;
    } else {
      out += negative ? std::string(" ") + minus + " " : std::string(" + ");
    }
    Integer mag = abs(c);
    if (m.empty() || mag != 1) out += mag.get_str();
    bool first_factor = true;
    for (const auto& [s, e] : powers(m)) {
      if (!first_factor) out += separator;
      first_factor = false;
      out += sym(s);
      if (e > 1) out += pow(e);
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string Polynomial::to_text() const {
  return render(
      *this, "−", [](const Symbol& s) { return s.text(); }, [](int e) { return superscript(e); }, "");
}

std::string Polynomial::to_latex() const {
  return render(
      *this, "-", [](const Symbol& s) { return s.latex(); },
      [](int e) { return "^" + (e >= 10 ? "{" + std::to_string(e) + "}" : std::to_string(e)); }, " ");
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [c, m] : ordered_terms()) {
    nlohmann::json names = nlohmann::json::array();
    for (const Symbol& s : m) names.push_back(s.name());
    nlohmann::json coeff;
    if (c.fits_slong_p()) {
      coeff = c.get_si();
    } else {
      coeff = c.get_str();
    }
    out.push_back({{"coeff", coeff}, {"monomial", names}});
  }
  return out;
}

}  // namespace fluct
