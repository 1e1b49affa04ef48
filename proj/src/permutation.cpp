#include "fluct/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace fluct {

namespace {

std::vector<int> sorted_unique_points(std::span<const int> points, int n) {
  std::vector<int> out(points.begin(), points.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::invalid_argument("point set contains duplicates");
  }
  if (!out.empty() && (out.front() < 1 || out.back() > n)) {
    throw std::invalid_argument("point set is not contained in [n]");
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n < 1) {
    throw std::invalid_argument("permutation must act on at least one point");
  }
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int v : images_) {
    if (v < 1 || v > n || hit[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("images do not form a bijection of [n]");
    }
    hit[static_cast<std::size_t>(v - 1)] = 1;
  }
  // Scanning starting points in increasing order yields canonical cycles.
  cycle_index_.assign(static_cast<std::size_t>(n), -1);
  for (int start = 1; start <= n; ++start) {
    if (cycle_index_[static_cast<std::size_t>(start - 1)] >= 0) continue;
    const int idx = static_cast<int>(cycles_.size());
    Cycle cycle;
    int i = start;
    do {
      cycle.push_back(i);
      cycle_index_[static_cast<std::size_t>(i - 1)] = idx;
      i = images_[static_cast<std::size_t>(i - 1)];
    } while (i != start);
    cycles_.push_back(std::move(cycle));
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity needs n >= 1");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::full_cycle(int n) {
  if (n < 1) throw std::invalid_argument("full_cycle needs n >= 1");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::annular_cycle(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("annular_cycle needs p, q >= 1");
  return direct_sum(full_cycle(p), full_cycle(q));
}

Permutation Permutation::from_cycles(int n, const std::vector<Cycle>& cycles) {
  if (n < 1) throw std::invalid_argument("from_cycles needs n >= 1");
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int from = c[k];
      const int to = c[(k + 1) % c.size()];
      if (from < 1 || from > n || to < 1 || to > n) {
        throw std::invalid_argument("cycle entry outside [n]");
      }
      if (img[static_cast<std::size_t>(from - 1)] != 0) {
        throw std::invalid_argument("point appears in two cycles");
      }
      img[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (img[static_cast<std::size_t>(i)] == 0) img[static_cast<std::size_t>(i)] = i + 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text, int n) {
  std::vector<Cycle> cycles;
  int largest = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    Cycle cycle;
    skip_ws();
    while (true) {
      skip_ws();
      if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw std::invalid_argument("expected a point in cycle notation");
      }
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000) throw std::invalid_argument("point too large");
        ++i;
      }
      cycle.push_back(v);
      largest = std::max(largest, v);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw std::invalid_argument("expected ',' or ')' in cycle notation");
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  if (n == 0) n = largest;
  if (n < 1) throw std::invalid_argument("empty cycle notation needs an explicit size");
  if (largest > n) throw std::invalid_argument("cycle entry exceeds the stated size");
  return from_cycles(n, cycles);
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    img[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(img));
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& c : cycles_) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> img(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) img[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation(std::move(img));
}

bool metric_leq(const Permutation& a, const Permutation& b) {
  return a.length() + compose(a.inverse(), b).length() == b.length();
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> img = a.images();
  img.reserve(img.size() + b.images().size());
  for (int v : b.images()) img.push_back(v + a.size());
  return Permutation(std::move(img));
}

int Restriction::at(int point) const {
  const auto it = std::lower_bound(points.begin(), points.end(), point);
  if (it == points.end() || *it != point) {
    throw std::out_of_range("point outside the restriction");
  }
  const int label = static_cast<int>(it - points.begin()) + 1;
  return points[static_cast<std::size_t>(perm(label) - 1)];
}

Restriction restrict_to(const Permutation& a, std::span<const int> points) {
  if (points.empty()) throw std::invalid_argument("restrict_to: empty point set");
  std::vector<int> pts = sorted_unique_points(points, a.size());
  std::vector<int> label(static_cast<std::size_t>(a.size()), 0);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    label[static_cast<std::size_t>(pts[k] - 1)] = static_cast<int>(k) + 1;
  }
  std::vector<int> img(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    int j = a(pts[k]);
    while (label[static_cast<std::size_t>(j - 1)] == 0) j = a(j);
    img[k] = label[static_cast<std::size_t>(j - 1)];
  }
  return Restriction{std::move(pts), Permutation(std::move(img))};
}

bool separates_points(const Permutation& a, std::span<const int> points) {
  std::vector<char> seen(static_cast<std::size_t>(a.cycle_count()), 0);
  for (int x : points) {
    if (x < 1 || x > a.size()) throw std::invalid_argument("separates_points: point outside [n]");
    auto& flag = seen[static_cast<std::size_t>(a.cycle_of(x))];
    if (flag) return false;
    flag = 1;
  }
  return true;
}

bool leaves_invariant(const Permutation& a, std::span<const int> points) {
  std::vector<char> in(static_cast<std::size_t>(a.size()), 0);
  for (int x : points) {
    if (x < 1 || x > a.size()) throw std::invalid_argument("leaves_invariant: point outside [n]");
    in[static_cast<std::size_t>(x - 1)] = 1;
  }
  for (int x : points) {
    if (!in[static_cast<std::size_t>(a(x) - 1)]) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Permutation& a) { return os << a.to_string(); }

}  // namespace fluct
