#include "fluct/composition.hpp"

#include <algorithm>
#include <stdexcept>

namespace fluct {

AnnulusShape::AnnulusShape(int p, int q) : p_(p), q_(q) {
  if (p < 1 || q < 1) throw std::invalid_argument("annulus needs p, q >= 1");
}

std::string AnnulusShape::to_string() const {
  return "(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
  prefix_.assign(1, 0);
  for (int n : parts_) {
    if (n < 1) throw std::invalid_argument("composition parts must be positive");
    prefix_.push_back(prefix_.back() + n);
  }
}

Composition::Composition(std::vector<int> parts, int split) : Composition(std::move(parts)) {
  if (split < 1 || split >= count()) {
    throw std::invalid_argument("annular composition needs 1 <= split < number of parts");
  }
  split_ = split;
}

int Composition::split() const {
  if (!has_split()) throw std::logic_error("composition has no split");
  return split_;
}

std::vector<int> Composition::cut_points() const {
  return std::vector<int>(prefix_.begin() + 1, prefix_.end());
}

int Composition::part_of(int j) const {
  if (j < 1 || j > total()) throw std::out_of_range("letter outside the composition");
  const auto it = std::lower_bound(prefix_.begin() + 1, prefix_.end(), j);
  return static_cast<int>(it - prefix_.begin());
}

std::string Composition::to_string() const {
  std::string out = "(";
  for (int i = 0; i < count(); ++i) {
    if (i) out += (split_ == i) ? '|' : ',';
    out += std::to_string(parts_[static_cast<std::size_t>(i)]);
  }
  return out + ")";
}

std::vector<Composition> compositions_of(int n) {
  if (n < 1) throw std::invalid_argument("compositions_of needs n >= 1");
  std::vector<Composition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int k = 1; k <= left; ++k) {
      parts.push_back(k);
      self(self, left - k);
      parts.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

std::vector<Composition> split_compositions_of(const AnnulusShape& shape) {
  std::vector<Composition> out;
  for (const auto& outer : compositions_of(shape.p())) {
    for (const auto& inner : compositions_of(shape.q())) {
      std::vector<int> parts = outer.parts();
      parts.insert(parts.end(), inner.parts().begin(), inner.parts().end());
      out.emplace_back(std::move(parts), outer.count());
    }
  }
  return out;
}

std::vector<Composition> split_compositions_of(int total) {
  std::vector<Composition> out;
  for (int p = 1; p < total; ++p) {
    auto part = split_compositions_of(AnnulusShape(p, total - p));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace fluct
