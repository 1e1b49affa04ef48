#include "fluct/word.hpp"

#include <cctype>
#include <stdexcept>

namespace fluct {

Word Word::power(char symbol, int n) {
  if (n < 0) throw std::invalid_argument("Word::power needs n >= 0");
  return Word(std::vector<Letter>(static_cast<std::size_t>(n), Letter{symbol, 1}));
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1') {
      ++i;
      continue;
    }
    if (!std::islower(static_cast<unsigned char>(c))) {
      throw std::invalid_argument(std::string("generators are lower-case letters, got: ") + c);
    }
    Letter l{c, 1};
    ++i;
    if (i < text.size() && text[i] == '*') {
      l.exponent = -1;
      ++i;
    }
    letters.push_back(l);
  }
  return Word(std::move(letters));
}

int Word::exponent_sum(char symbol) const {
  int s = 0;
  for (const auto& l : letters_) {
    if (l.symbol == symbol) s += l.exponent;
  }
  return s;
}

bool Word::uses_only(char symbol) const {
  for (const auto& l : letters_) {
    if (l.symbol != symbol) return false;
  }
  return true;
}

std::vector<Word> Word::split_letters() const {
  std::vector<Word> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(Word{l});
  return out;
}

void Word::append(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

void Word::append_key(std::string& out) const {
  for (const auto& l : letters_) {
    // Upper case marks the adjoint; symbols are lower-case letters.
    out += l.exponent > 0 ? l.symbol : static_cast<char>(std::toupper(static_cast<unsigned char>(l.symbol)));
  }
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ' ';
    out += letters_[k].symbol;
    if (letters_[k].exponent < 0) out += '*';
  }
  return out;
}

Word concatenate(const std::vector<Word>& words) {
  Word out;
  for (const auto& w : words) out.append(w);
  return out;
}

}  // namespace fluct
