#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace fluct {

/// A generator raised to +1 or -1 (u and u*).
struct Letter {
  char symbol;
  int exponent = 1;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A noncommutative monomial in the generators. The empty word is the unit.
/// Words are never simplified; each model reduces them on its own terms.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// symbol^n with exponent +1 letters.
  static Word power(char symbol, int n);
  /// Whitespace-separated letters, each a symbol optionally followed by '*'
  /// ("u u* u"). "1" or an empty string is the unit.
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }

  /// Sum of the exponents of the letters with this symbol.
  int exponent_sum(char symbol) const;
  /// True iff every letter uses `symbol`.
  bool uses_only(char symbol) const;

  /// The letters as single-letter words.
  std::vector<Word> split_letters() const;

  void append(const Word& other);
  /// Compact encoding used as a cache key ("uU" for u u*).
  void append_key(std::string& out) const;

  /// "u u* u"; the unit prints as "1".
  std::string to_string() const;

  friend Word operator+(Word a, const Word& b) {
    a.append(b);
    return a;
  }
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// The product of a run of words.
Word concatenate(const std::vector<Word>& words);

}  // namespace fluct
