#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace dlab {

enum class Alphabet { Binary, Triadic, Natural };

std::string to_string(Alphabet a);

// Finite sequence over a declared alphabet: {0,1}, {-1,0,1} or the naturals.
// Ordering is lexicographic with a proper prefix before its extensions.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet a) : alphabet_(a) {}
  Word(Alphabet a, std::vector<int> symbols);

  static Word binary(std::string_view bits);
  // Binary words are plain digit strings; triadic and natural words are
  // comma separated ("-1,0,1"). The empty string is the empty word.
  static Word parse(Alphabet a, std::string_view text);
  static Word repeat(int symbol, std::size_t n, Alphabet a = Alphabet::Binary);
  static Word zeros(std::size_t n) { return repeat(0, n); }
  static Word ones(std::size_t n) { return repeat(1, n); }

  Alphabet alphabet() const { return alphabet_; }
  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  int operator[](std::size_t i) const { return s_[i]; }
  int back() const { return s_.back(); }
  const std::vector<int>& symbols() const { return s_; }

  Word child(int symbol) const;
  Word prefix(std::size_t n) const;
  Word suffix(std::size_t from) const;
  Word concat(const Word& tail) const;
  void push_back(int symbol);
  void pop_back() { s_.pop_back(); }

  bool is_prefix_of(const Word& other) const;
  bool comparable(const Word& other) const { return is_prefix_of(other) || other.is_prefix_of(*this); }

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) { return a.s_ == b.s_; }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) { return a.s_ <=> b.s_; }

 private:
  Alphabet alphabet_ = Alphabet::Binary;
  std::vector<int> s_;
};

// Shorter words first, then lexicographic.
bool length_lex_less(const Word& a, const Word& b);

// All binary words of length n in lexicographic order.
std::vector<Word> binary_level(std::size_t n);
// All binary words of length <= n in length-lexicographic order.
std::vector<Word> binary_words_upto(std::size_t n);
// Successor of w in length-lexicographic order among binary words.
Word length_lex_next(const Word& w);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace dlab
