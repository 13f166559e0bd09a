#include "densitylab/core/word.hpp"

#include <charconv>

#include "densitylab/core/errors.hpp"

namespace dlab {

namespace {

bool symbol_ok(Alphabet a, int s) {
  switch (a) {
    case Alphabet::Binary: return s == 0 || s == 1;
    case Alphabet::Triadic: return s >= -1 && s <= 1;
    case Alphabet::Natural: return s >= 0;
  }
  return false;
}

void check_symbol(Alphabet a, int s) {
  if (!symbol_ok(a, s))
    throw PreconditionError("symbol " + std::to_string(s) + " outside the " + to_string(a) + " alphabet");
}

}  // namespace

std::string to_string(Alphabet a) {
  switch (a) {
    case Alphabet::Binary: return "binary";
    case Alphabet::Triadic: return "triadic";
    case Alphabet::Natural: return "natural";
  }
  return "?";
}

Word::Word(Alphabet a, std::vector<int> symbols) : alphabet_(a), s_(std::move(symbols)) {
  for (int s : s_) check_symbol(a, s);
}

Word Word::binary(std::string_view bits) { return parse(Alphabet::Binary, bits); }

Word Word::parse(Alphabet a, std::string_view text) {
  Word w(a);
  if (text.empty()) return w;
  if (a == Alphabet::Binary) {
    for (char c : text) {
      if (c != '0' && c != '1') throw ParseError("malformed binary word '" + std::string(text) + "'");
      w.s_.push_back(c - '0');
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || !symbol_ok(a, v))
      throw ParseError("malformed " + to_string(a) + " word '" + std::string(text) + "'");
    w.s_.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return w;
}

Word Word::repeat(int symbol, std::size_t n, Alphabet a) {
  check_symbol(a, symbol);
  Word w(a);
  w.s_.assign(n, symbol);
  return w;
}

Word Word::child(int symbol) const {
  check_symbol(alphabet_, symbol);
  Word w = *this;
  w.s_.push_back(symbol);
  return w;
}

void Word::push_back(int symbol) {
  check_symbol(alphabet_, symbol);
  s_.push_back(symbol);
}

Word Word::prefix(std::size_t n) const {
  Word w(alphabet_);
  w.s_.assign(s_.begin(), s_.begin() + static_cast<std::ptrdiff_t>(std::min(n, s_.size())));
  return w;
}

Word Word::suffix(std::size_t from) const {
  Word w(alphabet_);
  if (from < s_.size()) w.s_.assign(s_.begin() + static_cast<std::ptrdiff_t>(from), s_.end());
  return w;
}

Word Word::concat(const Word& tail) const {
  Word w = *this;
  w.s_.insert(w.s_.end(), tail.s_.begin(), tail.s_.end());
  return w;
}

bool Word::is_prefix_of(const Word& other) const {
  if (s_.size() > other.s_.size()) return false;
  for (std::size_t i = 0; i < s_.size(); ++i)
    if (s_[i] != other.s_[i]) return false;
  return true;
}

std::string Word::str() const {
  std::string out;
  if (alphabet_ == Alphabet::Binary) {
    out.reserve(s_.size());
    for (int s : s_) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(s_[i]);
  }
  return out;
}

bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Word> binary_level(std::size_t n) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  std::vector<int> bits(n, 0);
  for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
    for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<int>((code >> (n - 1 - i)) & 1U);
    out.emplace_back(Alphabet::Binary, bits);
  }
  return out;
}

std::vector<Word> binary_words_upto(std::size_t n) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto lvl = binary_level(len);
    out.insert(out.end(), lvl.begin(), lvl.end());
  }
  return out;
}

Word length_lex_next(const Word& w) {
  std::vector<int> s = w.symbols();
  std::size_t i = s.size();
  while (i > 0 && s[i - 1] == 1) {
    s[i - 1] = 0;
    --i;
  }
  if (i == 0) return Word::zeros(s.size() + 1);
  s[i - 1] = 1;
  return Word(Alphabet::Binary, std::move(s));
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL ^ w.size();
  for (int s : w.symbols()) h = (h ^ static_cast<std::size_t>(s + 2)) * 1099511628211ULL;
  return h;
}

}  // namespace dlab
