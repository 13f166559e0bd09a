#include "densitylab/reductions/matrix.hpp"

#include <algorithm>
#include <charconv>

#include "densitylab/core/errors.hpp"

namespace dlab {

namespace {

std::size_t parse_index(std::string_view text, std::string_view code) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || text.empty())
    throw ParseError("bad matrix code '" + std::string(code) + "'");
  return v;
}

std::vector<std::string_view> split_colon(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t c = s.find(':', start);
    out.push_back(s.substr(start, c == std::string_view::npos ? std::string_view::npos : c - start));
    if (c == std::string_view::npos) return out;
    start = c + 1;
  }
}

}  // namespace

MatrixCode::MatrixCode(BitMatrix block, std::map<std::size_t, std::vector<std::uint8_t>> periodic)
    : n_(block.size()), block_(std::move(block)), periodic_(std::move(periodic)) {
  for (const auto& row : block_) {
    if (row.size() != n_) throw PreconditionError("matrix block must be square");
    for (auto b : row)
      if (b > 1) throw PreconditionError("matrix entries must be bits");
  }
  for (const auto& [i, p] : periodic_) {
    if (p.empty()) throw PreconditionError("periodic pattern of row " + std::to_string(i) + " is empty");
    for (auto b : p)
      if (b > 1) throw PreconditionError("pattern entries must be bits");
  }
}

MatrixCode MatrixCode::all_zero(std::size_t n) { return MatrixCode(BitMatrix(n, std::vector<std::uint8_t>(n, 0))); }

MatrixCode MatrixCode::row_ones(std::size_t j, std::size_t n) {
  BitMatrix m(n, std::vector<std::uint8_t>(n, 0));
  if (j < n) std::fill(m[j].begin(), m[j].end(), 1);
  return MatrixCode(std::move(m), {{j, {1}}});
}

MatrixCode MatrixCode::parse_code(std::string_view code) {
  auto parts = split_colon(code);
  if (parts[0] == "allzero" && parts.size() == 2) return all_zero(parse_index(parts[1], code));
  if (parts[0] == "rowones" && parts.size() == 3) return row_ones(parse_index(parts[1], code), parse_index(parts[2], code));
  throw ParseError("unknown matrix code '" + std::string(code) + "'; expected allzero:N or rowones:J:N");
}

int MatrixCode::at(std::size_t i, std::size_t k) const {
  if (i < n_ && k < n_) return block_[i][k];
  auto it = periodic_.find(i);
  if (it == periodic_.end()) return 0;
  return it->second[k % it->second.size()];
}

BitMatrix MatrixCode::restrict(std::size_t n) const {
  BitMatrix m(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m[i][k] = static_cast<std::uint8_t>(at(i, k));
  return m;
}

std::size_t MatrixCode::row_bound(std::size_t i) const {
  auto it = periodic_.find(i);
  if (it != periodic_.end() && std::find(it->second.begin(), it->second.end(), 1) != it->second.end()) return npos;
  if (i >= n_) return 0;
  for (std::size_t k = n_; k > 0; --k)
    if (block_[i][k - 1]) return k;
  return 0;
}

std::size_t MatrixCode::least_infinite_row() const {
  for (const auto& [i, p] : periodic_)
    if (row_bound(i) == npos) return i;
  return npos;
}

bool p3_membership(const MatrixCode& z) { return z.least_infinite_row() == MatrixCode::npos; }

std::size_t gamma(const BitMatrix& a) {
  std::size_t n = a.size();
  if (n == 0) return 0;
  for (std::size_t j = 0; j < n; ++j)
    if (a[j][n - 1]) return j;
  return n;
}

MatrixCode doubling_transform(const MatrixCode& z) {
  std::size_t n = z.size();
  BitMatrix m(2 * n, std::vector<std::uint8_t>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m[2 * i][2 * k] = m[2 * i + 1][2 * k + 1] = z.block()[i][k];
  std::map<std::size_t, std::vector<std::uint8_t>> periodic;
  for (const auto& [j, p] : z.periodic()) {
    std::vector<std::uint8_t> even(2 * p.size(), 0), odd(2 * p.size(), 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      even[2 * k] = p[k];
      odd[2 * k + 1] = p[k];
    }
    periodic.emplace(2 * j, std::move(even));
    periodic.emplace(2 * j + 1, std::move(odd));
  }
  return MatrixCode(std::move(m), std::move(periodic));
}

bool is_square(const BitMatrix& a) {
  for (const auto& r : a)
    if (r.size() != a.size()) return false;
  return true;
}

bool is_corner(const BitMatrix& a, const BitMatrix& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[i][k] != b[i][k]) return false;
  return true;
}

}  // namespace dlab
