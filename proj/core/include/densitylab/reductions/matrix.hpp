#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dlab {

using BitMatrix = std::vector<std::vector<std::uint8_t>>;

// A point z of 2^(omega x omega) given by a finite n x n block plus a tail
// rule: designated rows repeat a periodic pattern outside the block, every
// other entry outside the block is 0.
class MatrixCode {
 public:
  MatrixCode() = default;
  MatrixCode(BitMatrix block, std::map<std::size_t, std::vector<std::uint8_t>> periodic = {});

  static MatrixCode all_zero(std::size_t n);
  // Row j is all ones; the block is n x n.
  static MatrixCode row_ones(std::size_t j, std::size_t n);
  // "allzero:N" or "rowones:J:N".
  static MatrixCode parse_code(std::string_view code);

  std::size_t size() const { return n_; }
  const BitMatrix& block() const { return block_; }
  const std::map<std::size_t, std::vector<std::uint8_t>>& periodic() const { return periodic_; }

  int at(std::size_t i, std::size_t k) const;
  // The n x n upper-left corner of z.
  BitMatrix restrict(std::size_t n) const;
  // 1 + the last column holding a 1 in row i (0 if none), or npos when row i
  // has infinitely many ones.
  std::size_t row_bound(std::size_t i) const;
  // Least row with infinitely many ones, or npos.
  std::size_t least_infinite_row() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t n_ = 0;
  BitMatrix block_;
  std::map<std::size_t, std::vector<std::uint8_t>> periodic_;
};

// Every row of z is eventually zero.
bool p3_membership(const MatrixCode& z);

// Least j with a(j, n-1) = 1, else n; 0 on the empty matrix.
std::size_t gamma(const BitMatrix& a);

// z'(2i, 2j) = z'(2i+1, 2j+1) = z(i, j), every other entry 0.
MatrixCode doubling_transform(const MatrixCode& z);

bool is_square(const BitMatrix& a);
// a is the upper-left corner of b.
bool is_corner(const BitMatrix& a, const BitMatrix& b);

}  // namespace dlab
