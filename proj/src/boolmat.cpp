#include "gridsat/boolmat.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace gridsat {

namespace {
std::string shape(const BoolMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}
}  // namespace

BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols, bool fill)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {
  if (fill && cols_ > 0) {
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t w = 0; w < words_; ++w) bits_[r * words_ + w] = ~std::uint64_t{0};
      // keep tail bits zero so popcounts and equality stay exact
      std::size_t tail = cols_ % 64;
      if (tail != 0) bits_[r * words_ + words_ - 1] &= (std::uint64_t{1} << tail) - 1;
    }
  }
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void BoolMatrix::check_bounds(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("BoolMatrix cell (" + std::to_string(r) + "," +
                            std::to_string(c) + ") outside " + shape(*this));
  }
}

bool BoolMatrix::get(std::size_t r, std::size_t c) const {
  check_bounds(r, c);
  return (bits_[r * words_ + c / 64] >> (c % 64)) & 1;
}

void BoolMatrix::set(std::size_t r, std::size_t c, bool value) {
  check_bounds(r, c);
  std::uint64_t mask = std::uint64_t{1} << (c % 64);
  if (value)
    bits_[r * words_ + c / 64] |= mask;
  else
    bits_[r * words_ + c / 64] &= ~mask;
}

std::size_t BoolMatrix::count_true() const {
  std::size_t n = 0;
  for (std::uint64_t w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BoolMatrix::all_false() const {
  for (std::uint64_t w : bits_)
    if (w != 0) return false;
  return true;
}

std::size_t BoolMatrix::conjoin_in_place(const BoolMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("conjoin shape mismatch: " + shape(*this) + " vs " +
                                shape(other));
  }
  std::size_t flips = 0;
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    std::uint64_t before = bits_[k];
    std::uint64_t after = before & other.bits_[k];
    flips += static_cast<std::size_t>(std::popcount(before ^ after));
    bits_[k] = after;
  }
  return flips;
}

BoolMatrix product(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("product shape mismatch: " + shape(a) + " * " + shape(b));
  }
  BoolMatrix result(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::uint64_t* out = result.bits_.data() + i * result.words_;
    for (std::size_t w = 0; w < a.words_; ++w) {
      std::uint64_t word = a.bits_[i * a.words_ + w];
      while (word != 0) {
        std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        const std::uint64_t* row = b.bits_.data() + v * b.words_;
        for (std::size_t k = 0; k < b.words_; ++k) out[k] |= row[k];
      }
    }
  }
  return result;
}

BoolMatrix conjoin(const BoolMatrix& a, const BoolMatrix& b) {
  BoolMatrix result = a;
  result.conjoin_in_place(b);
  return result;
}

BoolMatrix transpose(const BoolMatrix& a) {
  BoolMatrix result(a.cols_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (a.get(i, j)) result.set(j, i, true);
  return result;
}

}  // namespace gridsat
