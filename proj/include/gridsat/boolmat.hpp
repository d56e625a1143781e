#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gridsat {

// Dense Boolean matrix with bit-packed rows. The AND-OR product is the
// workhorse of depletion, so rows are packed into 64-bit words and the
// inner disjunction runs word-parallel. Zero-dimension matrices are
// legal and represent equations with no satisfying rows.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols, bool fill = false);

  static BoolMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);

  std::size_t count_true() const;
  bool all_false() const;

  // Elementwise AND with `other`, in place. Returns the number of cells
  // inverted true->false. Cells never flip false->true.
  std::size_t conjoin_in_place(const BoolMatrix& other);

  bool operator==(const BoolMatrix&) const = default;

  friend BoolMatrix product(const BoolMatrix& a, const BoolMatrix& b);
  friend BoolMatrix conjoin(const BoolMatrix& a, const BoolMatrix& b);
  friend BoolMatrix transpose(const BoolMatrix& a);

 private:
  void check_bounds(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;  // words per row
  std::vector<std::uint64_t> bits_;
};

// AND-OR product: result(i,j) = OR over v of a(i,v) AND b(v,j).
BoolMatrix product(const BoolMatrix& a, const BoolMatrix& b);

// Elementwise AND of same-shaped matrices.
BoolMatrix conjoin(const BoolMatrix& a, const BoolMatrix& b);

BoolMatrix transpose(const BoolMatrix& a);

inline bool is_all_false(const BoolMatrix& a) { return a.all_false(); }

}  // namespace gridsat
