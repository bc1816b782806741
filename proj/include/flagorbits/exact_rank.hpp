#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace flagorbits {

/// Dense row-major integer matrix used for exact dimension counts.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t& operator()(int r, int c) { return data_[index(r, c)]; }
  std::int64_t operator()(int r, int c) const { return data_[index(r, c)]; }

  /// Horizontal concatenation [a | b].
  static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() && a.cols() && b.cols())
      throw std::invalid_argument("hcat: row count mismatch");
    int rows = a.cols() ? a.rows() : b.rows();
    IntMatrix m(rows, a.cols() + b.cols());
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
      for (int c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
    }
    return m;
  }

private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Every division is
/// exact; products are formed in 128 bits and a result that does not fit in
/// 64 bits raises std::overflow_error.
inline int exact_rank(IntMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  int rank = 0;
  std::int64_t prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < cols; ++c) std::swap(m(pivot, c), m(rank, c));

    const __int128 p = m(rank, col);
    for (int r = rank + 1; r < rows; ++r) {
      const __int128 f = m(r, col);
      for (int c = col + 1; c < cols; ++c) {
        __int128 v = (p * m(r, c) - f * m(rank, c)) / prev;
        if (v > std::numeric_limits<std::int64_t>::max() ||
            v < std::numeric_limits<std::int64_t>::min())
          throw std::overflow_error("exact_rank: entry exceeds 64 bits");
        m(r, c) = static_cast<std::int64_t>(v);
      }
      m(r, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace flagorbits
