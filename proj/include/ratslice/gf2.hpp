#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace ratslice {

using Index = std::uint32_t;

// Sparse vector over F2, stored as its sorted support.
class VectorGF2 {
 public:
  VectorGF2() = default;
  explicit VectorGF2(std::size_t length) : length_(length) {}
  // Support must be strictly increasing and in range.
  VectorGF2(std::size_t length, std::vector<Index> support);

  // Entries listed twice cancel.
  static VectorGF2 from_indices(std::size_t length, std::vector<Index> indices);

  std::size_t length() const { return length_; }
  const std::vector<Index>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  bool contains(Index i) const;

  VectorGF2& operator+=(const VectorGF2& other);
  friend VectorGF2 operator+(VectorGF2 a, const VectorGF2& b) { return a += b; }
  friend bool operator==(const VectorGF2&, const VectorGF2&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<Index> support_;
};

// Column-major sparse matrix over F2. Columns are sorted row-index lists.
class SparseMatrixGF2 {
 public:
  SparseMatrixGF2() = default;
  SparseMatrixGF2(std::size_t rows, std::size_t cols);
  // Each column must be strictly increasing with entries < rows.
  SparseMatrixGF2(std::size_t rows, std::vector<std::vector<Index>> columns);

  static SparseMatrixGF2 from_entries(std::size_t rows, std::size_t cols,
                                      const std::vector<std::pair<Index, Index>>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;
  double density() const;
  const std::vector<Index>& column(std::size_t j) const { return columns_[j]; }
  const std::vector<std::vector<Index>>& columns() const { return columns_; }
  bool get(Index row, Index col) const;

  SparseMatrixGF2 transpose() const;
  VectorGF2 apply(const VectorGF2& v) const;
  SparseMatrixGF2 multiply(const SparseMatrixGF2& rhs) const;
  bool is_zero() const;

  friend bool operator==(const SparseMatrixGF2&, const SparseMatrixGF2&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Index>> columns_;
};

enum class Storage { automatic, sparse, dense };

// Fill ratio above which elimination switches to packed bit columns.
inline constexpr double kDenseThreshold = 0.25;

// Column echelon form with lowest-row-index pivots, processed left to right.
// Keeps, for every column, the combination of original columns that produced it.
class EchelonForm {
 public:
  explicit EchelonForm(const SparseMatrixGF2& m, Storage storage = Storage::automatic);
  ~EchelonForm();
  EchelonForm(EchelonForm&&) noexcept;
  EchelonForm& operator=(EchelonForm&&) noexcept;

  std::size_t rows() const;
  std::size_t cols() const;
  std::size_t rank() const;
  bool used_dense() const;

  // Kernel vectors in order of the column that became zero.
  const std::vector<VectorGF2>& kernel() const;

  // Columns that kept a pivot, ascending.
  std::vector<Index> pivot_columns() const;
  // Reduced form of a pivot column and the original columns summing to it.
  VectorGF2 reduced_column(Index col) const;
  VectorGF2 column_combination(Index col) const;

  struct Reduction {
    VectorGF2 residual;     // v minus the image part; its lowest index is not a pivot
    VectorGF2 combination;  // columns whose sum was subtracted
  };
  Reduction reduce(const VectorGF2& v) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::size_t rank(const SparseMatrixGF2& m);
std::vector<VectorGF2> kernel_basis(const SparseMatrixGF2& m);
// Some w with M w = v, or nullopt. Throws InputError on a length mismatch.
std::optional<VectorGF2> in_image(const SparseMatrixGF2& m, const VectorGF2& v);

}  // namespace ratslice
