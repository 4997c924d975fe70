#include "ratslice/gf2.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <variant>

#include "ratslice/error.hpp"

namespace ratslice {

namespace {

void check_support(std::size_t length, const std::vector<Index>& support, const char* what) {
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (support[k] >= length) {
      throw InputError(std::string(what) + ": index " + std::to_string(support[k]) +
                       " out of range " + std::to_string(length));
    }
    if (k > 0 && support[k - 1] >= support[k]) {
      throw InputError(std::string(what) + ": support not strictly increasing");
    }
  }
}

// Symmetric difference of two sorted lists.
void xor_into(std::vector<Index>& a, const std::vector<Index>& b, std::vector<Index>& scratch) {
  scratch.clear();
  scratch.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      scratch.push_back(*i++);
    } else if (*j < *i) {
      scratch.push_back(*j++);
    } else {
      ++i;
      ++j;
    }
  }
  scratch.insert(scratch.end(), i, a.end());
  scratch.insert(scratch.end(), j, b.end());
  a.swap(scratch);
}

struct SparseCol {
  std::vector<Index> s;

  static SparseCol make(std::size_t, std::vector<Index> support) { return {std::move(support)}; }
  bool empty() const { return s.empty(); }
  Index low() const { return s.front(); }
  void add(const SparseCol& o) {
    static thread_local std::vector<Index> scratch;
    xor_into(s, o.s, scratch);
  }
  std::vector<Index> support() const { return s; }
};

struct DenseCol {
  std::vector<std::uint64_t> w;

  static DenseCol make(std::size_t length, const std::vector<Index>& support) {
    DenseCol c;
    c.w.assign((length + 63) / 64, 0);
    for (Index i : support) c.w[i >> 6] ^= std::uint64_t{1} << (i & 63);
    return c;
  }
  bool empty() const {
    return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
  }
  Index low() const {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k]) return static_cast<Index>(k * 64 + std::countr_zero(w[k]));
    }
    return 0;
  }
  void add(const DenseCol& o) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
  }
  std::vector<Index> support() const {
    std::vector<Index> out;
    for (std::size_t k = 0; k < w.size(); ++k) {
      std::uint64_t x = w[k];
      while (x) {
        out.push_back(static_cast<Index>(k * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
    return out;
  }
};

constexpr std::int64_t kNoPivot = -1;

template <class Col>
struct Engine {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Col> reduced;
  std::vector<Col> combo;
  std::vector<std::int64_t> owner;
  std::vector<VectorGF2> kernel;
  std::size_t rank = 0;

  explicit Engine(const SparseMatrixGF2& m) : rows(m.rows()), cols(m.cols()) {
    owner.assign(rows, kNoPivot);
    reduced.reserve(cols);
    combo.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      Col c = Col::make(rows, m.column(j));
      Col k = Col::make(cols, {static_cast<Index>(j)});
      while (!c.empty() && owner[c.low()] != kNoPivot) {
        auto p = static_cast<std::size_t>(owner[c.low()]);
        c.add(reduced[p]);
        k.add(combo[p]);
      }
      if (c.empty()) {
        kernel.emplace_back(cols, k.support());
      } else {
        owner[c.low()] = static_cast<std::int64_t>(j);
        ++rank;
      }
      reduced.push_back(std::move(c));
      combo.push_back(std::move(k));
    }
  }

  EchelonForm::Reduction reduce(const VectorGF2& v) const {
    Col c = Col::make(rows, v.support());
    Col k = Col::make(cols, {});
    while (!c.empty() && owner[c.low()] != kNoPivot) {
      auto p = static_cast<std::size_t>(owner[c.low()]);
      c.add(reduced[p]);
      k.add(combo[p]);
    }
    return {VectorGF2(rows, c.support()), VectorGF2(cols, k.support())};
  }
};

}  // namespace

VectorGF2::VectorGF2(std::size_t length, std::vector<Index> support)
    : length_(length), support_(std::move(support)) {
  check_support(length_, support_, "vector");
}

VectorGF2 VectorGF2::from_indices(std::size_t length, std::vector<Index> indices) {
  std::sort(indices.begin(), indices.end());
  std::vector<Index> support;
  for (std::size_t k = 0; k < indices.size();) {
    std::size_t run = k;
    while (run < indices.size() && indices[run] == indices[k]) ++run;
    if ((run - k) % 2 == 1) support.push_back(indices[k]);
    k = run;
  }
  return VectorGF2(length, std::move(support));
}

bool VectorGF2::contains(Index i) const {
  return std::binary_search(support_.begin(), support_.end(), i);
}

VectorGF2& VectorGF2::operator+=(const VectorGF2& other) {
  if (other.length_ != length_) {
    throw InputError("vector length mismatch: " + std::to_string(length_) + " vs " +
                     std::to_string(other.length_));
  }
  std::vector<Index> scratch;
  xor_into(support_, other.support_, scratch);
  return *this;
}

SparseMatrixGF2::SparseMatrixGF2(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols) {}

SparseMatrixGF2::SparseMatrixGF2(std::size_t rows, std::vector<std::vector<Index>> columns)
    : rows_(rows), columns_(std::move(columns)) {
  for (const auto& c : columns_) check_support(rows_, c, "matrix column");
}

SparseMatrixGF2 SparseMatrixGF2::from_entries(
    std::size_t rows, std::size_t cols, const std::vector<std::pair<Index, Index>>& entries) {
  std::vector<std::vector<Index>> columns(cols);
  for (auto [r, c] : entries) {
    if (r >= rows || c >= cols) {
      throw InputError("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                       ") out of range");
    }
    columns[c].push_back(r);
  }
  for (auto& col : columns) {
    std::sort(col.begin(), col.end());
    if (std::adjacent_find(col.begin(), col.end()) != col.end()) {
      throw InputError("duplicate matrix entry");
    }
  }
  return SparseMatrixGF2(rows, std::move(columns));
}

std::size_t SparseMatrixGF2::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

double SparseMatrixGF2::density() const {
  if (rows_ == 0 || columns_.empty()) return 0.0;
  return static_cast<double>(nonzeros()) / (static_cast<double>(rows_) * columns_.size());
}

bool SparseMatrixGF2::get(Index row, Index col) const {
  const auto& c = columns_.at(col);
  return std::binary_search(c.begin(), c.end(), row);
}

SparseMatrixGF2 SparseMatrixGF2::transpose() const {
  std::vector<std::vector<Index>> t(rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (Index r : columns_[j]) t[r].push_back(static_cast<Index>(j));
  }
  return SparseMatrixGF2(columns_.size(), std::move(t));
}

VectorGF2 SparseMatrixGF2::apply(const VectorGF2& v) const {
  if (v.length() != cols()) {
    throw InputError("vector length " + std::to_string(v.length()) + " does not match " +
                     std::to_string(cols()) + " columns");
  }
  std::vector<Index> acc;
  for (Index j : v.support()) acc.insert(acc.end(), columns_[j].begin(), columns_[j].end());
  return VectorGF2::from_indices(rows_, std::move(acc));
}

SparseMatrixGF2 SparseMatrixGF2::multiply(const SparseMatrixGF2& rhs) const {
  if (rhs.rows() != cols()) throw InputError("matrix product dimension mismatch");
  std::vector<std::vector<Index>> out(rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    out[j] = apply(VectorGF2(cols(), rhs.column(j))).support();
  }
  return SparseMatrixGF2(rows_, std::move(out));
}

bool SparseMatrixGF2::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

struct EchelonForm::Impl {
  std::variant<Engine<SparseCol>, Engine<DenseCol>> engine;
};

EchelonForm::EchelonForm(const SparseMatrixGF2& m, Storage storage) {
  bool dense = storage == Storage::dense ||
               (storage == Storage::automatic && m.density() > kDenseThreshold);
  if (dense) {
    impl_.reset(new Impl{Engine<DenseCol>(m)});
  } else {
    impl_.reset(new Impl{Engine<SparseCol>(m)});
  }
}

EchelonForm::~EchelonForm() = default;
EchelonForm::EchelonForm(EchelonForm&&) noexcept = default;
EchelonForm& EchelonForm::operator=(EchelonForm&&) noexcept = default;

std::size_t EchelonForm::rows() const {
  return std::visit([](const auto& e) { return e.rows; }, impl_->engine);
}
std::size_t EchelonForm::cols() const {
  return std::visit([](const auto& e) { return e.cols; }, impl_->engine);
}
std::size_t EchelonForm::rank() const {
  return std::visit([](const auto& e) { return e.rank; }, impl_->engine);
}
bool EchelonForm::used_dense() const { return impl_->engine.index() == 1; }

const std::vector<VectorGF2>& EchelonForm::kernel() const {
  return std::visit([](const auto& e) -> const std::vector<VectorGF2>& { return e.kernel; },
                    impl_->engine);
}

std::vector<Index> EchelonForm::pivot_columns() const {
  return std::visit(
      [](const auto& e) {
        std::vector<Index> out;
        for (std::size_t j = 0; j < e.cols; ++j) {
          if (!e.reduced[j].empty()) out.push_back(static_cast<Index>(j));
        }
        return out;
      },
      impl_->engine);
}

VectorGF2 EchelonForm::reduced_column(Index col) const {
  return std::visit(
      [col](const auto& e) { return VectorGF2(e.rows, e.reduced.at(col).support()); },
      impl_->engine);
}

VectorGF2 EchelonForm::column_combination(Index col) const {
  return std::visit([col](const auto& e) { return VectorGF2(e.cols, e.combo.at(col).support()); },
                    impl_->engine);
}

EchelonForm::Reduction EchelonForm::reduce(const VectorGF2& v) const {
  if (v.length() != rows()) {
    throw InputError("vector length " + std::to_string(v.length()) + " does not match " +
                     std::to_string(rows()) + " rows");
  }
  return std::visit([&v](const auto& e) { return e.reduce(v); }, impl_->engine);
}

std::size_t rank(const SparseMatrixGF2& m) { return EchelonForm(m).rank(); }

std::vector<VectorGF2> kernel_basis(const SparseMatrixGF2& m) { return EchelonForm(m).kernel(); }

std::optional<VectorGF2> in_image(const SparseMatrixGF2& m, const VectorGF2& v) {
  if (v.length() != m.rows()) {
    throw InputError("vector length " + std::to_string(v.length()) + " does not match " +
                     std::to_string(m.rows()) + " rows");
  }
  auto r = EchelonForm(m).reduce(v);
  if (!r.residual.is_zero()) return std::nullopt;
  return r.combination;
}

}  // namespace ratslice
