#include "hopfkit/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef HOPFKIT_HAVE_OPENMP
#include <omp.h>
#endif

namespace hopfkit::kernels {

namespace {

constexpr std::size_t kParallelWorkThreshold = 1u << 14;

// Sparse accumulator for one output column.
class Accumulator {
 public:
  Accumulator(std::size_t rows, FieldSpec field)
      : values_(rows, Scalar(field, 0)), occupied_(rows, 0), zero_(field, 0) {}

  void add(std::uint32_t row, const Scalar& v) {
    if (!occupied_[row]) {
      occupied_[row] = 1;
      touched_.push_back(row);
      values_[row] = v;
    } else {
      values_[row] += v;
    }
  }

  void flush(std::vector<Entry>& out) {
    std::sort(touched_.begin(), touched_.end());
    for (auto row : touched_) {
      if (!values_[row].is_zero()) out.push_back({row, values_[row]});
      values_[row] = zero_;
      occupied_[row] = 0;
    }
    touched_.clear();
  }

 private:
  std::vector<Scalar> values_;
  std::vector<char> occupied_;
  std::vector<std::uint32_t> touched_;
  Scalar zero_;
};

void check_multiply_shapes(const CscMatrix& a, const CscMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("kernel multiply: inner dimensions differ");
}

void accumulate_column(const CscMatrix& a, const CscMatrix& b, std::size_t j, Accumulator& acc) {
  for (auto k = b.col_ptr[j]; k < b.col_ptr[j + 1]; ++k) {
    const auto& bk = b.entries[k];
    for (auto t = a.col_ptr[bk.row]; t < a.col_ptr[bk.row + 1]; ++t) {
      acc.add(a.entries[t].row, a.entries[t].value * bk.value);
    }
  }
}

void kron_column(const CscMatrix& a, const CscMatrix& b, std::size_t ja, std::size_t jb,
                 std::vector<Entry>& out) {
  for (auto s = a.col_ptr[ja]; s < a.col_ptr[ja + 1]; ++s) {
    const auto& ea = a.entries[s];
    for (auto t = b.col_ptr[jb]; t < b.col_ptr[jb + 1]; ++t) {
      const auto& eb = b.entries[t];
      out.push_back({static_cast<std::uint32_t>(ea.row * b.rows + eb.row), ea.value * eb.value});
    }
  }
}

CscMatrix assemble(std::size_t rows, std::vector<std::vector<Entry>>& columns) {
  CscMatrix out;
  out.rows = rows;
  out.cols = columns.size();
  out.col_ptr.assign(columns.size() + 1, 0);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    out.col_ptr[j + 1] = out.col_ptr[j] + columns[j].size();
  }
  out.entries.resize(out.col_ptr.back());
#ifdef HOPFKIT_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(columns.size()); ++j) {
    std::move(columns[j].begin(), columns[j].end(), out.entries.begin() + out.col_ptr[j]);
  }
  return out;
}

}  // namespace

int max_threads() {
#ifdef HOPFKIT_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

CscMatrix multiply(const CscMatrix& a, const CscMatrix& b, FieldSpec field) {
  check_multiply_shapes(a, b);
  CscMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.col_ptr.reserve(b.cols + 1);
  Accumulator acc(a.rows, field);
  for (std::size_t j = 0; j < b.cols; ++j) {
    accumulate_column(a, b, j, acc);
    acc.flush(out.entries);
    out.col_ptr.push_back(out.entries.size());
  }
  return out;
}

CscMatrix kronecker(const CscMatrix& a, const CscMatrix& b) {
  CscMatrix out;
  out.rows = a.rows * b.rows;
  out.cols = a.cols * b.cols;
  out.col_ptr.reserve(out.cols + 1);
  out.entries.reserve(a.entries.size() * b.entries.size());
  for (std::size_t ja = 0; ja < a.cols; ++ja) {
    for (std::size_t jb = 0; jb < b.cols; ++jb) {
      kron_column(a, b, ja, jb, out.entries);
      out.col_ptr.push_back(out.entries.size());
    }
  }
  return out;
}

}  // namespace serial

namespace parallel {

CscMatrix multiply(const CscMatrix& a, const CscMatrix& b, FieldSpec field) {
  check_multiply_shapes(a, b);
  std::vector<std::vector<Entry>> columns(b.cols);
#ifdef HOPFKIT_HAVE_OPENMP
#pragma omp parallel
#endif
  {
    Accumulator acc(a.rows, field);
#ifdef HOPFKIT_HAVE_OPENMP
#pragma omp for schedule(dynamic, 16)
#endif
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(b.cols); ++j) {
      accumulate_column(a, b, static_cast<std::size_t>(j), acc);
      acc.flush(columns[j]);
    }
  }
  return assemble(a.rows, columns);
}

CscMatrix kronecker(const CscMatrix& a, const CscMatrix& b) {
  std::vector<std::vector<Entry>> columns(a.cols * b.cols);
#ifdef HOPFKIT_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(columns.size()); ++j) {
    kron_column(a, b, static_cast<std::size_t>(j) / b.cols, static_cast<std::size_t>(j) % b.cols,
                columns[j]);
  }
  return assemble(a.rows * b.rows, columns);
}

}  // namespace parallel

CscMatrix multiply(const CscMatrix& a, const CscMatrix& b, FieldSpec field) {
  // Rough flop estimate: nnz(b) times the average column length of a.
  auto avg = a.cols == 0 ? 0 : a.entries.size() / a.cols + 1;
  if (max_threads() > 1 && b.entries.size() * avg >= kParallelWorkThreshold) {
    return parallel::multiply(a, b, field);
  }
  return serial::multiply(a, b, field);
}

CscMatrix kronecker(const CscMatrix& a, const CscMatrix& b) {
  if (max_threads() > 1 && a.entries.size() * b.entries.size() >= kParallelWorkThreshold) {
    return parallel::kronecker(a, b);
  }
  return serial::kronecker(a, b);
}

}  // namespace hopfkit::kernels
