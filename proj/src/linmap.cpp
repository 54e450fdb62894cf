#include "hopfkit/linmap.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hopfkit/error.hpp"

namespace hopfkit {

TensorShape::TensorShape(std::initializer_list<std::size_t> factors)
    : TensorShape(std::vector<std::size_t>(factors)) {}

TensorShape::TensorShape(std::vector<std::size_t> factors) : factors_(std::move(factors)) {
  for (auto f : factors_) {
    if (f == 0) throw Error(ErrorKind::shape_error, "tensor factor of dimension 0");
  }
}

TensorShape TensorShape::power(std::size_t n, std::size_t k) {
  return TensorShape(std::vector<std::size_t>(k, n));
}

std::size_t TensorShape::total() const noexcept {
  return std::accumulate(factors_.begin(), factors_.end(), std::size_t{1}, std::multiplies<>());
}

TensorShape TensorShape::operator+(const TensorShape& rhs) const {
  auto out = factors_;
  out.insert(out.end(), rhs.factors_.begin(), rhs.factors_.end());
  return TensorShape(std::move(out));
}

std::string TensorShape::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? "," : "") << factors_[i];
  os << ']';
  return os.str();
}

std::string Witness::to_string() const {
  if (shape_mismatch) return "shape mismatch: " + detail;
  std::ostringstream os;
  os << "first difference at (row " << row << ", col " << col << "): " << lhs.value_or(Scalar())
     << " vs " << rhs.value_or(Scalar());
  return os.str();
}

LinMap::LinMap(FieldSpec field, TensorShape dom, TensorShape cod)
    : field_(field), dom_(std::move(dom)), cod_(std::move(cod)) {
  matrix_.rows = cod_.total();
  matrix_.cols = dom_.total();
  matrix_.col_ptr.assign(matrix_.cols + 1, 0);
}

LinMap::LinMap(FieldSpec field, TensorShape dom, TensorShape cod, kernels::CscMatrix m)
    : field_(field), dom_(std::move(dom)), cod_(std::move(cod)), matrix_(std::move(m)) {
  if (matrix_.rows != cod_.total() || matrix_.cols != dom_.total()) {
    throw Error(ErrorKind::shape_error, "matrix is " + std::to_string(matrix_.rows) + "x" +
                                            std::to_string(matrix_.cols) + " but shapes are " +
                                            dom_.to_string() + " -> " + cod_.to_string());
  }
}

LinMap LinMap::from_csc(FieldSpec field, TensorShape dom, TensorShape cod, kernels::CscMatrix m) {
  return LinMap(field, std::move(dom), std::move(cod), std::move(m));
}

LinMap LinMap::from_columns(FieldSpec field, TensorShape dom, TensorShape cod,
                            std::vector<std::vector<Entry>> columns) {
  kernels::CscMatrix m;
  m.rows = cod.total();
  m.cols = dom.total();
  if (columns.size() != m.cols) {
    throw Error(ErrorKind::shape_error, "expected " + std::to_string(m.cols) + " columns, got " +
                                            std::to_string(columns.size()));
  }
  for (auto& col : columns) {
    std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    for (std::size_t k = 0; k < col.size();) {
      if (col[k].row >= m.rows) throw Error(ErrorKind::shape_error, "row index out of range");
      if (col[k].value.field() != field) {
        throw Error(ErrorKind::shape_error, "scalar from a different field");
      }
      Scalar v = col[k].value;
      auto row = col[k].row;
      ++k;
      while (k < col.size() && col[k].row == row) v += col[k++].value;
      if (!v.is_zero()) m.entries.push_back({row, v});
    }
    m.col_ptr.push_back(m.entries.size());
  }
  return LinMap(field, std::move(dom), std::move(cod), std::move(m));
}

LinMap LinMap::from_rows(FieldSpec field, TensorShape dom, TensorShape cod,
                         const std::vector<std::vector<Scalar>>& rows) {
  auto nrows = cod.total(), ncols = dom.total();
  if (rows.size() != nrows) {
    throw Error(ErrorKind::shape_error, "expected " + std::to_string(nrows) + " rows, got " +
                                            std::to_string(rows.size()));
  }
  std::vector<std::vector<Entry>> columns(ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    if (rows[r].size() != ncols) {
      throw Error(ErrorKind::shape_error, "row " + std::to_string(r) + " has " +
                                              std::to_string(rows[r].size()) + " entries, expected " +
                                              std::to_string(ncols));
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      if (!rows[r][c].is_zero()) columns[c].push_back({static_cast<std::uint32_t>(r), rows[r][c]});
    }
  }
  return from_columns(field, std::move(dom), std::move(cod), std::move(columns));
}

LinMap LinMap::from_ints(FieldSpec field, TensorShape dom, TensorShape cod,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<Scalar>> scalars;
  scalars.reserve(rows.size());
  for (const auto& row : rows) {
    auto& out = scalars.emplace_back();
    for (auto v : row) out.emplace_back(field, v);
  }
  return from_rows(field, std::move(dom), std::move(cod), scalars);
}

Scalar LinMap::at(std::size_t row, std::size_t col) const {
  auto c = column(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, std::size_t r) { return e.row < r; });
  if (it != c.end() && it->row == row) return it->value;
  return Scalar(field_, 0);
}

std::span<const LinMap::Entry> LinMap::column(std::size_t col) const {
  return {matrix_.entries.data() + matrix_.col_ptr[col],
          matrix_.entries.data() + matrix_.col_ptr[col + 1]};
}

std::vector<std::vector<Scalar>> LinMap::to_dense() const {
  std::vector<std::vector<Scalar>> out(rows(), std::vector<Scalar>(cols(), Scalar(field_, 0)));
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& e : column(c)) out[e.row][c] = e.value;
  }
  return out;
}

LinMap LinMap::reshaped(TensorShape dom, TensorShape cod) const {
  if (dom.total() != dom_.total() || cod.total() != cod_.total()) {
    throw Error(ErrorKind::shape_mismatch, "reshape " + dom_.to_string() + "->" + cod_.to_string() +
                                               " to " + dom.to_string() + "->" + cod.to_string());
  }
  return LinMap(field_, std::move(dom), std::move(cod), matrix_);
}

LinMap LinMap::transposed() const {
  std::vector<std::vector<Entry>> columns(rows());
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& e : column(c)) columns[e.row].push_back({static_cast<std::uint32_t>(c), e.value});
  }
  return from_columns(field_, cod_, dom_, std::move(columns));
}

namespace {

void require_same_shapes(const LinMap& a, const LinMap& b, const char* op) {
  if (a.dom() != b.dom() || a.cod() != b.cod() || a.field() != b.field()) {
    throw Error(ErrorKind::shape_mismatch,
                std::string(op) + ": " + a.dom().to_string() + "->" + a.cod().to_string() + " vs " +
                    b.dom().to_string() + "->" + b.cod().to_string());
  }
}

LinMap combine(const LinMap& a, const LinMap& b, bool subtract) {
  std::vector<std::vector<LinMap::Entry>> columns(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    auto& col = columns[c];
    for (const auto& e : a.column(c)) col.push_back(e);
    for (const auto& e : b.column(c)) col.push_back({e.row, subtract ? -e.value : e.value});
  }
  return LinMap::from_columns(a.field(), a.dom(), a.cod(), std::move(columns));
}

}  // namespace

LinMap LinMap::operator+(const LinMap& rhs) const {
  require_same_shapes(*this, rhs, "add");
  return combine(*this, rhs, false);
}

LinMap LinMap::operator-(const LinMap& rhs) const {
  require_same_shapes(*this, rhs, "subtract");
  return combine(*this, rhs, true);
}

LinMap LinMap::operator*(const Scalar& s) const {
  if (s.is_zero()) return LinMap(field_, dom_, cod_);
  auto m = matrix_;
  for (auto& e : m.entries) e.value *= s;
  return LinMap(field_, dom_, cod_, std::move(m));
}

LinMap identity(FieldSpec field, const TensorShape& shape) {
  kernels::CscMatrix m;
  m.rows = m.cols = shape.total();
  m.entries.reserve(m.cols);
  for (std::size_t i = 0; i < m.cols; ++i) {
    m.entries.push_back({static_cast<std::uint32_t>(i), Scalar(field, 1)});
    m.col_ptr.push_back(i + 1);
  }
  return LinMap::from_csc(field, shape, shape, std::move(m));
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (f.cod() != g.dom()) {
    throw Error(ErrorKind::shape_mismatch,
                "compose: codomain " + f.cod().to_string() + " vs domain " + g.dom().to_string());
  }
  if (f.field() != g.field()) throw Error(ErrorKind::shape_mismatch, "compose: fields differ");
  return LinMap::from_csc(f.field(), f.dom(), g.cod(), kernels::multiply(g.csc(), f.csc(), f.field()));
}

LinMap tensor(const LinMap& f, const LinMap& g) {
  if (f.field() != g.field()) throw Error(ErrorKind::shape_mismatch, "tensor: fields differ");
  return LinMap::from_csc(f.field(), f.dom() + g.dom(), f.cod() + g.cod(),
                          kernels::kronecker(f.csc(), g.csc()));
}

LinMap flip(FieldSpec field, std::size_t m, std::size_t n) {
  return permute_factors(field, TensorShape{m, n}, {1, 0});
}

LinMap permute_factors(FieldSpec field, const TensorShape& dom, const std::vector<std::size_t>& perm) {
  const auto& in = dom.factors();
  if (perm.size() != in.size()) throw Error(ErrorKind::shape_mismatch, "permutation length");
  std::vector<std::size_t> out_factors;
  for (auto p : perm) out_factors.push_back(in.at(p));
  TensorShape cod(out_factors);
  auto k = in.size();
  // Strides of the codomain for each input factor.
  std::vector<std::size_t> cod_stride(k, 1), stride_for_input(k, 0);
  for (std::size_t i = k; i-- > 1;) cod_stride[i - 1] = cod_stride[i] * out_factors[i];
  for (std::size_t pos = 0; pos < k; ++pos) stride_for_input[perm[pos]] = cod_stride[pos];

  kernels::CscMatrix m;
  m.rows = m.cols = dom.total();
  m.entries.reserve(m.cols);
  std::vector<std::size_t> digits(k, 0);
  for (std::size_t c = 0; c < m.cols; ++c) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < k; ++i) r += digits[i] * stride_for_input[i];
    m.entries.push_back({static_cast<std::uint32_t>(r), Scalar(field, 1)});
    m.col_ptr.push_back(c + 1);
    for (std::size_t i = k; i-- > 0;) {
      if (++digits[i] < in[i]) break;
      digits[i] = 0;
    }
  }
  return LinMap::from_csc(field, dom, cod, std::move(m));
}

Equality equal(const LinMap& lhs, const LinMap& rhs) {
  if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod() || lhs.field() != rhs.field()) {
    Witness w;
    w.shape_mismatch = true;
    w.detail = lhs.dom().to_string() + "->" + lhs.cod().to_string() + " over " +
               lhs.field().to_string() + " vs " + rhs.dom().to_string() + "->" +
               rhs.cod().to_string() + " over " + rhs.field().to_string();
    return {false, w};
  }
  if (lhs.csc() == rhs.csc()) return {true, std::nullopt};
  auto diff = lhs - rhs;
  std::optional<std::pair<std::size_t, std::size_t>> first;
  for (std::size_t c = 0; c < diff.cols(); ++c) {
    auto col = diff.column(c);
    if (col.empty()) continue;
    std::pair<std::size_t, std::size_t> cand{col.front().row, c};
    if (!first || cand < *first) first = cand;
  }
  Witness w;
  w.row = first->first;
  w.col = first->second;
  w.lhs = lhs.at(w.row, w.col);
  w.rhs = rhs.at(w.row, w.col);
  return {false, w};
}

std::string to_string(const LinMap& f) {
  std::ostringstream os;
  os << f.dom().to_string() << " -> " << f.cod().to_string() << " over " << f.field().to_string()
     << "\n";
  for (const auto& row : f.to_dense()) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
    os << "\n";
  }
  return os.str();
}

}  // namespace hopfkit
