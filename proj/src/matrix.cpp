#include "wnc/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace wnc {

namespace {

// In-place Gaussian elimination. Row operations are mirrored onto the
// companion when given. With `reduced` set, pivot rows are normalized and
// cleared above as well as below (RREF). Returns the pivot columns.
std::vector<size_t> eliminate(Matrix& m, Matrix* companion, bool reduced) {
  const Field& f = m.field();
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t sel = m.rows();
    for (size_t r = row; r < m.rows(); ++r) {
      if (m.value_at(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (size_t c = 0; c < m.cols(); ++c) {
        uint32_t tmp = m.value_at(row, c);
        m.set_value(row, c, m.value_at(sel, c));
        m.set_value(sel, c, tmp);
      }
      if (companion) {
        for (size_t c = 0; c < companion->cols(); ++c) {
          uint32_t tmp = companion->value_at(row, c);
          companion->set_value(row, c, companion->value_at(sel, c));
          companion->set_value(sel, c, tmp);
        }
      }
    }
    if (reduced) {
      uint32_t inv = f.inv_v(m.value_at(row, col));
      if (inv != 1) {
        for (size_t c = 0; c < m.cols(); ++c)
          m.set_value(row, c, f.mul_v(m.value_at(row, c), inv));
        if (companion) {
          for (size_t c = 0; c < companion->cols(); ++c)
            companion->set_value(row, c,
                                 f.mul_v(companion->value_at(row, c), inv));
        }
      }
    }
    size_t start = reduced ? 0 : row + 1;
    for (size_t r = start; r < m.rows(); ++r) {
      if (r == row) continue;
      uint32_t factor = f.div_v(m.value_at(r, col), m.value_at(row, col));
      if (factor == 0) continue;
      for (size_t c = 0; c < m.cols(); ++c) {
        uint32_t sub = f.mul_v(factor, m.value_at(row, c));
        m.set_value(r, c, f.sub_v(m.value_at(r, c), sub));
      }
      if (companion) {
        for (size_t c = 0; c < companion->cols(); ++c) {
          uint32_t sub = f.mul_v(factor, companion->value_at(row, c));
          companion->set_value(r, c,
                               f.sub_v(companion->value_at(r, c), sub));
        }
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(Field field, size_t rows, size_t cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      vals_(rows * cols, 0) {}

Matrix Matrix::identity(const Field& field, size_t n) {
  Matrix m(field, n, n);
  for (size_t i = 0; i < n; ++i) m.set_value(i, i, 1);
  return m;
}

Matrix Matrix::from_values(Field field, size_t rows, size_t cols,
                           std::vector<uint32_t> values) {
  if (values.size() != rows * cols)
    throw std::invalid_argument("value count does not match dimensions");
  Matrix m(std::move(field), rows, cols);
  for (uint32_t v : values) {
    if (v >= m.field_.order())
      throw std::invalid_argument("matrix entry outside field");
  }
  m.vals_ = std::move(values);
  return m;
}

Matrix Matrix::from_rows(const Field& field, size_t cols,
                         const std::vector<std::vector<uint32_t>>& rows) {
  Matrix m(field, rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("row length does not match column count");
    m.set_row_values(r, rows[r]);
  }
  return m;
}

Matrix Matrix::vandermonde(const Field& field, size_t rows,
                           const std::vector<Fe>& points) {
  for (size_t i = 0; i < points.size(); ++i) {
    if (!points[i].field().same_as(field))
      throw std::invalid_argument("vandermonde point from a different field");
    for (size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j])
        throw std::invalid_argument("vandermonde points must be distinct");
    }
  }
  Matrix m(field, rows, points.size());
  for (size_t j = 0; j < points.size(); ++j) {
    uint32_t v = 1;  // points[j]^0, also for the zero point
    for (size_t i = 0; i < rows; ++i) {
      m.set_value(i, j, v);
      v = field.mul_v(v, points[j].value());
    }
  }
  return m;
}

Fe Matrix::at(size_t r, size_t c) const {
  return Fe(field_, vals_[r * cols_ + c]);
}

void Matrix::set(size_t r, size_t c, const Fe& v) {
  if (!v.field().same_as(field_))
    throw std::invalid_argument("entry from a different field");
  vals_[r * cols_ + c] = v.value();
}

void Matrix::set_value(size_t r, size_t c, uint32_t v) {
  vals_[r * cols_ + c] = v;
}

std::vector<uint32_t> Matrix::row_values(size_t r) const {
  return std::vector<uint32_t>(vals_.begin() + r * cols_,
                               vals_.begin() + (r + 1) * cols_);
}

void Matrix::set_row_values(size_t r, const std::vector<uint32_t>& vals) {
  if (vals.size() != cols_)
    throw std::invalid_argument("row length does not match column count");
  for (size_t c = 0; c < cols_; ++c) vals_[r * cols_ + c] = vals[c];
}

Matrix Matrix::stacked(const Matrix& bottom) const {
  if (cols_ != bottom.cols_)
    throw std::invalid_argument("stack: column counts differ");
  if (!field_.same_as(bottom.field_))
    throw std::invalid_argument("stack: fields differ");
  Matrix out(field_, rows_ + bottom.rows_, cols_);
  out.vals_ = vals_;
  out.vals_.insert(out.vals_.end(), bottom.vals_.begin(), bottom.vals_.end());
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(field_, cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out.set_value(c, r, value_at(r, c));
  return out;
}

Matrix Matrix::take_rows(const std::vector<size_t>& idx) const {
  Matrix out(field_, idx.size(), cols_);
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows_) throw std::invalid_argument("row index out of range");
    out.set_row_values(i, row_values(idx[i]));
  }
  return out;
}

Matrix Matrix::take_cols(const std::vector<size_t>& idx) const {
  Matrix out(field_, rows_, idx.size());
  for (size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw std::invalid_argument("col index out of range");
    for (size_t r = 0; r < rows_; ++r)
      out.set_value(r, j, value_at(r, idx[j]));
  }
  return out;
}

size_t Matrix::rank() const {
  Matrix copy = *this;
  return eliminate(copy, nullptr, false).size();
}

std::optional<Matrix> Matrix::try_inverse() const {
  if (rows_ != cols_)
    throw std::invalid_argument("inverse of a non-square matrix");
  Matrix copy = *this;
  Matrix comp = identity(field_, rows_);
  auto pivots = eliminate(copy, &comp, true);
  if (pivots.size() != rows_) return std::nullopt;
  return comp;
}

Matrix Matrix::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw std::domain_error("singular matrix");
  return *inv;
}

std::vector<uint32_t> Matrix::solve_values(
    const std::vector<uint32_t>& b) const {
  if (rows_ != cols_) throw std::invalid_argument("solve: matrix not square");
  if (b.size() != rows_)
    throw std::invalid_argument("solve: right-hand side length mismatch");
  Matrix copy = *this;
  Matrix rhs(field_, rows_, 1);
  for (size_t r = 0; r < rows_; ++r) rhs.set_value(r, 0, b[r]);
  auto pivots = eliminate(copy, &rhs, true);
  if (pivots.size() != rows_) throw std::domain_error("singular system");
  std::vector<uint32_t> x(rows_, 0);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs.value_at(i, 0);
  return x;
}

std::vector<Fe> Matrix::solve(const std::vector<Fe>& b) const {
  std::vector<uint32_t> raw;
  raw.reserve(b.size());
  for (const Fe& e : b) {
    if (!e.field().same_as(field_))
      throw std::invalid_argument("solve: element from a different field");
    raw.push_back(e.value());
  }
  std::vector<Fe> out;
  for (uint32_t v : solve_values(raw)) out.emplace_back(field_, v);
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("multiply: dimension mismatch");
  if (!field_.same_as(rhs.field_))
    throw std::invalid_argument("multiply: fields differ");
  Matrix out(field_, rows_, rhs.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      uint32_t a = value_at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < rhs.cols_; ++j) {
        uint32_t prod = field_.mul_v(a, rhs.value_at(k, j));
        out.set_value(i, j, field_.add_v(out.value_at(i, j), prod));
      }
    }
  }
  return out;
}

std::vector<uint32_t> Matrix::mul_vec_values(
    const std::vector<uint32_t>& x) const {
  if (x.size() != cols_)
    throw std::invalid_argument("multiply: vector length mismatch");
  std::vector<uint32_t> out(rows_, 0);
  for (size_t i = 0; i < rows_; ++i) {
    uint32_t acc = 0;
    for (size_t j = 0; j < cols_; ++j)
      acc = field_.add_v(acc, field_.mul_v(value_at(i, j), x[j]));
    out[i] = acc;
  }
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
         field_.same_as(rhs.field_) && vals_ == rhs.vals_;
}

std::string Matrix::token_list() const {
  std::ostringstream os;
  for (size_t i = 0; i < vals_.size(); ++i) {
    if (i) os << " ";
    os << field_.value_token(vals_[i]);
  }
  return os.str();
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  return top.stacked(bottom);
}

bool row_space_intersection_trivial(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("row space test: column counts differ");
  return a.stacked(b).rank() == a.rank() + b.rank();
}

}  // namespace wnc
