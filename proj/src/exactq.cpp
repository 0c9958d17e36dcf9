#include "eicat/exactq.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace eicat {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("malformed rational '" + s + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("malformed rational '" + s + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational '" + s + "'");
    }
    return BigInt(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational rat(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

void check_labels(const std::vector<std::string>& labels, std::size_t n) {
  if (labels.size() != n) throw std::invalid_argument("label count does not match dimension");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw std::invalid_argument("duplicate labels");
}

}  // namespace

QVector::QVector(std::size_t length) : entries_(length), labels_(default_labels(length)) {}

QVector::QVector(std::vector<Rational> entries, std::vector<std::string> labels)
    : entries_(std::move(entries)) {
  if (labels.empty()) labels = default_labels(entries_.size());
  set_labels(std::move(labels));
}

QVector::QVector(std::initializer_list<Rational> entries)
    : entries_(entries), labels_(default_labels(entries.size())) {}

void QVector::set_labels(std::vector<std::string> labels) {
  check_labels(labels, entries_.size());
  labels_ = std::move(labels);
}

Rational QVector::sum() const {
  Rational s;
  for (const auto& e : entries_) s += e;
  return s;
}

bool QVector::is_integral() const {
  for (const auto& e : entries_) {
    if (!e.is_integer()) return false;
  }
  return true;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols),
      row_labels_(default_labels(rows)), col_labels_(default_labels(cols)) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)),
      row_labels_(default_labels(rows)), col_labels_(default_labels(cols)) {
  if (entries_.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  row_labels_ = default_labels(rows_);
  col_labels_ = default_labels(cols_);
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void QMatrix::set_row_labels(std::vector<std::string> labels) {
  check_labels(labels, rows_);
  row_labels_ = std::move(labels);
}

void QMatrix::set_col_labels(std::vector<std::string> labels) {
  check_labels(labels, cols_);
  col_labels_ = std::move(labels);
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  return t;
}

bool QMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != Rational(r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

bool QMatrix::is_integral() const {
  for (const auto& e : entries_) {
    if (!e.is_integer()) return false;
  }
  return true;
}

bool QMatrix::is_upper_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < r && c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

Rational QMatrix::sum() const {
  Rational s;
  for (const auto& e : entries_) s += e;
  return s;
}

QMatrix QMatrix::permuted(const std::vector<std::size_t>& row_order,
                          const std::vector<std::size_t>& col_order) const {
  if (row_order.size() != rows_ || col_order.size() != cols_) {
    throw std::invalid_argument("permutation size does not match shape");
  }
  QMatrix out(rows_, cols_);
  std::vector<std::string> rl, cl;
  for (std::size_t r = 0; r < rows_; ++r) {
    rl.push_back(row_labels_.at(row_order[r]));
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(row_order[r], col_order[c]);
  }
  for (std::size_t c = 0; c < cols_; ++c) cl.push_back(col_labels_.at(col_order[c]));
  out.set_row_labels(std::move(rl));
  out.set_col_labels(std::move(cl));
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  QMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  out.row_labels_ = a.row_labels_;
  out.col_labels_ = b.col_labels_;
  return out;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Rational> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return QVector(std::move(out), a.row_labels_);
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  QMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  QMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const QVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

RowEchelon row_reduce(QMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::optional<QMatrix> mat_invert(const QMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("cannot invert a non-square matrix");
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon re = row_reduce(std::move(aug));
  if (re.pivot_columns.size() < n || (n > 0 && re.pivot_columns[n - 1] != n - 1)) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = re.reduced(r, n + c);
  }
  inv.set_row_labels(a.col_labels());
  inv.set_col_labels(a.row_labels());
  return inv;
}

SolutionReport solve_linear(const QMatrix& a, const QVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: A.rows != b.length");
  const std::size_t n = a.cols();
  QMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  RowEchelon re = row_reduce(std::move(aug));
  SolutionReport report;
  if (!re.pivot_columns.empty() && re.pivot_columns.back() == n) {
    report.consistent = false;
  } else {
    report.consistent = true;
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < re.pivot_columns.size(); ++i) x[re.pivot_columns[i]] = re.reduced(i, n);
    report.solution = QVector(std::move(x), a.col_labels());
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : re.pivot_columns) {
    if (p < n) is_pivot[p] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> k(n);
    k[f] = 1;
    for (std::size_t i = 0; i < re.pivot_columns.size(); ++i) {
      if (re.pivot_columns[i] < n) k[re.pivot_columns[i]] = -re.reduced(i, f);
    }
    report.kernel_basis.emplace_back(std::move(k), a.col_labels());
  }
  report.kernel_dim = report.kernel_basis.size();
  return report;
}

}  // namespace eicat
