#pragma once

// Exact rational arithmetic and dense linear algebra over Q.
//
// Everything downstream (Moebius matrices, weightings, Euler
// characteristics) is computed with these types; there is no floating
// point anywhere in the library.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace eicat {

using BigInt = mpz_class;

/// Rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

  Rational(const BigInt& value) : value_(value) {}  // NOLINT(implicit)

  /// Throws std::domain_error when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p/q" or "p" with optional leading sign.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q" in lowest terms, or "p" when q = 1.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_{0};
};

/// Canonical rational num/den. Throws std::domain_error when den == 0.
Rational rat(long num, long den);

class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t length);
  QVector(std::vector<Rational> entries, std::vector<std::string> labels = {});
  QVector(std::initializer_list<Rational> entries);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }

  const std::vector<Rational>& entries() const { return entries_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  Rational sum() const;
  bool is_integral() const;

  /// Entries compared; labels ignored.
  friend bool operator==(const QVector& a, const QVector& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Rational> entries_;
  std::vector<std::string> labels_;
};

/// Dense row-major matrix over Q with optional row/column labels.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Row-wise literal; all rows must have equal length.
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const { return entries_; }

  /// Labels default to "0", "1", ... and must be unique.
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  void set_row_labels(std::vector<std::string> labels);
  void set_col_labels(std::vector<std::string> labels);
  void set_labels(const std::vector<std::string>& labels) {
    set_row_labels(labels);
    set_col_labels(labels);
  }

  QMatrix transpose() const;
  bool is_identity() const;
  bool is_integral() const;
  /// Entries strictly below the diagonal are zero.
  bool is_upper_triangular() const;
  Rational sum() const;

  /// Rows and columns permuted so that new row i is old row row_order[i].
  QMatrix permuted(const std::vector<std::size_t>& row_order,
                   const std::vector<std::size_t>& col_order) const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVector operator*(const QMatrix& a, const QVector& v);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);

  /// Shape and entries compared; labels ignored.
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

std::ostream& operator<<(std::ostream& os, const QMatrix& m);
std::ostream& operator<<(std::ostream& os, const QVector& v);

/// Exact inverse, or std::nullopt when A is singular. Throws
/// std::invalid_argument for non-square input. Labels are swapped
/// (rows of the inverse carry A's column labels).
std::optional<QMatrix> mat_invert(const QMatrix& a);

struct SolutionReport {
  bool consistent = false;
  /// Particular solution with every free variable set to zero.
  std::optional<QVector> solution;
  std::size_t kernel_dim = 0;
  /// One basis vector per free variable (free variable = 1, others free = 0).
  std::vector<QVector> kernel_basis;
};

/// Solves A x = b by exact Gauss-Jordan elimination. The pivot in each
/// column is the first nonzero entry at or below the current row.
/// Throws std::invalid_argument when A.rows() != b.size().
SolutionReport solve_linear(const QMatrix& a, const QVector& b);

/// Reduced row echelon form together with the pivot columns.
struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};
RowEchelon row_reduce(QMatrix m);

}  // namespace eicat
