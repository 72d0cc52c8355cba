#pragma once

#include <initializer_list>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbdet/permutation.hpp"
#include "orbdet/scalar.hpp"

namespace orbdet {

/// Dense square matrix over either scalar regime. Indexing is 1-based via
/// at(i,j) to match the index algebra everywhere else in the library.
template <Scalar T>
class SquareMatrix {
 public:
  explicit SquareMatrix(int n) : n_(check(n)), e_(static_cast<size_t>(n) * n, T{}) {}

  SquareMatrix(int n, std::vector<T> entries) : n_(check(n)), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(n_) * n_)
      throw std::invalid_argument("matrix: entry count does not match order");
  }

  SquareMatrix(std::initializer_list<std::initializer_list<long long>> rows)
      : n_(check(static_cast<int>(rows.size()))) {
    e_.reserve(static_cast<size_t>(n_) * n_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n_)
        throw std::invalid_argument("matrix: ragged initializer");
      for (long long x : row) e_.push_back(T(x));
    }
  }

  static SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = T(1);
    return m;
  }

  int order() const { return n_; }

  T& at(int i, int j) { return e_[index(i, j)]; }
  const T& at(int i, int j) const { return e_[index(i, j)]; }

  const std::vector<T>& entries() const { return e_; }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  static int check(int n) {
    if (n < 1) throw std::invalid_argument("matrix: order must be positive");
    return n;
  }

  size_t index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw std::invalid_argument("matrix: index (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") outside order " + std::to_string(n_));
    return static_cast<size_t>(i - 1) * n_ + (j - 1);
  }

  int n_;
  std::vector<T> e_;
};

using MatrixI = SquareMatrix<Int128>;
using MatrixD = SquareMatrix<double>;

inline MatrixD to_double(const MatrixI& a) {
  int n = a.order();
  MatrixD d(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) d.at(i, j) = a.at(i, j).to_double();
  return d;
}

/// A*P(p): column j of the result is column p(j) of A, i.e. out(i,j) = a(i,p(j)).
template <Scalar T>
SquareMatrix<T> apply_column_permutation(const SquareMatrix<T>& a, const Permutation& p) {
  if (p.order() != a.order())
    throw std::invalid_argument("matrix: permutation order does not match matrix");
  SquareMatrix<T> out(a.order());
  for (int i = 1; i <= a.order(); ++i)
    for (int j = 1; j <= a.order(); ++j) out.at(i, j) = a.at(i, p(j));
  return out;
}

/// Matrix read from CSV (one row per line, comma-separated, no header).
/// `exact` is present when every token parsed as a plain integer.
struct CsvMatrix {
  MatrixD values;
  std::optional<MatrixI> exact;
};

inline CsvMatrix read_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::vector<std::vector<long long>> int_rows;
  bool all_integer = true;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (blank) {
      if (rows.empty()) continue;
      break;
    }
    std::vector<double> row;
    std::vector<long long> int_row;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      size_t b = tok.find_first_not_of(" \t");
      size_t e = tok.find_last_not_of(" \t");
      if (b == std::string::npos)
        throw std::invalid_argument("matrix csv: empty field on line " + std::to_string(line_no));
      tok = tok.substr(b, e - b + 1);
      size_t used = 0;
      double v;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("matrix csv: bad number \"" + tok + "\" on line " +
                                    std::to_string(line_no));
      }
      if (used != tok.size())
        throw std::invalid_argument("matrix csv: bad number \"" + tok + "\" on line " +
                                    std::to_string(line_no));
      row.push_back(v);
      if (all_integer) {
        size_t iused = 0;
        long long iv = 0;
        bool ok = true;
        try {
          iv = std::stoll(tok, &iused);
        } catch (const std::exception&) {
          ok = false;
        }
        if (ok && iused == tok.size())
          int_row.push_back(iv);
        else
          all_integer = false;
      }
    }
    rows.push_back(std::move(row));
    int_rows.push_back(std::move(int_row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix csv: no data");
  size_t n = rows.size();
  for (size_t i = 0; i < n; ++i)
    if (rows[i].size() != n)
      throw std::invalid_argument("matrix csv: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " fields, expected " +
                                  std::to_string(n) + " (square matrix)");
  MatrixD values(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) values.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = rows[i][j];
  CsvMatrix out{std::move(values), std::nullopt};
  if (all_integer) {
    MatrixI exact(static_cast<int>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        exact.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = Int128(int_rows[i][j]);
    out.exact = std::move(exact);
  }
  return out;
}

template <Scalar T>
std::string write_matrix_csv(const SquareMatrix<T>& a) {
  std::string out;
  for (int i = 1; i <= a.order(); ++i) {
    for (int j = 1; j <= a.order(); ++j) {
      if (j > 1) out += ',';
      out += format_scalar(a.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace orbdet
