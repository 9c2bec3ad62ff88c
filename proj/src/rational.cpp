#include "qtoric/rational.hpp"

#include <algorithm>
#include <sstream>

namespace qtoric {

Rat parse_rat(const std::string& s) {
  std::string t = s;
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
  if (t.empty()) throw QtError("BadRational", "empty rational literal");
  auto dot_pos = t.find('.');
  if (dot_pos != std::string::npos) {
    std::string digits = t.substr(0, dot_pos) + t.substr(dot_pos + 1);
    std::size_t frac_len = t.size() - dot_pos - 1;
    Int num(digits, 10);
    Int den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  try {
    Rat r(t);
    r.canonicalize();
    if (sgn(r.get_den()) <= 0) throw QtError("BadRational", "zero denominator: " + s);
    return r;
  } catch (const std::invalid_argument&) {
    throw QtError("BadRational", "cannot parse rational: " + s);
  }
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec primitive(const RatVec& v) {
  Int den_lcm = 1;
  for (const Rat& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  IntVec out(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(den_lcm);
    out[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (Int& x : out) x /= g;
  return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  IntVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
  IntMatrix out(rows_, other.cols());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if ((*this)(i, k) != 0)
        for (std::size_t j = 0; j < other.cols(); ++j) out(i, j) += (*this)(i, k) * other(k, j);
  return out;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

RatVec RatMatrix::row(std::size_t i) const {
  RatVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::mul(const RatMatrix& other) const {
  RatMatrix out(rows_, other.cols());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if ((*this)(i, k) != 0)
        for (std::size_t j = 0; j < other.cols(); ++j) out(i, j) += (*this)(i, k) * other(k, j);
  return out;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  RatVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

std::size_t rational_rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t rank = 0;
  std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = col; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a(i, col) == 0) continue;
      Rat f = a(i, col) / a(rank, col);
      for (std::size_t j = col; j < cols; ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

bool solve_linear(const RatMatrix& a0, const RatVec& b0, RatVec& x) {
  std::size_t rows = a0.rows(), cols = a0.cols();
  RatMatrix a = a0;
  RatVec b = b0;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
      std::swap(b[pivot], b[rank]);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a(i, col) == 0) continue;
      Rat f = a(i, col) / a(rank, col);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(rank, j);
      b[i] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (b[i] != 0) return false;
  x.assign(cols, Rat(0));
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i] / a(i, pivot_col[i]);
  return true;
}

}  // namespace qtoric
