#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtoric {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// mpq_class(a, b) does not canonicalize; always build fractions through this.
inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "p/q" or a decimal like "-1.25" into an exact rational.
Rat parse_rat(const std::string& s);

std::string to_string(const Rat& r);
std::string to_string(const Int& z);

inline RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

Rat dot(const RatVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);

// Scales a rational vector to a primitive integer vector with the same
// direction (gcd of entries 1). Zero vectors map to zero.
IntVec primitive(const RatVec& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntMatrix transpose() const;
  IntMatrix mul(const IntMatrix& other) const;
  IntVec apply(const IntVec& v) const;

  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows);
  static RatMatrix from_int(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatVec row(std::size_t i) const;
  RatMatrix transpose() const;
  RatMatrix mul(const RatMatrix& other) const;
  RatVec apply(const RatVec& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Exact rank over the rationals by Gaussian elimination.
std::size_t rational_rank(const RatMatrix& m);

// Solves A x = b exactly. Returns false when the system is inconsistent;
// when underdetermined, returns the solution with free variables set to 0.
bool solve_linear(const RatMatrix& a, const RatVec& b, RatVec& x);

struct QtError : std::runtime_error {
  std::string code;
  QtError(std::string c, const std::string& msg) : std::runtime_error(msg), code(std::move(c)) {}
};

}  // namespace qtoric
