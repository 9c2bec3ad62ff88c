#include "qtoric/smith.hpp"

#include <cstdlib>

namespace qtoric {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row a -= f * row b
void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Int& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) -= f * m(b, j);
}

void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Int& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) -= f * m(i, b);
}

void negate_row(IntMatrix& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  std::size_t rows = input.rows(), cols = input.cols();
  SmithForm out{IntMatrix::identity(rows), input, IntMatrix::identity(cols)};
  IntMatrix& s = out.s;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;

  std::size_t t = 0;
  std::size_t limit = std::min(rows, cols);
  while (t < limit) {
    // pivot: minimal absolute value among nonzero entries of the trailing block
    std::size_t pi = rows, pj = cols;
    Int best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (s(i, j) != 0) {
          Int a = abs(s(i, j));
          if (pi == rows || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
    if (pi == rows) break;  // trailing block zero
    if (pi != t) {
      swap_rows(s, pi, t);
      swap_rows(u, pi, t);
    }
    if (pj != t) {
      swap_cols(s, pj, t);
      swap_cols(v, pj, t);
    }
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i)
      if (s(i, t) != 0) {
        Int q = s(i, t) / s(t, t);  // truncated division keeps |remainder| < |pivot|
        add_row(s, i, t, q);
        add_row(u, i, t, q);
        if (s(i, t) != 0) clean = false;
      }
    for (std::size_t j = t + 1; j < cols; ++j)
      if (s(t, j) != 0) {
        Int q = s(t, j) / s(t, t);
        add_col(s, j, t, q);
        add_col(v, j, t, q);
        if (s(t, j) != 0) clean = false;
      }
    if (!clean) continue;  // smaller pivot now exists, redo this step

    // enforce divisibility: pivot must divide every trailing entry
    bool divides_all = true;
    for (std::size_t i = t + 1; i < rows && divides_all; ++i)
      for (std::size_t j = t + 1; j < cols && divides_all; ++j)
        if (s(i, j) % s(t, t) != 0) {
          // fold the offending row into row t and restart the step
          add_row(s, t, i, Int(-1));
          add_row(u, t, i, Int(-1));
          divides_all = false;
        }
    if (!divides_all) continue;
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
    ++t;
  }
  return out;
}

}  // namespace qtoric
