#pragma once

#include "qtoric/rational.hpp"

namespace qtoric {

struct SmithForm {
  IntMatrix u;  // rows() x rows(), unimodular
  IntMatrix s;  // diagonal, divisibility chain, nonnegative
  IntMatrix v;  // cols() x cols(), unimodular
};

// U*m*V = S with S in Smith normal form.
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace qtoric
