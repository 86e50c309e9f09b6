#pragma once

#include <gmpxx.h>

#include <string>

namespace posetdim {

/// Arbitrary precision rational kept in canonical form.
using Rational = mpq_class;

/// "num/den", or just "num" for integers.
std::string to_string(const Rational& q);
double to_double(const Rational& q);

}  // namespace posetdim
