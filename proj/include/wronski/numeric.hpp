#pragma once
// Shared scalar types: exact arbitrary-precision integers and rationals for
// the counting routes, complex doubles for the solver pipeline.

#include <complex>

#include <boost/multiprecision/cpp_int.hpp>

namespace wronski {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

}  // namespace wronski
