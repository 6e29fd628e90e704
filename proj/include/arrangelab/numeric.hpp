#ifndef ARRANGELAB_NUMERIC_HPP
#define ARRANGELAB_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace arrangelab {

// All coefficient arithmetic in the library is exact; no floating point.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace arrangelab

#endif
