#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace expoweyl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace expoweyl
