// Exact integer and rational scalars.
//
// Minors of Alexander matrices for iterated doubles overflow machine words,
// so all invariant arithmetic runs on arbitrary-precision integers.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wdtk {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

}  // namespace wdtk
