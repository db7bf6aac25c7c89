#ifndef MONO_INTS_HPP
#define MONO_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace mono {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; zero when k < 0 or k > n.
Int binomial(const Int& n, const Int& k);

Int factorial(unsigned k);

/// m^e for nonnegative e.
Int ipow(const Int& m, unsigned e);

} // namespace mono

#endif
