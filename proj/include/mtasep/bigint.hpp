#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace mtasep {

// Coefficients in every algebra and every weight count are unbounded integers.
using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace mtasep
