#ifndef QUOTCOH_INTEGER_HPP
#define QUOTCOH_INTEGER_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace quotcoh
{

// Arbitrary precision signed integer used for every dimension and
// characteristic in the library.
using Integer = boost::multiprecision::cpp_int;

// Falling factorial x (x-1) ... (x-k+1); equals 1 for k == 0.
Integer falling_factorial(const Integer &x, std::int64_t k);

Integer factorial(std::int64_t n);

// Generalized binomial C(x, k) = x (x-1) ... (x-k+1) / k!, defined for every
// integer x (including negative x). Returns 0 for k < 0.
Integer binomial(const Integer &x, std::int64_t k);

// Narrowing conversion that throws std::overflow_error when the value does not
// fit into 64 bits.
std::int64_t to_int64(const Integer &x);

std::string to_string(const Integer &x);

} // namespace quotcoh

#endif
