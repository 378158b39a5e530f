#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace surfalg {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<long long>>;

/// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix, all positive.
std::vector<BigInt> invariant_factors(const IntMatrix& m);
int integer_rank(const IntMatrix& m);

}  // namespace surfalg
