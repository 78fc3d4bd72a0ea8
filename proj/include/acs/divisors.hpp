#pragma once

#include <vector>

#include "acs/bigrational.hpp"

namespace acs {

/// Every positive and negative divisor of n, ascending. Trial division up to
/// sqrt|n|. Throws ZeroArgument for n = 0.
std::vector<BigInt> divisors_signed(const BigInt& n);

}  // namespace acs
