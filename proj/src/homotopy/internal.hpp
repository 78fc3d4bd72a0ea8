#pragma once

#include <optional>
#include <vector>

#include "acs/homotopy.hpp"

namespace acs::detail {

std::optional<ChernVector> complete_from_pontrjagin(int d, const std::vector<BigInt>& p,
                                                    const std::vector<BigInt>& odd_inputs);
std::vector<BigInt> integral_pontrjagin(const HtpyCP& x);

}  // namespace acs::detail
