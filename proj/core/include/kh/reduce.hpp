#pragma once

#include "kh/complex.hpp"

namespace kh {

// Cancels +-1 differential entries (Gaussian elimination on the chain
// complex) until none remain. Homology is preserved in every bigrading;
// the surviving matrices may hold entries beyond +-1.
BigradedComplex reduce_complex(const BigradedComplex& c);

} // namespace kh
