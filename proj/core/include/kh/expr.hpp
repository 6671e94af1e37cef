#pragma once

#include <map>
#include <string>
#include <string_view>

#include "kh/braid.hpp"

namespace kh {

// Family expression mini-language:
//   torus(p,q)      (sigma_1...sigma_{p-1})^q in B_p
//   w(i,j)          wrap word w_{i,j} on max(i,j)+1 strands
//   winv(i,j)       its inverse-letter variant
//   pow(expr,k)     k-fold repetition
//   e1 * e2         concatenation (strand counts widen to the maximum)
//   csum(e1,e2)     connected sum
//   osum(p,q,c)     overlapping connected sum
//   word(1 2 -3)    raw letters
// Registered family names (see families.hpp) are accepted as leaves.
// Integer slots may hold variables (uppercase identifiers) bound via `vars`.
// Throws malformed_word_error on parse failure.
BraidWord eval_family_expr(std::string_view text,
                           const std::map<std::string, int>& vars = {});

} // namespace kh
