#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kh/braid.hpp"

namespace kh {

// Torsion expected for a family member, recorded as metadata. scale is
// "integration" for computations far beyond a desk run; the default test
// suite never attempts those.
struct TorsionClaim {
    long order = 0;
    // Reported gradings when stated, as (first, second) pairs. The source
    // tables are images, so whether these are classical (i,j) or framed
    // (a,b) keys is recorded as unresolved in `note`.
    std::vector<std::pair<int, int>> gradings;
    std::string note;
    std::string scale = "integration";
};

// A named braid family of the registry. `expression` is in the family
// mini-language; arity 1 families take one nonnegative integer parameter
// written M in the expression.
struct Family {
    std::string name;
    int arity = 0;
    std::string expression;
    std::string description;
    std::vector<TorsionClaim> expected;
};

const std::vector<Family>& family_registry();
const Family* find_family(const std::string& name);

// Instantiates a registry family; param is ignored for arity-0 entries.
BraidWord family_word(const Family& f, int param = 0);

} // namespace kh
