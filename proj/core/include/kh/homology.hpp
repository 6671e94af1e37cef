#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "kh/complex.hpp"

namespace kh {

// One homology group: free rank plus invariant factors > 1, each dividing
// the next.
struct HomologyGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};

enum class GradingMode { Framed, Classical };

// Map (first, second) grading -> group; trivial groups omitted. Framed keys
// are (a,b); classical keys (i,j) = ((w-a)/2, (3w-b)/2).
struct HomologyTable {
    GradingMode mode = GradingMode::Framed;
    int writhe = 0;
    std::map<std::pair<int, int>, HomologyGroup> groups;

    bool operator==(const HomologyTable&) const = default;
};

// ker(d_{a,b}) / im(d_{a+2,b}) from the matrices of c.
HomologyGroup homology_at(const BigradedComplex& c, int a, int b);

// All nontrivial groups of c, framed gradings.
HomologyTable framed_table(const BigradedComplex& c, int threads = 1);

// Reindexes a framed table to classical gradings using the writhe.
// Throws consistency_error when (w-a) or (3w-b) is odd.
HomologyTable classical_table(const HomologyTable& framed, int writhe);
HomologyTable classical_table(const BigradedComplex& c, int writhe);

// One entry (i, j, order) per torsion factor, sorted. Requires classical mode.
std::vector<std::tuple<int, int, Int>> torsion_summary(const HomologyTable& t);

// Homology ranks over F_p per bigrading (universal-coefficient probe).
std::map<std::pair<int, int>, int> mod_p_ranks(const BigradedComplex& c, std::int64_t p);

} // namespace kh
