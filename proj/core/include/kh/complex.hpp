#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kh/algebra.hpp"
#include "kh/budget.hpp"
#include "kh/diagram.hpp"

namespace kh {

// A Kauffman state together with a +-1 label per circle of its resolution.
// labels[k] belongs to the canonical circle k of resolve(d, state).
struct EnhancedState {
    KauffmanState state;
    std::vector<std::int8_t> labels;
};

int tau(const EnhancedState& t);

struct Bigrading {
    int a = 0;
    int b = 0;

    auto operator<=>(const Bigrading&) const = default;
};

// (a, b) = (sigma, sigma + 2 tau).
Bigrading bigrading_of(const EnhancedState& t);

// Compact in-memory form of an enhanced state: marker bit c set = B at
// crossing c, label bit k set = +1 on circle k.
struct GenRef {
    std::uint64_t state_mask = 0;
    std::uint32_t label_mask = 0;

    bool operator==(const GenRef&) const = default;
};

struct Bucket {
    std::vector<GenRef> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

// The bigraded chain complex of a diagram: per (a,b) an ordered generator
// basis, and the differential matrix out of (a,b) into (a-2,b). Basis order
// is marker-lexicographic in the state (crossing 0 most significant, A < B),
// then label-lexicographic (circle 0 most significant, -1 < +1).
struct BigradedComplex {
    LinkDiagram diagram;
    std::map<std::pair<int, int>, Bucket> buckets;
    // Keyed by source grading (a,b); maps C_{a,b} -> C_{a-2,b}.
    std::map<std::pair<int, int>, IntMatrix> differentials;

    int dim(int a, int b) const;
    const IntMatrix* differential(int a, int b) const; // null when absent
    long total_generators() const;
};

EnhancedState enhanced_from_ref(const LinkDiagram& d, const GenRef& g);

// Enumerates every enhanced state into its (a,b) bucket; differentials left
// empty. Total count is sum over states of 2^{circles}.
BigradedComplex enumerate_generators(const LinkDiagram& d, MemoryBudget* budget = nullptr);

// Incidence number (t : t') by the definition: +-1 when t' is adjacent to t
// (a drops by 2, b equal, states differ at exactly one crossing A->B, labels
// preserved on common circles), else 0. The sign is (-1)^omega with omega
// the number of B markers of t at crossings after the changed one.
int incidence(const LinkDiagram& d, const EnhancedState& t, const EnhancedState& t_target);

// Enumerates generators and assembles all differential matrices.
BigradedComplex build_differentials(const LinkDiagram& d, MemoryBudget* budget = nullptr,
                                    int threads = 1);

struct DSquaredReport {
    bool ok = true;
    // Witness for a failure: composite out of (a,b) has a nonzero entry.
    int a = 0;
    int b = 0;
    int row = 0;
    int col = 0;
    Int value;

    explicit operator bool() const { return ok; }
};

DSquaredReport verify_d_squared(const BigradedComplex& c);

// Debug dump: per (a,b) the dimension and nonzero triples (row, col, value).
std::string to_debug_json(const BigradedComplex& c);

} // namespace kh
