#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kh {

// A word in the braid group B_n. Letters are nonzero integers k with
// 1 <= |k| <= strands-1; k > 0 is the generator sigma_k, k < 0 its inverse.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    bool operator==(const BraidWord&) const = default;
};

// Validates the invariants and returns the word. Throws malformed_word_error.
BraidWord make_braid(int strands, std::vector<int> letters);

// Parses whitespace-separated signed integers; empty text is the identity.
BraidWord parse_braid(std::string_view text, int strands);

std::string to_text(const BraidWord& w);

// Sum of letter signs; equals the writhe of the closure under the
// all-parallel orientation.
int exponent_sum(const BraidWord& w);

// Positions permutation induced by forgetting crossing signs.
// images[p] is the 0-based top position reached by the strand entering at
// bottom position p.
struct BraidPermutation {
    int strands = 1;
    std::vector<int> images;

    bool operator==(const BraidPermutation&) const = default;
};

BraidPermutation permutation(const BraidWord& w);
BraidPermutation compose(const BraidPermutation& first, const BraidPermutation& then);
int cycle_count(const BraidPermutation& p);

// Number of link components of the closure (= cycle count of the permutation).
int component_count(const BraidWord& w);

// Letters reversed and inverted; w * reverse_inverted(w) is the trivial braid.
BraidWord reverse_inverted(const BraidWord& w);

// The wrap word w_{i,j}: for i<j the letters i,i+1,...,j,j,j-1,...,i, for
// i>j the mirror-image index run; `inverted` negates every letter.
// Requires 1 <= i,j <= n-1 and i != j.
BraidWord w_word(int i, int j, int n, bool inverted = false);

// (sigma_1 ... sigma_{p-1})^q in B_p. Requires p >= 2, q >= 0.
BraidWord torus_word(int p, int q);

BraidWord concat(const BraidWord& w1, const BraidWord& w2); // equal strand counts
BraidWord power(const BraidWord& w, int k);                 // k >= 0
BraidWord shift(const BraidWord& w, int offset, int new_strands);
BraidWord embed(const BraidWord& w, int new_strands); // shift by 0

// Word-level connected sum: w1 in B_m and w2 in B_n compose on m+n-1
// strands. Composes unconditionally; whether the closures are knots is the
// caller's concern (see summands_are_knots).
BraidWord connected_sum(const BraidWord& w1, const BraidWord& w2);
bool summands_are_knots(const BraidWord& w1, const BraidWord& w2);

// c copies of the block (sigma_s ... sigma_{s+p-2})^q with start indices
// s = 1, 1+(p-2), 1+2(p-2), ...; successive blocks overlap in exactly one
// generator index. Total strands 1+(p-1)+(c-1)(p-2).
BraidWord overlapping_sum(int p, int q, int c);

// Returns (w_{1,n-1} in B_n, its torus-power expansion
// (s1..s_{n-1})^n (s1..s_{n-2})^{-(n-1)} ... s1^{2(-1)^n}). Requires n >= 3.
std::pair<BraidWord, BraidWord> expansion_identity(int n);

} // namespace kh
