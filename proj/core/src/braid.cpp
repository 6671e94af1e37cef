#include "kh/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "kh/errors.hpp"

namespace kh {

namespace {

void check_letter(int k, int strands) {
    if (k == 0)
        throw malformed_word_error("braid letter 0 names no generator");
    int idx = k > 0 ? k : -k;
    if (idx > strands - 1)
        throw malformed_word_error("braid letter " + std::to_string(k) + " out of range for " +
                                   std::to_string(strands) + " strands");
}

} // namespace

BraidWord make_braid(int strands, std::vector<int> letters) {
    if (strands < 1)
        throw malformed_word_error("strand count must be positive");
    for (int k : letters)
        check_letter(k, strands);
    return BraidWord{strands, std::move(letters)};
}

BraidWord parse_braid(std::string_view text, int strands) {
    std::vector<int> letters;
    const char* p = text.data();
    const char* end = p + text.size();
    while (p != end) {
        if (std::isspace(static_cast<unsigned char>(*p))) {
            ++p;
            continue;
        }
        int value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || (next != end && !std::isspace(static_cast<unsigned char>(*next))))
            throw malformed_word_error("unparsable braid token in \"" + std::string(text) + "\"");
        letters.push_back(value);
        p = next;
    }
    return make_braid(strands, std::move(letters));
}

std::string to_text(const BraidWord& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i)
            out << ' ';
        out << w.letters[i];
    }
    return out.str();
}

int exponent_sum(const BraidWord& w) {
    int s = 0;
    for (int k : w.letters)
        s += k > 0 ? 1 : -1;
    return s;
}

BraidPermutation permutation(const BraidWord& w) {
    std::vector<int> pos_to_strand(w.strands);
    std::iota(pos_to_strand.begin(), pos_to_strand.end(), 0);
    for (int k : w.letters) {
        int i = (k > 0 ? k : -k) - 1;
        std::swap(pos_to_strand[i], pos_to_strand[i + 1]);
    }
    std::vector<int> images(w.strands);
    for (int pos = 0; pos < w.strands; ++pos)
        images[pos_to_strand[pos]] = pos;
    return BraidPermutation{w.strands, std::move(images)};
}

BraidPermutation compose(const BraidPermutation& first, const BraidPermutation& then) {
    if (first.strands != then.strands)
        throw domain_error("permutation strand mismatch");
    std::vector<int> images(first.strands);
    for (int p = 0; p < first.strands; ++p)
        images[p] = then.images[first.images[p]];
    return BraidPermutation{first.strands, std::move(images)};
}

int cycle_count(const BraidPermutation& p) {
    std::vector<char> seen(p.strands, 0);
    int cycles = 0;
    for (int s = 0; s < p.strands; ++s) {
        if (seen[s])
            continue;
        ++cycles;
        for (int t = s; !seen[t]; t = p.images[t])
            seen[t] = 1;
    }
    return cycles;
}

int component_count(const BraidWord& w) { return cycle_count(permutation(w)); }

BraidWord reverse_inverted(const BraidWord& w) {
    std::vector<int> letters(w.letters.rbegin(), w.letters.rend());
    for (int& k : letters)
        k = -k;
    return BraidWord{w.strands, std::move(letters)};
}

BraidWord w_word(int i, int j, int n, bool inverted) {
    if (i < 1 || j < 1 || i > n - 1 || j > n - 1)
        throw domain_error("w_word indices must satisfy 1 <= i,j <= n-1");
    if (i == j)
        throw domain_error("w_word requires i != j");
    std::vector<int> letters;
    letters.reserve(2 * (std::abs(i - j) + 1));
    int step = i < j ? 1 : -1;
    for (int k = i; k != j + step; k += step)
        letters.push_back(k);
    for (int k = j; k != i - step; k -= step)
        letters.push_back(k);
    if (inverted)
        for (int& k : letters)
            k = -k;
    return BraidWord{n, std::move(letters)};
}

BraidWord torus_word(int p, int q) {
    if (p < 2)
        throw domain_error("torus_word needs at least 2 strands");
    if (q < 0)
        throw domain_error("torus_word repetition must be nonnegative");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(q) * (p - 1));
    for (int rep = 0; rep < q; ++rep)
        for (int k = 1; k < p; ++k)
            letters.push_back(k);
    return BraidWord{p, std::move(letters)};
}

BraidWord concat(const BraidWord& w1, const BraidWord& w2) {
    if (w1.strands != w2.strands)
        throw domain_error("concat requires equal strand counts");
    std::vector<int> letters = w1.letters;
    letters.insert(letters.end(), w2.letters.begin(), w2.letters.end());
    return BraidWord{w1.strands, std::move(letters)};
}

BraidWord power(const BraidWord& w, int k) {
    if (k < 0)
        throw domain_error("power exponent must be nonnegative");
    std::vector<int> letters;
    letters.reserve(w.letters.size() * k);
    for (int rep = 0; rep < k; ++rep)
        letters.insert(letters.end(), w.letters.begin(), w.letters.end());
    return BraidWord{w.strands, std::move(letters)};
}

BraidWord shift(const BraidWord& w, int offset, int new_strands) {
    if (offset < 0)
        throw domain_error("shift offset must be nonnegative");
    std::vector<int> letters = w.letters;
    for (int& k : letters) {
        int idx = (k > 0 ? k : -k) + offset;
        if (idx > new_strands - 1)
            throw domain_error("shifted letter index " + std::to_string(idx) +
                               " overflows " + std::to_string(new_strands) + " strands");
        k = k > 0 ? idx : -idx;
    }
    return BraidWord{new_strands, std::move(letters)};
}

BraidWord embed(const BraidWord& w, int new_strands) {
    if (new_strands < w.strands)
        throw domain_error("embed cannot shrink the strand count");
    return BraidWord{new_strands, w.letters};
}

BraidWord connected_sum(const BraidWord& w1, const BraidWord& w2) {
    int strands = w1.strands + w2.strands - 1;
    return concat(embed(w1, strands), shift(w2, w1.strands - 1, strands));
}

bool summands_are_knots(const BraidWord& w1, const BraidWord& w2) {
    return component_count(w1) == 1 && component_count(w2) == 1;
}

BraidWord overlapping_sum(int p, int q, int c) {
    if (p < 2 || q < 0 || c < 1)
        throw domain_error("overlapping_sum requires p >= 2, q >= 0, c >= 1");
    int strands = 1 + (p - 1) + (c - 1) * (p - 2);
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(c) * q * (p - 1));
    for (int copy = 0; copy < c; ++copy) {
        int start = 1 + copy * (p - 2);
        for (int rep = 0; rep < q; ++rep)
            for (int k = start; k <= start + p - 2; ++k)
                letters.push_back(k);
    }
    return BraidWord{strands, std::move(letters)};
}

std::pair<BraidWord, BraidWord> expansion_identity(int n) {
    if (n < 3)
        throw domain_error("expansion_identity requires n >= 3");
    BraidWord expanded{n, {}};
    for (int k = n - 1; k >= 1; --k) {
        int exponent = ((n - 1 - k) % 2 == 0 ? 1 : -1) * (k + 1);
        BraidWord block = torus_word(k + 1, std::abs(exponent));
        BraidWord term = exponent > 0 ? embed(block, n) : embed(reverse_inverted(block), n);
        expanded = concat(expanded, term);
    }
    return {w_word(1, n - 1, n), expanded};
}

} // namespace kh
