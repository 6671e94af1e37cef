#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kh/braid.hpp"

namespace kh {

// One crossing of a closed diagram. Arc endpoints in rotational order
// sw, se, ne, nw (bottom-left, bottom-right, top-right, top-left for a
// braid drawn upward). The over-strand runs sw-ne when sign > 0 and
// se-nw when sign < 0; together with the sign this fixes which smoothing
// is the A-smoothing.
struct Crossing {
    std::array<int, 4> arcs{}; // sw, se, ne, nw
    int sign = 1;

    int sw() const { return arcs[0]; }
    int se() const { return arcs[1]; }
    int ne() const { return arcs[2]; }
    int nw() const { return arcs[3]; }
};

// A link diagram produced by closing a braid. Arcs are indexed 0..arc_count-1;
// arcs appearing in no crossing are free loops closing on themselves.
// Crossing order is braid letter order and is the order used by the
// differential sign.
struct LinkDiagram {
    int strands = 0;
    int arc_count = 0;
    std::vector<Crossing> crossings;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int writhe() const;
};

LinkDiagram closure(const BraidWord& w);

// Components of the underlying link (strands pass through crossings).
int component_count(const LinkDiagram& d);

// Marker assignment crossing -> {A, B}, packed as a bitmask (bit c set = B).
struct KauffmanState {
    std::uint64_t b_mask = 0;
    int crossing_count = 0;

    enum class Marker : std::uint8_t { A, B };

    Marker at(int c) const {
        return (b_mask >> c) & 1u ? Marker::B : Marker::A;
    }
    int count_b() const;

    bool operator==(const KauffmanState&) const = default;
};

// #A-markers minus #B-markers.
int sigma(const KauffmanState& s);

// Circles of a smoothed diagram: a partition of arcs, with canonical circle
// ids ordered by least contained arc index.
struct CircleSet {
    int count = 0;
    std::vector<int> circle_of_arc;
};

// True when the given marker at this crossing produces the vertical
// smoothing (sw-nw, se-ne); false for the horizontal one (sw-se, nw-ne).
// Default convention: the A-smoothing of a positive crossing is vertical.
// Building with KH_SWAP_SMOOTHING swaps A and B everywhere (mirror theory).
bool smoothing_is_vertical(int crossing_sign, KauffmanState::Marker m);

CircleSet resolve(const LinkDiagram& d, const KauffmanState& s);

// Debug dump: arc count, crossing 4-tuples, signs.
std::string to_debug_json(const LinkDiagram& d);

} // namespace kh
