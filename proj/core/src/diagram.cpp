#include "kh/diagram.hpp"

#include <bit>
#include <numeric>
#include <sstream>

#include "kh/errors.hpp"

namespace kh {

namespace {

// Plain union-find over arc indices.
class ArcUnion {
public:
    explicit ArcUnion(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void join(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y)
            parent_[std::max(x, y)] = std::min(x, y);
    }

private:
    std::vector<int> parent_;
};

} // namespace

int LinkDiagram::writhe() const {
    int w = 0;
    for (const Crossing& c : crossings)
        w += c.sign;
    return w;
}

LinkDiagram closure(const BraidWord& w) {
    if (w.letters.size() > 62)
        throw domain_error("closure supports at most 62 crossings");
    int n = w.strands;
    int next_arc = 0;
    std::vector<int> initial(n), current(n);
    for (int p = 0; p < n; ++p)
        initial[p] = current[p] = next_arc++;

    std::vector<Crossing> raw;
    raw.reserve(w.letters.size());
    for (int k : w.letters) {
        int i = (k > 0 ? k : -k) - 1;
        Crossing c;
        c.sign = k > 0 ? 1 : -1;
        int sw = current[i], se = current[i + 1];
        int ne = next_arc++, nw = next_arc++;
        c.arcs = {sw, se, ne, nw};
        current[i] = nw;
        current[i + 1] = ne;
        raw.push_back(c);
    }

    // Close up: the top arc at each position is the same closed-diagram arc
    // as the bottom one.
    ArcUnion closure_ids(next_arc);
    for (int p = 0; p < n; ++p)
        closure_ids.join(initial[p], current[p]);

    std::vector<int> compact(next_arc, -1);
    int arc_count = 0;
    for (int a = 0; a < next_arc; ++a) {
        int root = closure_ids.find(a);
        if (compact[root] < 0)
            compact[root] = arc_count++;
        compact[a] = compact[root];
    }

    LinkDiagram d;
    d.strands = n;
    d.arc_count = arc_count;
    d.crossings = std::move(raw);
    for (Crossing& c : d.crossings)
        for (int& a : c.arcs)
            a = compact[a];
    return d;
}

int component_count(const LinkDiagram& d) {
    ArcUnion u(d.arc_count);
    for (const Crossing& c : d.crossings) {
        u.join(c.sw(), c.ne());
        u.join(c.se(), c.nw());
    }
    int count = 0;
    for (int a = 0; a < d.arc_count; ++a)
        if (u.find(a) == a)
            ++count;
    return count;
}

int KauffmanState::count_b() const { return std::popcount(b_mask); }

int sigma(const KauffmanState& s) { return s.crossing_count - 2 * s.count_b(); }

bool smoothing_is_vertical(int crossing_sign, KauffmanState::Marker m) {
#ifdef KH_SWAP_SMOOTHING
    const bool a_is_vertical = crossing_sign < 0;
#else
    const bool a_is_vertical = crossing_sign > 0;
#endif
    return (m == KauffmanState::Marker::A) == a_is_vertical;
}

CircleSet resolve(const LinkDiagram& d, const KauffmanState& s) {
    if (s.crossing_count != d.crossing_count())
        throw domain_error("state does not assign every crossing");
    ArcUnion u(d.arc_count);
    for (int c = 0; c < d.crossing_count(); ++c) {
        const Crossing& x = d.crossings[c];
        if (smoothing_is_vertical(x.sign, s.at(c))) {
            u.join(x.sw(), x.nw());
            u.join(x.se(), x.ne());
        } else {
            u.join(x.sw(), x.se());
            u.join(x.nw(), x.ne());
        }
    }
    CircleSet circles;
    circles.circle_of_arc.assign(d.arc_count, -1);
    std::vector<int> id_of_root(d.arc_count, -1);
    for (int a = 0; a < d.arc_count; ++a) {
        int root = u.find(a);
        if (id_of_root[root] < 0)
            id_of_root[root] = circles.count++;
        circles.circle_of_arc[a] = id_of_root[root];
    }
    return circles;
}

std::string to_debug_json(const LinkDiagram& d) {
    std::ostringstream out;
    out << "{\"strands\":" << d.strands << ",\"arcs\":" << d.arc_count << ",\"crossings\":[";
    for (int c = 0; c < d.crossing_count(); ++c) {
        const Crossing& x = d.crossings[c];
        if (c)
            out << ',';
        out << "{\"arcs\":[" << x.sw() << ',' << x.se() << ',' << x.ne() << ',' << x.nw()
            << "],\"sign\":" << x.sign << '}';
    }
    out << "]}";
    return out.str();
}

} // namespace kh
