#include "coxbruhat/hasse.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "coxbruhat/parabolic.hpp"

namespace coxbruhat {

HasseDiagram hasse_diagram(const CoxeterSystem& sys, const Element& w, std::optional<GenSet> J,
                           int bound) {
    HasseDiagram d;
    d.nodes = lower_interval(sys, w, bound).members;
    std::set<Element> reps;
    for (const auto& y : d.nodes) {
        d.coset_reps.push_back(J ? coset_rep(sys, y, *J) : sys.identity());
        reps.insert(d.coset_reps.back());
    }
    const std::vector<Element> ordered(reps.begin(), reps.end());
    for (const auto& r : d.coset_reps)
        d.color_index.push_back(
            static_cast<int>(std::lower_bound(ordered.begin(), ordered.end(), r) - ordered.begin()));

    auto index_of = [&](const Element& y) {
        return static_cast<int>(std::lower_bound(d.nodes.begin(), d.nodes.end(), y) - d.nodes.begin());
    };
    for (int j = 0; j < static_cast<int>(d.nodes.size()); ++j)
        for (const auto& c : covers(sys, d.nodes[j], bound)) d.edges.emplace_back(index_of(c), j);
    std::sort(d.edges.begin(), d.edges.end());
    return d;
}

std::string to_dot(const CoxeterSystem& sys, const HasseDiagram& d) {
    constexpr int palette_size = static_cast<int>(std::size(kCosetPalette));
    std::ostringstream os;
    os << "digraph hasse {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=plaintext];\n";
    os << "  edge [arrowhead=none];\n";
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        os << "  n" << i << " [label=\"" << sys.format(d.nodes[i])
           << "\", fontcolor=" << kCosetPalette[d.color_index[i] % palette_size] << "];\n";
    }
    for (const auto& [lo, hi] : d.edges) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace coxbruhat
