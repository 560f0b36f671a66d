#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxbruhat/bruhat.hpp"
#include "coxbruhat/core.hpp"

namespace coxbruhat {

/// Cover graph of [e,w], optionally coloured by the cosets xW_J.
struct HasseDiagram {
    /// ShortLex sorted.
    std::vector<Element> nodes;
    /// Coset representative of each node; identity when no J was given.
    std::vector<Element> coset_reps;
    /// Index into the palette, by ShortLex rank of the node's coset rep.
    std::vector<int> color_index;
    /// (lower, upper) node indices, sorted.
    std::vector<std::pair<int, int>> edges;
};

inline constexpr const char* kCosetPalette[] = {"black", "red", "blue", "green"};

HasseDiagram hasse_diagram(const CoxeterSystem& sys, const Element& w, std::optional<GenSet> J,
                           int bound = kDefaultIntervalBound);

/// Graphviz text, bottom-to-top, node labels are canonical words ("e" for the
/// identity) with font colours cycling black/red/blue/green.
std::string to_dot(const CoxeterSystem& sys, const HasseDiagram& diagram);

} // namespace coxbruhat
