#pragma once

#include <string>

#include "hml/modular.hpp"
#include "hml/schwarz.hpp"

namespace hml {

// Upper-half-plane pictures as standalone SVG 1.1 documents.  Geodesics are
// rendered exactly: vertical lines, and circular arcs centered on the real
// axis; the cusp at i-infinity is drawn as an upward arrow.
enum class PlotKind {
    fundamental_domains,  // the SL2Z cell and the wider three-sheet cell
    schwarz_triangle,     // image of the upper half-plane under one map
    tessellation,         // translates of the cell under short group words
};

struct PlotOptions {
    SchwarzId triangle = SchwarzId::phi1;   // schwarz_triangle choice
    DomainGroup group = DomainGroup::SL2Z;  // tessellation group
    int depth = 3;                          // max word length, [0, 8]
    double width = 640.0;                   // pixel size of the canvas
    double height = 440.0;
    double re_min = -2.0;                   // visible real interval
    double re_max = 2.0;
};

std::string render_svg(PlotKind kind, const PlotOptions& opt = {});

}  // namespace hml
