#pragma once

#include <string>
#include <vector>

#include "mahlervol/polygons.hpp"

namespace mahlervol {

// Standalone SVG document for one polygon: dashed circumcircle, thin strokes
// for the unit chords, bold strokes for the t chords, and an arrowhead on the
// first chord of each family showing the winding direction.
std::string polygon_svg(const AdmissiblePolygon& poly);

// polygon_m{m}_n{n}_t{t}_{index}.svg with t printed as %g.
std::string polygon_svg_filename(const AdmissiblePolygon& poly, int index);

// Renders every polygon into out_dir and returns the file paths written.
std::vector<std::string> write_polygon_svgs(
    const std::vector<SignedPolygon>& polys, const std::string& out_dir);

}  // namespace mahlervol
