#pragma once

#include <string>
#include <vector>

namespace denominal::cli {

enum class Role { Noun, Denominal, RootVerb };
const char* to_string(Role role);

struct PlotPoint {
    std::string token;
    Role role;
    double x = 0;
    double y = 0;
};

/// 600 x 600 SVG. Data coordinates map to the square [50, 550] with one
/// common scale for both axes (y grows upward); nouns are squares,
/// denominals triangles, root verbs circles.
std::string render_svg(const std::string& title, const std::vector<PlotPoint>& points);

/// token,role,x,y
std::string render_csv(const std::vector<PlotPoint>& points);

}  // namespace denominal::cli
