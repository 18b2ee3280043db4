#pragma once

#include <filesystem>
#include <string>

#include "hyproj/scenarios.hpp"

namespace hyproj {

/// Columns n,re_z,im_z,t_star,re_pi,im_pi,dist_w_pi,delta; %.17g, LF line ends.
/// Optional cells and the first delta are empty.
std::string csv_text(const ScenarioReport& report);

/// Single SVG line chart of the tracked value against n.
std::string plot_svg(const ScenarioReport& report);

/// Write the text forms; I/O failures raise Error naming the path.
void emit_csv(const ScenarioReport& report, const std::filesystem::path& path);
void emit_plot(const ScenarioReport& report, const std::filesystem::path& path);

}  // namespace hyproj
