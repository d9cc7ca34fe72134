#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pme::cli {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Minimal log-log polyline plot. Non-positive points are skipped.
void write_loglog_svg(std::ostream& out, const std::string& title, const std::string& xlabel,
                      const std::string& ylabel, const std::vector<Series>& series);

}  // namespace pme::cli
