#include "pme/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pme::cli {
namespace {

constexpr double kWidth = 640, kHeight = 440, kLeft = 80, kRight = 150, kTop = 40, kBottom = 60;
const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string escape(const std::string& s) {
    std::string r;
    for (char c : s) {
        if (c == '<') r += "&lt;";
        else if (c == '>') r += "&gt;";
        else if (c == '&') r += "&amp;";
        else r += c;
    }
    return r;
}

}  // namespace

void write_loglog_svg(std::ostream& out, const std::string& title, const std::string& xlabel,
                      const std::string& ylabel, const std::vector<Series>& series) {
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (!(s.x[i] > 0) || !(s.y[i] > 0)) continue;
            x0 = std::min(x0, std::log10(s.x[i]));
            x1 = std::max(x1, std::log10(s.x[i]));
            y0 = std::min(y0, std::log10(s.y[i]));
            y1 = std::max(y1, std::log10(s.y[i]));
        }
    }
    if (!(x1 >= x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    x0 = std::floor(x0), x1 = std::max(std::ceil(x1), x0 + 1);
    y0 = std::floor(y0), y1 = std::max(std::ceil(y1), y0 + 1);
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double lx) { return kLeft + (lx - x0) / (x1 - x0) * pw; };
    auto py = [&](double ly) { return kTop + (y1 - ly) / (y1 - y0) * ph; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
        << escape(title) << "</text>\n";
    out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double d = x0; d <= x1 + 1e-9; d += 1) {
        out << "<line x1=\"" << px(d) << "\" y1=\"" << kTop << "\" x2=\"" << px(d) << "\" y2=\""
            << kTop + ph << "\" stroke=\"#ddd\"/>\n";
        out << "<text x=\"" << px(d) << "\" y=\"" << kTop + ph + 18
            << "\" text-anchor=\"middle\">1e" << d << "</text>\n";
    }
    for (double d = y0; d <= y1 + 1e-9; d += 1) {
        out << "<line x1=\"" << kLeft << "\" y1=\"" << py(d) << "\" x2=\"" << kLeft + pw << "\" y2=\""
            << py(d) << "\" stroke=\"#ddd\"/>\n";
        out << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(d) + 4 << "\" text-anchor=\"end\">1e" << d
            << "</text>\n";
    }
    out << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\">"
        << escape(xlabel) << "</text>\n";
    out << "<text transform=\"translate(18," << kTop + ph / 2
        << ") rotate(-90)\" text-anchor=\"middle\">" << escape(ylabel) << "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = kColors[k % 5];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (!(s.x[i] > 0) || !(s.y[i] > 0)) continue;
            out << px(std::log10(s.x[i])) << ',' << py(std::log10(s.y[i])) << ' ';
        }
        out << "\"/>\n";
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (!(s.x[i] > 0) || !(s.y[i] > 0)) continue;
            out << "<circle cx=\"" << px(std::log10(s.x[i])) << "\" cy=\"" << py(std::log10(s.y[i]))
                << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
        out << "<text x=\"" << kLeft + pw + 10 << "\" y=\"" << kTop + 16 + 18 * k << "\" fill=\"" << color
            << "\">" << escape(s.label) << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace pme::cli
