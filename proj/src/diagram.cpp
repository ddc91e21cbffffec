#include "capdelta/diagram.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

namespace capdelta {

namespace {

char cell_glyph(const ControlDistribution& p, int requirement, bool on_line, bool is_chosen) {
    if (is_chosen)
        return '@';
    if (on_line)
        return 'o';
    switch (classify_point(p, requirement)) {
    case SpaceLabel::Collaborative: return '+';
    case SpaceLabel::SummativeOnly: return 'x';
    default: return '.';
    }
}

std::string render_ascii(int requirement, AggregationKind kind, int cap_auto, int cap_human,
                         std::optional<ControlDistribution> chosen) {
    std::set<ControlDistribution> line;
    for (const ControlDistribution& p : requirement_line(requirement, kind, cap_auto, cap_human))
        line.insert(p);

    std::ostringstream out;
    out << "r=" << requirement << " " << to_string(kind) << "  caps a=" << cap_auto
        << " h=" << cap_human << "\n";
    out << "h\\a";
    for (int a = 0; a <= cap_auto; ++a)
        out << std::setw(3) << a;
    out << "\n";
    for (int h = cap_human; h >= 0; --h) {
        out << std::setw(3) << h;
        for (int a = 0; a <= cap_auto; ++a) {
            ControlDistribution p{a, h};
            bool is_chosen = chosen && *chosen == p;
            out << "  " << cell_glyph(p, requirement, line.count(p) != 0, is_chosen);
        }
        out << "\n";
    }
    out << "legend: @ chosen  o requirement line  + collaborative  x summative-only"
           "  . insufficient\n";
    return out.str();
}

const char* space_fill(SpaceLabel label) {
    switch (label) {
    case SpaceLabel::Collaborative: return "#bfe3bf";
    case SpaceLabel::SummativeOnly: return "#f2e0a8";
    default: return "#e8e8e8";
    }
}

std::string render_svg(int requirement, AggregationKind kind, int cap_auto, int cap_human,
                       std::optional<ControlDistribution> chosen) {
    const int cell = 28;
    const int margin = 36;
    const int width = margin + (cap_auto + 1) * cell + 12;
    const int height = margin + (cap_human + 1) * cell + 12;

    std::set<ControlDistribution> line;
    for (const ControlDistribution& p : requirement_line(requirement, kind, cap_auto, cap_human))
        line.insert(p);

    auto cell_x = [&](int a) { return margin + a * cell; };
    auto cell_y = [&](int h) { return 12 + (cap_human - h) * cell; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "  <title>CR diagram r=" << requirement << " " << to_string(kind) << "</title>\n";
    for (int h = 0; h <= cap_human; ++h) {
        for (int a = 0; a <= cap_auto; ++a) {
            ControlDistribution p{a, h};
            bool on_line = line.count(p) != 0;
            out << "  <rect x=\"" << cell_x(a) << "\" y=\"" << cell_y(h) << "\" width=\""
                << cell - 2 << "\" height=\"" << cell - 2 << "\" fill=\""
                << space_fill(classify_point(p, requirement)) << "\" stroke=\""
                << (on_line ? "#333333" : "#ffffff") << "\" stroke-width=\""
                << (on_line ? 2 : 1) << "\"/>\n";
        }
    }
    if (chosen) {
        out << "  <circle cx=\"" << cell_x(chosen->auto_perf) + (cell - 2) / 2 << "\" cy=\""
            << cell_y(chosen->human_perf) + (cell - 2) / 2 << "\" r=\"" << cell / 4
            << "\" fill=\"#111111\"/>\n";
    }
    for (int a = 0; a <= cap_auto; ++a)
        out << "  <text x=\"" << cell_x(a) + cell / 2 - 4 << "\" y=\"" << height - 16
            << "\" font-size=\"11\">" << a << "</text>\n";
    for (int h = 0; h <= cap_human; ++h)
        out << "  <text x=\"" << margin - 16 << "\" y=\"" << cell_y(h) + cell / 2 + 3
            << "\" font-size=\"11\">" << h << "</text>\n";
    out << "  <text x=\"" << margin + (cap_auto + 1) * cell / 2 - 30 << "\" y=\"" << height - 2
        << "\" font-size=\"11\">autonomous</text>\n";
    out << "  <text x=\"2\" y=\"10\" font-size=\"11\">human</text>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace

std::string render_cr_diagram(int requirement, AggregationKind kind, int cap_auto, int cap_human,
                              std::optional<ControlDistribution> chosen, DiagramFormat format,
                              QuantScale scale) {
    scale.require(requirement, "requirement");
    scale.require(cap_auto, "autonomous capacity");
    scale.require(cap_human, "human capacity");
    if (format == DiagramFormat::Ascii)
        return render_ascii(requirement, kind, cap_auto, cap_human, chosen);
    return render_svg(requirement, kind, cap_auto, cap_human, chosen);
}

} // namespace capdelta
