#include "thermo/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

namespace thermo {

namespace {

constexpr const char* kIdleLabel = "\xC2\xB7";  // U+00B7 middle dot

struct Row {
    std::vector<std::string> labels;       // per slot
    std::vector<bool> violating;           // per slot
    std::vector<std::string> fractions;    // per boundary
    std::vector<std::string> decimals;     // per boundary
    std::vector<Rational> temperatures;
};

std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string centered(const std::string& s, std::size_t width) {
    const std::size_t w = display_width(s);
    if (w >= width) return s;
    const std::size_t left = (width - w) / 2;
    return std::string(left, ' ') + s + std::string(width - w - left, ' ');
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

Row build_row(const Instance& instance, const Schedule& schedule) {
    const SimulationTrace trace = simulate(instance, schedule);
    const auto len = static_cast<std::size_t>(trace.temperatures.size() - 1);
    std::set<Time> bad;
    for (const auto& v : trace.violations) bad.insert(v.time);

    Row row;
    for (std::size_t u = 0; u < len; ++u) {
        const auto slot = u < schedule.slots.size() ? schedule.slots[u] : std::nullopt;
        const bool violating = bad.count(static_cast<Time>(u)) > 0;
        std::string label = slot ? std::to_string(*slot) : kIdleLabel;
        if (violating) label = "!" + label;
        row.labels.push_back(std::move(label));
        row.violating.push_back(violating);
    }
    for (const auto& tau : trace.temperatures) {
        std::string frac = tau.str();
        if (tau == instance.config.threshold) frac += "*";
        row.fractions.push_back(std::move(frac));
        row.decimals.push_back(tau.is_zero() ? "0" : tau.decimal(4));
    }
    row.temperatures = trace.temperatures;
    return row;
}

std::string render_text(const Instance& instance, const std::vector<Row>& rows) {
    std::size_t len = 0;
    std::size_t width = 3;
    for (const auto& r : rows) {
        len = std::max(len, r.labels.size());
        for (const auto& s : r.labels) width = std::max(width, display_width(s));
        for (const auto& s : r.fractions) width = std::max(width, display_width(s));
        for (const auto& s : r.decimals) width = std::max(width, display_width(s));
    }
    width += 1;
    if (width % 2 == 0) ++width;  // odd, so boundary labels and separators share a center column

    std::ostringstream os;
    os << "threshold " << instance.config.threshold.str() << ", cooling factor "
       << instance.config.cooling_factor.str() << ", slots " << len << "\n";

    const auto boundary_line = [&](const std::string& head, const std::vector<std::string>& cells) {
        std::string line = head + std::string(8 - head.size(), ' ');
        for (std::size_t b = 0; b < cells.size(); ++b) {
            line += centered(cells[b], width);
            if (b + 1 < cells.size()) line += std::string(width, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    };

    std::vector<std::string> times;
    for (std::size_t b = 0; b <= len; ++b) times.push_back(std::to_string(b));
    boundary_line("time", times);

    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        std::string line = "row " + std::to_string(i + 1);
        line += std::string(8 - line.size(), ' ');
        line += std::string(width / 2, ' ');
        for (const auto& label : r.labels) line += "|" + centered(label, 2 * width - 1);
        line += "|";
        os << line << "\n";
        boundary_line("tau", r.fractions);
        boundary_line("~", r.decimals);
    }
    return os.str();
}

std::string render_svg(const Instance& instance, const std::vector<Row>& rows) {
    constexpr int slot_w = 60;
    constexpr int left = 50;
    constexpr int plot_h = 80;
    constexpr int bar_h = 30;
    constexpr int row_h = plot_h + bar_h + 60;

    std::size_t len = 0;
    for (const auto& r : rows) len = std::max(len, r.labels.size());
    const int width = left * 2 + static_cast<int>(len) * slot_w;
    const int height = 30 + static_cast<int>(rows.size()) * row_h;

    // Vertical scale spans [0, max(threshold, hottest temperature)].
    Rational top = instance.config.threshold;
    for (const auto& r : rows) {
        for (const auto& t : r.temperatures) top = std::max(top, t);
    }
    const auto y_of = [&](const Rational& t, int base) {
        return base + plot_h - static_cast<int>((t / top * Rational(plot_h)).to_double() + 0.5);
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" font-family=\"monospace\" font-size=\"11\">\n";
    os << "  <text x=\"" << left << "\" y=\"18\">threshold " << xml_escape(instance.config.threshold.str())
       << ", cooling factor " << xml_escape(instance.config.cooling_factor.str()) << "</text>\n";

    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        const int base = 30 + static_cast<int>(i) * row_h;
        const int bar_y = base + plot_h + 20;
        const int ty = y_of(instance.config.threshold, base);
        os << "  <g id=\"row" << i + 1 << "\">\n";
        os << "    <line x1=\"" << left << "\" y1=\"" << ty << "\" x2=\"" << left + static_cast<int>(len) * slot_w
           << "\" y2=\"" << ty << "\" stroke=\"red\" stroke-dasharray=\"4 3\"/>\n";
        os << "    <text x=\"4\" y=\"" << ty + 4 << "\" fill=\"red\">T</text>\n";

        os << "    <polyline fill=\"none\" stroke=\"black\" points=\"";
        for (std::size_t b = 0; b < r.temperatures.size(); ++b) {
            os << (b ? " " : "") << left + static_cast<int>(b) * slot_w << "," << y_of(r.temperatures[b], base);
        }
        os << "\"/>\n";
        for (std::size_t b = 0; b < r.fractions.size(); ++b) {
            const int x = left + static_cast<int>(b) * slot_w;
            os << "    <text x=\"" << x << "\" y=\"" << y_of(r.temperatures[b], base) - 4
               << "\" text-anchor=\"middle\">" << xml_escape(r.fractions[b]) << "</text>\n";
        }
        for (std::size_t u = 0; u < r.labels.size(); ++u) {
            const int x = left + static_cast<int>(u) * slot_w;
            const bool idle = r.labels[u] == kIdleLabel;
            const char* fill = r.violating[u] ? "#f4a6a6" : idle ? "#eeeeee" : "#a6c8f4";
            os << "    <rect x=\"" << x << "\" y=\"" << bar_y << "\" width=\"" << slot_w << "\" height=\"" << bar_h
               << "\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
            os << "    <text x=\"" << x + slot_w / 2 << "\" y=\"" << bar_y + bar_h / 2 + 4
               << "\" text-anchor=\"middle\">" << xml_escape(r.labels[u]) << "</text>\n";
        }
        for (std::size_t b = 0; b <= r.labels.size(); ++b) {
            os << "    <text x=\"" << left + static_cast<int>(b) * slot_w << "\" y=\"" << bar_y + bar_h + 14
               << "\" text-anchor=\"middle\">" << b << "</text>\n";
        }
        os << "  </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render_gantt(const Instance& instance, std::span<const Schedule> schedules, GanttFormat format) {
    std::vector<Row> rows;
    for (const auto& s : schedules) rows.push_back(build_row(instance, s));
    return format == GanttFormat::Text ? render_text(instance, rows) : render_svg(instance, rows);
}

}  // namespace thermo
