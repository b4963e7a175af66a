#include "qwalk/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qwalk::io {

std::string format_number(double v)
{
    if (v == 0)
        return "0"; // folds -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const Table& t)
{
    std::string s;
    for (size_t c = 0; c < t.columns.size(); ++c)
        s += (c ? "," : "") + t.columns[c];
    s += '\n';
    for (auto& r : t.rows) {
        if (r.size() != t.columns.size())
            throw std::logic_error("row width does not match header");
        for (size_t c = 0; c < r.size(); ++c)
            s += (c ? "," : "") + format_number(r[c]);
        s += '\n';
    }
    return s;
}

void write_text(const std::filesystem::path& p, const std::string& s)
{
    if (p.has_parent_path())
        std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + p.string());
    f << s;
}

void write_csv(const std::filesystem::path& p, const Table& t) { write_text(p, to_csv(t)); }

void write_json(const std::filesystem::path& p, const nlohmann::ordered_json& j) { write_text(p, j.dump(2) + "\n"); }

namespace {
constexpr double W = 640, H = 420, ml = 70, mr = 20, mt = 40, mb = 50;

std::string esc(const std::string& s)
{
    std::string o;
    for (char c : s) {
        switch (c) {
        case '<': o += "&lt;"; break;
        case '>': o += "&gt;"; break;
        case '&': o += "&amp;"; break;
        default: o += c;
        }
    }
    return o;
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

struct Frame {
    double x0, x1, y0, y1;
    double px(double x) const { return ml + (x - x0) / (x1 - x0) * (W - ml - mr); }
    double py(double y) const { return H - mb - (y - y0) / (y1 - y0) * (H - mt - mb); }
};

void widen(double& lo, double& hi)
{
    if (!(hi > lo)) {
        lo -= 0.5;
        hi += 0.5;
    }
}

std::string axes(const Frame& f, const std::string& title, const std::string& xl, const std::string& yl)
{
    std::ostringstream o;
    o << "<rect x='" << ml << "' y='" << mt << "' width='" << W - ml - mr << "' height='" << H - mt - mb
      << "' fill='none' stroke='black'/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = f.x0 + (f.x1 - f.x0) * i / 4, yv = f.y0 + (f.y1 - f.y0) * i / 4;
        o << "<line x1='" << f.px(xv) << "' y1='" << H - mb << "' x2='" << f.px(xv) << "' y2='" << H - mb + 5
          << "' stroke='black'/>";
        o << "<text x='" << f.px(xv) << "' y='" << H - mb + 18 << "' font-size='11' text-anchor='middle'>"
          << num(xv) << "</text>\n";
        o << "<line x1='" << ml - 5 << "' y1='" << f.py(yv) << "' x2='" << ml << "' y2='" << f.py(yv)
          << "' stroke='black'/>";
        o << "<text x='" << ml - 8 << "' y='" << f.py(yv) + 4 << "' font-size='11' text-anchor='end'>" << num(yv)
          << "</text>\n";
    }
    o << "<text x='" << W / 2 << "' y='22' font-size='14' text-anchor='middle'>" << esc(title) << "</text>\n";
    o << "<text x='" << (ml + W - mr) / 2 << "' y='" << H - 10 << "' font-size='12' text-anchor='middle'>"
      << esc(xl) << "</text>\n";
    o << "<text x='16' y='" << (mt + H - mb) / 2 << "' font-size='12' text-anchor='middle' transform='rotate(-90 16 "
      << (mt + H - mb) / 2 << ")'>" << esc(yl) << "</text>\n";
    return o.str();
}

std::string head() { return "<svg xmlns='http://www.w3.org/2000/svg' width='640' height='420'>\n<rect width='100%' height='100%' fill='white'/>\n"; }
} // namespace

std::string svg_lines(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                      const std::vector<Series>& series)
{
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (auto& s : series)
        for (size_t i = 0; i < s.x.size(); ++i) {
            x0 = std::min(x0, s.x[i]);
            x1 = std::max(x1, s.x[i]);
            y0 = std::min(y0, s.y[i]);
            y1 = std::max(y1, s.y[i]);
        }
    if (!std::isfinite(x0)) {
        x0 = y0 = 0;
        x1 = y1 = 1;
    }
    widen(x0, x1);
    widen(y0, y1);
    Frame f{x0, x1, y0, y1};
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};
    std::ostringstream o;
    o << head() << axes(f, title, xlabel, ylabel);
    for (size_t k = 0; k < series.size(); ++k) {
        const char* c = colors[k % 7];
        o << "<polyline fill='none' stroke='" << c << "' stroke-width='1.5' points='";
        for (size_t i = 0; i < series[k].x.size(); ++i)
            o << num(f.px(series[k].x[i])) << ',' << num(f.py(series[k].y[i])) << ' ';
        o << "'/>\n";
        o << "<text x='" << W - mr - 6 << "' y='" << mt + 16 + 14 * k << "' font-size='11' text-anchor='end' fill='"
          << c << "'>" << esc(series[k].name) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

std::string svg_heatmap(const std::string& title, const std::vector<double>& grid, long nrows, long ncols,
                        double x_lo, double y_lo, const std::string& xlabel, const std::string& ylabel)
{
    if (static_cast<long>(grid.size()) != nrows * ncols)
        throw std::invalid_argument("grid size mismatch");
    double top = 0;
    for (double v : grid)
        top = std::max(top, v);
    Frame f{x_lo - 0.5, x_lo + ncols - 0.5, y_lo - 0.5, y_lo + nrows - 0.5};
    std::ostringstream o;
    o << head();
    const double cw = (W - ml - mr) / ncols, ch = (H - mt - mb) / nrows;
    for (long r = 0; r < nrows; ++r)
        for (long c = 0; c < ncols; ++c) {
            const double v = grid[r * ncols + c];
            if (v <= 1e-4 * top)
                continue;
            const int shade = 255 - static_cast<int>(std::lround(255 * std::sqrt(v / top)));
            o << "<rect x='" << num(ml + c * cw) << "' y='" << num(H - mb - (r + 1) * ch) << "' width='"
              << num(cw + 0.05) << "' height='" << num(ch + 0.05) << "' fill='rgb(" << shade << ',' << shade
              << ",255)'/>\n";
        }
    o << axes(f, title, xlabel, ylabel) << "</svg>\n";
    return o.str();
}

} // namespace qwalk::io
