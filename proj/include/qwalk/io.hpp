#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace qwalk::io {

inline constexpr const char* version = "0.1.0";

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// 17 significant digits, '.' decimal, no locale
std::string format_number(double v);
std::string to_csv(const Table& t);
void write_text(const std::filesystem::path& p, const std::string& s);
void write_csv(const std::filesystem::path& p, const Table& t);
void write_json(const std::filesystem::path& p, const nlohmann::ordered_json& j);

struct Series {
    std::string name;
    std::vector<double> x, y;
};

std::string svg_lines(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                      const std::vector<Series>& series);
// rows are drawn top to bottom, row 0 at y_lo
std::string svg_heatmap(const std::string& title, const std::vector<double>& grid, long nrows, long ncols,
                        double x_lo, double y_lo, const std::string& xlabel, const std::string& ylabel);

} // namespace qwalk::io
