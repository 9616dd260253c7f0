#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace fts {

/// Minimal SVG line/scatter rendering for the CSV outputs. Best-effort
/// convenience; the CSV files are the contract.
class SvgPlot {
public:
    SvgPlot(std::string title, int width = 800, int height = 500)
        : title_(std::move(title)), width_(width), height_(height) {}

    void add_line(const std::vector<double>& xs, const std::vector<double>& ys,
                  const std::string& color) {
        series_.push_back({xs, ys, color, false});
        grow_bounds(xs, ys);
    }

    void add_scatter(const std::vector<double>& xs, const std::vector<double>& ys,
                     const std::string& color) {
        series_.push_back({xs, ys, color, true});
        grow_bounds(xs, ys);
    }

    void render(std::ostream& out) const {
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_
            << "\" height=\"" << height_ << "\">\n";
        out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        out << "<text x=\"" << width_ / 2 << "\" y=\"20\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"14\">" << title_ << "</text>\n";
        for (const auto& s : series_) {
            if (s.scatter) {
                for (std::size_t i = 0; i < s.xs.size(); ++i)
                    out << "<circle cx=\"" << px(s.xs[i]) << "\" cy=\"" << py(s.ys[i])
                        << "\" r=\"1\" fill=\"" << s.color << "\"/>\n";
            } else {
                out << "<polyline fill=\"none\" stroke=\"" << s.color
                    << "\" stroke-width=\"1.5\" points=\"";
                for (std::size_t i = 0; i < s.xs.size(); ++i)
                    out << px(s.xs[i]) << ',' << py(s.ys[i]) << ' ';
                out << "\"/>\n";
            }
        }
        out << "</svg>\n";
    }

private:
    struct Series {
        std::vector<double> xs, ys;
        std::string color;
        bool scatter;
    };

    void grow_bounds(const std::vector<double>& xs, const std::vector<double>& ys) {
        for (double x : xs) {
            if (std::isfinite(x)) { x_min_ = std::min(x_min_, x); x_max_ = std::max(x_max_, x); }
        }
        for (double y : ys) {
            if (std::isfinite(y)) { y_min_ = std::min(y_min_, y); y_max_ = std::max(y_max_, y); }
        }
    }

    double px(double x) const {
        const double span = (x_max_ > x_min_) ? x_max_ - x_min_ : 1.0;
        return margin_ + (x - x_min_) / span * (width_ - 2 * margin_);
    }

    double py(double y) const {
        const double span = (y_max_ > y_min_) ? y_max_ - y_min_ : 1.0;
        return height_ - margin_ - (y - y_min_) / span * (height_ - 2 * margin_);
    }

    std::string title_;
    int width_, height_;
    int margin_ = 40;
    double x_min_ = std::numeric_limits<double>::infinity();
    double x_max_ = -std::numeric_limits<double>::infinity();
    double y_min_ = std::numeric_limits<double>::infinity();
    double y_max_ = -std::numeric_limits<double>::infinity();
    std::vector<Series> series_;
};

}  // namespace fts
