#include "hypermetric/point.hpp"

#include "hypermetric/errors.hpp"

#include <charconv>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace hypermetric {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw InvalidArgument("point must have at least one coordinate");
    }
    for (double v : coords_) {
        if (!std::isfinite(v)) {
            throw InvalidArgument("point coordinates must be finite");
        }
    }
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

double Point::norm_squared() const noexcept {
    double s = 0.0;
    for (double v : coords_) {
        s += v * v;
    }
    return s;
}

double Point::norm() const noexcept {
    const double s = norm_squared();
    if (s > 1e-280 && s < 1e280) {
        return std::sqrt(s);
    }
    double scale = 0.0;
    for (double v : coords_) {
        scale = std::max(scale, std::abs(v));
    }
    if (scale == 0.0) {
        return 0.0;
    }
    double t = 0.0;
    for (double v : coords_) {
        t += (v / scale) * (v / scale);
    }
    return scale * std::sqrt(t);
}

void require_same_dimension(const Point& a, const Point& b) {
    if (a.dimension() != b.dimension()) {
        throw DimensionMismatch("points of dimension " + std::to_string(a.dimension()) + " and " +
                                std::to_string(b.dimension()) + " cannot be combined");
    }
}

double distance_squared(const Point& a, const Point& b) {
    require_same_dimension(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double distance(const Point& a, const Point& b) { return std::sqrt(distance_squared(a, b)); }

double dot(const Point& a, const Point& b) {
    require_same_dimension(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

Point operator+(const Point& a, const Point& b) {
    require_same_dimension(a, b);
    std::vector<double> out(a.dimension());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return Point(std::move(out));
}

Point operator-(const Point& a, const Point& b) {
    require_same_dimension(a, b);
    std::vector<double> out(a.dimension());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return Point(std::move(out));
}

Point operator*(double s, const Point& a) {
    std::vector<double> out(a.dimension());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = s * a[i];
    }
    return Point(std::move(out));
}

Point origin(std::size_t n) { return Point(std::vector<double>(n, 0.0)); }

Point axis_point(std::size_t n, std::size_t i, double scale) {
    std::vector<double> v(n, 0.0);
    v.at(i) = scale;
    return Point(std::move(v));
}

std::string format_shortest(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string to_string(const Point& p) {
    std::string out;
    for (std::size_t i = 0; i < p.dimension(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += format_shortest(p[i]);
    }
    return out;
}

Point parse_point(const std::string& text) {
    std::vector<double> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double v = 0.0;
        const char* first = item.data();
        const char* last = item.data() + item.size();
        auto res = std::from_chars(first, last, v);
        if (item.empty() || res.ec != std::errc() || res.ptr != last) {
            throw InvalidArgument("malformed coordinate '" + item + "' in point '" + text + "'");
        }
        coords.push_back(v);
    }
    if (coords.empty() || (!text.empty() && text.back() == ',')) {
        throw InvalidArgument("malformed point '" + text + "'");
    }
    return Point(std::move(coords));
}

} // namespace hypermetric
