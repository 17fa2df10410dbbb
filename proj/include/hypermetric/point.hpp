#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hypermetric {

/// A point of R^n with finite coordinates, n >= 1.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords);

    [[nodiscard]] std::size_t dimension() const noexcept { return coords_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return coords_[i]; }
    [[nodiscard]] std::span<const double> coords() const noexcept { return coords_; }
    [[nodiscard]] double last() const { return coords_.back(); }

    [[nodiscard]] double norm() const noexcept;
    [[nodiscard]] double norm_squared() const noexcept;

    friend bool operator==(const Point&, const Point&) = default;

private:
    std::vector<double> coords_;
};

/// Throws DimensionMismatch unless both points share a dimension.
void require_same_dimension(const Point& a, const Point& b);

[[nodiscard]] double distance(const Point& a, const Point& b);
[[nodiscard]] double distance_squared(const Point& a, const Point& b);
[[nodiscard]] double dot(const Point& a, const Point& b);

[[nodiscard]] Point operator+(const Point& a, const Point& b);
[[nodiscard]] Point operator-(const Point& a, const Point& b);
[[nodiscard]] Point operator*(double s, const Point& a);

/// Origin of R^n.
[[nodiscard]] Point origin(std::size_t n);
/// i-th standard basis vector of R^n scaled by `scale`.
[[nodiscard]] Point axis_point(std::size_t n, std::size_t i, double scale = 1.0);

/// Shortest decimal text that parses back to the same double.
[[nodiscard]] std::string format_shortest(double v);

/// "x1,x2,...,xn" with shortest round-trip formatting.
[[nodiscard]] std::string to_string(const Point& p);
/// Parses "x1,x2,...,xn"; throws InvalidArgument on malformed or non-finite input.
[[nodiscard]] Point parse_point(const std::string& text);

} // namespace hypermetric
