// Moment polygons of four-dimensional convex toric domains and the convex
// geometry the capacity formula needs: the support function on lattice
// vectors, area, per-index minimizers and the long-domain test.
#pragma once

#include "toric/numeric.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace toric {

struct Point {
    Scalar x;
    Scalar y;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Lattice pair (i, j) with i, j >= 0.
struct LatticeVector {
    int i = 0;
    int j = 0;

    int degree() const { return i + j; }

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

enum class DomainKind { general, ball, ellipsoid, polydisk };

/// Records which builder produced a polygon. For ball(r) both parameters
/// are r; for ellipsoid(a, b) and polydisk(a, b) they are the two axis
/// lengths along x and y.
struct DomainTag {
    DomainKind kind = DomainKind::general;
    Scalar a;
    Scalar b;
};

class GeometryError : public std::invalid_argument {
public:
    enum class Code { too_few_vertices, negative_coordinate, non_convex, origin_outside, degenerate };

    GeometryError(Code code, const std::string& what) : std::invalid_argument(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

class MomentPolygon {
public:
    /// Normalizes to counterclockwise order starting at the lexicographically
    /// smallest vertex, dropping repeated and collinear-redundant vertices.
    /// Throws GeometryError when the vertices are not a convex polygon in the
    /// closed first quadrant containing the origin.
    static MomentPolygon validate(std::vector<Point> vertices);

    static MomentPolygon ball(const Scalar& r);
    static MomentPolygon ellipsoid(const Scalar& a, const Scalar& b = Scalar(1));
    static MomentPolygon polydisk(const Scalar& a, const Scalar& b = Scalar(1));

    const std::vector<Point>& vertices() const { return vertices_; }
    const DomainTag& tag() const { return tag_; }

    /// lambda * Omega; the builder tag is scaled along with it.
    MomentPolygon scaled(const Scalar& lambda) const;
    /// Reflection across the diagonal (x, y) -> (y, x).
    MomentPolygon transposed() const;

    Scalar max_y() const;
    Scalar max_x() const;

    /// Exact closed-region containment.
    bool contains(const Point& p) const;

    std::string to_string() const;

private:
    MomentPolygon(std::vector<Point> vertices, DomainTag tag) : vertices_(std::move(vertices)), tag_(std::move(tag)) {}

    std::vector<Point> vertices_;
    DomainTag tag_;
};

/// Support function max{ i*x + j*y : (x, y) in Omega }.
Scalar dual_norm(const MomentPolygon& omega, LatticeVector v);

/// Shoelace area.
Scalar area(const MomentPolygon& omega);

struct IndexMinimizer {
    Scalar value;
    std::vector<LatticeVector> argmins;  // increasing i
};

/// Minimum of the dual norm over the m + 1 lattice vectors with i + j = m.
IndexMinimizer per_index_minimizer(const MomentPolygon& omega, int m);

/// True when max y over Omega is exactly 1, (0, 1) lies in Omega, and the
/// unit square corner (1, 1) lies in Omega.
bool is_long_domain(const MomentPolygon& omega);

/// Marker returned when the diagonal y = x leaves Omega through a vertex.
struct VertexCrossing {
    Point vertex;
    friend bool operator==(const VertexCrossing&, const VertexCrossing&) = default;
};

/// Slope of the boundary edge crossed by the open ray y = x > 0.
/// A vertical edge has no finite slope and is reported as a GeometryError
/// only if it is crossed in its interior.
std::variant<Scalar, VertexCrossing> diagonal_slope(const MomentPolygon& omega);

}  // namespace toric
