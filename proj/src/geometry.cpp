#include "toric/geometry.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace toric {

namespace {

Scalar cross(const Point& o, const Point& a, const Point& b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Scalar dot(const Point& o, const Point& a, const Point& b)
{
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

Scalar twice_signed_area(const std::vector<Point>& v)
{
    Scalar sum;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % v.size()];
        sum += p.x * q.y - q.x * p.y;
    }
    return sum;
}

bool all_collinear(const std::vector<Point>& v)
{
    for (std::size_t i = 2; i < v.size(); ++i)
        if (!cross(v[0], v[1], v[i]).is_zero()) return false;
    return true;
}

std::string point_string(const Point& p) { return "(" + p.x.to_string() + "," + p.y.to_string() + ")"; }

}  // namespace

MomentPolygon MomentPolygon::validate(std::vector<Point> v)
{
    using Code = GeometryError::Code;
    if (v.size() < 3)
        throw GeometryError(Code::too_few_vertices, "a moment polygon needs at least 3 vertices, got " + std::to_string(v.size()));
    for (const Point& p : v)
        if (p.x.sign() < 0 || p.y.sign() < 0)
            throw GeometryError(Code::negative_coordinate, "vertex " + point_string(p) + " leaves the first quadrant");

    // repeated vertices (cyclically adjacent)
    std::vector<Point> w;
    for (const Point& p : v)
        if (w.empty() || !(w.back() == p)) w.push_back(p);
    while (w.size() > 1 && w.front() == w.back()) w.pop_back();
    if (w.size() < 3 || all_collinear(w)) throw GeometryError(Code::degenerate, "vertices span no area");

    Scalar orientation = twice_signed_area(w);
    if (orientation.is_zero()) throw GeometryError(Code::non_convex, "vertex order is self-intersecting");
    if (orientation.sign() < 0) std::reverse(w.begin(), w.end());

    // drop collinear-redundant vertices; a reversal along a line is a spike
    bool changed = true;
    while (changed && w.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Point& prev = w[(i + w.size() - 1) % w.size()];
            const Point& next = w[(i + 1) % w.size()];
            if (!cross(prev, w[i], next).is_zero()) continue;
            if (dot(w[i], prev, next).sign() > 0)
                throw GeometryError(Code::non_convex, "boundary doubles back at " + point_string(w[i]));
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
        }
    }
    if (w.size() < 3) throw GeometryError(Code::degenerate, "vertices span no area");

    // every vertex must lie on the closed left side of every edge
    for (std::size_t e = 0; e < w.size(); ++e) {
        const Point& p = w[e];
        const Point& q = w[(e + 1) % w.size()];
        for (const Point& r : w)
            if (cross(p, q, r).sign() < 0)
                throw GeometryError(Code::non_convex,
                                    "vertex " + point_string(r) + " lies outside edge " + point_string(p) + "-" + point_string(q));
    }

    auto first = std::min_element(w.begin(), w.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::rotate(w.begin(), first, w.end());

    MomentPolygon poly(std::move(w), DomainTag{});
    if (!poly.contains(Point{Scalar(0), Scalar(0)})) throw GeometryError(Code::origin_outside, "the origin is not in the polygon");
    return poly;
}

MomentPolygon MomentPolygon::ball(const Scalar& r)
{
    MomentPolygon p = ellipsoid(r, r);
    p.tag_ = DomainTag{DomainKind::ball, r, r};
    return p;
}

MomentPolygon MomentPolygon::ellipsoid(const Scalar& a, const Scalar& b)
{
    if (a.sign() <= 0 || b.sign() <= 0) throw GeometryError(GeometryError::Code::degenerate, "ellipsoid axes must be positive");
    MomentPolygon p = validate({{Scalar(0), Scalar(0)}, {a, Scalar(0)}, {Scalar(0), b}});
    p.tag_ = DomainTag{DomainKind::ellipsoid, a, b};
    return p;
}

MomentPolygon MomentPolygon::polydisk(const Scalar& a, const Scalar& b)
{
    if (a.sign() <= 0 || b.sign() <= 0) throw GeometryError(GeometryError::Code::degenerate, "polydisk factors must be positive");
    MomentPolygon p = validate({{Scalar(0), Scalar(0)}, {a, Scalar(0)}, {a, b}, {Scalar(0), b}});
    p.tag_ = DomainTag{DomainKind::polydisk, a, b};
    return p;
}

MomentPolygon MomentPolygon::scaled(const Scalar& lambda) const
{
    if (lambda.sign() <= 0) throw std::domain_error("scale factor must be positive");
    std::vector<Point> v;
    v.reserve(vertices_.size());
    for (const Point& p : vertices_) v.push_back({p.x * lambda, p.y * lambda});
    DomainTag tag = tag_;
    tag.a *= lambda;
    tag.b *= lambda;
    return MomentPolygon(std::move(v), std::move(tag));
}

MomentPolygon MomentPolygon::transposed() const
{
    std::vector<Point> v;
    for (const Point& p : vertices_) v.push_back({p.y, p.x});
    MomentPolygon t = validate(std::move(v));
    t.tag_ = DomainTag{tag_.kind, tag_.b, tag_.a};
    return t;
}

Scalar MomentPolygon::max_y() const
{
    Scalar m = vertices_.front().y;
    for (const Point& p : vertices_) m = max(m, p.y);
    return m;
}

Scalar MomentPolygon::max_x() const
{
    Scalar m = vertices_.front().x;
    for (const Point& p : vertices_) m = max(m, p.x);
    return m;
}

bool MomentPolygon::contains(const Point& p) const
{
    for (std::size_t e = 0; e < vertices_.size(); ++e)
        if (cross(vertices_[e], vertices_[(e + 1) % vertices_.size()], p).sign() < 0) return false;
    return true;
}

std::string MomentPolygon::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) out += ",";
        out += point_string(vertices_[i]);
    }
    return out + "]";
}

Scalar dual_norm(const MomentPolygon& omega, LatticeVector v)
{
    const Scalar si(v.i), sj(v.j);
    std::optional<Scalar> best;
    for (const Point& p : omega.vertices()) {
        Scalar value = si * p.x + sj * p.y;
        if (!best || *best < value) best = std::move(value);
    }
    return *best;
}

Scalar area(const MomentPolygon& omega)
{
    return twice_signed_area(omega.vertices()) / Scalar(2);
}

IndexMinimizer per_index_minimizer(const MomentPolygon& omega, int m)
{
    if (m < 1) throw std::invalid_argument("per_index_minimizer needs m >= 1");
    IndexMinimizer out{dual_norm(omega, {0, m}), {{0, m}}};
    for (int i = 1; i <= m; ++i) {
        Scalar value = dual_norm(omega, {i, m - i});
        if (value < out.value) {
            out.value = std::move(value);
            out.argmins.assign(1, {i, m - i});
        } else if (value == out.value) {
            out.argmins.push_back({i, m - i});
        }
    }
    return out;
}

bool is_long_domain(const MomentPolygon& omega)
{
    return omega.max_y() == Scalar(1) && omega.contains({Scalar(0), Scalar(1)}) && omega.contains({Scalar(1), Scalar(1)});
}

std::variant<Scalar, VertexCrossing> diagonal_slope(const MomentPolygon& omega)
{
    const auto& v = omega.vertices();
    // exit point of the ray t -> (t, t): largest t over all boundary hits
    std::optional<Scalar> best_t;
    std::optional<std::size_t> best_edge;
    bool at_vertex = false;
    Point vertex;

    auto consider = [&](const Scalar& t, std::optional<std::size_t> edge, const Point* corner) {
        if (t.sign() <= 0) return;
        if (best_t && !(*best_t < t)) {
            if (*best_t == t && corner) {
                at_vertex = true;
                vertex = *corner;
            }
            return;
        }
        best_t = t;
        best_edge = edge;
        at_vertex = corner != nullptr;
        if (corner) vertex = *corner;
    };

    for (std::size_t e = 0; e < v.size(); ++e) {
        const Point& p = v[e];
        const Point& q = v[(e + 1) % v.size()];
        if (p.x == p.y) consider(p.x, std::nullopt, &p);
        Scalar dx = q.x - p.x, dy = q.y - p.y;
        if (dx == dy) continue;  // parallel to the diagonal; endpoints handled as vertices
        Scalar s = (p.x - p.y) / (dy - dx);
        if (s.sign() <= 0 || !(s < Scalar(1))) continue;
        consider(p.x + s * dx, e, nullptr);
    }

    if (!best_t) throw GeometryError(GeometryError::Code::degenerate, "boundary does not meet the open diagonal");
    if (at_vertex) return VertexCrossing{vertex};
    const Point& p = v[*best_edge];
    const Point& q = v[(*best_edge + 1) % v.size()];
    if ((q.x - p.x).is_zero()) throw GeometryError(GeometryError::Code::degenerate, "diagonal crosses a vertical edge");
    return (q.y - p.y) / (q.x - p.x);
}

}  // namespace toric
