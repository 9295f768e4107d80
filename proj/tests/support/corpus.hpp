// Polygons shared by the unit and acceptance suites.
#pragma once

#include "toric/geometry.hpp"

#include <string>
#include <utility>
#include <vector>

namespace corpus {

using toric::MomentPolygon;
using toric::Point;
using toric::Scalar;

inline Scalar q(long n, long d = 1) { return Scalar::fraction(n, d); }

inline MomentPolygon poly(std::vector<std::pair<Scalar, Scalar>> pts)
{
    std::vector<Point> v;
    for (auto& [x, y] : pts) v.push_back({x, y});
    return MomentPolygon::validate(std::move(v));
}

// (0,0),(0,1),(1,1),(2,1/2),(2,0)
inline MomentPolygon five_gon() { return poly({{q(0), q(0)}, {q(0), q(1)}, {q(1), q(1)}, {q(2), q(1, 2)}, {q(2), q(0)}}); }

// unit square with a corner cut at (51/28, 25/28); the hat variant has a wider top
inline MomentPolygon bumped_inner() { return poly({{q(0), q(0)}, {q(0), q(1)}, {q(42, 28), q(1)}, {q(51, 28), q(25, 28)}, {q(2), q(0)}}); }
inline MomentPolygon bumped_hat() { return poly({{q(0), q(0)}, {q(0), q(1)}, {q(48, 28), q(1)}, {q(51, 28), q(25, 28)}, {q(2), q(0)}}); }

// the same corner cut on a length-3 domain
inline MomentPolygon bumped_long_inner() { return poly({{q(0), q(0)}, {q(0), q(1)}, {q(70, 28), q(1)}, {q(79, 28), q(25, 28)}, {q(3), q(0)}}); }
inline MomentPolygon bumped_long_hat() { return poly({{q(0), q(0)}, {q(0), q(1)}, {q(76, 28), q(1)}, {q(79, 28), q(25, 28)}, {q(3), q(0)}}); }

inline MomentPolygon polydisk(long n, long d = 1) { return MomentPolygon::polydisk(q(n, d), q(1)); }
inline MomentPolygon unit_ball() { return MomentPolygon::ball(q(1)); }
inline MomentPolygon ellipsoid(long n, long d = 1) { return MomentPolygon::ellipsoid(q(n, d), q(1)); }

// (1 + sqrt 5) / 2
inline Scalar phi() { return Scalar(toric::Rational(1, 2), toric::Rational(1, 2), 5); }
inline Scalar golden(long rational, long phis) { return Scalar(rational) + Scalar(phis) * phi(); }

// The same shapes without builder tags, so capacity() takes the general path.
inline MomentPolygon untagged(const MomentPolygon& p) { return MomentPolygon::validate(p.vertices()); }

struct Named {
    std::string name;
    MomentPolygon polygon;
};

inline std::vector<Named> long_domains()
{
    return {{"five_gon", five_gon()},
            {"bumped_inner", bumped_inner()},
            {"bumped_hat", bumped_hat()},
            {"bumped_long_inner", bumped_long_inner()},
            {"bumped_long_hat", bumped_long_hat()}};
}

inline std::vector<Named> engine_corpus()
{
    auto out = long_domains();
    out.push_back({"unit_ball", unit_ball()});
    out.push_back({"polydisk_11_10", polydisk(11, 10)});
    out.push_back({"polydisk_2", polydisk(2)});
    out.push_back({"ellipsoid_2", ellipsoid(2)});
    return out;
}

}  // namespace corpus
