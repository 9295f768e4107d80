#include "corpus.hpp"
#include "doctest.h"
#include "toric/geometry.hpp"

#include <random>

using namespace toric;
using corpus::q;

TEST_CASE("validation accepts convex corpus polygons")
{
    MomentPolygon five = corpus::five_gon();
    CHECK(five.vertices().size() == 5);
    CHECK(five.vertices().front() == Point{q(0), q(0)});
    CHECK(corpus::poly({{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}}).vertices().size() == 3);
    // clockwise input is reoriented and redundant collinear points dropped
    MomentPolygon cw = corpus::poly({{q(0), q(0)}, {q(0), q(1)}, {q(1), q(1)}, {q(1), q(1, 2)}, {q(1), q(0)}});
    CHECK(cw.vertices().size() == 4);
    CHECK(area(cw) == q(1));
}

TEST_CASE("validation errors are distinct")
{
    auto code_of = [](std::vector<std::pair<Scalar, Scalar>> pts) {
        try {
            corpus::poly(std::move(pts));
        } catch (const GeometryError& e) {
            return e.code();
        }
        FAIL("expected a GeometryError");
        return GeometryError::Code::degenerate;
    };
    CHECK(code_of({{q(0), q(0)}, {q(1), q(0)}}) == GeometryError::Code::too_few_vertices);
    CHECK(code_of({{q(0), q(0)}, {q(2), q(0)}, {q(1), q(1)}, {q(2), q(1, 2)}}) == GeometryError::Code::non_convex);
    CHECK(code_of({{q(0), q(0)}, {q(-1), q(0)}, {q(0), q(1)}}) == GeometryError::Code::negative_coordinate);
    CHECK(code_of({{q(1), q(1)}, {q(2), q(1)}, {q(1), q(2)}}) == GeometryError::Code::origin_outside);
    CHECK(code_of({{q(0), q(0)}, {q(1), q(1)}, {q(2), q(2)}}) == GeometryError::Code::degenerate);
}

TEST_CASE("dual norm values")
{
    MomentPolygon five = corpus::five_gon();
    CHECK(dual_norm(five, {1, 2}) == q(3));
    CHECK(dual_norm(five, {0, 1}) == q(1));
    CHECK(dual_norm(corpus::polydisk(11, 10), {1, 0}) == q(11, 10));
    MomentPolygon e = corpus::ellipsoid(5, 2);
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) CHECK(dual_norm(e, {i, j}) == max(q(5, 2) * Scalar(i), Scalar(j)));
}

TEST_CASE("area")
{
    CHECK(area(corpus::five_gon()) == q(7, 4));
    CHECK(area(corpus::polydisk(1)) == q(1));
    CHECK(area(corpus::polydisk(2)) == q(2));
    CHECK(area(MomentPolygon::ellipsoid(corpus::phi())) == corpus::phi() / Scalar(2));
}

TEST_CASE("per-index minimizers keep every tie")
{
    IndexMinimizer ball2 = per_index_minimizer(corpus::unit_ball(), 2);
    CHECK(ball2.value == q(1));
    CHECK(ball2.argmins == std::vector<LatticeVector>{{1, 1}});
    IndexMinimizer five3 = per_index_minimizer(corpus::five_gon(), 3);
    CHECK(five3.value == q(3));
    CHECK(five3.argmins == std::vector<LatticeVector>{{0, 3}, {1, 2}});
    IndexMinimizer square2 = per_index_minimizer(corpus::polydisk(1), 2);
    CHECK(square2.value == q(2));
    CHECK(square2.argmins == std::vector<LatticeVector>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("long domain detection")
{
    CHECK(is_long_domain(corpus::five_gon()));
    CHECK_FALSE(is_long_domain(corpus::unit_ball()));
    CHECK(is_long_domain(corpus::polydisk(3)));
    CHECK_FALSE(is_long_domain(MomentPolygon::polydisk(q(2), q(2))));
    for (auto& d : corpus::long_domains()) CHECK_MESSAGE(is_long_domain(d.polygon), d.name);
}

TEST_CASE("diagonal crossing")
{
    CHECK(std::get<Scalar>(diagonal_slope(corpus::polydisk(2))) == q(0));
    CHECK(std::get<Scalar>(diagonal_slope(corpus::unit_ball())) == q(-1));
    auto square = diagonal_slope(corpus::polydisk(1));
    REQUIRE(std::holds_alternative<VertexCrossing>(square));
    CHECK(std::get<VertexCrossing>(square).vertex == Point{q(1), q(1)});
}

TEST_CASE("transpose and scale")
{
    MomentPolygon t = corpus::polydisk(2).transposed();
    CHECK(t.max_x() == q(1));
    CHECK(t.max_y() == q(2));
    CHECK(corpus::five_gon().scaled(q(2)).max_x() == q(4));
    CHECK_THROWS(corpus::five_gon().scaled(q(0)));
}

TEST_CASE("dual norm properties on the corpus")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> small(1, 9);
    for (auto& [name, omega] : corpus::engine_corpus()) {
        CAPTURE(name);
        Scalar lambda = q(small(rng), small(rng));
        MomentPolygon big = omega.scaled(Scalar(2));
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; j <= 6; ++j) {
                LatticeVector v{i, j};
                CHECK(dual_norm(omega.scaled(lambda), v) == lambda * dual_norm(omega, v));
                CHECK(!(dual_norm(big, v) < dual_norm(omega, v)));
                for (LatticeVector w : {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{2, 3}})
                    CHECK(!(dual_norm(omega, v) + dual_norm(omega, w) < dual_norm(omega, {i + w.i, j + w.j})));
            }
    }
}

TEST_CASE("norm increments are nonnegative and nondecreasing")
{
    for (auto& [name, omega] : corpus::engine_corpus()) {
        CAPTURE(name);
        for (int i = 0; i <= 3; ++i) {
            Scalar previous(-1);
            for (int j = 0; j < 20; ++j) {
                Scalar step = dual_norm(omega, {i, j + 1}) - dual_norm(omega, {i, j});
                CHECK(step.sign() >= 0);
                CHECK(!(step < previous));
                if (i == 1 && is_long_domain(omega)) CHECK(!(Scalar(1) < step));
                previous = step;
            }
        }
    }
}

TEST_CASE("vertex support matches a boundary sample")
{
    for (auto& [name, omega] : corpus::long_domains()) {
        CAPTURE(name);
        const auto& v = omega.vertices();
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; j <= 4; ++j) {
                Scalar sampled;
                for (std::size_t e = 0; e < v.size(); ++e) {
                    const Point& p = v[e];
                    const Point& r = v[(e + 1) % v.size()];
                    for (int t = 0; t <= 16; ++t) {
                        Scalar s = q(t, 16);
                        Scalar x = p.x + s * (r.x - p.x), y = p.y + s * (r.y - p.y);
                        sampled = max(sampled, Scalar(i) * x + Scalar(j) * y);
                    }
                }
                CHECK(sampled == dual_norm(omega, {i, j}));
            }
    }
}
