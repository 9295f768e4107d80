#include "corpus.hpp"
#include "doctest.h"
#include "naive_oracle.hpp"
#include "toric/words.hpp"

#include <set>

using namespace toric;
using corpus::q;

namespace {

const EllBound inf = EllBound::infinite();
EllBound fin(int l) { return EllBound::finite(l); }

// counts words by brute force over all tuple lists, independent of the library enumerator
std::size_t naive_count(int k, int ends_limit)
{
    std::vector<naive::Tuple> pool;
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j)
            if (i + j > 0) pool.push_back({i, j});
    std::size_t n = 0;
    std::vector<int> counts(pool.size());
    auto walk = [&](auto&& self, std::size_t at, int used, int ends, bool any_i, bool any_j) -> void {
        if (at == pool.size()) {
            if (used - 1 == k && ends > 0 && (ends_limit <= 0 || ends <= ends_limit) && (ends == 1 || (any_i && any_j))) ++n;
            return;
        }
        const int w = pool[at].i + pool[at].j + 1;
        for (int c = 0; used + c * w - 1 <= k; ++c)
            self(self, at + 1, used + c * w, ends + c, any_i || (c && pool[at].i), any_j || (c && pool[at].j));
    };
    walk(walk, 0, 0, 0, false, false);
    return n;
}

}  // namespace

TEST_CASE("ell bound parsing")
{
    CHECK(EllBound::parse("inf").is_infinite());
    CHECK(EllBound::parse("3").value() == 3);
    CHECK(EllBound::parse("3").to_string() == "3");
    CHECK(inf.to_string() == "inf");
    CHECK_THROWS(EllBound::parse("0"));
    CHECK_THROWS(EllBound::parse("-1"));
    CHECK_THROWS(EllBound::parse("x"));
    CHECK(fin(4).effective(5) == 3);
    CHECK(inf.effective(9) == 5);
}

TEST_CASE("half index")
{
    CHECK(half_index(OrbitWord{{0, 1}, {1, 2}}) == 5);
    CHECK(half_index(OrbitWord{{0, 1}}) == 1);
    CHECK(half_index(OrbitWord{{0, 1}, {0, 1}, {1, 0}}) == 5);
    CHECK_THROWS(half_index(OrbitWord{}));
    CHECK_THROWS(OrbitWord{{0, 0}});
    CHECK_THROWS(OrbitWord{{-1, 2}});
}

TEST_CASE("permissibility and admissibility")
{
    CHECK(is_weakly_permissible(OrbitWord{{0, 5}}));
    CHECK_FALSE(is_weakly_permissible(OrbitWord{{0, 1}, {0, 1}}));
    CHECK(is_weakly_permissible(OrbitWord{{0, 1}, {1, 0}}));
    CHECK(is_admissible(OrbitWord{{0, 1}, {1, 2}}, 5, fin(2)));
    CHECK_FALSE(is_admissible(OrbitWord{{0, 1}, {1, 2}}, 5, fin(1)));
    CHECK(is_admissible(OrbitWord{{1, 1}}, 2, fin(1)));
    CHECK_FALSE(is_admissible(OrbitWord{{1, 1}}, 3, fin(1)));
}

TEST_CASE("canonical order and printing")
{
    OrbitWord w{{1, 2}, {0, 1}, {1, 0}};
    CHECK(w.to_string() == "{(0,1),(1,0),(1,2)}");
    CHECK(w == OrbitWord{{1, 0}, {1, 2}, {0, 1}});
}

TEST_CASE("small enumerations")
{
    auto collect = [](int k, EllBound ell) {
        std::set<std::string> out;
        for_each_admissible(k, ell, IndexWindow::exact(), [&](const OrbitWord& w) { out.insert(w.to_string()); });
        return out;
    };
    CHECK(collect(2, fin(2)) == std::set<std::string>{"{(0,2)}", "{(1,1)}", "{(2,0)}"});
    CHECK(collect(3, fin(2)) == std::set<std::string>{"{(0,3)}", "{(1,2)}", "{(2,1)}", "{(3,0)}", "{(0,1),(1,0)}"});
    CHECK(collect(1, inf) == std::set<std::string>{"{(0,1)}", "{(1,0)}"});
}

TEST_CASE("enumeration counts match a naive count")
{
    for (int k = 1; k <= 10; ++k)
        for (int l : {1, 2, 3, 0}) {
            CAPTURE(k);
            CAPTURE(l);
            EllBound ell = l ? fin(l) : inf;
            CHECK(count_admissible(k, ell) == naive_count(k, l));
        }
}

TEST_CASE("every enumerated word is admissible and appears once")
{
    for (int k = 1; k <= 8; ++k)
        for (EllBound ell : {fin(1), fin(2), fin(3), inf}) {
            std::set<std::string> seen;
            for_each_admissible(k, ell, IndexWindow::exact(), [&](const OrbitWord& w) {
                CHECK(is_admissible(w, k, ell));
                CHECK(seen.insert(w.to_string()).second);
            });
        }
}

TEST_CASE("index window widens the enumeration")
{
    std::size_t total = 0;
    for (int d = 0; d <= 3; ++d) total += count_admissible(6 + d, fin(3));
    CHECK(count_admissible(6, fin(3), IndexWindow::at_least(3)) == total);
}

TEST_CASE("oracle values")
{
    OracleResult five = oracle_capacity(corpus::five_gon(), 5, fin(2));
    CHECK(five.value == q(4));
    CHECK(five.witness == OrbitWord{{0, 1}, {1, 2}});
    CHECK(oracle_capacity(corpus::polydisk(11, 10), 3, fin(2)).value == q(21, 10));
    CHECK(oracle_capacity(corpus::unit_ball(), 4, fin(2)).value == q(2));
}

TEST_CASE("oracle agrees with the naive minimizer")
{
    for (auto& [name, omega] : corpus::engine_corpus()) {
        CAPTURE(name);
        for (int k = 1; k <= 9; ++k)
            for (int l : {1, 2, 3, 0}) {
                CAPTURE(k);
                CAPTURE(l);
                OracleResult r = oracle_capacity(omega, k, l ? fin(l) : inf);
                CHECK(r.value == naive::minimize(omega, k, l).value);
                CHECK(action(omega, r.witness) == r.value);
                CHECK(is_admissible(r.witness, k, l ? fin(l) : inf));
            }
    }
}

TEST_CASE("larger indices never undercut index k")
{
    for (auto& [name, omega] : corpus::engine_corpus()) {
        CAPTURE(name);
        for (int k = 1; k <= 7; ++k)
            for (EllBound ell : {fin(1), fin(2), inf}) {
                CAPTURE(k);
                CHECK(oracle_capacity(omega, k, ell, IndexWindow::at_least(3)).value == oracle_capacity(omega, k, ell).value);
            }
    }
}
