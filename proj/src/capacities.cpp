#include "toric/capacities.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace toric {

std::string_view to_string(Method m)
{
    switch (m) {
        case Method::oracle: return "oracle";
        case Method::pruned: return "pruned";
        case Method::ball_formula: return "ball_formula";
        case Method::polydisk_formula: return "polydisk_formula";
        case Method::long_domain_formula: return "long_domain_formula";
        case Method::ellipsoid_gh: return "ellipsoid_gh";
        case Method::ellipsoid_ms: return "ellipsoid_ms";
        case Method::e21_formula: return "e21_formula";
        case Method::conjectural_genus: return "conjectural_genus";
    }
    return "unknown";
}

namespace {

void require_k(int k)
{
    if (k < 1) throw std::invalid_argument("k must be a positive integer, got " + std::to_string(k));
}

int ceil_half(int n) { return n >= 0 ? (n + 1) / 2 : -((-n) / 2); }

class PrunedSearch {
public:
    PrunedSearch(const MomentPolygon& omega, int k, EllBound ell) : omega_(omega), k_(k), ell_(ell)
    {
        classes_.reserve(static_cast<std::size_t>(k));
        for (int m = 1; m <= k; ++m) classes_.push_back(per_index_minimizer(omega, m));
    }

    CapacityResult run()
    {
        int q_max = ell_.effective(k_);
        for (int q = 1; q <= q_max; ++q) {
            parts_.assign(static_cast<std::size_t>(q), 0);
            descend(0, k_ - q + 1, 1, Scalar(0));
        }
        return CapacityResult{best_value_, OrbitWord(best_word_), Method::pruned, k_, ell_};
    }

private:
    const IndexMinimizer& cls(int m) const { return classes_[static_cast<std::size_t>(m - 1)]; }

    void descend(std::size_t pos, int remaining, int min_part, const Scalar& partial)
    {
        const int left = static_cast<int>(parts_.size() - pos);
        if (left == 0) {
            evaluate(partial);
            return;
        }
        int first = left == 1 ? remaining : min_part;
        for (int m = first; m * left <= remaining; ++m) {
            // every remaining part is >= m and class minima are nondecreasing in m
            if (found_ && !(partial + cls(m).value * Scalar(left) < best_value_)) break;
            parts_[pos] = m;
            descend(pos + 1, remaining - m, m, partial + cls(m).value);
            if (left == 1) break;
        }
    }

    void offer(const Scalar& value, const std::vector<LatticeVector>& word)
    {
        if (found_ && !(value < best_value_)) return;
        found_ = true;
        best_value_ = value;
        best_word_ = word;
    }

    void evaluate(const Scalar& base)
    {
        const std::size_t q = parts_.size();
        std::vector<LatticeVector> pick(q);
        for (std::size_t s = 0; s < q; ++s) pick[s] = cls(parts_[s]).argmins.front();
        if (q == 1) {
            offer(base, pick);
            return;
        }

        // a single minimizer off both axes settles permissibility
        for (std::size_t s = 0; s < q; ++s) {
            for (const LatticeVector& v : cls(parts_[s]).argmins) {
                if (v.i > 0 && v.j > 0) {
                    pick[s] = v;
                    offer(base, pick);
                    return;
                }
            }
        }
        // otherwise an i-positive minimizer and a j-positive minimizer at distinct positions
        for (std::size_t s = 0; s < q; ++s) {
            auto with_i = std::find_if(cls(parts_[s]).argmins.begin(), cls(parts_[s]).argmins.end(),
                                       [](LatticeVector v) { return v.i > 0; });
            if (with_i == cls(parts_[s]).argmins.end()) continue;
            for (std::size_t t = 0; t < q; ++t) {
                if (t == s) continue;
                auto with_j = std::find_if(cls(parts_[t]).argmins.begin(), cls(parts_[t]).argmins.end(),
                                           [](LatticeVector v) { return v.j > 0; });
                if (with_j == cls(parts_[t]).argmins.end()) continue;
                pick[s] = *with_i;
                pick[t] = *with_j;
                offer(base, pick);
                return;
            }
        }

        // all minimizers sit on one axis: move one part off it
        for (std::size_t t = 0; t < q; ++t) {
            const int m = parts_[t];
            for (LatticeVector v : {LatticeVector{1, m - 1}, LatticeVector{m - 1, 1}}) {
                if (v.i == 0 && v.j == 0) continue;
                std::vector<LatticeVector> variant = pick;
                variant[t] = v;
                if (!is_weakly_permissible(OrbitWord(variant))) continue;
                offer(base - cls(m).value + dual_norm(omega_, v), variant);
            }
        }
    }

    const MomentPolygon& omega_;
    int k_;
    EllBound ell_;
    std::vector<IndexMinimizer> classes_;
    std::vector<int> parts_;
    bool found_ = false;
    Scalar best_value_;
    std::vector<LatticeVector> best_word_;
};

OrbitWord long_word(int r, int j)
{
    std::vector<LatticeVector> tuples(static_cast<std::size_t>(r), LatticeVector{0, 1});
    tuples.push_back({1, j});
    return OrbitWord(std::move(tuples));
}

CapacityResult scaled_result(CapacityResult r, const Scalar& factor)
{
    r.value *= factor;
    return r;
}

}  // namespace

CapacityResult capacity_pruned(const MomentPolygon& omega, int k, EllBound ell)
{
    require_k(k);
    return PrunedSearch(omega, k, ell).run();
}

JParameter compute_J(const MomentPolygon& omega)
{
    if (!is_long_domain(omega)) throw NotLongDomain();

    // Past j_stop the maximizer of (1, j) is the rightmost top vertex, so
    // |(1, j+2)| - |(1, j)| = 2 > |(0, 1)| = 1.
    Scalar x_top;
    for (const Point& p : omega.vertices())
        if (p.y == Scalar(1)) x_top = max(x_top, p.x);
    Integer reach = 0;
    for (const Point& p : omega.vertices()) {
        if (!(p.y < Scalar(1))) continue;
        Integer c = ((p.x - x_top) / (Scalar(1) - p.y)).ceil();
        if (c > reach) reach = c;
    }
    const long j_stop = 2 + reach.get_si();

    const Scalar unit = dual_norm(omega, {0, 1});
    for (int j = 0; j <= j_stop; ++j) {
        if (unit + dual_norm(omega, {1, j}) < dual_norm(omega, {1, j + 2})) return JParameter{j};
    }
    throw std::logic_error("J scan exceeded its bound");
}

CapacityResult capacity_long_domain(const MomentPolygon& omega, int k, EllBound ell)
{
    require_k(k);
    const int J = compute_J(omega).value;
    const Scalar kk(k);

    int r = 0;
    int j = 0;
    bool tuple_form = true;
    if (!ell.is_infinite() && k - 2 * ell.value() + 1 >= J) {
        r = ell.value() - 1;
        j = k - 2 * ell.value() + 1;
    } else if (k - J < 1) {
        tuple_form = false;
    } else if ((k - J) % 2 == 1) {
        r = (k - J - 1) / 2;
        j = J;
    } else {
        r = (k - J - 2) / 2;
        j = J + 1;
    }

    CapacityResult out{kk, OrbitWord{{0, k}}, Method::long_domain_formula, k, ell};
    if (tuple_form) {
        Scalar candidate = Scalar(r) + dual_norm(omega, {1, j});
        if (candidate < kk) {
            out.value = candidate;
            out.witness = long_word(r, j);
        }
    }
    return out;
}

Scalar capacity_ball(int k, EllBound ell)
{
    require_k(k);
    if (!ell.is_infinite()) {
        const int l = ell.value();
        if (k > 3 * (l - 1)) return Scalar(l - 1 + ceil_half(k - 3 * (l - 1)));
    }
    const int i = (k - 1) / 3;
    switch ((k - 1) % 3) {
        case 0:
        case 1: return Scalar(1 + i);
        default: return Scalar(2 + i);
    }
}

Scalar capacity_polydisk(const Scalar& a, int k, EllBound ell)
{
    require_k(k);
    if (a < Scalar(1)) throw std::invalid_argument("capacity_polydisk needs a >= 1; reorder P(a,b) so that a >= b and scale");
    const Scalar kk(k);
    if ((!ell.is_infinite() && ell.value() == 1) || k <= 2) return kk;
    if (!ell.is_infinite() && k - 1 >= 2 * (ell.value() - 1)) return min(kk, kk + a - Scalar(ell.value()));
    return min(kk, Scalar(ceil_half(k - 1)) + a);
}

Scalar mk_sequence(const Scalar& a, const Scalar& b, int k)
{
    require_k(k);
    if (a.sign() <= 0 || b.sign() <= 0) throw std::invalid_argument("mk_sequence needs positive generators");
    long ia = 1, ib = 1;
    Scalar current;
    for (int n = 0; n < k; ++n) {
        Scalar na = Scalar(ia) * a;
        Scalar nb = Scalar(ib) * b;
        if (!(nb < na)) {
            current = na;
            ++ia;
        } else {
            current = nb;
            ++ib;
        }
    }
    return current;
}

Scalar capacity_ellipsoid_gh(const Scalar& a, int k) { return mk_sequence(a, Scalar(1), k); }

Scalar capacity_ellipsoid_ms(const Scalar& a, int k)
{
    require_k(k);
    if (a < Scalar(1)) throw std::invalid_argument("capacity_ellipsoid_ms needs a >= 1");
    if (!(Scalar::fraction(3, 2) < a)) {
        const int i = (k - 1) / 3;
        const Scalar ia = Scalar(i) * a;
        switch ((k - 1) % 3) {
            case 0: return Scalar(1) + ia;
            case 1: return a + ia;
            default: return Scalar(2) + ia;
        }
    }
    const long fl = a.floor().get_si();
    const long ce = a.ceil().get_si();
    if (k <= fl) return Scalar(k);
    const long d = k - ce;
    return d % 2 == 0 ? a + Scalar(d / 2) : Scalar(ce + d / 2);
}

CapacityResult capacity_e21(int k, EllBound ell)
{
    require_k(k);
    CapacityResult out{Scalar(0), std::nullopt, Method::e21_formula, k, ell};
    const bool finite = !ell.is_infinite();
    const int l = finite ? ell.value() : 0;
    if (finite && k > 4 * (l - 1)) {
        out.value = Scalar(2 * (l - 1)) + mk_sequence(Scalar(2), Scalar(1), k - 4 * (l - 1));
    } else if (k <= 2) {
        out.value = Scalar(k);
    } else if (!finite || k <= 2 * (l - 1)) {
        out.value = Scalar(2 + (k - 2) / 2);
    } else {
        return capacity_pruned(MomentPolygon::ellipsoid(Scalar(2), Scalar(1)), k, ell);
    }
    return out;
}

CapacityResult capacity(const MomentPolygon& omega, int k, EllBound ell)
{
    require_k(k);
    const DomainTag& tag = omega.tag();
    switch (tag.kind) {
        case DomainKind::ball:
            return CapacityResult{tag.a * capacity_ball(k, ell), std::nullopt, Method::ball_formula, k, ell};
        case DomainKind::polydisk: {
            const Scalar& big = max(tag.a, tag.b);
            const Scalar& small = min(tag.a, tag.b);
            return CapacityResult{small * capacity_polydisk(big / small, k, ell), std::nullopt, Method::polydisk_formula, k, ell};
        }
        case DomainKind::ellipsoid: {
            const Scalar big = max(tag.a, tag.b);
            const Scalar small = min(tag.a, tag.b);
            const Scalar ratio = big / small;
            if (!ell.is_infinite() && ell.value() == 1)
                return CapacityResult{small * capacity_ellipsoid_gh(ratio, k), std::nullopt, Method::ellipsoid_gh, k, ell};
            if (ell.is_infinite() || 2 * ell.value() >= k + 1)
                return CapacityResult{small * capacity_ellipsoid_ms(ratio, k), std::nullopt, Method::ellipsoid_ms, k, ell};
            if (ratio == Scalar(2)) {
                CapacityResult r = capacity_e21(k, ell);
                if (tag.a < tag.b && r.witness) {
                    std::vector<LatticeVector> flipped;
                    for (LatticeVector v : *r.witness) flipped.push_back({v.j, v.i});
                    r.witness = OrbitWord(std::move(flipped));
                }
                return scaled_result(std::move(r), small);
            }
            return capacity_pruned(omega, k, ell);
        }
        case DomainKind::general: break;
    }

    if (is_long_domain(omega)) return capacity_long_domain(omega, k, ell);
    // a vertical rescaling of a long domain
    const Scalar height = omega.max_y();
    if (!(height == Scalar(1))) {
        MomentPolygon unit = omega.scaled(Scalar(1) / height);
        if (is_long_domain(unit)) return scaled_result(capacity_long_domain(unit, k, ell), height);
    }
    return capacity_pruned(omega, k, ell);
}

CapacityResult conjectural_genus_capacity(const MomentPolygon& omega, int k, EllBound ell, int h, ExperimentalOptIn opt_in)
{
    if (!opt_in.enabled) throw ExperimentalRefused();
    require_k(k);
    if (h < 0) throw std::invalid_argument("genus bound must be nonnegative");
    std::optional<CapacityResult> best;
    for (int g = 0; g <= h && k - g >= 1; ++g) {
        CapacityResult r = capacity(omega, k - g, ell);
        if (!best || r.value < best->value) best = std::move(r);
    }
    best->method = Method::conjectural_genus;
    best->k = k;
    return std::move(*best);
}

std::optional<HalfHeightNormal> half_height_normal(const MomentPolygon& omega)
{
    const auto& v = omega.vertices();
    const Scalar half = Scalar::fraction(1, 2);
    const std::size_t n = v.size();
    auto alpha_of = [&](std::size_t e) -> std::optional<Scalar> {
        const Point& p = v[e];
        const Point& q = v[(e + 1) % n];
        Scalar dy = q.y - p.y;
        if (dy.sign() <= 0) return std::nullopt;
        return -(q.x - p.x) / dy;
    };
    for (std::size_t e = 0; e < n; ++e) {
        const Point& p = v[e];
        const Point& q = v[(e + 1) % n];
        auto alpha = alpha_of(e);
        if (!alpha) continue;  // the right-hand chain rises counterclockwise
        if (p.y < half && half < q.y) return HalfHeightNormal{true, *alpha, *alpha};
        if (p.y == half) {
            auto before = alpha_of((e + n - 1) % n);
            if (!before) return HalfHeightNormal{false, *alpha, *alpha};
            return HalfHeightNormal{false, min(*before, *alpha), max(*before, *alpha)};
        }
    }
    return std::nullopt;
}

unsigned grid_workers()
{
    if (const char* env = std::getenv("TORIC_CAP_THREADS")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n >= 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<CapacityResult> capacity_grid(const MomentPolygon& omega, int k_max, const std::vector<EllBound>& ells)
{
    require_k(k_max);
    const std::size_t cells = ells.size() * static_cast<std::size_t>(k_max);
    std::vector<std::optional<CapacityResult>> slots(cells);
    auto fill = [&](std::size_t c) {
        const EllBound& ell = ells[c / static_cast<std::size_t>(k_max)];
        const int k = static_cast<int>(c % static_cast<std::size_t>(k_max)) + 1;
        slots[c] = capacity(omega, k, ell);
    };

    const unsigned workers = std::min<std::size_t>(grid_workers(), cells);
    if (workers <= 1) {
        for (std::size_t c = 0; c < cells; ++c) fill(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_lock;
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < cells; c = next++) {
                    try {
                        fill(c);
                    } catch (...) {
                        std::lock_guard lock(failure_lock);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        for (std::thread& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<CapacityResult> out;
    out.reserve(cells);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace toric
