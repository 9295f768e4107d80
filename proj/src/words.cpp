#include "toric/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

EllBound EllBound::finite(int value)
{
    if (value < 1) throw std::invalid_argument("l must be a positive integer or inf, got " + std::to_string(value));
    return EllBound(value);
}

EllBound EllBound::parse(std::string_view text)
{
    if (text == "inf" || text == "infinity" || text == "oo") return infinite();
    int v = 0;
    if (text.empty()) throw std::invalid_argument("empty l");
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad l: '" + std::string(text) + "'");
        v = v * 10 + (c - '0');
        if (v > 1'000'000) throw std::invalid_argument("l too large: '" + std::string(text) + "'");
    }
    return finite(v);
}

int EllBound::value() const
{
    if (is_infinite()) throw std::logic_error("value() of an infinite l");
    return value_;
}

int EllBound::effective(int k) const
{
    int most = (k + 1) / 2;
    return is_infinite() ? most : std::min(value_, most);
}

bool canonical_less(LatticeVector a, LatticeVector b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

OrbitWord::OrbitWord(std::initializer_list<LatticeVector> tuples) : OrbitWord(std::vector<LatticeVector>(tuples)) {}

OrbitWord::OrbitWord(std::vector<LatticeVector> tuples) : tuples_(std::move(tuples))
{
    for (const LatticeVector& t : tuples_)
        if (t.i < 0 || t.j < 0 || (t.i == 0 && t.j == 0))
            throw std::invalid_argument("orbit word tuples must be nonzero and nonnegative");
    std::sort(tuples_.begin(), tuples_.end(), canonical_less);
}

std::string OrbitWord::to_string() const
{
    std::string out = "{";
    for (std::size_t s = 0; s < tuples_.size(); ++s) {
        if (s) out += ",";
        out += "(" + std::to_string(tuples_[s].i) + "," + std::to_string(tuples_[s].j) + ")";
    }
    return out + "}";
}

int half_index(const OrbitWord& w)
{
    if (w.empty()) throw std::invalid_argument("half_index of an empty word");
    int sum = 0;
    for (const LatticeVector& t : w) sum += t.degree();
    return sum + static_cast<int>(w.size()) - 1;
}

bool is_weakly_permissible(const OrbitWord& w)
{
    if (w.empty()) throw std::invalid_argument("permissibility of an empty word");
    if (w.size() == 1) return true;
    bool some_i = std::any_of(w.begin(), w.end(), [](LatticeVector t) { return t.i > 0; });
    bool some_j = std::any_of(w.begin(), w.end(), [](LatticeVector t) { return t.j > 0; });
    return some_i && some_j;
}

bool is_admissible(const OrbitWord& w, int k, EllBound ell)
{
    if (w.empty()) return false;
    return half_index(w) == k && is_weakly_permissible(w) && ell.admits(static_cast<int>(w.size()));
}

Scalar action(const MomentPolygon& omega, const OrbitWord& w)
{
    Scalar sum;
    for (const LatticeVector& t : w) sum += dual_norm(omega, t);
    return sum;
}

namespace {

// Fills positions [pos, q) of `buf` with tuples >= floor (canonical order)
// whose degrees sum to `remaining`.
class WordBuilder {
public:
    WordBuilder(int q, const std::function<void(const std::vector<LatticeVector>&)>& emit)
        : q_(q), buf_(static_cast<std::size_t>(q)), emit_(emit)
    {
    }

    void run(int degree_sum) { fill(0, degree_sum, {0, 1}); }

private:
    void fill(int pos, int remaining, LatticeVector floor)
    {
        int left = q_ - pos;
        if (left == 0) {
            if (remaining == 0) emit_(buf_);
            return;
        }
        for (int m = floor.degree(); m * left <= remaining; ++m) {
            if (left == 1 && m != remaining) continue;
            int i0 = m == floor.degree() ? floor.i : 0;
            for (int i = i0; i <= m; ++i) {
                buf_[static_cast<std::size_t>(pos)] = {i, m - i};
                fill(pos + 1, remaining - m, {i, m - i});
            }
        }
    }

    int q_;
    std::vector<LatticeVector> buf_;
    const std::function<void(const std::vector<LatticeVector>&)>& emit_;
};

// Norm table for all lattice vectors of degree <= max_degree.
class NormTable {
public:
    NormTable(const MomentPolygon& omega, int max_degree) : max_degree_(max_degree)
    {
        norms_.reserve(static_cast<std::size_t>((max_degree + 1) * (max_degree + 2) / 2));
        for (int m = 0; m <= max_degree; ++m)
            for (int i = 0; i <= m; ++i) norms_.push_back(m == 0 ? Scalar(0) : dual_norm(omega, {i, m - i}));
    }

    const Scalar& operator()(LatticeVector v) const
    {
        int m = v.degree();
        return norms_[static_cast<std::size_t>(m * (m + 1) / 2 + v.i)];
    }

private:
    int max_degree_;
    std::vector<Scalar> norms_;
};

}  // namespace

void for_each_admissible(int k, EllBound ell, IndexWindow window, const std::function<void(const OrbitWord&)>& visit)
{
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (window.overshoot < 0) throw std::invalid_argument("index overshoot must be nonnegative");
    for (int index = k; index <= k + window.overshoot; ++index) {
        int q_max = ell.effective(index);
        for (int q = 1; q <= q_max; ++q) {
            const std::function<void(const std::vector<LatticeVector>&)> emit = [&](const std::vector<LatticeVector>& tuples) {
                if (q >= 2) {
                    bool some_i = false, some_j = false;
                    for (const LatticeVector& t : tuples) {
                        some_i |= t.i > 0;
                        some_j |= t.j > 0;
                    }
                    if (!some_i || !some_j) return;
                }
                visit(OrbitWord(tuples));
            };
            WordBuilder(q, emit).run(index - q + 1);
        }
    }
}

std::size_t count_admissible(int k, EllBound ell, IndexWindow window)
{
    std::size_t n = 0;
    for_each_admissible(k, ell, window, [&](const OrbitWord&) { ++n; });
    return n;
}

OracleResult oracle_capacity(const MomentPolygon& omega, int k, EllBound ell, IndexWindow window)
{
    NormTable norms(omega, k + window.overshoot);
    std::optional<OracleResult> best;
    for_each_admissible(k, ell, window, [&](const OrbitWord& w) {
        Scalar total;
        for (const LatticeVector& t : w) total += norms(t);
        if (!best || total < best->value) best = OracleResult{std::move(total), w};
    });
    // {(0,k)} is always admissible, so best is set
    return std::move(*best);
}

}  // namespace toric
