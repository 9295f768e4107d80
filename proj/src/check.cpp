#include "toric/check.hpp"

#include "toric/capacities.hpp"
#include "toric/obstructions.hpp"

#include <map>
#include <random>
#include <sstream>

namespace toric {

namespace {

std::string cell(int k, EllBound ell) { return "k=" + std::to_string(k) + " l=" + ell.to_string(); }

class Suite {
public:
    Suite(const MomentPolygon& omega, const CheckOptions& opt) : omega_(omega), opt_(opt)
    {
        for (int l = 1; l <= opt.ell_max; ++l) ells_.push_back(EllBound::finite(l));
        ells_.push_back(EllBound::infinite());
        if (!opt.fault.empty()) {
            const auto colon = opt.fault.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("fault must look like <method>:<k>");
            fault_method_ = opt.fault.substr(0, colon);
            fault_k_ = std::stoi(opt.fault.substr(colon + 1));
        }
    }

    std::vector<PropertyResult> run()
    {
        std::vector<PropertyResult> out;
        out.push_back(engine_matches_oracle());
        out.push_back(witnesses_are_admissible());
        out.push_back(single_end_is_min_norm());
        out.push_back(monotone_in_k());
        out.push_back(monotone_in_ell());
        out.push_back(ell_threshold_collapse());
        out.push_back(scaling_homogeneity());
        out.push_back(widened_index_reduction());
        out.push_back(norm_increments());
        if (is_long_domain(omega_)) {
            out.push_back(j_transition());
            out.push_back(j_interval());
        }
        out.push_back(inclusion_monotonicity());
        return out;
    }

private:
    // engine value with the optional injected fault
    const CapacityResult& engine(int k, EllBound ell)
    {
        auto key = std::make_pair(k, ell.is_infinite() ? 0 : ell.value());
        auto it = engine_cache_.find(key);
        if (it != engine_cache_.end()) return it->second;
        CapacityResult r = capacity(omega_, k, ell);
        if (!fault_method_.empty() && to_string(r.method) == fault_method_ && k == fault_k_) r.value += Scalar(1);
        return engine_cache_.emplace(key, std::move(r)).first->second;
    }

    const OracleResult& oracle(int k, EllBound ell)
    {
        auto key = std::make_pair(k, ell.is_infinite() ? 0 : ell.value());
        auto it = oracle_cache_.find(key);
        if (it != oracle_cache_.end()) return it->second;
        return oracle_cache_.emplace(key, oracle_capacity(omega_, k, ell)).first->second;
    }

    template <class Body>
    PropertyResult property(std::string name, Body body)
    {
        PropertyResult r{std::move(name), 0, std::nullopt};
        body([&](bool ok, const std::string& detail) {
            ++r.cases;
            if (!ok && !r.counterexample) r.counterexample = detail;
        });
        return r;
    }

    PropertyResult engine_matches_oracle()
    {
        return property("engine equals exhaustive oracle", [&](auto record) {
            for (int k = 1; k <= opt_.k_max; ++k)
                for (EllBound ell : ells_) {
                    const CapacityResult& e = engine(k, ell);
                    const OracleResult& o = oracle(k, ell);
                    record(e.value == o.value, cell(k, ell) + ": " + std::string(to_string(e.method)) + " gives " +
                                                   e.value.to_string() + ", oracle gives " + o.value.to_string() +
                                                   " via " + o.witness.to_string());
                }
        });
    }

    PropertyResult witnesses_are_admissible()
    {
        return property("engine witnesses are admissible and attain the value", [&](auto record) {
            for (int k = 1; k <= opt_.k_max; ++k)
                for (EllBound ell : ells_) {
                    const CapacityResult& e = engine(k, ell);
                    if (!e.witness) continue;
                    const bool ok = is_admissible(*e.witness, k, ell) && action(omega_, *e.witness) == e.value;
                    record(ok, cell(k, ell) + ": witness " + e.witness->to_string() + " has action " +
                                   action(omega_, *e.witness).to_string() + ", value " + e.value.to_string());
                }
        });
    }

    PropertyResult single_end_is_min_norm()
    {
        return property("l=1 equals the minimum norm on i+j=k", [&](auto record) {
            const EllBound one = EllBound::finite(1);
            for (int k = 1; k <= opt_.k_max; ++k) {
                Scalar best = per_index_minimizer(omega_, k).value;
                record(engine(k, one).value == best, cell(k, one) + ": engine " + engine(k, one).value.to_string() +
                                                         ", min norm " + best.to_string());
            }
        });
    }

    PropertyResult monotone_in_k()
    {
        return property("nondecreasing in k", [&](auto record) {
            for (EllBound ell : ells_)
                for (int k = 1; k < opt_.k_max; ++k) {
                    const Scalar& a = engine(k, ell).value;
                    const Scalar& b = engine(k + 1, ell).value;
                    record(!(b < a), cell(k, ell) + " is " + a.to_string() + " but k+1 gives " + b.to_string());
                }
        });
    }

    PropertyResult monotone_in_ell()
    {
        return property("nonincreasing in l", [&](auto record) {
            for (int k = 1; k <= opt_.k_max; ++k)
                for (std::size_t e = 0; e + 1 < ells_.size(); ++e) {
                    const Scalar& a = engine(k, ells_[e]).value;
                    const Scalar& b = engine(k, ells_[e + 1]).value;
                    record(!(a < b), cell(k, ells_[e]) + " is " + a.to_string() + " but l=" + ells_[e + 1].to_string() +
                                         " gives " + b.to_string());
                }
        });
    }

    PropertyResult ell_threshold_collapse()
    {
        return property("l >= (k+1)/2 equals l = inf", [&](auto record) {
            const EllBound inf = EllBound::infinite();
            for (int k = 1; k <= opt_.k_max; ++k)
                for (EllBound ell : ells_) {
                    if (ell.is_infinite() || 2 * ell.value() < k + 1) continue;
                    record(engine(k, ell).value == engine(k, inf).value,
                           cell(k, ell) + " is " + engine(k, ell).value.to_string() + " but l=inf gives " +
                               engine(k, inf).value.to_string());
                }
        });
    }

    PropertyResult scaling_homogeneity()
    {
        return property("homogeneous under rational scaling", [&](auto record) {
            std::mt19937_64 rng(opt_.seed);
            std::uniform_int_distribution<long> part(1, 12);
            for (int trial = 0; trial < 3; ++trial) {
                Scalar lambda(1);
                while (lambda == Scalar(1)) lambda = Scalar::fraction(part(rng), part(rng));
                const MomentPolygon scaled = omega_.scaled(lambda);
                for (int k = 1; k <= opt_.k_max; ++k)
                    for (EllBound ell : ells_) {
                        const Scalar lhs = capacity(scaled, k, ell).value;
                        const Scalar rhs = lambda * engine(k, ell).value;
                        record(lhs == rhs, cell(k, ell) + " lambda=" + lambda.to_string() + ": scaled domain gives " +
                                               lhs.to_string() + ", lambda * value is " + rhs.to_string());
                    }
            }
        });
    }

    PropertyResult widened_index_reduction()
    {
        return property("indices k..k+3 never undercut index k", [&](auto record) {
            for (int k = 1; k <= opt_.k_max; ++k)
                for (EllBound ell : ells_) {
                    const Scalar wide = oracle_capacity(omega_, k, ell, IndexWindow::at_least(3)).value;
                    record(wide == oracle(k, ell).value, cell(k, ell) + ": widened minimum " + wide.to_string() +
                                                             ", exact minimum " + oracle(k, ell).value.to_string());
                }
        });
    }

    PropertyResult norm_increments()
    {
        return property("norm increments in j are nonnegative and nondecreasing", [&](auto record) {
            for (int i = 0; i <= 3; ++i) {
                Scalar previous;
                for (int j = 0; j < 20; ++j) {
                    const Scalar step = dual_norm(omega_, {i, j + 1}) - dual_norm(omega_, {i, j});
                    const bool ok = step.sign() >= 0 && (j == 0 || !(step < previous));
                    record(ok, "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": increment " + step.to_string() +
                                   " after " + previous.to_string());
                    previous = step;
                }
            }
        });
    }

    PropertyResult j_transition()
    {
        return property("J is the first index where trading (0,1) stops paying", [&](auto record) {
            const int J = compute_J(omega_).value;
            const Scalar unit = dual_norm(omega_, {0, 1});
            for (int j = 0; j <= J + 20; ++j) {
                const bool strict = unit + dual_norm(omega_, {1, j}) < dual_norm(omega_, {1, j + 2});
                record(strict == (j >= J), "J=" + std::to_string(J) + " but j=" + std::to_string(j) +
                                               (strict ? " is already strict" : " is not strict"));
            }
        });
    }

    PropertyResult j_interval()
    {
        return property("J within one of the half-height normal slope", [&](auto record) {
            auto normal = half_height_normal(omega_);
            if (!normal) return;
            const Integer J = compute_J(omega_).value;
            const Integer lo = normal->alpha_low.floor() - 1;
            const Integer hi = normal->alpha_high.ceil() + 1;
            record(lo <= J && J <= hi, "J=" + J.get_str() + " outside [" + lo.get_str() + ", " + hi.get_str() + "]");
        });
    }

    PropertyResult inclusion_monotonicity()
    {
        return property("no witnesses for nested domains", [&](auto record) {
            const int k_max = std::min(opt_.k_max, 8);
            std::vector<std::pair<MomentPolygon, MomentPolygon>> pairs{
                {omega_.scaled(Scalar::fraction(9, 10)), omega_},
                {omega_, omega_.scaled(Scalar::fraction(3, 2))},
                {omega_, MomentPolygon::polydisk(omega_.max_x(), omega_.max_y())},
            };
            for (auto& [inner, outer] : pairs) {
                auto w = find_witnesses(inner, outer, k_max, ells_);
                std::string detail = "inner " + inner.to_string() + " into " + outer.to_string();
                if (!w.empty())
                    detail += " has witness " + cell(w[0].k, w[0].ell) + ": " + w[0].source_value.to_string() + " > " +
                              w[0].target_value.to_string();
                record(w.empty(), detail);
            }
        });
    }

    const MomentPolygon& omega_;
    const CheckOptions& opt_;
    std::vector<EllBound> ells_;
    std::string fault_method_;
    int fault_k_ = 0;
    std::map<std::pair<int, int>, CapacityResult> engine_cache_;
    std::map<std::pair<int, int>, OracleResult> oracle_cache_;
};

}  // namespace

std::vector<PropertyResult> run_checks(const MomentPolygon& omega, const CheckOptions& options)
{
    if (options.k_max < 1) throw std::invalid_argument("k_max must be positive");
    if (options.ell_max < 1) throw std::invalid_argument("l_max must be positive");
    return Suite(omega, options).run();
}

}  // namespace toric
