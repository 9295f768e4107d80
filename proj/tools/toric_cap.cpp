// toric-cap: capacities, tables, obstruction reports, self-checks and SVG
// renderings for convex toric domains.
//
// Exit codes: 0 success (obstruct: witnesses found), 1 obstruct found none,
// 2 input or usage error, 3 property violation in `check`.

#include "CLI11.hpp"
#include "toric/capacities.hpp"
#include "toric/check.hpp"
#include "toric/io.hpp"
#include "toric/obstructions.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

using namespace toric;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_nothing_found = 1;
constexpr int exit_input = 2;
constexpr int exit_property = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<std::string> domain_files, polydisks, balls, ellipsoids;
    std::string scale;
    int k = 0;
    int k_max = 0;
    std::string ell = "inf";
    std::string ells;
    int ell_max = 4;
    std::uint64_t seed = 1;
    std::string format = "csv";
    bool oracle = false;
    std::string out;
};

struct DomainOptions {
    CLI::Option* file = nullptr;
    CLI::Option* polydisk = nullptr;
    CLI::Option* ball = nullptr;
    CLI::Option* ellipsoid = nullptr;
};

DomainOptions add_domain_options(CLI::App* sub, Options& o)
{
    DomainOptions d;
    d.file = sub->add_option("--domain", o.domain_files, "JSON domain file (repeatable)")->allow_extra_args(false);
    d.polydisk = sub->add_option("--polydisk", o.polydisks, "polydisk P(a,b): a[,b], b defaults to 1")->allow_extra_args(false);
    d.ball = sub->add_option("--ball", o.balls, "ball B(r)")->allow_extra_args(false);
    d.ellipsoid = sub->add_option("--ellipsoid", o.ellipsoids, "ellipsoid E(a,b): a[,b], b defaults to 1")->allow_extra_args(false);
    sub->add_option("--scale", o.scale, "scale factor p/q applied to the first domain");
    return d;
}

// Domains in command-line order.
std::vector<DomainSpec> collect_domains(const CLI::App* sub, const DomainOptions& d, const Options& o)
{
    std::vector<DomainSpec> out;
    std::map<const CLI::Option*, std::size_t> seen;
    for (const CLI::Option* opt : sub->parse_order()) {
        std::size_t n = seen[opt]++;
        if (opt == d.file) out.push_back(load_domain_file(o.domain_files.at(n)));
        else if (opt == d.polydisk) out.push_back(builtin_domain(DomainSpec::Kind::polydisk, o.polydisks.at(n)));
        else if (opt == d.ball) out.push_back(builtin_domain(DomainSpec::Kind::ball, o.balls.at(n)));
        else if (opt == d.ellipsoid) out.push_back(builtin_domain(DomainSpec::Kind::ellipsoid, o.ellipsoids.at(n)));
    }
    if (!o.scale.empty() && !out.empty()) {
        Scalar s = Scalar::parse(o.scale);
        if (s.sign() <= 0) throw InputError("--scale must be positive");
        out.front().scale = out.front().scale ? *out.front().scale * s : s;
        out.front().label = o.scale + "*" + out.front().label;
    }
    return out;
}

std::vector<DomainSpec> require_domains(const CLI::App* sub, const DomainOptions& d, const Options& o, std::size_t lo,
                                        std::size_t hi)
{
    auto specs = collect_domains(sub, d, o);
    if (specs.size() < lo || specs.size() > hi) {
        std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
        throw InputError(sub->get_name() + " needs " + want + " domain(s), got " + std::to_string(specs.size()));
    }
    return specs;
}

std::vector<EllBound> parse_ells(const std::string& text)
{
    std::vector<EllBound> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(EllBound::parse(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string ell_set_string(const std::vector<EllBound>& ells)
{
    std::string s = "{";
    for (std::size_t e = 0; e < ells.size(); ++e) s += (e ? "," : "") + ells[e].to_string();
    return s + "}";
}

void require_k(int k, const char* flag)
{
    if (k < 1) throw InputError(std::string(flag) + " must be a positive integer");
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) throw InputError("cannot write '" + path + "'");
}

int cmd_capacity(const DomainSpec& spec, const Options& o)
{
    require_k(o.k, "-k");
    const MomentPolygon omega = resolve(spec);
    const EllBound ell = EllBound::parse(o.ell);
    CapacityResult r;
    if (o.oracle) {
        OracleResult orc = oracle_capacity(omega, o.k, ell);
        r = CapacityResult{orc.value, orc.witness, Method::oracle, o.k, ell};
    } else {
        r = capacity(omega, o.k, ell);
        // closed forms carry no word; the pruned search supplies one
        if (!r.witness) r.witness = capacity_pruned(omega, o.k, ell).witness;
    }
    std::ostringstream out;
    out << r.value.to_string() << " (witness " << r.witness->to_string() << ")\n";
    out << "decimal: " << format_decimal(r.value) << "\n";
    out << "method: " << to_string(r.method) << "\n";
    out << "domain: " << spec.label << "  k=" << o.k << "  l=" << ell.to_string() << "\n";
    emit(out.str(), o.out);
    return exit_ok;
}

int cmd_table(const std::vector<DomainSpec>& specs, const Options& o)
{
    require_k(o.k_max, "--kmax");
    const auto ells = parse_ells(o.ells.empty() ? "1,2,inf" : o.ells);
    const TableFormat format = parse_table_format(o.format);
    std::vector<TableRow> rows;
    for (const DomainSpec& spec : specs) {
        const MomentPolygon omega = resolve(spec);
        std::vector<CapacityResult> grid;
        if (o.oracle) {
            for (EllBound ell : ells)
                for (int k = 1; k <= o.k_max; ++k) {
                    OracleResult orc = oracle_capacity(omega, k, ell);
                    grid.push_back({orc.value, orc.witness, Method::oracle, k, ell});
                }
        } else {
            grid = capacity_grid(omega, o.k_max, ells);
        }
        for (std::size_t e = 0; e < ells.size(); ++e) {
            TableRow row{spec.label, ells[e], {}};
            auto first = grid.begin() + static_cast<std::ptrdiff_t>(e * static_cast<std::size_t>(o.k_max));
            row.cells.assign(first, first + o.k_max);
            rows.push_back(std::move(row));
        }
    }
    emit(render_table(rows, format), o.out);
    return exit_ok;
}

int cmd_obstruct(const DomainSpec& source, const DomainSpec& target, const Options& o)
{
    require_k(o.k_max, "--kmax");
    const auto ells = parse_ells(o.ells.empty() ? "1,2,inf" : o.ells);
    const ObstructionReport r = obstruct(resolve(source), resolve(target), o.k_max, ells);
    std::ostringstream out;
    out << source.label << " -> " << target.label << "  (k <= " << o.k_max << ", l in " << ell_set_string(ells) << ")\n";
    if (r.witnesses.empty()) {
        out << "no obstruction found (k <= " << o.k_max << ")\n";
    } else {
        out << "capacity witnesses: " << r.witnesses.size() << "\n";
        for (const Witness& w : r.witnesses)
            out << "  k=" << w.k << " l=" << w.ell.to_string() << ": " << w.source_value.to_string() << " > "
                << w.target_value.to_string() << "  (" << format_decimal(w.source_value) << " > "
                << format_decimal(w.target_value) << ")\n";
    }
    out << "volume: " << (r.volume.obstructed ? "obstructed" : "not obstructed") << " (source area "
        << r.volume.source_area.to_string() << ", target area " << r.volume.target_area.to_string() << ")\n";
    if (r.stabilizes)
        out << "stabilization: the capacity witnesses persist for products with a ball B^2(c), c large; the volume verdict does not\n";
    emit(out.str(), o.out);
    return r.witnesses.empty() ? exit_nothing_found : exit_ok;
}

int cmd_scan(const DomainSpec& source, const DomainSpec& target, const Options& o)
{
    require_k(o.k_max, "--kmax");
    const auto ells = parse_ells(o.ells.empty() ? "1,2,3,inf" : o.ells);
    const CriticalScale c = critical_scale(resolve(source), resolve(target), o.k_max, ells);
    std::ostringstream out;
    out << "scan lambda*" << source.label << " -> " << target.label << "  (k <= " << o.k_max << ", l in "
        << ell_set_string(ells) << ")\n";
    out << "capacity bound: λ ≤ " << c.capacity_bound.to_string() << " via (k=" << c.k << ",ℓ=" << c.ell.to_string()
        << ")  (" << format_decimal(c.capacity_bound) << ")\n";
    char approx[32];
    std::snprintf(approx, sizeof approx, "%.6f", c.volume_bound_decimal());
    out << "volume bound: λ² ≤ " << c.volume_bound_squared.to_string() << "  (λ ≤ " << approx << ")\n";
    emit(out.str(), o.out);
    return exit_ok;
}

int cmd_check(const DomainSpec& spec, const Options& o)
{
    CheckOptions opt;
    opt.k_max = o.k_max ? o.k_max : 10;
    opt.ell_max = o.ell_max;
    opt.seed = o.seed;
    if (const char* fault = std::getenv("TORIC_CAP_FAULT")) opt.fault = fault;
    require_k(opt.k_max, "--kmax");
    require_k(opt.ell_max, "--ell-max");
    const auto results = run_checks(resolve(spec), opt);
    std::ostringstream out;
    bool ok = true;
    for (const PropertyResult& r : results) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
        if (!r.passed()) {
            ok = false;
            out << "  counterexample: " << *r.counterexample << "\n";
        }
    }
    out << (ok ? "all properties hold" : "property violation") << " for " << spec.label << " (k <= " << opt.k_max
        << ", l <= " << opt.ell_max << " and inf)\n";
    emit(out.str(), o.out);
    return ok ? exit_ok : exit_property;
}

int cmd_render(const std::vector<DomainSpec>& specs, const Options& o)
{
    if (o.out.empty()) throw InputError("render needs -o PATH");
    const MomentPolygon base = resolve(specs[0]);
    std::optional<MomentPolygon> overlay;
    if (specs.size() > 1) overlay = resolve(specs[1]);
    emit(render_svg(base, specs[0].label, overlay ? &*overlay : nullptr, specs.size() > 1 ? specs[1].label : ""), o.out);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Refined capacities of convex toric domains"};
    app.name("toric-cap");
    app.require_subcommand(1);
    Options o;

    auto* capacity_cmd = app.add_subcommand("capacity", "one capacity value with a witness word");
    auto capacity_domains = add_domain_options(capacity_cmd, o);
    capacity_cmd->add_option("-k", o.k, "index k")->required();
    capacity_cmd->add_option("--ell", o.ell, "bound on ends: positive integer or inf");
    capacity_cmd->add_flag("--oracle", o.oracle, "force the exhaustive search");
    capacity_cmd->add_option("-o", o.out, "output path");

    auto* table_cmd = app.add_subcommand("table", "capacity table over k = 1..kmax");
    auto table_domains = add_domain_options(table_cmd, o);
    table_cmd->add_option("--kmax", o.k_max, "largest k")->required();
    table_cmd->add_option("--ells", o.ells, "comma-separated l values, e.g. 1,2,inf");
    table_cmd->add_option("--format", o.format, "csv, md or json");
    table_cmd->add_flag("--oracle", o.oracle, "force the exhaustive search");
    table_cmd->add_option("-o", o.out, "output path");

    auto* obstruct_cmd = app.add_subcommand("obstruct", "capacity and volume obstructions: first domain into second");
    auto obstruct_domains = add_domain_options(obstruct_cmd, o);
    obstruct_cmd->add_option("--kmax", o.k_max, "largest k")->required();
    obstruct_cmd->add_option("--ells", o.ells, "comma-separated l values");
    obstruct_cmd->add_option("-o", o.out, "output path");

    auto* scan_cmd = app.add_subcommand("scan", "largest scale not excluded for lambda * first into second");
    auto scan_domains = add_domain_options(scan_cmd, o);
    scan_cmd->add_option("--kmax", o.k_max, "largest k")->required();
    scan_cmd->add_option("--ells", o.ells, "comma-separated l values");
    scan_cmd->add_option("-o", o.out, "output path");

    auto* check_cmd = app.add_subcommand("check", "run the property suites on one domain");
    auto check_domains = add_domain_options(check_cmd, o);
    check_cmd->add_option("--kmax", o.k_max, "largest k (default 10)");
    check_cmd->add_option("--ell-max", o.ell_max, "largest finite l (default 4)");
    check_cmd->add_option("--seed", o.seed, "seed for random scalings");
    check_cmd->add_option("-o", o.out, "output path");

    auto* render_cmd = app.add_subcommand("render", "SVG of a domain, optionally with a second one overlaid");
    auto render_domains = add_domain_options(render_cmd, o);
    render_cmd->add_option("-o", o.out, "output SVG path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (capacity_cmd->parsed()) return cmd_capacity(require_domains(capacity_cmd, capacity_domains, o, 1, 1)[0], o);
        if (table_cmd->parsed()) return cmd_table(require_domains(table_cmd, table_domains, o, 1, 64), o);
        if (obstruct_cmd->parsed()) {
            auto d = require_domains(obstruct_cmd, obstruct_domains, o, 2, 2);
            return cmd_obstruct(d[0], d[1], o);
        }
        if (scan_cmd->parsed()) {
            auto d = require_domains(scan_cmd, scan_domains, o, 2, 2);
            return cmd_scan(d[0], d[1], o);
        }
        if (check_cmd->parsed()) return cmd_check(require_domains(check_cmd, check_domains, o, 1, 1)[0], o);
        if (render_cmd->parsed()) return cmd_render(require_domains(render_cmd, render_domains, o, 1, 2), o);
    } catch (const std::exception& e) {
        std::cerr << "toric-cap: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
