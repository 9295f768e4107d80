#include "toric/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace toric {

namespace {

using nlohmann::json;

[[noreturn]] void fail_field(const std::string& field, const std::string& why)
{
    throw DomainParseError("field '" + field + "': " + why);
}

Scalar scalar_field(const json& node, const std::string& field)
{
    if (node.is_number_integer()) return Scalar(node.get<long>());
    if (!node.is_string()) fail_field(field, "expected an integer or a string such as \"p/q\"");
    try {
        return Scalar::parse(node.get<std::string>());
    } catch (const std::exception& e) {
        fail_field(field, e.what());
    }
}

const json& member(const json& obj, const std::string& key, const std::string& field)
{
    auto it = obj.find(key);
    if (it == obj.end()) fail_field(field, "missing key '" + key + "'");
    return *it;
}

std::string position_of(std::string_view bytes, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < bytes.size(); ++i) {
        if (bytes[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string pair_label(char head, const Scalar& a, const Scalar& b)
{
    return std::string(1, head) + "(" + a.to_string() + "," + b.to_string() + ")";
}

std::string default_builtin_label(const DomainSpec& s)
{
    switch (s.kind) {
        case DomainSpec::Kind::ball: return "B(" + s.a.to_string() + ")";
        case DomainSpec::Kind::ellipsoid: return pair_label('E', s.a, s.b);
        case DomainSpec::Kind::polydisk: return pair_label('P', s.a, s.b);
        case DomainSpec::Kind::polygon: break;
    }
    return "polygon";
}

}  // namespace

DomainSpec parse_domain_file(std::string_view bytes, const std::string& default_label)
{
    json doc;
    try {
        doc = json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error& e) {
        throw DomainParseError("malformed JSON at " + position_of(bytes, e.byte == 0 ? 0 : e.byte - 1));
    }
    if (!doc.is_object()) throw DomainParseError("field '<root>': expected a JSON object");

    DomainSpec spec;
    int kinds = 0;
    if (auto it = doc.find("vertices"); it != doc.end()) {
        ++kinds;
        spec.kind = DomainSpec::Kind::polygon;
        if (!it->is_array()) fail_field("vertices", "expected an array of [x, y] pairs");
        for (std::size_t n = 0; n < it->size(); ++n) {
            const json& pt = (*it)[n];
            const std::string field = "vertices[" + std::to_string(n) + "]";
            if (!pt.is_array() || pt.size() != 2) fail_field(field, "expected a pair [x, y]");
            spec.vertices.push_back({scalar_field(pt[0], field + "[0]"), scalar_field(pt[1], field + "[1]")});
        }
    }
    if (auto it = doc.find("polydisk"); it != doc.end()) {
        ++kinds;
        spec.kind = DomainSpec::Kind::polydisk;
        spec.a = scalar_field(member(*it, "a", "polydisk"), "polydisk.a");
        if (it->contains("b")) spec.b = scalar_field((*it)["b"], "polydisk.b");
    }
    if (auto it = doc.find("ball"); it != doc.end()) {
        ++kinds;
        spec.kind = DomainSpec::Kind::ball;
        spec.a = scalar_field(member(*it, "r", "ball"), "ball.r");
        spec.b = spec.a;
    }
    if (auto it = doc.find("ellipsoid"); it != doc.end()) {
        ++kinds;
        spec.kind = DomainSpec::Kind::ellipsoid;
        if (auto quad = it->find("quad"); quad != it->end()) {
            const json& d = member(*quad, "d", "ellipsoid.quad");
            if (!d.is_number_integer()) fail_field("ellipsoid.quad.d", "expected an integer radicand");
            Scalar ra = scalar_field(member(*quad, "a", "ellipsoid.quad"), "ellipsoid.quad.a");
            Scalar rb = scalar_field(member(*quad, "b", "ellipsoid.quad"), "ellipsoid.quad.b");
            if (!ra.is_rational() || !rb.is_rational()) fail_field("ellipsoid.quad", "coefficients must be rational");
            try {
                spec.a = Scalar(ra.rational_part(), rb.rational_part(), d.get<std::int64_t>());
            } catch (const std::exception& e) {
                fail_field("ellipsoid.quad.d", e.what());
            }
        } else {
            spec.a = scalar_field(member(*it, "a", "ellipsoid"), "ellipsoid.a");
        }
        if (it->contains("b")) spec.b = scalar_field((*it)["b"], "ellipsoid.b");
    }
    if (kinds != 1) throw DomainParseError("field '<root>': expected exactly one of vertices, polydisk, ball, ellipsoid");

    if (auto it = doc.find("scale"); it != doc.end()) {
        spec.scale = scalar_field(*it, "scale");
        if (spec.scale->sign() <= 0) fail_field("scale", "must be positive");
    }
    if (auto it = doc.find("label"); it != doc.end()) {
        if (!it->is_string()) fail_field("label", "expected a string");
        spec.label = it->get<std::string>();
    } else {
        spec.label = spec.kind == DomainSpec::Kind::polygon ? default_label : default_builtin_label(spec);
    }

    // surface geometry problems as field diagnostics too
    try {
        resolve(spec);
    } catch (const GeometryError& e) {
        fail_field(spec.kind == DomainSpec::Kind::polygon ? "vertices" : "<domain>", e.what());
    }
    return spec;
}

DomainSpec load_domain_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainParseError("cannot read domain file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_domain_file(buf.str(), std::filesystem::path(path).stem().string());
    } catch (const DomainParseError& e) {
        throw DomainParseError(path + ": " + e.what());
    }
}

DomainSpec builtin_domain(DomainSpec::Kind kind, std::string_view args)
{
    DomainSpec spec;
    spec.kind = kind;
    const std::size_t comma = args.find(',');
    try {
        spec.a = Scalar::parse(args.substr(0, comma));
        if (comma != std::string_view::npos) {
            if (kind == DomainSpec::Kind::ball) throw DomainParseError("--ball takes a single radius");
            spec.b = Scalar::parse(args.substr(comma + 1));
        }
    } catch (const ScalarParseError& e) {
        throw DomainParseError(std::string("bad domain parameters '") + std::string(args) + "': " + e.what());
    }
    if (kind == DomainSpec::Kind::ball) spec.b = spec.a;
    spec.label = default_builtin_label(spec);
    resolve(spec);
    return spec;
}

MomentPolygon resolve(const DomainSpec& spec)
{
    MomentPolygon p = [&] {
        switch (spec.kind) {
            case DomainSpec::Kind::ball: return MomentPolygon::ball(spec.a);
            case DomainSpec::Kind::ellipsoid: return MomentPolygon::ellipsoid(spec.a, spec.b);
            case DomainSpec::Kind::polydisk: return MomentPolygon::polydisk(spec.a, spec.b);
            case DomainSpec::Kind::polygon: break;
        }
        return MomentPolygon::validate(spec.vertices);
    }();
    if (spec.scale) {
        if (spec.scale->sign() <= 0) throw DomainParseError("scale must be positive");
        p = p.scaled(*spec.scale);
    }
    return p;
}

TableFormat parse_table_format(std::string_view name)
{
    if (name == "csv") return TableFormat::csv;
    if (name == "md" || name == "markdown") return TableFormat::markdown;
    if (name == "json") return TableFormat::json;
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (csv, md, json)");
}

std::string csv_quote(std::string_view field)
{
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render_table(const std::vector<TableRow>& rows, TableFormat format)
{
    std::size_t width = 0;
    for (const TableRow& r : rows) width = std::max(width, r.cells.size());
    std::ostringstream out;

    switch (format) {
        case TableFormat::csv: {
            out << "domain,l";
            for (std::size_t k = 1; k <= width; ++k) out << ",k=" << k;
            out << "\n";
            for (const TableRow& r : rows) {
                out << csv_quote(r.domain) << "," << r.ell.to_string();
                for (const CapacityResult& c : r.cells) out << "," << c.value.to_string();
                out << "\n";
            }
            break;
        }
        case TableFormat::markdown: {
            out << "| domain | l |";
            for (std::size_t k = 1; k <= width; ++k) out << " k=" << k << " |";
            out << "\n|---|---|";
            for (std::size_t k = 1; k <= width; ++k) out << "---|";
            out << "\n";
            for (const TableRow& r : rows) {
                out << "| " << r.domain << " | " << r.ell.to_string() << " |";
                for (const CapacityResult& c : r.cells) {
                    const std::string exact = c.value.to_string();
                    const std::string approx = format_decimal(c.value, 3);
                    out << " " << exact;
                    if (approx != exact) out << " (" << approx << ")";
                    out << " |";
                }
                out << "\n";
            }
            break;
        }
        case TableFormat::json: {
            json arr = json::array();
            for (const TableRow& r : rows) {
                for (const CapacityResult& c : r.cells) {
                    json cell;
                    cell["domain"] = r.domain;
                    if (r.ell.is_infinite())
                        cell["l"] = "inf";
                    else
                        cell["l"] = r.ell.value();
                    cell["k"] = c.k;
                    cell["value"] = c.value.to_string();
                    cell["decimal"] = format_decimal(c.value);
                    cell["witness"] = c.witness ? json(c.witness->to_string()) : json(nullptr);
                    cell["method"] = std::string(to_string(c.method));
                    arr.push_back(std::move(cell));
                }
            }
            out << arr.dump(2) << "\n";
            break;
        }
    }
    return out.str();
}

namespace {

std::string xml_escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fixed(double v)
{
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << v;
    return s.str();
}

}  // namespace

std::string render_svg(const MomentPolygon& omega, const std::string& label, const MomentPolygon* overlay,
                       const std::string& overlay_label)
{
    const double size = 480, margin = 60;
    double extent = std::max(omega.max_x().to_double(), omega.max_y().to_double());
    if (overlay) extent = std::max({extent, overlay->max_x().to_double(), overlay->max_y().to_double()});
    const double unit = (size - 2 * margin) / (extent * 1.1);
    auto sx = [&](const Scalar& x) { return fixed(margin + x.to_double() * unit); };
    auto sy = [&](const Scalar& y) { return fixed(size - margin - y.to_double() * unit); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<!-- " << xml_escape(label) << " vertices: " << omega.to_string() << " -->\n";
    if (overlay) out << "<!-- " << xml_escape(overlay_label) << " vertices: " << overlay->to_string() << " -->\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 " << size
        << " " << size << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const std::string origin_x = sx(Scalar(0)), origin_y = sy(Scalar(0));
    out << "  <g stroke=\"black\" stroke-width=\"1\">\n";
    out << "    <line x1=\"" << origin_x << "\" y1=\"" << origin_y << "\" x2=\"" << fixed(size - margin / 2) << "\" y2=\""
        << origin_y << "\"/>\n";
    out << "    <line x1=\"" << origin_x << "\" y1=\"" << origin_y << "\" x2=\"" << origin_x << "\" y2=\"" << fixed(margin / 2)
        << "\"/>\n";
    out << "  </g>\n";
    out << "  <text x=\"" << fixed(size - margin / 2) << "\" y=\"" << fixed(size - margin + 16) << "\" font-size=\"12\">x</text>\n";
    out << "  <text x=\"" << fixed(margin - 16) << "\" y=\"" << fixed(margin / 2) << "\" font-size=\"12\">y</text>\n";

    auto outline = [&](const MomentPolygon& p, const char* stroke, const char* fill, bool dashed, const std::string& name) {
        out << "  <polygon class=\"domain\" data-label=\"" << xml_escape(name) << "\" points=\"";
        bool first = true;
        for (const Point& v : p.vertices()) {
            if (!first) out << " ";
            first = false;
            out << sx(v.x) << "," << sy(v.y);
        }
        out << "\" stroke=\"" << stroke << "\" fill=\"" << fill << "\" stroke-width=\"2\"";
        if (dashed) out << " stroke-dasharray=\"6 4\"";
        out << "/>\n";
    };
    outline(omega, "#1f4e8c", "#1f4e8c22", false, label);
    if (overlay) outline(*overlay, "#b23a2b", "none", true, overlay_label);

    for (const Point& v : omega.vertices()) {
        out << "  <circle cx=\"" << sx(v.x) << "\" cy=\"" << sy(v.y) << "\" r=\"3\" fill=\"#1f4e8c\"/>\n";
        out << "  <text x=\"" << sx(v.x) << "\" y=\"" << sy(v.y) << "\" dx=\"5\" dy=\"-5\" font-size=\"11\">("
            << xml_escape(v.x.to_string()) << ", " << xml_escape(v.y.to_string()) << ")</text>\n";
    }
    out << "  <text x=\"" << fixed(margin) << "\" y=\"20\" font-size=\"14\">" << xml_escape(label);
    if (overlay) out << " with " << xml_escape(overlay_label) << " (dashed)";
    out << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace toric
