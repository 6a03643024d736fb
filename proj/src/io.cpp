#include "rsq/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "rsq/error.hpp"

namespace rsq {

namespace {

// Yields non-blank, non-comment lines and remembers where they came from.
class LineReader {
public:
    explicit LineReader(std::istream& in, std::string what) : in_(in), what_(std::move(what)) {}

    bool next(std::istringstream& fields)
    {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            fields.clear();
            fields.str(line);
            return true;
        }
        return false;
    }

    void expect(std::istringstream& fields)
    {
        if (!next(fields))
            fail("unexpected end of input");
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(what_ + ", line " + std::to_string(line_no_) + ": " + msg);
    }

    template <typename... T>
    void read_exact(std::istringstream& fields, T&... values)
    {
        (read_one(fields, values), ...);
        std::string extra;
        if (fields >> extra)
            fail("unexpected trailing field '" + extra + "'");
    }

    void keyword(std::istringstream& fields, const std::string& key)
    {
        std::string word;
        if (!(fields >> word) || word != key)
            fail("expected '" + key + "'");
    }

private:
    template <typename T>
    void read_one(std::istringstream& fields, T& value)
    {
        if (!(fields >> value))
            fail("missing or malformed number");
        if constexpr (std::is_floating_point_v<T>)
            if (!std::isfinite(value))
                fail("non-finite number");
    }

    std::istream& in_;
    std::string what_;
    int line_no_ = 0;
};

std::ostream& precise(std::ostream& out)
{
    return out << std::setprecision(17);
}

} // namespace

void write_expansion(std::ostream& out, const SurfaceExpansion& exp)
{
    precise(out);
    const auto& c = exp.center();
    out << "# rsq surface expansion\n"
        << "kind " << to_string(exp.kind()) << '\n'
        << "center " << c.x << ' ' << c.y << ' ' << c.z << '\n'
        << "radius " << exp.radius() << '\n'
        << "order " << exp.order() << '\n'
        << "rule " << exp.rule().exactness_degree() << '\n'
        << "points " << exp.size() << '\n';
    for (std::size_t i = 0; i < exp.size(); ++i) {
        const Vec3 x = exp.surface_point(i);
        out << x.x << ' ' << x.y << ' ' << x.z << ' ' << exp.weight(i) << '\n';
    }
}

SurfaceExpansion read_expansion(std::istream& in)
{
    LineReader lines(in, "expansion");
    std::istringstream f;
    std::string kind_text;
    Vec3 c;
    double radius = 0.0;
    int order = 0, rule_order = 0;
    std::size_t count = 0;

    lines.expect(f);
    lines.keyword(f, "kind");
    lines.read_exact(f, kind_text);
    lines.expect(f);
    lines.keyword(f, "center");
    lines.read_exact(f, c.x, c.y, c.z);
    lines.expect(f);
    lines.keyword(f, "radius");
    lines.read_exact(f, radius);
    lines.expect(f);
    lines.keyword(f, "order");
    lines.read_exact(f, order);
    lines.expect(f);
    lines.keyword(f, "rule");
    lines.read_exact(f, rule_order);
    lines.expect(f);
    lines.keyword(f, "points");
    lines.read_exact(f, count);

    ExpansionKind kind;
    RulePtr rule;
    try {
        kind = parse_expansion_kind(kind_text);
        rule = lebedev_rule(rule_order);
    } catch (const Error& e) {
        lines.fail(e.what());
    }
    if (!(radius > 0.0))
        lines.fail("radius must be positive");
    if (count != rule->size())
        lines.fail("point count does not match the order-" + std::to_string(rule_order) + " rule");

    std::vector<double> w(count);
    for (std::size_t i = 0; i < count; ++i) {
        Vec3 x;
        lines.expect(f);
        lines.read_exact(f, x.x, x.y, x.z, w[i]);
        if (norm((x - c) / radius - rule->point(i)) > 1e-9)
            lines.fail("surface point " + std::to_string(i) + " is not on the rule node");
    }
    if (lines.next(f))
        lines.fail("unexpected data after the last surface point");
    try {
        return SurfaceExpansion(kind, c, radius, std::move(rule), order, std::move(w));
    } catch (const Error& e) {
        lines.fail(e.what());
    }
}

void write_polytensor(std::ostream& out, const Polytensor& pt)
{
    precise(out);
    out << "# rsq polytensor: n n1 n2 n3 value\n"
        << "order " << pt.order() << '\n';
    for (int n = 0; n < pt.order(); ++n)
        TensorSlice::for_each_exponent(n, [&](int a, int b, int c, std::size_t k) {
            out << n << ' ' << a << ' ' << b << ' ' << c << ' ' << pt.slice(n).coeffs()[k] << '\n';
        });
}

Polytensor read_polytensor(std::istream& in)
{
    LineReader lines(in, "polytensor");
    std::istringstream f;
    int order = 0;
    lines.expect(f);
    lines.keyword(f, "order");
    lines.read_exact(f, order);
    std::optional<Polytensor> pt;
    try {
        pt.emplace(order);
    } catch (const Error& e) {
        lines.fail(e.what());
    }
    std::vector<std::vector<bool>> seen(order);
    for (int n = 0; n < order; ++n)
        seen[n].assign(TensorSlice::count(n), false);
    while (lines.next(f)) {
        int n = 0, a = 0, b = 0, c = 0;
        double v = 0.0;
        lines.read_exact(f, n, a, b, c, v);
        if (n < 0 || n >= order || a < 0 || b < 0 || c < 0 || a + b + c != n)
            lines.fail("invalid exponent triple");
        const auto k = TensorSlice::index(b, c);
        if (seen[n][k])
            lines.fail("duplicate coefficient");
        seen[n][k] = true;
        pt->slice(n).coeffs()[k] = v;
    }
    return std::move(*pt);
}

void write_charges(std::ostream& out, const PointCharges& charges)
{
    precise(out);
    out << "# x y z q\n";
    for (std::size_t i = 0; i < charges.size(); ++i) {
        const auto& p = charges.positions[i];
        out << p.x << ' ' << p.y << ' ' << p.z << ' ' << charges.charges[i] << '\n';
    }
}

PointCharges read_charges(std::istream& in)
{
    LineReader lines(in, "charges");
    std::istringstream f;
    PointCharges pc;
    while (lines.next(f)) {
        Vec3 x;
        double q = 0.0;
        lines.read_exact(f, x.x, x.y, x.z, q);
        pc.add(x, q);
    }
    return pc;
}

void write_scene(std::ostream& out, const std::vector<SceneSphere>& scene)
{
    precise(out);
    out << "# cx cy cz R vx vy vz\n";
    for (const auto& s : scene)
        out << s.center.x << ' ' << s.center.y << ' ' << s.center.z << ' ' << s.radius << ' ' << s.velocity.x << ' '
            << s.velocity.y << ' ' << s.velocity.z << '\n';
}

std::vector<SceneSphere> read_scene(std::istream& in)
{
    LineReader lines(in, "scene");
    std::istringstream f;
    std::vector<SceneSphere> scene;
    while (lines.next(f)) {
        SceneSphere s;
        lines.read_exact(f, s.center.x, s.center.y, s.center.z, s.radius, s.velocity.x, s.velocity.y, s.velocity.z);
        if (!(s.radius > 0.0))
            lines.fail("sphere radius must be positive");
        scene.push_back(s);
    }
    if (scene.empty())
        throw ParseError("scene: no spheres defined");
    return scene;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << contents) || !out.flush())
        throw ParseError("cannot write '" + path.string() + "'");
}

} // namespace rsq
