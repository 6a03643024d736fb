#include "rsq/translation.hpp"

#include <sstream>
#include <string>

#include "rsq/error.hpp"

namespace rsq {

namespace {

constexpr double kNestSlack = 1e-12;
constexpr double kUnitBallSlack = 1e-9;

void require(const SurfaceExpansion& src, ExpansionKind kind, const char* op)
{
    if (src.kind() != kind)
        throw ContractError(std::string(op) + " needs an " + std::string(to_string(kind)) + " source expansion");
}

void require_radius(double r)
{
    if (!(r > 0.0))
        throw DomainError("translated expansion radius must be positive");
}

// Every translation is the initial fit applied to the source's surface weights
// treated as point charges; `kind` picks the kernel slot.
SurfaceExpansion reproject(const SurfaceExpansion& src, ExpansionKind kind, const Vec3& new_center,
                           double new_radius)
{
    const auto pts = src.surface_points();
    return project_sources(kind, pts, src.weights(), new_center, new_radius, src.rule_ptr(), src.order(), true);
}

} // namespace

SurfaceExpansion shift_outer(const SurfaceExpansion& src, const Vec3& new_center, double new_radius)
{
    require(src, ExpansionKind::Outer, "shift_outer");
    require_radius(new_radius);
    const double reach = distance(src.center(), new_center) + src.radius();
    if (reach > new_radius + kNestSlack) {
        std::ostringstream os;
        os << "shift_outer: source sphere reaches " << reach << " from the new center, beyond radius " << new_radius;
        throw GeometryError(os.str());
    }
    return reproject(src, ExpansionKind::Outer, new_center, new_radius);
}

SurfaceExpansion outer_to_inner(const SurfaceExpansion& src, const Vec3& new_center, double new_radius)
{
    require(src, ExpansionKind::Outer, "outer_to_inner");
    require_radius(new_radius);
    std::ostringstream bad;
    std::size_t n_bad = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        const double u = distance(src.surface_point(i), new_center) / new_radius;
        if (u <= 1.0 + kUnitBallSlack) {
            if (n_bad < 8)
                bad << (n_bad ? ", " : "") << i;
            ++n_bad;
        }
    }
    if (n_bad) {
        std::ostringstream os;
        os << "outer_to_inner: " << n_bad << " source node(s) fall inside the target sphere (indices " << bad.str()
           << (n_bad > 8 ? ", ..." : "") << ")";
        throw GeometryError(os.str());
    }
    return reproject(src, ExpansionKind::Inner, new_center, new_radius);
}

SurfaceExpansion shift_inner(const SurfaceExpansion& src, const Vec3& new_center, double new_radius)
{
    require(src, ExpansionKind::Inner, "shift_inner");
    require_radius(new_radius);
    const double reach = distance(src.center(), new_center) + new_radius;
    if (reach > src.radius() + kNestSlack) {
        std::ostringstream os;
        os << "shift_inner: new sphere reaches " << reach << " from the old center, beyond radius " << src.radius();
        throw GeometryError(os.str());
    }
    return reproject(src, ExpansionKind::Inner, new_center, new_radius);
}

} // namespace rsq
