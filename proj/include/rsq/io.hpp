#ifndef RSQ_IO_HPP
#define RSQ_IO_HPP

// Plain-text formats. Lines starting with '#' are comments; numbers are
// written with 17 significant digits so a write/read cycle is lossless.
//
// expansion:   kind <outer|inner> / center x y z / radius R / order p /
//              rule <lebedev order> / points N, then N lines "x y z w" holding
//              the absolute surface point c + R r_i and its weight.
// polytensor:  order p, then one line "n n1 n2 n3 value" per coefficient.
// charges:     one line "x y z q" per source.
// scene:       one line "cx cy cz R vx vy vz" per sphere.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rsq/expansion.hpp"
#include "rsq/tensors.hpp"
#include "rsq/vec3.hpp"

namespace rsq {

struct SceneSphere {
    Vec3 center;
    double radius = 1.0;
    Vec3 velocity;
};

void write_expansion(std::ostream& out, const SurfaceExpansion& exp);
/// The rule is looked up by order; node positions must match it to 1e-9.
SurfaceExpansion read_expansion(std::istream& in);

void write_polytensor(std::ostream& out, const Polytensor& pt);
Polytensor read_polytensor(std::istream& in);

void write_charges(std::ostream& out, const PointCharges& charges);
PointCharges read_charges(std::istream& in);

void write_scene(std::ostream& out, const std::vector<SceneSphere>& scene);
/// Throws ParseError naming the offending line.
std::vector<SceneSphere> read_scene(std::istream& in);

/// Open a file for reading or writing; ParseError when that fails.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

} // namespace rsq

#endif // RSQ_IO_HPP
