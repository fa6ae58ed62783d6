#include "latticeforge/polytope_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "latticeforge/errors.hpp"
#include "latticeforge/hull.hpp"

namespace latticeforge {
namespace {

std::int64_t to_word(const Int& v) {
  require_domain(v >= std::numeric_limits<std::int64_t>::min() &&
                     v <= std::numeric_limits<std::int64_t>::max(),
                 "coordinate " + v.str() + " does not fit the interchange format");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::string polytope_to_text(const ConvexLatticePolytope& p) {
  require_domain(p.d >= 1 && !p.vertices.empty(), "cannot serialize an empty polytope");
  nlohmann::json out;
  out["d"] = p.d;
  nlohmann::json verts = nlohmann::json::array();
  for (const LatticeVector& v : p.vertices) {
    nlohmann::json row = nlohmann::json::array();
    for (const Int& c : v.x) row.push_back(to_word(c));
    verts.push_back(std::move(row));
  }
  out["vertices"] = std::move(verts);
  return out.dump(2) + "\n";
}

void write_polytope(const ConvexLatticePolytope& p, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require_domain(out.good(), "cannot open " + path + " for writing");
  out << polytope_to_text(p);
  require_invariant(out.good(), "short write to " + path);
}

ConvexLatticePolytope polytope_from_text(const std::string& text) {
  nlohmann::json in;
  try {
    in = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("polytope text does not parse: ") + e.what());
  }
  require_domain(in.is_object() && in.contains("d") && in.contains("vertices"),
                 "polytope text needs fields d and vertices");
  require_domain(in["d"].is_number_integer(), "field d must be an integer");
  const int d = in["d"].get<int>();
  require_domain(d >= 1, "field d must be positive");
  require_domain(in["vertices"].is_array() && !in["vertices"].empty(),
                 "field vertices must be a non-empty array");
  std::vector<LatticeVector> points;
  for (const nlohmann::json& row : in["vertices"]) {
    require_domain(row.is_array() && static_cast<int>(row.size()) == d,
                   "every vertex needs exactly d coordinates");
    LatticeVector v;
    for (const nlohmann::json& c : row) {
      require_domain(c.is_number_integer(), "coordinates must be exact integers");
      v.x.push_back(Int(c.get<std::int64_t>()));
    }
    points.push_back(std::move(v));
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    require_domain(points[i - 1] < points[i],
                   "vertices must be strictly increasing lexicographically");
  }
  ConvexLatticePolytope hull = convex_hull(points, d);
  require_domain(hull.vertices == points,
                 "listed points are not exactly the extreme points of their hull");
  return hull;
}

ConvexLatticePolytope read_polytope(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require_domain(in.good(), "cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return polytope_from_text(buf.str());
}

}  // namespace latticeforge
