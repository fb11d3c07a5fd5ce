#ifndef GZ_POLYTOPE_HPP
#define GZ_POLYTOPE_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gz/lie_data.hpp"
#include "gz/linalg.hpp"

namespace gz {

/// <normal, x> <= offset
struct Halfspace {
    FieldVector normal;
    FieldElement offset;

    FieldElement slack(const FieldVector& x) const { return offset - dot(normal, x); }
};

struct HalfspaceD {
    std::array<double, 5> normal;
    double offset;
};

/// H-representation with its integral-affine structure.  chamber_strict
/// holds the constraints whose strictness cuts out the principal chamber
/// (membership in the chamber means strict inequality on every one).
struct HPolytope {
    std::vector<Halfspace> halfspaces;
    Lattice lattice;
    std::vector<Halfspace> chamber_strict;

    bool in_chamber(const FieldVector& x) const;
};

struct PolytopeUnbounded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The nine halfspaces cutting out the Gelfand-Zeitlin polytope: three from
/// the Kirwan triangle and six eigenvalue interlacing conditions, over the
/// twisted flow-period lattice.
HPolytope gz_halfspaces(const FieldElement& lambda);

/// Closed-form list of the 13 vertices, sorted lexicographically: seven in
/// the fibre over the triangle apex (0, lambda) and three over each bottom
/// corner (+-lambda/(2 sqrt3), lambda/2), where one pair of eigenvalue
/// bounds collapses.
std::vector<FieldVector> gz_vertex_table(const FieldElement& lambda);

/// Vertices with their tight halfspace index sets.
struct VRep {
    std::vector<FieldVector> vertices;
    std::vector<std::vector<int>> tight_sets;
};

/// Exact vertex enumeration: every 5-subset of halfspaces with invertible
/// normal matrix is solved, kept iff feasible, and deduplicated exactly.
/// Tight sets are recomputed per unique vertex, so coincident subsets
/// merge.  Throws PolytopeUnbounded when a recession direction exists.
VRep enumerate_vertices(const HPolytope& p);

struct Edge {
    int v0, v1;                        // indices into VRep, v0 < v1
    std::vector<long long> direction;  // primitive, lattice coords, v0 -> v1
    FieldElement length;               // integral affine length
};

/// A vertex pair is an edge iff their common tight normals have rank
/// exactly 4.  Directions are reduced to primitive lattice vectors; the
/// scale factor is the integral affine length.
std::vector<Edge> enumerate_edges(const HPolytope& p, const VRep& v);

FieldElement min_edge_length(const HPolytope& p);
FieldElement min_edge_length(const std::vector<Edge>& edges);

/// Indices of vertices that lie strictly inside the chamber, have exactly
/// five incident edges, and whose primitive edge directions form a Z-basis
/// of the lattice (determinant +-1).
std::vector<int> smooth_chamber_vertices(const HPolytope& p, const VRep& v,
                                         const std::vector<Edge>& edges);

struct WidthCertificate {
    FieldVector vertex;
    std::vector<std::vector<long long>> directions;  // lattice coords, away from vertex
    FieldElement size_l;
    std::map<std::string, bool> checks;

    bool all_checks_pass() const;
};

/// Picks the smooth chamber vertex maximizing the minimum incident edge
/// length (ties broken by lexicographically smallest vertex) and verifies
/// the five exact containment conditions that make
///   B(y) = v + sum_i y_i u_i
/// an integral affine embedding of the open simplex of size l into the
/// polytope interior.  Throws CertificateError when no smooth chamber
/// vertex exists.
std::pair<FieldElement, WidthCertificate> build_width_certificate(const HPolytope& p);

struct WidthReport {
    FieldElement lambda;
    FieldElement lower_bound;
    FieldElement upper_bound;  // quoted constant lambda/sqrt(3), not computed
    bool tight;
    WidthCertificate certificate;
};

WidthReport gromov_width_report(const FieldElement& lambda);

/// Dimension of the affine span of a point set.
int affine_dimension(const std::vector<FieldVector>& points);

std::vector<HalfspaceD> to_double(const std::vector<Halfspace>& hs);

nlohmann::json certificate_json(const WidthCertificate& cert);
nlohmann::json report_json(const FieldElement& lambda, const HPolytope& p, const VRep& v,
                           const std::vector<Edge>& edges, const WidthReport& report);

}  // namespace gz

#endif
