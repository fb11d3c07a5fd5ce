#ifndef GZ_LIE_DATA_HPP
#define GZ_LIE_DATA_HPP

#include <array>
#include <optional>
#include <vector>

#include "gz/hermitian.hpp"
#include "gz/linalg.hpp"

namespace gz {

/// Finite root system in the plane, over Q(sqrt 3).
struct RootSystem {
    std::vector<FieldVector> roots;
    std::vector<FieldVector> simple_roots;

    bool contains(const FieldVector& v) const;
};

/// The g2 root system in the coordinates of the standard plane picture:
/// alpha1 = (-3/2, sqrt3/2), alpha2 = (1, 0), and closure.  Long roots have
/// squared length 3, short roots 1.
RootSystem g2_root_system();

/// Numbered positive roots alpha_1 .. alpha_6 of the g2 picture.
std::array<FieldVector, 6> g2_positive_roots();

/// The su(3) subsystem: exactly the six long g2 roots.
RootSystem su3_root_system();

/// Full-rank lattice in R^n with exact membership tests.
class Lattice {
public:
    explicit Lattice(std::vector<FieldVector> basis);

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<FieldVector>& basis() const { return basis_; }

    /// Coordinates of v in the lattice basis (exact; v must lie in the
    /// rational span, which for a full-rank lattice is all of the space).
    FieldVector coords(const FieldVector& v) const;

    /// Ambient vector with the given basis coordinates.
    FieldVector from_coords(const FieldVector& c) const;

    bool contains(const FieldVector& v) const;

    static Lattice standard(int n);

private:
    std::vector<FieldVector> basis_;
    FieldMatrix basis_matrix_;   // columns = basis
    FieldMatrix basis_inverse_;
};

/// Character lattice of the product torus T_SU(3) x T_U(2) x T_U(1) in the
/// coordinates (x1..x5): the su(3) weight lattice spanned by (1,0) and
/// (1/2, sqrt3/2), and Z^3 on the eigenvalue coordinates.
Lattice weight_lattice();

/// Character lattice of the torus that the system's flows actually
/// generate.  The middle subgroup of the chain sits inside SU(3) as
/// determinant-corrected block matrices, so the block-eigenvalue
/// coordinates (x3, x4, x5) couple to the su(3) level: closing all flow
/// periods twists the product lattice by the vector (e3 + e4 + e5)/3
/// attached to the su(3) weight generators.
Lattice gz_torus_lattice();

/// Value of the sweeping chain in t*_SU(3) x t*_U(2) x t*_U(1) ~ R^5.
struct GZPoint {
    std::array<double, 5> x{};
};

/// Chamber coordinates (x1, x2) from sorted traceless eigenvalues:
/// x1 = (3/2) mu2, x2 = (sqrt3/2)(mu3 - mu1).  Requires mu1 <= mu2 <= mu3
/// and |mu1 + mu2 + mu3| <= 1e-10 * max(1, |mu|).
std::pair<double, double> su3_coords_from_eigs(double mu1, double mu2, double mu3);

/// Exact variant of the coordinate map.
std::pair<FieldElement, FieldElement> su3_coords_from_eigs(const FieldElement& mu1,
                                                           const FieldElement& mu2,
                                                           const FieldElement& mu3);

/// Gelfand-Zeitlin value of a traceless Hermitian 3x3 matrix: the su(3)
/// chamber coordinates of its spectrum, the sorted eigenvalues of its
/// top-left 2x2 block, and its (1,1) entry.  Projections are taken from the
/// original matrix; sweeping (sorting) happens last.
GZPoint thimm_gz(const HermitianMatrix& xi);

/// Exact Gelfand-Zeitlin value for real symmetric matrices over Q(sqrt 3)
/// whose spectrum stays in the field: the matrix must be block-diagonal
/// (2x2 + 1x1), and the block discriminant must be a perfect square in the
/// field.  Returns nullopt otherwise.
std::optional<std::array<FieldElement, 5>> thimm_gz_exact(const FieldMatrix& xi);

/// The interlacing conditions mu1 <= x3 <= mu2 <= x4 <= mu3, x3 <= x5 <= x4
/// written in chamber coordinates, each comparison slackened by eps.
bool verify_interlacing(const GZPoint& p, double eps);

/// Exact interlacing test.
bool verify_interlacing(const std::array<FieldElement, 5>& p);

/// Vertices of the Kirwan triangle: (0, lambda), (+-lambda/(2 sqrt3), lambda/2).
std::array<FieldVector, 3> kirwan_triangle(const FieldElement& lambda);

}  // namespace gz

#endif
