#pragma once

#include <array>
#include <optional>

#include <Eigen/Dense>

namespace ufsi {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Finite element families used by the solver: biquadratic and bilinear
/// quadrilaterals for the velocity/pressure pair, linear triangles for the
/// solid.
enum class Family { Q2, Q1, P1 };

constexpr int basis_size(Family f) {
  switch (f) {
    case Family::Q2: return 9;
    case Family::Q1: return 4;
    case Family::P1: return 3;
  }
  return 0;
}

/// Values and reference-coordinate gradients of every basis function of one
/// family at a single reference point.
struct BasisEval {
  int n = 0;
  std::array<double, 9> value{};
  std::array<double, 9> dxi{};
  std::array<double, 9> deta{};
};

/// Local node layout.
///
/// Quads use the reference square [-1,1]^2 with corners 0..3 counter
/// clockwise from (-1,-1), edge midpoints 4..7 (bottom, right, top, left)
/// and, for Q2, the cell center as node 8. Triangles use the reference
/// triangle (0,0),(1,0),(0,1).
Vec2 reference_node(Family f, int local);

/// True if (xi,eta) lies inside the reference element within `tol`.
bool inside_reference(Family f, double xi, double eta, double tol = 1e-10);

/// Evaluate all basis functions at a reference point. Throws if the point is
/// outside the reference element by more than 1e-10.
BasisEval eval_basis(Family f, double xi, double eta);

/// Same but without the inside check (used by extrapolating evaluations and
/// by the inverse map while it iterates).
BasisEval eval_basis_unchecked(Family f, double xi, double eta);

/// One quadrature rule: points in reference coordinates with weights that
/// sum to the reference element measure.
struct QuadratureRule {
  std::vector<Vec2> points;
  std::vector<double> weights;
  int size() const { return static_cast<int>(points.size()); }
};

/// Gauss rules. Quads support tensor orders 2 (2x2) and 3 (3x3); triangles
/// support 1-point and 3-point rules. Throws on anything else.
QuadratureRule gauss_rule(Family f, int order);

/// Geometry of one cell: the corner vertices only (bilinear/affine geometry;
/// Q2 fields are subparametric on it). Quads store 4 corners, triangles 3.
struct CellGeometry {
  Family shape = Family::Q1;  // Q1 (quad geometry) or P1 (triangle)
  std::array<Vec2, 4> corners{};
  int n_corners() const { return shape == Family::P1 ? 3 : 4; }
  double diameter() const;
};

struct MappedPoint {
  Vec2 x;        // physical coordinates
  Mat2 jacobian; // dx/d(xi,eta)
  double det = 0.0;
};

/// Isoparametric map from reference to physical coordinates. Throws when the
/// Jacobian determinant is not positive (inverted cell).
MappedPoint map_to_physical(const CellGeometry& cell, const Vec2& ref);

/// Inverse isoparametric map by damped Newton iteration from the element
/// center. Returns nullopt when the iteration leaves the element or fails to
/// reach |x(ref) - x| < 1e-12 * diameter within 25 iterations.
std::optional<Vec2> inverse_map(const CellGeometry& cell, const Vec2& x);

/// Physical gradients: columns are grad(phi_k) = J^{-T} grad_ref(phi_k).
Eigen::Matrix<double, 2, Eigen::Dynamic> physical_gradients(const BasisEval& be,
                                                            const Mat2& jacobian);

}  // namespace ufsi
