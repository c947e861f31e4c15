#include "ufsi/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ufsi {

namespace {

// 1D quadratic Lagrange shape functions on [-1,1] with nodes -1, 0, +1.
inline void lagrange2(double t, double n[3], double d[3]) {
  n[0] = 0.5 * t * (t - 1.0);
  n[1] = 1.0 - t * t;
  n[2] = 0.5 * t * (t + 1.0);
  d[0] = t - 0.5;
  d[1] = -2.0 * t;
  d[2] = t + 0.5;
}

// Tensor index pairs (i,j) of the local Q2 nodes in our layout, where i,j are
// the 1D node indices along xi and eta.
constexpr int kQ2I[9] = {0, 2, 2, 0, 1, 2, 1, 0, 1};
constexpr int kQ2J[9] = {0, 0, 2, 2, 0, 1, 2, 1, 1};

constexpr double kQ1X[4] = {-1.0, 1.0, 1.0, -1.0};
constexpr double kQ1Y[4] = {-1.0, -1.0, 1.0, 1.0};

}  // namespace

Vec2 reference_node(Family f, int local) {
  switch (f) {
    case Family::Q2: {
      static const double coord[3] = {-1.0, 0.0, 1.0};
      return {coord[kQ2I[local]], coord[kQ2J[local]]};
    }
    case Family::Q1:
      return {kQ1X[local], kQ1Y[local]};
    case Family::P1: {
      static const Vec2 nodes[3] = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
      return nodes[local];
    }
  }
  throw std::logic_error("reference_node: bad family");
}

bool inside_reference(Family f, double xi, double eta, double tol) {
  if (f == Family::P1)
    return xi >= -tol && eta >= -tol && xi + eta <= 1.0 + tol;
  return std::abs(xi) <= 1.0 + tol && std::abs(eta) <= 1.0 + tol;
}

BasisEval eval_basis_unchecked(Family f, double xi, double eta) {
  BasisEval be;
  switch (f) {
    case Family::Q2: {
      be.n = 9;
      double nx[3], dx[3], ny[3], dy[3];
      lagrange2(xi, nx, dx);
      lagrange2(eta, ny, dy);
      for (int k = 0; k < 9; ++k) {
        be.value[k] = nx[kQ2I[k]] * ny[kQ2J[k]];
        be.dxi[k] = dx[kQ2I[k]] * ny[kQ2J[k]];
        be.deta[k] = nx[kQ2I[k]] * dy[kQ2J[k]];
      }
      break;
    }
    case Family::Q1: {
      be.n = 4;
      for (int k = 0; k < 4; ++k) {
        be.value[k] = 0.25 * (1.0 + kQ1X[k] * xi) * (1.0 + kQ1Y[k] * eta);
        be.dxi[k] = 0.25 * kQ1X[k] * (1.0 + kQ1Y[k] * eta);
        be.deta[k] = 0.25 * kQ1Y[k] * (1.0 + kQ1X[k] * xi);
      }
      break;
    }
    case Family::P1: {
      be.n = 3;
      be.value = {1.0 - xi - eta, xi, eta, 0, 0, 0, 0, 0, 0};
      be.dxi = {-1.0, 1.0, 0.0, 0, 0, 0, 0, 0, 0};
      be.deta = {-1.0, 0.0, 1.0, 0, 0, 0, 0, 0, 0};
      break;
    }
  }
  return be;
}

BasisEval eval_basis(Family f, double xi, double eta) {
  if (!inside_reference(f, xi, eta))
    throw std::invalid_argument("eval_basis: reference point outside element");
  return eval_basis_unchecked(f, xi, eta);
}

QuadratureRule gauss_rule(Family f, int order) {
  QuadratureRule rule;
  if (f == Family::P1) {
    if (order == 1) {
      rule.points = {{1.0 / 3.0, 1.0 / 3.0}};
      rule.weights = {0.5};
    } else if (order == 3) {
      rule.points = {{1.0 / 6.0, 1.0 / 6.0}, {2.0 / 3.0, 1.0 / 6.0}, {1.0 / 6.0, 2.0 / 3.0}};
      rule.weights = {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0};
    } else {
      throw std::invalid_argument("gauss_rule: triangle rules support 1 or 3 points");
    }
    return rule;
  }
  std::vector<double> pts, wts;
  if (order == 2) {
    const double a = 1.0 / std::sqrt(3.0);
    pts = {-a, a};
    wts = {1.0, 1.0};
  } else if (order == 3) {
    const double a = std::sqrt(3.0 / 5.0);
    pts = {-a, 0.0, a};
    wts = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  } else {
    throw std::invalid_argument("gauss_rule: quad rules support tensor order 2 or 3");
  }
  for (size_t j = 0; j < pts.size(); ++j)
    for (size_t i = 0; i < pts.size(); ++i) {
      rule.points.push_back({pts[i], pts[j]});
      rule.weights.push_back(wts[i] * wts[j]);
    }
  return rule;
}

double CellGeometry::diameter() const {
  double d = 0.0;
  const int n = n_corners();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d = std::max(d, (corners[i] - corners[j]).norm());
  return d;
}

MappedPoint map_to_physical(const CellGeometry& cell, const Vec2& ref) {
  const Family geom = cell.shape == Family::P1 ? Family::P1 : Family::Q1;
  const BasisEval be = eval_basis_unchecked(geom, ref.x(), ref.y());
  MappedPoint mp;
  mp.x.setZero();
  mp.jacobian.setZero();
  for (int k = 0; k < be.n; ++k) {
    mp.x += be.value[k] * cell.corners[k];
    mp.jacobian.col(0) += be.dxi[k] * cell.corners[k];
    mp.jacobian.col(1) += be.deta[k] * cell.corners[k];
  }
  mp.det = mp.jacobian.determinant();
  if (!(mp.det > 0.0))
    throw std::runtime_error("map_to_physical: non-positive Jacobian (inverted cell)");
  return mp;
}

std::optional<Vec2> inverse_map(const CellGeometry& cell, const Vec2& x) {
  const bool tri = cell.shape == Family::P1;
  Vec2 ref = tri ? Vec2(1.0 / 3.0, 1.0 / 3.0) : Vec2(0.0, 0.0);
  const double tol = 1e-12 * std::max(cell.diameter(), 1e-300);
  for (int it = 0; it < 25; ++it) {
    MappedPoint mp;
    try {
      mp = map_to_physical(cell, ref);
    } catch (const std::runtime_error&) {
      return std::nullopt;
    }
    const Vec2 r = mp.x - x;
    if (r.norm() < tol) {
      if (!inside_reference(cell.shape == Family::P1 ? Family::P1 : Family::Q1, ref.x(),
                            ref.y(), 1e-10))
        return std::nullopt;
      return ref;
    }
    Vec2 step = mp.jacobian.partialPivLu().solve(r);
    // Damp steps that would shoot far outside the element; Newton on a
    // bilinear map can overshoot for strongly sheared cells.
    const double max_step = 2.0;
    if (step.norm() > max_step) step *= max_step / step.norm();
    ref -= step;
  }
  return std::nullopt;
}

Eigen::Matrix<double, 2, Eigen::Dynamic> physical_gradients(const BasisEval& be,
                                                            const Mat2& jacobian) {
  Eigen::Matrix<double, 2, Eigen::Dynamic> grads(2, be.n);
  const Mat2 jinv_t = jacobian.inverse().transpose();
  for (int k = 0; k < be.n; ++k)
    grads.col(k) = jinv_t * Vec2(be.dxi[k], be.deta[k]);
  return grads;
}

}  // namespace ufsi
