// Copyright 2026 The reflectsim authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REFLECTSIM_GLOBULES_HPP
#define REFLECTSIM_GLOBULES_HPP

#include <string>

#include "reflectsim/domain.hpp"
#include "reflectsim/potential.hpp"

namespace reflectsim::globules {

/// Hard spheres with fluctuating radii: n spheres in R^d, radii confined to
/// [r_minus, r_plus], pairwise non-overlapping. State layout is
/// (x_1, r_1, ..., x_n, r_n) with x_i in R^d, so dim = (d+1) n.
struct GlobuleParams {
  int n = 2;
  int d = 2;
  double r_minus = 1.0;
  double r_plus = 2.0;

  int dim() const { return (d + 1) * n; }
  void validate() const;  // throws std::invalid_argument
};

/// View over a flat configuration in the globule layout.
class GlobuleConfig {
 public:
  GlobuleConfig(const GlobuleParams& params, const Configuration& x);

  const GlobuleParams& params() const { return params_; }
  Eigen::Index center_offset(int i) const { return i * (params_.d + 1); }
  Eigen::Index radius_offset(int i) const { return i * (params_.d + 1) + params_.d; }
  Eigen::VectorXd center(int i) const;
  double radius(int i) const;

 private:
  GlobuleParams params_;
  const Configuration* x_;
};

Configuration make_configuration(const GlobuleParams& params,
                                 const std::vector<Eigen::VectorXd>& centers,
                                 const std::vector<double>& radii);

/// Geometric constants certified for this domain:
///   alpha  - uniform exterior sphere radius,
///   beta, delta - uniform normal cone pair (delta_alt is the variant that
///                 drops out of the cluster construction; it differs from
///                 delta by sqrt(2) and the verifier reports both),
///   beta0  - compatibility lower bound min_k l0 . n_k.
struct GeometryConstants {
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 0.0;
  double delta_alt = 0.0;
  double beta0 = 0.0;
};

std::string contact_id(int i, int j);
std::string radius_max_id(int i);
std::string radius_min_id(int i);

/// The full constraint set: n(n-1)/2 contacts |x_i-x_j| >= r_i+r_j,
/// n upper radius walls r_i <= r_plus, n lower walls r_i >= r_minus.
Domain build_domain(const GlobuleParams& params);

/// Closed-form inward unit normal of the contact constraint at a boundary
/// point: center blocks +-(x_i-x_j)/(2(r_i+r_j)), radius entries -1/2.
/// Throws if the pair is not in contact within the activity tolerance.
Vector normal_contact(const GlobuleParams& params, int i, int j,
                      const Configuration& x, double activity_tol);

/// Constant normals of the radius walls: a single -1 (upper) or +1 (lower)
/// entry in the radius slot.
Vector normal_radius_plus(const GlobuleParams& params, int i);
Vector normal_radius_minus(const GlobuleParams& params, int i);

/// Unit compatibility vector l0 at a boundary configuration, built from
/// clusters of touching globules (union-find over active contacts): each
/// center is pulled away from its cluster centroid and each radius toward
/// the midrange. Satisfies l0 . n >= beta0 for every active normal.
/// Throws for interior points.
Vector compatibility_vector(const GlobuleParams& params, const Configuration& x,
                            double activity_tol);

/// Unnormalized v of the same construction (exposed for the proof-level
/// bounds v.n >= r_minus/2 and |v| < 2 n^{3/2} r_plus).
Vector compatibility_vector_raw(const GlobuleParams& params,
                                const Configuration& x, double activity_tol);

GeometryConstants constants(const GlobuleParams& params);

/// Pairwise gradient drift on the centers, b_i = -1/2 sum_j grad_phi(x_i-x_j),
/// zero drift on the radii.
Vector gradient_drift(const GlobuleParams& params, const PairPotential& phi,
                      const Configuration& x);

double default_activity_tol(const GlobuleParams& params);

}  // namespace reflectsim::globules

#endif  // REFLECTSIM_GLOBULES_HPP
