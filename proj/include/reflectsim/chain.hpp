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

#ifndef REFLECTSIM_CHAIN_HPP
#define REFLECTSIM_CHAIN_HPP

#include <string>

#include "reflectsim/domain.hpp"
#include "reflectsim/globules.hpp"

namespace reflectsim::chain {

using globules::GeometryConstants;

/// Linear molecule: n particles in R^d whose consecutive bond lengths are
/// confined between two diffusing bounds bmin <= bmax, themselves confined
/// to [r_minus, r_plus]. Layout (x_1, ..., x_n, bmin, bmax), dim = d n + 2.
struct ChainParams {
  int n = 2;
  int d = 2;
  double r_minus = 1.0;
  double r_plus = 2.0;

  int dim() const { return d * n + 2; }
  void validate() const;
};

class ChainConfig {
 public:
  ChainConfig(const ChainParams& params, const Configuration& x);

  Eigen::Index position_offset(int i) const { return i * params_.d; }
  Eigen::Index bmin_offset() const { return params_.d * params_.n; }
  Eigen::Index bmax_offset() const { return params_.d * params_.n + 1; }
  Eigen::VectorXd position(int i) const;
  double bond_min() const;
  double bond_max() const;
  double bond_length(int i) const;  // |x_i - x_{i+1}|, 0-based bond i

 private:
  ChainParams params_;
  const Configuration* x_;
};

Configuration make_configuration(const ChainParams& params,
                                 const std::vector<Eigen::VectorXd>& positions,
                                 double bond_min, double bond_max);

std::string bond_min_id(int i);  // |x_i - x_{i+1}| >= bmin
std::string bond_max_id(int i);  // |x_i - x_{i+1}| <= bmax
inline std::string len_min_id() { return "len_min"; }    // bmin >= r_minus
inline std::string len_max_id() { return "len_max"; }    // bmax <= r_plus
inline std::string len_order_id() { return "len_order"; }  // bmin <= bmax

/// The 2n+1 constraints of the chain domain.
Domain build_domain(const ChainParams& params);

/// Bond normals at a boundary point: position blocks +-(x_i-x_{i+1})/(b sqrt 3)
/// and a -+1/sqrt(3) entry in the corresponding bound slot.
Vector normal_bond_min(const ChainParams& params, int i, const Configuration& x,
                       double activity_tol);
Vector normal_bond_max(const ChainParams& params, int i, const Configuration& x,
                       double activity_tol);

/// Constant half-space normals for the three bound constraints.
Vector normal_len_min(const ChainParams& params);
Vector normal_len_max(const ChainParams& params);
Vector normal_len_order(const ChainParams& params);

/// Unit compatibility vector built outward from the middle of the chain;
/// each bond contributes +-(x_i - x_{i+1}) according to whether it is shorter
/// or longer than the mid-length (bmin+bmax)/2, and the bound slots follow
/// the three-way case rule on bmin vs bmax vs r_plus.
Vector compatibility_vector(const ChainParams& params, const Configuration& x,
                            double activity_tol);
Vector compatibility_vector_raw(const ChainParams& params, const Configuration& x,
                                double activity_tol);

GeometryConstants constants(const ChainParams& params);

double default_activity_tol(const ChainParams& params);

/// Degenerate sub-model with the particle positions frozen (removed from the
/// state): the (bmin, bmax) pair reflecting in the triangle
/// {r_minus <= bmin <= bmax <= r_plus}. Used for stationary-law validation.
Domain build_bounds_triangle_domain(const ChainParams& params);

}  // namespace reflectsim::chain

#endif  // REFLECTSIM_CHAIN_HPP
