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

#ifndef REFLECTSIM_NNLS_HPP
#define REFLECTSIM_NNLS_HPP

#include <Eigen/Dense>

namespace reflectsim {

/// Minimizes 1/2 x'Qx + q'x over x >= 0 for a small dense PSD Q, by a
/// Lawson-Hanson style active set on the bounds. Pivoting is deterministic:
/// most negative reduced gradient enters, lowest index on ties. Singular
/// subproblems are solved in the minimum-norm sense.
Eigen::VectorXd nonneg_quadratic_min(const Eigen::MatrixXd& Q,
                                     const Eigen::VectorXd& q,
                                     int max_iter = 0);

/// min |A c - b| over c >= 0. `ridge` > 0 adds a Tikhonov term that picks
/// the minimum-norm solution when columns of A are linearly dependent while
/// perturbing the fit by O(ridge^2).
Eigen::VectorXd nonneg_least_squares(const Eigen::MatrixXd& A,
                                     const Eigen::VectorXd& b,
                                     double ridge = 0.0);

/// Projection onto the polyhedron {y : A y >= b}: argmin |y - x|.
/// Solved through the dual nonnegative QP; returns y and, if `multipliers`
/// is non-null, the KKT multipliers (y = x + A' lambda).
Eigen::VectorXd project_polyhedron(const Eigen::MatrixXd& A,
                                   const Eigen::VectorXd& b,
                                   const Eigen::VectorXd& x,
                                   Eigen::VectorXd* multipliers = nullptr);

}  // namespace reflectsim

#endif  // REFLECTSIM_NNLS_HPP
