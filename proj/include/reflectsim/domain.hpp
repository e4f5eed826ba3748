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

#ifndef REFLECTSIM_DOMAIN_HPP
#define REFLECTSIM_DOMAIN_HPP

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace reflectsim {

using Vector = Eigen::VectorXd;

/// A point of the state space: a flat real vector whose layout is decided
/// by the model (center/radius blocks for globules, position/bound blocks
/// for chains).
struct Configuration {
  Vector coords;

  Configuration() = default;
  explicit Configuration(Vector c) : coords(std::move(c)) {}

  Eigen::Index dim() const { return coords.size(); }
  bool finite() const { return coords.allFinite(); }
};

/// One scalar inequality g(x) >= 0 together with its gradient. The feasible
/// side is g >= 0 and the inward unit normal at a boundary point is
/// grad/|grad|.
class Constraint {
 public:
  using EvalFn = std::function<double(const Configuration&)>;
  using GradFn = std::function<Vector(const Configuration&)>;

  Constraint(std::string id, EvalFn eval, GradFn grad, double report_scale = 1.0)
      : id_(std::move(id)),
        eval_(std::move(eval)),
        grad_(std::move(grad)),
        report_scale_(report_scale) {}

  const std::string& id() const { return id_; }
  double value(const Configuration& x) const { return eval_(x); }
  Vector gradient(const Configuration& x) const { return grad_(x); }

  /// Inward unit normal at a boundary point. Throws if x is not on this
  /// constraint's boundary (|g| > activity_tol) or if the gradient vanishes.
  Vector normal(const Configuration& x, double activity_tol) const;

  /// Factor converting the generic per-constraint local time (coefficients
  /// of the unit-normal decomposition) into the model equation's ledger
  /// convention (1/2 for globule contacts, 1/sqrt(3) for chain bonds, ...).
  double report_scale() const { return report_scale_; }

 private:
  std::string id_;
  EvalFn eval_;
  GradFn grad_;
  double report_scale_;
};

/// Result of decomposing a unit vector on the active constraint normals:
/// nonnegative coefficients c_k with residual |sum_k c_k n_k - v|.
struct ConeDecomposition {
  std::map<std::string, double> coefficients;  // only active constraints
  double residual = 0.0;

  double coefficient(const std::string& id) const {
    auto it = coefficients.find(id);
    return it == coefficients.end() ? 0.0 : it->second;
  }
  double coefficient_sum() const {
    double s = 0.0;
    for (const auto& [_, c] : coefficients) s += c;
    return s;
  }
  bool in_cone(double tol = 1e-8) const { return residual <= tol; }
};

/// Intersection domain D = ∩_k {g_k >= 0}. Constraints are kept sorted by id
/// so that tie-breaking in the solvers is reproducible.
class Domain {
 public:
  Domain(std::vector<Constraint> constraints, double activity_tol);

  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Constraint& constraint(const std::string& id) const;
  std::size_t size() const { return constraints_.size(); }
  double activity_tol() const { return activity_tol_; }

 private:
  std::vector<Constraint> constraints_;
  double activity_tol_;
};

/// Indices (into domain.constraints()) of constraints active at x, i.e.
/// |g_k(x)| <= activity_tol. Throws if x violates any constraint by more
/// than 10x the tolerance: such a point signals an integrator failure.
std::vector<std::size_t> active_set(const Domain& domain, const Configuration& x);

/// Ids of the active constraints (same contract as active_set).
std::set<std::string> active_ids(const Domain& domain, const Configuration& x);

/// Minimum-norm nonnegative coefficients c minimizing |sum_k c_k n_k(x) - v|
/// over the constraints active at x. When beta0 is supplied the Remark-2
/// style bound sum c_k <= 1/beta0 is expected to hold for unit v in the cone;
/// callers may assert it from the returned decomposition. Throws when no
/// constraint is active or |v| != 1.
ConeDecomposition cone_decompose(const Domain& domain, const Configuration& x,
                                 const Vector& v,
                                 std::optional<double> beta0 = std::nullopt);

struct ProjectionResult {
  Configuration point;
  ConeDecomposition displacement_decomposition;  // of (point - x)/|point - x|
  double displacement_norm = 0.0;
  int iterations = 0;
};

/// Projects x onto D by solving min |y - x|^2 s.t. g_k(y) >= 0 with
/// sequentially relinearized projection subproblems (each one a small dual
/// nonnegative QP). The total displacement is decomposed on the active
/// normals at y. Throws on non-convergence after max_iter outer iterations.
ProjectionResult project(const Domain& domain, const Configuration& x,
                         int max_iter = 60);

struct MembershipResult {
  bool inside = false;
  double worst_violation = 0.0;  // max(0, -min_k g_k)
};

MembershipResult check_membership(const Domain& domain, const Configuration& x);

}  // namespace reflectsim

#endif  // REFLECTSIM_DOMAIN_HPP
