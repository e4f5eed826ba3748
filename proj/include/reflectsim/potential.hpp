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

#ifndef REFLECTSIM_POTENTIAL_HPP
#define REFLECTSIM_POTENTIAL_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>

namespace reflectsim {

/// Even C^2 pair interaction with bounded derivatives. The declared bounds
/// are used by samplers (rejection envelope) and by the Lipschitz spot
/// checks; they are promises, not computed quantities.
struct PairPotential {
  std::string name = "zero";
  std::function<double(const Eigen::VectorXd&)> phi;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad_phi;
  double value_min = 0.0;   // inf phi
  double grad_bound = 0.0;  // sup |grad phi|

  bool is_zero() const { return name == "zero"; }
};

PairPotential zero_potential(int d);

/// phi(z) = amplitude * exp(-|z|^2 / (2 width^2)); even, C^infty, all
/// derivatives bounded.
PairPotential gaussian_potential(int d, double amplitude, double width);

}  // namespace reflectsim

#endif  // REFLECTSIM_POTENTIAL_HPP
