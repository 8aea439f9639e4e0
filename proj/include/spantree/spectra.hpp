// Copyright 2026 The spantree Authors
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

#pragma once

#include <string>
#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

inline constexpr double kDefaultSpectralTol = 1e-10;
/// Slack used whenever a computed radius is compared against a threshold.
inline constexpr double kComparisonSlack = 1e-8;

/// Which nonnegative matrix aD + A is meant. Adjacency is a = 0 and the
/// signless Laplacian is a = 1.
class MatrixKind {
 public:
  enum class Tag { kAdjacency, kSignlessLaplacian, kAAlpha };

  static MatrixKind adjacency() { return MatrixKind(Tag::kAdjacency, 0.0); }
  static MatrixKind signless_laplacian() { return MatrixKind(Tag::kSignlessLaplacian, 1.0); }
  static MatrixKind a_alpha(double a);
  /// "adj", "q" or "aalpha:<a>".
  static MatrixKind parse(const std::string& text);

  Tag tag() const { return tag_; }
  double alpha() const { return a_; }
  std::string name() const;

 private:
  MatrixKind(Tag t, double a) : tag_(t), a_(a) {}
  Tag tag_;
  double a_;
};

struct SpectralReport {
  MatrixKind kind = MatrixKind::adjacency();
  double radius = 0.0;
  /// Infinity norm of M x - radius x for the returned unit vector.
  double residual = 0.0;
  int iterations = 0;
  std::vector<double> perron;
};

/// Perron root of aD + A by shifted power iteration, run per connected
/// component. Throws Error if a component fails to reach `tol` within
/// 200 n + 10000 iterations.
SpectralReport spectral_radius(const Graph& g, MatrixKind kind,
                               double tol = kDefaultSpectralTol);

inline double rho(const Graph& g) { return spectral_radius(g, MatrixKind::adjacency()).radius; }
inline double signless_radius(const Graph& g) {
  return spectral_radius(g, MatrixKind::signless_laplacian()).radius;
}

enum class ExtremalFamily { kKEnded, kLeafDegree };

/// Largest eigenvalue of the 3x3 quotient matrix of the partition
/// {hub} | clique | pendants of the given extremal family, by bisection on
/// its characteristic polynomial. k = 0 is accepted for the k-ended family
/// (the partition degenerates to K_n).
double quotient_radius(ExtremalFamily family, int n, int k, MatrixKind kind);

/// Lemma-style monotonicity check for g a spanning subgraph of h.
bool perron_monotonicity_check(const Graph& g, const Graph& h, MatrixKind kind,
                               double slack = kComparisonSlack);

}  // namespace spantree
