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

#include "spantree/spectra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace spantree {

MatrixKind MatrixKind::a_alpha(double a) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw Error("A_a needs a finite a >= 0");
  return MatrixKind(Tag::kAAlpha, a);
}

MatrixKind MatrixKind::parse(const std::string& text) {
  if (text == "adj") return adjacency();
  if (text == "q") return signless_laplacian();
  if (text.rfind("aalpha:", 0) == 0) {
    const std::string num = text.substr(7);
    std::size_t used = 0;
    double a = 0.0;
    try {
      a = std::stod(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (num.empty() || used != num.size()) throw Error("bad matrix kind '" + text + "'");
    return a_alpha(a);
  }
  throw Error("unknown matrix kind '" + text + "' (expected adj, q or aalpha:<a>)");
}

std::string MatrixKind::name() const {
  switch (tag_) {
    case Tag::kAdjacency:
      return "adj";
    case Tag::kSignlessLaplacian:
      return "q";
    case Tag::kAAlpha:
      break;
  }
  std::ostringstream os;
  os.precision(17);
  os << "aalpha:" << a_;
  return os.str();
}

namespace {

struct ComponentResult {
  double radius = 0.0;
  double residual = 0.0;
  int iterations = 0;
  std::vector<double> vec;  // indexed by position in `members`
};

// Shifted power iteration on aD + A restricted to one component.
ComponentResult power_iterate(const Graph& g, const std::vector<int>& members, double a, double tol) {
  const int m = static_cast<int>(members.size());
  ComponentResult out;
  if (m == 1) {
    out.vec = {1.0};
    return out;
  }
  std::array<int, kMaxOrder> pos{};
  for (int i = 0; i < m; ++i) pos[members[i]] = i;
  std::vector<std::vector<int>> nbr(m);
  std::vector<double> diag(m);
  int maxdeg = 0;
  for (int i = 0; i < m; ++i) {
    for_each_bit(g.row(members[i]), [&](int w) { nbr[i].push_back(pos[w]); });
    diag[i] = a * static_cast<double>(nbr[i].size());
    maxdeg = std::max(maxdeg, static_cast<int>(nbr[i].size()));
  }
  const double shift = 1.0 + a * maxdeg;
  const int cap = 200 * g.order() + 10000;

  std::vector<double> x(m, 1.0 / std::sqrt(static_cast<double>(m)));
  std::vector<double> mx(m);
  for (int it = 0; it <= cap; ++it) {
    for (int i = 0; i < m; ++i) {
      double s = diag[i] * x[i];
      for (int j : nbr[i]) s += x[j];
      mx[i] = s;
    }
    double mu = 0.0;
    for (int i = 0; i < m; ++i) mu += x[i] * mx[i];
    double r2 = 0.0;
    double rinf = 0.0;
    for (int i = 0; i < m; ++i) {
      const double r = mx[i] - mu * x[i];
      r2 += r * r;
      rinf = std::max(rinf, std::abs(r));
    }
    // For symmetric M and unit x some eigenvalue lies within ||Mx - mu x||_2
    // of mu; the infinity norm reported is no larger.
    if (std::sqrt(r2) <= tol) {
      out.radius = mu;
      out.residual = rinf;
      out.iterations = it;
      out.vec = std::move(x);
      return out;
    }
    double norm = 0.0;
    for (int i = 0; i < m; ++i) {
      mx[i] += shift * x[i];
      norm += mx[i] * mx[i];
    }
    norm = std::sqrt(norm);
    for (int i = 0; i < m; ++i) x[i] = mx[i] / norm;
  }
  throw Error("power iteration did not reach tolerance within " + std::to_string(cap) +
              " iterations");
}

}  // namespace

SpectralReport spectral_radius(const Graph& g, MatrixKind kind, double tol) {
  if (!(tol > 0.0)) throw Error("spectral tolerance must be positive");
  SpectralReport rep;
  rep.kind = kind;
  rep.perron.assign(g.order(), 0.0);
  bool first = true;
  for (Mask comp : g.components()) {
    std::vector<int> members;
    for_each_bit(comp, [&](int v) { members.push_back(v); });
    ComponentResult c = power_iterate(g, members, kind.alpha(), tol);
    rep.iterations += c.iterations;
    if (first || c.radius > rep.radius) {
      first = false;
      rep.radius = c.radius;
      rep.residual = c.residual;
      std::fill(rep.perron.begin(), rep.perron.end(), 0.0);
      for (std::size_t i = 0; i < members.size(); ++i) rep.perron[members[i]] = c.vec[i];
    }
  }
  return rep;
}

double quotient_radius(ExtremalFamily family, int n, int k, MatrixKind kind) {
  int clique = 0;
  int pendants = 0;
  if (family == ExtremalFamily::kKEnded) {
    if (k < 0 || n < k + 2) throw Error("k-ended quotient needs k >= 0 and n >= k + 2");
    clique = n - k - 1;
    pendants = k;
  } else {
    if (k < 0 || n < k + 3) throw Error("leaf-degree quotient needs k >= 0 and n >= k + 3");
    clique = n - k - 2;
    pendants = k + 1;
  }
  const double a = kind.alpha();
  // Rows and columns ordered (hub, clique, pendant).
  const double b[3][3] = {
      {a * (n - 1), static_cast<double>(clique), static_cast<double>(pendants)},
      {1.0, a * clique + (clique - 1), 0.0},
      {1.0, 0.0, a},
  };
  const double tr = b[0][0] + b[1][1] + b[2][2];
  const double m2 = (b[0][0] * b[1][1] - b[0][1] * b[1][0]) +
                    (b[0][0] * b[2][2] - b[0][2] * b[2][0]) +
                    (b[1][1] * b[2][2] - b[1][2] * b[2][1]);
  const double det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                     b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                     b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  auto charpoly = [&](double x) { return ((x - tr) * x + m2) * x - det; };

  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& row : b) {
    const double s = row[0] + row[1] + row[2];
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  // Beyond the largest critical point the cubic is increasing, so the
  // bracket [lo, hi] then holds exactly one root: the largest.
  const double disc = tr * tr - 3.0 * m2;
  if (disc >= 0.0) lo = std::max(lo, (tr + std::sqrt(disc)) / 3.0);
  if (charpoly(hi) <= 0.0) return hi;
  if (lo > hi) lo = hi;
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (charpoly(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool perron_monotonicity_check(const Graph& g, const Graph& h, MatrixKind kind, double slack) {
  if (!g.is_subgraph_of(h)) throw Error("first graph is not a spanning subgraph of the second");
  const double rg = spectral_radius(g, kind).radius;
  const double rh = spectral_radius(h, kind).radius;
  bool ok = rg <= rh + slack;
  if (h.is_connected() && !(g == h)) ok = ok && rg < rh - slack;
  return ok;
}

}  // namespace spantree
