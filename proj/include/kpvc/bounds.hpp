#pragma once

#include <map>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "kpvc/graph.hpp"

namespace kpvc {

using Rational = boost::rational<long long>;

// Comparison slack for real-valued bounds against integer cover sizes.
inline constexpr double bound_tolerance = 1e-9;

// n - sum 1/(1 + d(v)); upper bound on the vertex cover number.
inline double bound_caro_wei_vc(const Graph& g) {
  double sum = 0.0;
  for (Vertex v = 0; v < g.order(); ++v) sum += 1.0 / (1.0 + static_cast<double>(g.degree(v)));
  return static_cast<double>(g.order()) - sum;
}

// Goering et al. dissociation bound on psi_3:
// n - sum_v 1/(1 + d(v)) - sum_{uv in E} 2 / (|N(u) u N(v)| (|N(u) u N(v)| - 1)).
inline double bound_goering(const Graph& g) {
  double value = bound_caro_wei_vc(g);
  std::vector<Vertex> joint;
  for (const Edge& e : g.edges()) {
    const auto nu = g.neighbors(e.u);
    const auto nv = g.neighbors(e.v);
    joint.clear();
    std::set_union(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(joint));
    const auto r = static_cast<double>(joint.size());
    value -= 2.0 / (r * (r - 1.0));
  }
  return value;
}

// n - ((k-1)/k) * sum 2/(1 + d(v)). Reported raw; it can drop below psi_k
// (even below 0) on graphs with isolated vertices.
inline double bound_generalized_cw(const Graph& g, std::size_t k) {
  if (k < 2) throw PreconditionError("generalized Caro-Wei bound needs k >= 2");
  double sum = 0.0;
  for (Vertex v = 0; v < g.order(); ++v) sum += 2.0 / (1.0 + static_cast<double>(g.degree(v)));
  const auto kk = static_cast<double>(k);
  return static_cast<double>(g.order()) - (kk - 1.0) / kk * sum;
}

// Exact (2n + m) / 6.
inline Rational bound_sparse3(const Graph& g) {
  return Rational(static_cast<long long>(2 * g.order() + g.size()), 6);
}

// Expected size of the 1-degenerate set built from a uniformly random order:
// sum 2/(1 + d(v)) as written, which overshoots 1 for isolated vertices.
inline double caro_wei_expected_forest(const Graph& g) {
  double sum = 0.0;
  for (Vertex v = 0; v < g.order(); ++v) sum += 2.0 / (1.0 + static_cast<double>(g.degree(v)));
  return sum;
}

struct BoundReport {
  std::size_t k = 0;
  std::map<std::string, double> bounds;
  std::optional<Rational> sparse3;  // exact form of bounds["sparse3"]
  std::optional<std::size_t> psi_known;

  // Names of bounds that fall below psi_known by more than the tolerance.
  std::vector<std::string> violated() const {
    std::vector<std::string> out;
    if (!psi_known) return out;
    for (const auto& [name, value] : bounds) {
      if (value + bound_tolerance < static_cast<double>(*psi_known)) out.push_back(name);
    }
    return out;
  }
};

// Bounds applicable to psi_k: caro_wei_vc for k = 2, goering and sparse3 for
// k = 3, generalized_cw for every k >= 2.
inline BoundReport make_bound_report(const Graph& g, std::size_t k,
                                     std::optional<std::size_t> psi_known = std::nullopt) {
  BoundReport r;
  r.k = k;
  r.psi_known = psi_known;
  if (k == 2) r.bounds["caro_wei_vc"] = bound_caro_wei_vc(g);
  if (k == 3) {
    r.bounds["goering"] = bound_goering(g);
    r.sparse3 = bound_sparse3(g);
    r.bounds["sparse3"] = boost::rational_cast<double>(*r.sparse3);
  }
  if (k >= 2) r.bounds["generalized_cw"] = bound_generalized_cw(g, k);
  return r;
}

}  // namespace kpvc
