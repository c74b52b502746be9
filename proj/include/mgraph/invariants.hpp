#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mgraph/graph.hpp"

namespace mgraph {

using Rational = boost::multiprecision::cpp_rational;

// Nash-Williams arboricity, max over |S| >= 2 of ceil(|E(S)| / (|S| - 1)).
// Subset enumeration, order <= 20. 0 for edgeless graphs.
int arboricity(const SimpleGraph& g);

// Least k with an orientation of maximum out-degree k, by bipartite flow.
int pseudoarboricity(const SimpleGraph& g);

struct OrientationResult {
  std::optional<Digraph> orientation;  // every edge once, out-degrees <= k
  std::vector<Vertex> dense_set;       // when infeasible: |E(S)| > k |S|
};

OrientationResult orientation_with_outdegree(const SimpleGraph& g, int k);

// Exact maximum independent set size, order <= 40.
int independence_number(const SimpleGraph& g);

// beta(G, k): max over k maps choosing an incident edge at every vertex of
// the independence number of G minus the chosen edges. Throws BudgetError
// when more than `budget` selections would be scanned, and InputError for
// k >= 1 when G has an isolated vertex (no map exists).
inline constexpr std::uint64_t kBetaBudget = 10'000'000;
int beta(const SimpleGraph& g, int k, std::uint64_t budget = kBetaBudget);

inline constexpr double kSpectralTolerance = 1e-8;

struct SpectralProfile {
  int n = 0;
  std::optional<int> degree;        // set iff regular
  std::vector<double> eigenvalues;  // descending, with multiplicity
  // Largest |mu| over the spectrum with one copy of d and every eigenvalue
  // within tolerance of -d removed. Set iff regular.
  std::optional<double> lambda;
};

SpectralProfile spectrum(const SimpleGraph& g);

// Upper rational approximation of x at 1e-8 granularity.
Rational round_up(double x);

struct MixingResult {
  double deviation = 0;  // |e(S,T) - d|S||T|/n|
  double bound = 0;      // lambda sqrt(|S||T|(1 - |S|/n)(1 - |T|/n))
  bool holds = false;    // deviation <= bound up to tolerance
};

// Throws InputError if g is not regular.
MixingResult mixing_check(const SimpleGraph& g, const SpectralProfile& p,
                          std::span<const Vertex> s, std::span<const Vertex> t);

// (n/d)(lambda + 2k) with lambda rounded up. Throws InputError unless regular
// with d >= 1.
Rational beta_upper_bound(const SpectralProfile& p, int k);
Rational beta_upper_bound(int n, int d, const Rational& lambda, int k);

// (n/(Delta - 1))(delta/2 - k - 1). Throws InputError when Delta < 2.
Rational beta_lower_bound(int n, int delta, int max_degree, int k);

// Largest integer strictly below (d - lambda)^2 / d + 1, clamped to >= 0.
int connectivity_bound(const SpectralProfile& p);

struct Hypothesis {
  std::string name;
  bool holds = false;
};

struct NonmonoidCertificate {
  bool conclusive = false;  // all hypotheses hold and lower > upper
  Rational lower;
  Rational upper;
  std::vector<Hypothesis> hypotheses;
};

// Confronts the two beta bounds for g joined to K_ell by k edges.
NonmonoidCertificate nonmonoid_certificate(const SimpleGraph& g, int k, int ell);

// Same confrontation for a hypothetical triangle-free d-regular graph on n
// vertices with the given lambda.
NonmonoidCertificate nonmonoid_certificate(int n, int d, const Rational& lambda, int k,
                                           int ell);

}  // namespace mgraph
