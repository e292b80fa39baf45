#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "tripent/hypergraph.hpp"

namespace tripent {

// Exact positive rational, e.g. parsed from "0.05" or "1/20".
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational parse(std::string_view text);
  long double value() const { return static_cast<long double>(num) / den; }
};

// Exponent ⌈1 + 1/ε⌉ of the dummy path length.
std::uint64_t amplification_exponent(Rational eps);

// n^⌈1+1/ε⌉, or 0 when that overflows 64 bits.
std::uint64_t dummy_path_length(std::uint64_t n, Rational eps);

// Inequality check on the amplified instance: UB⁺ = n'^{1−ε}·(n−1) with
// n' = n + D − 1 against LB⁻ = D, evaluated in log space.
struct AmplificationBounds {
  std::uint64_t exponent = 0;
  long double log_dummy_length = 0;  // ln D
  long double log_upper = 0;         // ln UB⁺
  long double log_lower = 0;         // ln LB⁻
  bool separated() const { return log_upper < log_lower; }
};

AmplificationBounds amplification_bounds(std::uint64_t n, Rational eps);

inline constexpr std::uint64_t kDefaultArcBudget = 1u << 18;

struct AmplifiedInstance {
  Hypergraph graph;
  std::uint64_t dummy_length = 0;     // D
  std::uint64_t non_sink_nodes = 0;   // n + D − 1
  std::uint64_t total_nodes = 0;      // including the fresh sinks
};

// Adds a fresh acyclic u→v path of exactly D = n^⌈1+1/ε⌉ arcs, with
// n = |nodes(H)|: w_k → {w_{k+1}, s_k} where w_0 = u and w_D = v.
// Requires 0 < ε < 1/4. Throws Error{BudgetExceeded} when D exceeds the arc
// budget, Error{UnknownNode} for u or v outside H.
AmplifiedInstance amplify(const Hypergraph& h, const HNode& u, const HNode& v, Rational eps,
                          std::uint64_t arc_budget = kDefaultArcBudget);

}  // namespace tripent
