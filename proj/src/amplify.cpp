#include "tripent/amplify.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "tripent/error.hpp"

namespace tripent {

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::ParseError, "bad rational '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    r.num = parse_u64(text.substr(0, slash), text);
    r.den = parse_u64(text.substr(slash + 1), text);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 18) throw Error(ErrorKind::ParseError, "too many decimals in '" + std::string(text) + "'");
    const auto whole = dot == 0 ? 0 : parse_u64(text.substr(0, dot), text);
    r.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
    r.num = whole * r.den + (frac.empty() ? 0 : parse_u64(frac, text));
  } else {
    r.num = parse_u64(text, text);
  }
  if (r.den == 0 || r.num == 0) {
    throw Error(ErrorKind::ParseError, "rational must be positive: '" + std::string(text) + "'");
  }
  const auto g = std::gcd(r.num, r.den);
  r.num /= g;
  r.den /= g;
  return r;
}

std::uint64_t amplification_exponent(Rational eps) {
  return 1 + (eps.den + eps.num - 1) / eps.num;
}

std::uint64_t dummy_path_length(std::uint64_t n, Rational eps) {
  const auto k = amplification_exponent(eps);
  std::uint64_t d = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (n != 0 && d > UINT64_MAX / n) return 0;
    d *= n;
  }
  return d;
}

AmplificationBounds amplification_bounds(std::uint64_t n, Rational eps) {
  AmplificationBounds b;
  b.exponent = amplification_exponent(eps);
  const long double ln_n = std::log(static_cast<long double>(n));
  b.log_dummy_length = static_cast<long double>(b.exponent) * ln_n;
  // ln n' = ln(n + D − 1) = ln D + ln(1 + (n − 1)/D)
  const long double ratio = (static_cast<long double>(n) - 1) / std::exp(b.log_dummy_length);
  const long double ln_n_prime = b.log_dummy_length + std::log1p(ratio);
  b.log_upper = (1 - eps.value()) * ln_n_prime + std::log(static_cast<long double>(n) - 1);
  b.log_lower = b.log_dummy_length;
  return b;
}

AmplifiedInstance amplify(const Hypergraph& h, const HNode& u, const HNode& v, Rational eps,
                          std::uint64_t arc_budget) {
  for (const auto* n : {&u, &v}) {
    if (!h.has_node(*n)) throw Error(ErrorKind::UnknownNode, "node '" + n->str() + "' is not in the hypergraph");
  }
  if (!(eps.num > 0 && 4 * eps.num < eps.den)) {
    throw Error(ErrorKind::ParseError, "epsilon must lie in (0, 1/4)");
  }
  const std::uint64_t n = h.nodes().size();
  const std::uint64_t d = dummy_path_length(n, eps);
  if (d == 0 || d > arc_budget) {
    throw Error(ErrorKind::BudgetExceeded,
                "dummy path of " + std::to_string(n) + "^" +
                    std::to_string(amplification_exponent(eps)) + " arcs exceeds the budget of " +
                    std::to_string(arc_budget));
  }

  // Fresh names: lengthen the underscore prefix until nothing in H uses it.
  std::string prefix = "_";
  auto clashes = [&](const std::string& p) {
    for (const auto& node : h.nodes()) {
      if (node.str().rfind(p + "w", 0) == 0 || node.str().rfind(p + "s", 0) == 0) return true;
    }
    return false;
  };
  while (clashes(prefix)) prefix += '_';

  AmplifiedInstance out;
  out.graph = h;
  HNode prev = u;
  for (std::uint64_t k = 1; k <= d; ++k) {
    HNode next = (k == d) ? v : HNode::named(prefix + "w" + std::to_string(k));
    out.graph.add_arc(Hyperarc(prev, next, HNode::named(prefix + "s" + std::to_string(k))));
    prev = std::move(next);
  }
  out.dummy_length = d;
  out.non_sink_nodes = n + d - 1;
  out.total_nodes = out.graph.nodes().size();
  return out;
}

}  // namespace tripent
