#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nonrep {

using BigInt = boost::multiprecision::cpp_int;

// Arguments are signed so that negative input can be reported rather than
// wrapped. Out-of-range arguments throw std::invalid_argument; exponents
// beyond kMaxBoundExponent throw LimitError.
inline constexpr std::int64_t kMaxBoundExponent = 1 << 20;

BigInt bound_planar();                                  // 768
BigInt bound_genus(std::int64_t g);                     // 256 * max(2g, 3)
BigInt bound_treewidth(std::int64_t k);                 // 4^k
BigInt bound_almost_embeddable(std::int64_t k);         // k + 6k * 4^(11(k+1))
BigInt bound_minor(std::int64_t k, std::int64_t r);     // almost_embeddable(k) * 4^r
BigInt bound_topological_minor(std::int64_t k, std::int64_t r, const BigInt& c_prime);
BigInt bound_rich(const BigInt& c, std::int64_t r);     // c * 4^r

struct BoundReport {
  std::string formula;     // name accepted by evaluate_bound
  std::string expression;  // the closed form, for display
  std::vector<std::pair<std::string, BigInt>> parameters;
  BigInt value;
};

// Names: planar, genus(g), treewidth(k), almost_embeddable(k), minor(k, r),
// topological_minor(k, r, c_prime), rich(c, r). Unknown names, missing or
// unexpected parameters throw std::invalid_argument.
BoundReport evaluate_bound(std::string_view formula, const std::map<std::string, BigInt>& params);

std::vector<std::string> bound_formulas();

}  // namespace nonrep
