#include "nonrep/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "nonrep/error.hpp"

namespace nonrep {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

BigInt power_of_four(std::int64_t e) {
  if (e > kMaxBoundExponent) throw LimitError("exponent too large for an exact bound");
  BigInt one = 1;
  return one << (2 * static_cast<unsigned>(e));
}

struct FormulaSpec {
  const char* name;
  const char* expression;
  std::vector<const char*> params;
};

const std::vector<FormulaSpec>& formulas() {
  static const std::vector<FormulaSpec> table = {
      {"planar", "3 * 4 * 4^3", {}},
      {"genus", "256 * max(2g, 3)", {"g"}},
      {"treewidth", "4^k", {"k"}},
      {"almost_embeddable", "k + 6k * 4^(11(k+1))", {"k"}},
      {"minor", "(k + 6k * 4^(11(k+1))) * 4^r", {"k", "r"}},
      {"topological_minor", "max(k + 6k * 4^(11(k+1)), c_prime) * 4^r", {"k", "r", "c_prime"}},
      {"rich", "c * 4^r", {"c", "r"}},
  };
  return table;
}

std::int64_t small(const BigInt& v, const char* name) {
  if (v > BigInt(kMaxBoundExponent) || v < BigInt(-kMaxBoundExponent)) {
    throw LimitError(std::string("parameter ") + name + " is out of the supported range");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

BigInt bound_planar() { return 3 * 4 * power_of_four(3); }

BigInt bound_genus(std::int64_t g) {
  require(g >= 0, "genus must be non-negative");
  require(g <= kMaxBoundExponent, "genus out of the supported range");
  return BigInt(256) * std::max<std::int64_t>(2 * g, 3);
}

BigInt bound_treewidth(std::int64_t k) {
  require(k >= 0, "treewidth must be non-negative");
  return power_of_four(k);
}

BigInt bound_almost_embeddable(std::int64_t k) {
  require(k >= 1, "k must be at least 1");
  require(k <= kMaxBoundExponent / 11 - 1, "k out of the supported range");
  return BigInt(k) + BigInt(6) * k * power_of_four(11 * (k + 1));
}

BigInt bound_minor(std::int64_t k, std::int64_t r) {
  require(r >= 1, "r must be at least 1");
  return bound_almost_embeddable(k) * power_of_four(r);
}

BigInt bound_topological_minor(std::int64_t k, std::int64_t r, const BigInt& c_prime) {
  require(r >= 1, "r must be at least 1");
  require(c_prime >= 1, "c_prime must be at least 1");
  return std::max(bound_almost_embeddable(k), c_prime) * power_of_four(r);
}

BigInt bound_rich(const BigInt& c, std::int64_t r) {
  require(c >= 1, "c must be at least 1");
  require(r >= 1, "r must be at least 1");
  return c * power_of_four(r);
}

BoundReport evaluate_bound(std::string_view formula, const std::map<std::string, BigInt>& params) {
  const auto& table = formulas();
  auto it = std::find_if(table.begin(), table.end(),
                         [&](const FormulaSpec& f) { return formula == f.name; });
  if (it == table.end()) throw std::invalid_argument("unknown bound '" + std::string(formula) + "'");
  BoundReport report;
  report.formula = it->name;
  report.expression = it->expression;
  for (const char* p : it->params) {
    auto found = params.find(p);
    if (found == params.end()) {
      throw std::invalid_argument(std::string("bound ") + it->name + " needs parameter " + p);
    }
    report.parameters.emplace_back(p, found->second);
  }
  for (const auto& [name, value] : params) {
    if (std::find_if(it->params.begin(), it->params.end(),
                     [&](const char* p) { return name == p; }) == it->params.end()) {
      throw std::invalid_argument("bound " + std::string(it->name) + " takes no parameter " + name);
    }
  }
  auto arg = [&](const char* name) { return params.at(name); };
  const std::string f = it->name;
  if (f == "planar") {
    report.value = bound_planar();
  } else if (f == "genus") {
    report.value = bound_genus(small(arg("g"), "g"));
  } else if (f == "treewidth") {
    report.value = bound_treewidth(small(arg("k"), "k"));
  } else if (f == "almost_embeddable") {
    report.value = bound_almost_embeddable(small(arg("k"), "k"));
  } else if (f == "minor") {
    report.value = bound_minor(small(arg("k"), "k"), small(arg("r"), "r"));
  } else if (f == "topological_minor") {
    report.value = bound_topological_minor(small(arg("k"), "k"), small(arg("r"), "r"),
                                           arg("c_prime"));
  } else {
    report.value = bound_rich(arg("c"), small(arg("r"), "r"));
  }
  return report;
}

std::vector<std::string> bound_formulas() {
  std::vector<std::string> out;
  for (const auto& f : formulas()) out.emplace_back(f.name);
  return out;
}

}  // namespace nonrep
