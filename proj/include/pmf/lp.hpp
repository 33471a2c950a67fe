#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pmf {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat value;
  std::vector<Rat> x;
};

// Maximize c.x subject to A x (rel) b and x >= 0, where rel[i] is -1 for
// <=, 0 for =, +1 for >=. Exact two-phase simplex with Bland's rule.
LpResult solve_lp(const std::vector<std::vector<Rat>>& a,
                  const std::vector<Rat>& b, const std::vector<int>& rel,
                  const std::vector<Rat>& c);

}  // namespace pmf
