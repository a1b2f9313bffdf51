#ifndef MINCTRL_TESTS_FIXTURES_HPP
#define MINCTRL_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "minctrl/rational_matrix.hpp"
#include "minctrl/reductions.hpp"

namespace minctrl::testing {

// Sets {1,2}, {2,3}, {1,3}, {1,2,3} over {1,2,3}; stored zero-based.
inline HittingSetInstance worked_example_instance() {
  return HittingSetInstance{3, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}}};
}

inline RationalMatrix parse_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<RationalVector> out;
  for (const auto& r : rows) {
    RationalVector v;
    for (const auto& s : r) v.push_back(parse_rational(s));
    out.push_back(std::move(v));
  }
  return RationalMatrix::from_rows(out);
}

// Printed V of the worked example.
inline RationalMatrix worked_example_v() {
  return parse_rows({{"2", "0", "0", "0", "0", "0", "0", "1"},
                     {"0", "2", "0", "0", "0", "0", "0", "1"},
                     {"0", "0", "2", "0", "0", "0", "0", "1"},
                     {"1", "1", "0", "4", "0", "0", "0", "0"},
                     {"0", "1", "1", "0", "4", "0", "0", "0"},
                     {"1", "0", "1", "0", "0", "4", "0", "0"},
                     {"1", "1", "1", "0", "0", "0", "4", "0"},
                     {"0", "0", "0", "0", "0", "0", "0", "1"}});
}

// Printed A = V^{-1} diag(1..8) V of the worked example.
inline RationalMatrix worked_example_a() {
  return parse_rows({{"1", "0", "0", "0", "0", "0", "0", "-7/2"},
                     {"0", "2", "0", "0", "0", "0", "0", "-3"},
                     {"0", "0", "3", "0", "0", "0", "0", "-5/2"},
                     {"3/4", "1/2", "0", "4", "0", "0", "0", "13/8"},
                     {"0", "3/4", "1/2", "0", "5", "0", "0", "11/8"},
                     {"5/4", "0", "3/4", "0", "0", "6", "0", "3/2"},
                     {"3/2", "5/4", "1", "0", "0", "0", "7", "9/4"},
                     {"0", "0", "0", "0", "0", "0", "0", "8"}});
}

// b = (1,1,0,0,0,0,0,1), which makes the worked example controllable.
inline std::vector<double> worked_example_b() { return {1, 1, 0, 0, 0, 0, 0, 1}; }

}  // namespace minctrl::testing

#endif  // MINCTRL_TESTS_FIXTURES_HPP
