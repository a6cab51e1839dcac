#pragma once

#include <random>
#include <vector>

#include "higgs/rational.hpp"

namespace testutil {

inline ph::Rational R(long a, long b = 1) { return ph::Rational(a, b); }

struct RandQ {
  std::mt19937_64 g;
  explicit RandQ(unsigned seed) : g(seed) {}
  ph::Rational operator()(long hi = 9, long dhi = 5) {
    std::uniform_int_distribution<long> n(-hi, hi), d(1, dhi);
    return ph::Rational(n(g), d(g));
  }
  std::vector<ph::Rational> distinct(int m, long hi = 9, long dhi = 5) {
    std::vector<ph::Rational> out;
    while (static_cast<int>(out.size()) < m) {
      auto x = (*this)(hi, dhi);
      bool dup = false;
      for (auto& y : out) dup |= (x == y);
      if (!dup) out.push_back(x);
    }
    return out;
  }
};

}  // namespace testutil
