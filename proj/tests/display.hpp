#pragma once

// Shorthand for writing motives the way they are displayed by hand:
// T{m1, m2, ...} = sum of L^{mi}, T[a, b] = L^a + ... + L^b.

#include <initializer_list>

#include "motivic/motive.hpp"

namespace motivic::display {

inline MotiveClass T(int g, std::initializer_list<int> twists) {
  MotiveClass out(g);
  for (int m : twists) out += MotiveClass::lefschetz_power(g, m);
  return out;
}

inline MotiveClass Trange(int g, int a, int b) {
  MotiveClass out(g);
  for (int m = a; m <= b; ++m) out += MotiveClass::lefschetz_power(g, m);
  return out;
}

inline MotiveClass Cj(int j, int g) { return sym_curve(j, g); }

}  // namespace motivic::display
