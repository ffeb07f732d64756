#pragma once

// Shared Gram matrices for tests, built from the Dynkin-diagram adjacency so
// the suites do not depend on the library's own constructors.

#include "latq/matrix.hpp"

namespace testmats {

inline latq::IntMat u_gram() {
  latq::IntMat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

// Negative definite E8: nodes e1-e2-e3-e4-e5-e6-e7 in a chain, e8 on e5.
inline latq::IntMat e8_gram() {
  latq::IntMat m = latq::IntMat::Zero(8, 8);
  for (int i = 0; i < 8; ++i) m(i, i) = -2;
  auto link = [&m](int a, int b) {
    m(a, b) = 1;
    m(b, a) = 1;
  };
  for (int i = 0; i + 1 < 7; ++i) link(i, i + 1);
  link(4, 7);
  return m;
}

// Negative definite D4: central node 1 linked to 0, 2, 3.
inline latq::IntMat d4_gram() {
  latq::IntMat m = latq::IntMat::Zero(4, 4);
  for (int i = 0; i < 4; ++i) m(i, i) = -2;
  auto link = [&m](int a, int b) {
    m(a, b) = 1;
    m(b, a) = 1;
  };
  link(0, 1);
  link(1, 2);
  link(1, 3);
  return m;
}

}  // namespace testmats
