#pragma once

#include <utility>

#include "heunkit/types.hpp"

namespace heunkit {

// Quadratic c2 n^2 + c1 n + c0 with numerically stable root extraction.
struct QuadraticPoly {
  Complex c2;
  Complex c1;
  Complex c0;

  Complex eval(Complex n) const noexcept { return (c2 * n + c1) * n + c0; }
  // Both roots; requires c2 != 0.
  std::pair<Complex, Complex> roots() const;
};

struct Classified2Term {
  Complex scale;  // argument rescale A: o.g.f. is c(0) * 2F1(alpha, beta; gamma; A x)
  GaussParams params;
};

struct Classified3Term {
  Complex scale;  // o.g.f. is c(0) * Hl(a, q; alpha, beta; gamma, delta; A x)
  HeunParams params;
};

// Recognizes [P1(n) E + P0(n)] c = 0 as a rescaled 2F1 coefficient
// recurrence.  P1 must have -1 as a root and its other root must not be an
// integer exceeding -1; the returned (alpha, beta) are in canonical
// lexicographic order.
Classified2Term classify_2term(const QuadraticPoly& p1, const QuadraticPoly& p0);

// Recognizes [P2(n) E^2 + P1(n) E + P0(n)] c = 0 as a rescaled Hl
// coefficient recurrence.  P2 must have -2 as a root with the other root not
// an integer exceeding -2, and the characteristic polynomial
// p22 n^2 + p12 n + p02 (built from the n^2 coefficients) must have distinct
// roots {A, A/a}.  Of the two (A, a) assignments the one with |a| >= 1 is
// returned (lexicographically smaller a on a tie).  A double characteristic
// root (the a = 1 confluent case) raises degenerate_error.
Classified3Term classify_3term(const QuadraticPoly& p2, const QuadraticPoly& p1,
                               const QuadraticPoly& p0);

}
