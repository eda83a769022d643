#pragma once

#include <doctest.h>

#include <cmath>
#include <complex>

#include "heunkit/error.hpp"
#include "heunkit/types.hpp"

namespace ht {

using heunkit::Complex;

inline Complex C(double re, double im = 0.0) { return Complex(re, im); }

inline double dist(Complex u, Complex v) { return std::abs(u - v); }

}  // namespace ht

// |u - v| <= tol with both values printed on failure.
#define CHECK_CNEAR(u, v, tol)                                        \
  do {                                                                \
    const heunkit::Complex lhs_ = (u);                                \
    const heunkit::Complex rhs_ = (v);                                \
    INFO("lhs = ", lhs_.real(), "+", lhs_.imag(), "i, rhs = ",        \
         rhs_.real(), "+", rhs_.imag(), "i");                         \
    CHECK(ht::dist(lhs_, rhs_) <= (tol));                             \
  } while (0)

// Expression must throw heunkit::error with the given kind.
#define CHECK_THROWS_KIND(expr, k)                                    \
  do {                                                                \
    bool caught_ = false;                                             \
    bool right_kind_ = false;                                         \
    try {                                                             \
      (void)(expr);                                                   \
    } catch (const heunkit::error& e_) {                              \
      caught_ = true;                                                 \
      right_kind_ = (e_.kind() == (k));                               \
      INFO("caught: ", e_.what());                                    \
      CHECK(right_kind_);                                             \
    }                                                                 \
    CHECK_MESSAGE(caught_, "expected heunkit::error, nothing thrown");\
  } while (0)
