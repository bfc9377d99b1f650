#pragma once

#include "pfpos/recurrence.hpp"

#include <string>

namespace fixtures {

inline pfpos::UniPoly P(std::initializer_list<const char*> c) {
  std::vector<pfpos::Rational> v;
  for (const char* s : c) v.push_back(pfpos::parse_rational(s));
  return pfpos::UniPoly(std::move(v));
}

inline pfpos::Rational Q(const char* s) { return pfpos::parse_rational(s); }

// (2n+13)f(n+3) - (5n+22)f(n+2) + (3n+20)f(n+1) - (2n+7)f(n) = 0, f = 1, 1, 1
inline pfpos::SequenceSpec gk_example() {
  return {pfpos::Recurrence({P({"-7", "-2"}), P({"20", "3"}), P({"-22", "-5"}), P({"13", "2"})}),
          {Q("1"), Q("1"), Q("1")}};
}

// (n+3)f(n+3) - (5n+13)f(n+2) + (5n+12)f(n+1) - (n+2)f(n) = 0, f = 1, 1/4, 1/10
inline pfpos::SequenceSpec mu_example() {
  return {pfpos::Recurrence({P({"-2", "-1"}), P({"12", "5"}), P({"-13", "-5"}), P({"3", "1"})}),
          {Q("1"), Q("1/4"), Q("1/10")}};
}

// (n+3)^2 f(n+2) - (n+2)(3n+11)/2 f(n+1) + (n+4)(n+1)/2 f(n) = 0, f = 1, 1/4;
// f(n) = 2^-n / (n+1).
inline pfpos::SequenceSpec nongeneric_example() {
  return {pfpos::Recurrence({P({"2", "5/2", "1/2"}), P({"-11", "-17/2", "-3/2"}), P({"9", "6", "1"})}),
          {Q("1"), Q("1/4")}};
}

// (3n-16)f(n) - (3n-17)f(n+1) = 0, f(0) = 1
inline pfpos::SequenceSpec order1_example() {
  return {pfpos::Recurrence({P({"-16", "3"}), P({"17", "-3"})}), {Q("1")}};
}

// f(n+1) - f(n) = 0, f(0) = 1
inline pfpos::SequenceSpec constant_example() {
  return {pfpos::Recurrence({P({"-1"}), P({"1"})}), {Q("1")}};
}

}  // namespace fixtures
