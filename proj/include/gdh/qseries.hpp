#pragma once

#include <map>

#include "gdh/rational.hpp"

namespace gdh::qforms {

// truncated q-expansion: exponents k/denom with rational coefficients,
// stored for exponents strictly below cutoff
struct QSeries {
  long denom = 1;
  std::map<long, Rat> coeffs;  // key k means exponent k/denom
  Rat cutoff{0};

  Rat coeff(const Rat& exponent) const;
  void set(const Rat& exponent, const Rat& value);
  void add_to(const Rat& exponent, const Rat& value);
  QSeries rebased(long new_denom) const;
};

QSeries qs_zero(long denom, const Rat& cutoff);
QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_scale(const QSeries& a, const Rat& f);
QSeries qs_mul(const QSeries& a, const QSeries& b);

}  // namespace gdh::qforms
