#include "gdh/qseries.hpp"

#include <numeric>
#include <stdexcept>

namespace gdh::qforms {

static long exp_key(const Rat& exponent, long denom) {
  Rat k = exponent * denom;
  if (!is_integer(k)) throw std::domain_error("QSeries: exponent not on the denominator lattice");
  return to_int(k).get_si();
}

Rat QSeries::coeff(const Rat& exponent) const {
  if (exponent >= cutoff) throw std::domain_error("QSeries: coefficient beyond the cutoff");
  Rat k = exponent * denom;
  if (!is_integer(k)) return 0;
  auto it = coeffs.find(to_int(k).get_si());
  return it == coeffs.end() ? Rat(0) : it->second;
}

void QSeries::set(const Rat& exponent, const Rat& value) {
  if (exponent >= cutoff) return;
  long k = exp_key(exponent, denom);
  if (value == 0)
    coeffs.erase(k);
  else
    coeffs[k] = value;
}

void QSeries::add_to(const Rat& exponent, const Rat& value) {
  if (exponent >= cutoff || value == 0) return;
  long k = exp_key(exponent, denom);
  Rat v = coeffs[k] + value;
  if (v == 0)
    coeffs.erase(k);
  else
    coeffs[k] = v;
}

QSeries QSeries::rebased(long new_denom) const {
  if (new_denom % denom != 0) throw std::domain_error("QSeries: incompatible rebase");
  QSeries r;
  r.denom = new_denom;
  r.cutoff = cutoff;
  long f = new_denom / denom;
  for (auto [k, v] : coeffs) r.coeffs[k * f] = v;
  return r;
}

QSeries qs_zero(long denom, const Rat& cutoff) {
  QSeries s;
  s.denom = denom;
  s.cutoff = cutoff;
  return s;
}

QSeries qs_add(const QSeries& a, const QSeries& b) {
  long d = std::lcm(a.denom, b.denom);
  QSeries x = a.rebased(d), y = b.rebased(d);
  QSeries r = qs_zero(d, std::min(a.cutoff, b.cutoff));
  for (auto [k, v] : x.coeffs)
    if (make_rat(k, d) < r.cutoff) r.coeffs[k] = v;
  for (auto [k, v] : y.coeffs) {
    if (make_rat(k, d) >= r.cutoff) continue;
    Rat s = r.coeffs[k] + v;
    if (s == 0)
      r.coeffs.erase(k);
    else
      r.coeffs[k] = s;
  }
  return r;
}

QSeries qs_scale(const QSeries& a, const Rat& f) {
  QSeries r = qs_zero(a.denom, a.cutoff);
  if (f == 0) return r;
  for (auto [k, v] : a.coeffs) r.coeffs[k] = v * f;
  return r;
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
  long d = std::lcm(a.denom, b.denom);
  QSeries x = a.rebased(d), y = b.rebased(d);
  // truncation: a valid product cutoff is min over the pairings of one factor's
  // cutoff against the other's lowest exponent
  Rat lo_a = x.coeffs.empty() ? Rat(0) : make_rat(x.coeffs.begin()->first, d);
  Rat lo_b = y.coeffs.empty() ? Rat(0) : make_rat(y.coeffs.begin()->first, d);
  Rat cut = std::min(x.cutoff + lo_b, y.cutoff + lo_a);
  QSeries r = qs_zero(d, cut);
  for (auto [ka, va] : x.coeffs)
    for (auto [kb, vb] : y.coeffs) {
      if (make_rat(ka + kb, d) >= cut) break;
      r.add_to(make_rat(ka + kb, d), va * vb);
    }
  return r;
}

}  // namespace gdh::qforms
