#include "b2v/kappa.hpp"

namespace b2v {

bool is_singular_kappa(const Rational& k) {
  if (k.sign() >= 0) return false;
  const Rational m = k * Rational(-4);
  if (!m.is_integer()) return false;
  return m.numerator() % 4 != 0;
}

Kappa::Kappa(const Rational& value) : value_(value), singular_(is_singular_kappa(value)) {}

}  // namespace b2v
