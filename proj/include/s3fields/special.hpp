#pragma once

// Special values needed by the counting predictions.

namespace s3f {

// Riemann zeta for real s > 0, s != 1 (throws std::domain_error otherwise).
// Euler-Maclaurin summation for s > 1; for 0 < s < 1 the alternating eta
// series with Borwein's acceleration, zeta = eta / (1 - 2^(1-s)).
long double riemann_zeta(long double s);

long double gamma_two_thirds();

}  // namespace s3f
