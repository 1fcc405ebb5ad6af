// polygamma.hpp: polygamma and Hurwitz zeta functions at complex/real argument

#pragma once

#include "qprobe/types.hpp"

namespace qprobe {

// Order-m polygamma function psi^(m)(z) for complex z.
//
// The argument is shifted upwards with psi^(m)(z) = psi^(m)(z+1) - (-1)^m m!/z^(m+1)
// until |z| >= 15 and Re z >= 1, then the 20-term Bernoulli asymptotic series is
// summed. Throws std::domain_error at the poles z = 0, -1, -2, ...
Complex polygamma(int order, Complex z);

// Real-argument convenience overload.
double polygamma(int order, double x);

// Hurwitz zeta zeta(s, a) = sum_{k>=0} (k + a)^(-s) for integer s >= 2 and a > 0,
// expressed through psi^(s-1).
double hurwitz_zeta(int s, double a);

}  // namespace qprobe
