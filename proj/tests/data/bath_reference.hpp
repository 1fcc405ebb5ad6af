// Reference values from direct high-precision quadrature of the defining
// frequency integrals (mpmath, 30 digits), J = lambda wc (w/wc)^s e^{-w/wc}.
#pragma once

namespace qprobe::testdata {

struct TtcfRef { double lambda, s, wc, beta, t, re, im; };
inline constexpr TtcfRef kTtcf[] = {
    {1, 1, 1, 10, 0.5, 0.50855352104886769115, -0.64},
    {1, 1, 1, 14.3, 2.0, -0.10588090145559603226, -0.16},
    {0.5, 2, 1, 1, 1.3, -0.15889558942901818159, -0.087489877400635140999},
    {1, 3, 1, 0.5, 2.0, -0.67791020785951433971, 0.2304},
    {1, 1, 2, 3, 0.7, -0.16583779600948079109, -1.2783053323593865471},
    {1, 2, 1, 50, 6.0, -0.0041908753057701052957, 0.0078178982488697609224},
};

struct MomentRef { double lambda, s, wc, beta; int n; double value; };
inline constexpr MomentRef kMoments[] = {
    {1, 1, 1, 14.3, 0, 1.0145864001363969122},
    {1, 1, 1, 14.3, 1, -2.0},
    {1, 1, 1, 14.3, 2, 6.0002398735933877851},
    {1, 1, 1, 14.3, 3, -24.0},
    {1, 1, 1, 14.3, 4, 120.00001910871456334},
    {1, 1, 1, 14.3, 5, -720.0},
    {1, 1, 1, 14.3, 6, 5040.0000033747582162},
    {1, 2, 1, 1, 0, 2.8082276126383771416},
    {1, 2, 1, 1, 1, -6.0},
    {1, 2, 1, 1, 2, 25.772532246881756464},
    {1, 2, 1, 1, 3, -120.0},
    {1, 2, 1, 1, 4, 732.02295942996887065},
    {1, 2, 1, 1, 5, -5040.0},
    {1, 2, 1, 1, 6, 40481.956797495269771},
    {0.7, 3, 1.5, 0.5, 0, 12.291106925084004734},
    {0.7, 3, 1.5, 0.5, 1, -56.699999999999990408},
    {0.7, 3, 1.5, 0.5, 2, 459.41007254025468039},
    {0.7, 3, 1.5, 0.5, 3, -3827.2499999999993525},
    {0.7, 3, 1.5, 0.5, 4, 41160.644478594922207},
    {0.7, 3, 1.5, 0.5, 5, -482233.49999999991842},
    {0.7, 3, 1.5, 0.5, 6, 6559964.593819753781},
};

// d zeta(0) / d beta by differentiation under the integral.
struct MomentBetaDerivRef { double lambda, s, wc, beta, value; };
inline constexpr MomentBetaDerivRef kZeta0BetaDeriv[] = {
    {1, 1, 1, 14.3, -0.0019441818995691583091},
    {1, 2, 1, 1, -1.4368040333814731266},
};

struct DephasingRef { double lambda, s, wc, beta, t, gamma_d; };
inline constexpr DephasingRef kDephasing[] = {
    {1, 1, 1, 14.285714285714285714, 0.25, 0.030768965910568898528},
    {1, 1, 1, 14.285714285714285714, 1.0, 0.35387069156363954216},
    {1, 1, 1, 14.285714285714285714, 2.0, 0.83378855447812881299},
    {1, 1, 1, 14.285714285714285714, 5.0, 1.8058424299867873462},
    {0.1, 1, 1, 14.285714285714285714, 0.25, 0.0030768965910568900236},
    {0.1, 1, 1, 14.285714285714285714, 1.0, 0.03538706915636395618},
    {0.1, 1, 1, 14.285714285714285714, 2.0, 0.083378855447812885928},
    {0.1, 1, 1, 14.285714285714285714, 5.0, 0.18058424299867874465},
};

}  // namespace qprobe::testdata
