#pragma once

// Butcher tableau of the Dormand-Prince embedded 5(4) pair. Shared by the
// plain integrator and the delay stepping loop; not installed.

namespace percycle::solver::dp {

inline constexpr double c2 = 1.0 / 5.0;
inline constexpr double c3 = 3.0 / 10.0;
inline constexpr double c4 = 4.0 / 5.0;
inline constexpr double c5 = 8.0 / 9.0;

inline constexpr double a21 = 1.0 / 5.0;
inline constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
inline constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0,
                        a43 = 32.0 / 9.0;
inline constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                        a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
inline constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                        a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                        a65 = -5103.0 / 18656.0;
// Row 7 doubles as the 5th-order solution weights (FSAL).
inline constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0,
                        a74 = 125.0 / 192.0, a75 = -2187.0 / 6784.0,
                        a76 = 11.0 / 84.0;

// Difference between the 5th- and 4th-order weights (error estimator).
inline constexpr double e1 = 71.0 / 57600.0;
inline constexpr double e3 = -71.0 / 16695.0;
inline constexpr double e4 = 71.0 / 1920.0;
inline constexpr double e5 = -17253.0 / 339200.0;
inline constexpr double e6 = 22.0 / 525.0;
inline constexpr double e7 = -1.0 / 40.0;

}  // namespace percycle::solver::dp
