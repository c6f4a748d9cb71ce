#pragma once

// Frozen tolerances for the verification suites. Each was measured once
// against the brute-force oracle and is not to be tuned after the fact.

namespace valueset::calibration {

// anomaly_scan flags h when |N_2(h) - predicted| > c sqrt(p)
inline constexpr double kAnomalyThreshold = 5.0;

// |N_2(h, p) s_p^2 / p - target| <= kAnomalyConstant / sqrt(p) for x^4-2x^2.
// Worst observed constant over 10^4 < p < 10^5: 2.05 at h = +-1, 4.09 generic.
inline constexpr double kAnomalyConstant = 10.0;

// |gap_frequency(h) - 2^-h| for x^2 mod 100003, h = 1..6
inline constexpr double kDavenportTolerance = 0.02;

inline constexpr double kKsTolerance = 0.02;
inline constexpr double kAdjacentCorrelationTolerance = 0.02;

inline constexpr double kR2Tolerance = 0.15;
inline constexpr double kR3Tolerance = 0.3;

// sum_h |eps_2(h, p)| <= C sqrt(p) over the corpus, p <= 10^4.
// Worst observed ratio 2.30 (x^3, p = 19); frozen with a 30% margin.
inline constexpr double kEpsilonMassConstant = 3.0;

}  // namespace valueset::calibration
