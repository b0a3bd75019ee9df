#pragma once

namespace affina::tol {

// Absolute tolerance on coordinates and matrix entries. Mutable so the
// CLI's --tolerance flag can adjust it; set once at startup.
inline double entry = 1e-9;

// Below this |det| a linear part is rejected as singular.
inline constexpr double singular = 1e-12;

// Rank decisions threshold singular values at rank_rel * sigma_max.
inline constexpr double rank_rel = 1e-9;

// Chart-to-chart seams come from user input and get a looser gate.
// Mutable for the same reason as `entry`.
inline double seam = 1e-6;

// Affine-map fingerprints for word deduplication round to this grid.
inline constexpr double fingerprint = 1e-7;

// Contraction-orbit witnesses must get this close to the fixed point.
inline constexpr double orbit_target = 1e-6;

// Default iteration horizon for orbit witnesses.
inline constexpr int orbit_horizon = 60;

}  // namespace affina::tol
