#pragma once

// Frozen values from tests/oracles/compute_oracles.py (mpmath, 50 digits).
// They are computed independently of the library and must not be regenerated
// from its output.

namespace isoprofile::reference {

inline constexpr double kThetaMax = 1.2060055719567626713;
inline constexpr double kT0 = 0.4746023752814592064;
inline constexpr double kBeta = 0.22537801453797925231;
inline constexpr double kAlpha = 0.098062029385631023793;
inline constexpr double kGamma = 0.24145300700522385466;

// P(S4) at a = 0.1, theta = 1.
inline constexpr double kS4PerimeterA01Theta1 = 1.0695555952003090946;
// |S4| by direct quadrature of the region under the arc.
inline constexpr double kS4AreaA0Theta1 = 0.3850951557515306058;
inline constexpr double kS4AreaA03Theta07 = 0.33236240443264825735;
// Area of the unit-perimeter S4 region at theta = 1.
inline constexpr double kTUnitTheta1 = 0.4060732098279048893;
// Segment of the unit circle cut by a chord of length 0.01.
inline constexpr double kSegmentR1L001 = 8.3333958341704004684e-8;

inline constexpr double kSigmaA015 = 0.24925083240258983357;
inline constexpr double kSigmaThetaA015 = 0.48936226752973413701;
// Unit-perimeter pair at t = 0.2.
inline constexpr double kAOfT02 = 0.041906043574834883594;
inline constexpr double kThetaOfT02 = 0.50463772794057895769;
// tau at the midpoint of [alpha, beta].
inline constexpr double kAMid = 0.16172002196180513805;
inline constexpr double kTauAMid = 0.40994324513974735977;
inline constexpr double kThetaA03T03 = 0.53030583803324285587;
inline constexpr double kS4PerimeterA03ThetaMax = 0.90366657948972012624;

// Corner deformation.
inline constexpr double kWidthPi4L1E01 = 0.016471566962990765804;
inline constexpr double kEpsStarTheta1L1 = 0.046513680183907057409;
inline constexpr double kGainTheta1L1EpsStar = 0.01255824056441133683;
inline constexpr double kGainCrossoverTheta1L1 = 0.22754971160181815634;
inline constexpr double kGainPi4L1E0001 = 0.00041379876169255613196;
inline constexpr double kArcRhsTheta08L01 = 0.0036147633428216857048;
inline constexpr double kArcEllStarR1 = 0.043371039849278060277;

}  // namespace isoprofile::reference
