// Generated by scripts/gen_smoothness.py. Do not edit.
//
// Each table lists weighted squares: beta = sum_j weight_j * (coeff_j . f)^2,
// where f are the stencil point values from left to right.
#pragma once

#include <array>

namespace tenom::stencil::detail {

template <int R>
struct SquareTerm {
  double weight;
  std::array<double, R> coeff;
};

// cells i-1 .. i+1
inline constexpr std::array<SquareTerm<3>, 2> kCentered3{{
    {1.0 / 4.0, {-1.0, 0.0, 1.0}},
    {13.0 / 12.0, {1.0, -2.0, 1.0}},
}};

// cells i+0 .. i+2
inline constexpr std::array<SquareTerm<3>, 2> kDownwind3{{
    {1.0 / 4.0, {-3.0, 4.0, -1.0}},
    {13.0 / 12.0, {1.0, -2.0, 1.0}},
}};

// cells i-2 .. i+0
inline constexpr std::array<SquareTerm<3>, 2> kUpwind3{{
    {1.0 / 4.0, {1.0, -4.0, 3.0}},
    {13.0 / 12.0, {1.0, -2.0, 1.0}},
}};

// cells i+0 .. i+3
inline constexpr std::array<SquareTerm<4>, 3> kDownwind4{{
    {1.0 / 36.0, {-11.0, 18.0, -9.0, 2.0}},
    {13.0 / 12.0, {2.0, -5.0, 4.0, -1.0}},
    {781.0 / 720.0, {-1.0, 3.0, -3.0, 1.0}},
}};

// cells i-3 .. i+0
inline constexpr std::array<SquareTerm<4>, 3> kUpwind4{{
    {1.0 / 36.0, {-2.0, 9.0, -18.0, 11.0}},
    {13.0 / 12.0, {-1.0, 4.0, -5.0, 2.0}},
    {781.0 / 720.0, {-1.0, 3.0, -3.0, 1.0}},
}};

// cells i+0 .. i+4
inline constexpr std::array<SquareTerm<5>, 4> kDownwind5{{
    {1.0 / 144.0, {-25.0, 48.0, -36.0, 16.0, -3.0}},
    {1.0 / 15600.0, {379.0, -1126.0, 1234.0, -606.0, 119.0}},
    {781.0 / 2880.0, {-5.0, 18.0, -24.0, 14.0, -3.0}},
    {1421461.0 / 1310400.0, {1.0, -4.0, 6.0, -4.0, 1.0}},
}};

// cells i-2 .. i+3
inline constexpr std::array<SquareTerm<6>, 5> kFull6{{
    {1.0 / 3600.0, {3.0, -30.0, -20.0, 60.0, -15.0, 2.0}},
    {1.0 / 15600.0, {-11.0, 174.0, -326.0, 174.0, -11.0, 0.0}},
    {1.0 / 3967729920.0, {-16315.0, -16831.0, 164870.0, -230474.0, 115237.0, -16487.0}},
    {1421461.0 / 1310400.0, {1.0, -4.0, 6.0, -4.0, 1.0, 0.0}},
    {21520059541.0 / 19838649600.0, {-1.0, 5.0, -10.0, 10.0, -5.0, 1.0}},
}};

// cells i-3 .. i+4
inline constexpr std::array<SquareTerm<8>, 7> kFull8{{
    {1.0 / 176400.0, {-4.0, 42.0, -252.0, -105.0, 420.0, -126.0, 28.0, -3.0}},
    {1.0 / 6879600.0, {31.0, -417.0, 4119.0, -7466.0, 4119.0, -417.0, 31.0, 0.0}},
    {1.0 / 14283827712000.0, {263153.0, -2326361.0, 1548693.0, 8100995.0, -14510285.0, 8807157.0, -2114809.0, 231457.0}},
    {1.0 / 2414036512742400.0, {-8595883.0, 102747894.0, -333628629.0, 478953236.0, -333628629.0, 102747894.0, -8595883.0, 0.0}},
    {1.0 / 1707715682420143334400.0, {-7116901873.0, -14741865512.0, 194866013323.0, -504110518380.0, 611710816085.0, -388546549192.0, 122342163217.0, -14403157668.0}},
    {15510384942580921.0 / 14298523960089600.0, {1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0, 0.0}},
    {12210527897166191835083.0 / 11256492103839818035200.0, {-1.0, 7.0, -21.0, 35.0, -35.0, 21.0, -7.0, 1.0}},
}};

}  // namespace tenom::stencil::detail
