#pragma once

#include "mzsplit/symlie/lie_element.hpp"

namespace mz::symlie {

/// Coefficients of log(e^{X/2} e^Y e^{X/2}) through grade five, in the basis
///   X, Y, [X,[X,Y]], [Y,[X,Y]],
///   [X,[X,[X,[X,Y]]]], [Y,[X,[X,[X,Y]]]], [Y,[Y,[X,[X,Y]]]], [Y,[Y,[Y,[X,Y]]]],
///   [[X,Y],[X,[X,Y]]], [[X,Y],[Y,[X,Y]]].
/// Even grades vanish by symmetry.
struct SbchCoefficients {
    Rational xxy{-1, 24};
    Rational yxy{-1, 12};
    Rational xxxxy{7, 5760};
    Rational yxxxy{7, 1440};
    Rational yyxxy{1, 180};
    Rational yyyxy{1, 720};
    Rational xy_xxy{1, 480};
    Rational xy_yxy{-1, 360};
};

/// Z with e^{X/2} e^{Y} e^{X/2} = e^{Z}, modulo terms discarded by `rule`.
LieElement sbch(const LieElement& x, const LieElement& y, Truncation rule = {},
                const SbchCoefficients& coefficients = {});

}  // namespace mz::symlie
