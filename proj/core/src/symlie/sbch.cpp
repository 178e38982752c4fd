#include "mzsplit/symlie/sbch.hpp"

#include "mzsplit/symlie/commutator.hpp"

namespace mz::symlie {

LieElement sbch(const LieElement& x, const LieElement& y, Truncation rule, const SbchCoefficients& c) {
    auto br = [rule](const LieElement& a, const LieElement& b) { return commute(a, b, rule); };

    const LieElement xy = br(x, y);
    const LieElement xxy = br(x, xy);
    const LieElement yxy = br(y, xy);
    const LieElement xxxy = br(x, xxy);

    LieElement z = x + y;
    z += c.xxy * xxy;
    z += c.yxy * yxy;
    z += c.xxxxy * br(x, xxxy);
    z += c.yxxxy * br(y, xxxy);
    z += c.yyxxy * br(y, br(y, xxy));
    z += c.yyyxy * br(y, br(y, yxy));
    z += c.xy_xxy * br(xy, xxy);
    z += c.xy_yxy * br(xy, yxy);
    return truncate(z, rule);
}

}  // namespace mz::symlie
