#include "octolat/octonion.hpp"

namespace octolat {

// Compile-time spot checks of the generated multiplication table against the
// defining relations: e_0 neutral, squares -1, one entry per generating triple
// and its anti-commuted mirror, and the derived product e4 e6 = e5.
static_assert(kBasisTable[0][0].sign == 1 && kBasisTable[0][0].index == 0);
static_assert(kBasisTable[0][3].sign == 1 && kBasisTable[0][3].index == 3);
static_assert(kBasisTable[5][0].sign == 1 && kBasisTable[5][0].index == 5);
static_assert(kBasisTable[1][1].sign == -1 && kBasisTable[1][1].index == 0);
static_assert(kBasisTable[7][7].sign == -1 && kBasisTable[7][7].index == 0);
static_assert(kBasisTable[1][2].sign == 1 && kBasisTable[1][2].index == 4);
static_assert(kBasisTable[2][1].sign == -1 && kBasisTable[2][1].index == 4);
static_assert(kBasisTable[3][7].sign == 1 && kBasisTable[3][7].index == 4);
static_assert(kBasisTable[2][5].sign == 1 && kBasisTable[2][5].index == 7);
static_assert(kBasisTable[1][7].sign == 1 && kBasisTable[1][7].index == 6);
static_assert(kBasisTable[4][6].sign == 1 && kBasisTable[4][6].index == 5);
static_assert(kBasisTable[6][4].sign == -1 && kBasisTable[6][4].index == 5);

}  // namespace octolat
