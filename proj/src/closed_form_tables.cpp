#include "pcdpe/closed_form_tables.hpp"

// Piecewise rational coefficient tables for the null/alternative moments of the
// relative edge density of proportional-edge PCD underlying graphs.  All
// coefficients are exact integers (|c| < 2^53); evaluation is Horner in long
// double.  Univariate tables are in r; bivariate tables are in (r, eps) with
// each coefficient split as a + b*sqrt(3).

namespace pcdpe::tables {

const double kMeanBreaks[3] = {4.0 / 3.0, 1.5, 2.0};

const double kNuBreaks[10] = {
    1.1547005383792515,
    1.2,
    1.2360679774997897,
    1.2612038749637414,
    1.3333333333333333,
    1.4104261923153453,
    1.5,
    1.6180339887498948,
    1.7071067811865475,
    2.0
};

constexpr double kMuAnd_n0[] = {
    128, -360, 54, 423, -393, 153, -5};
constexpr double kMuAnd_d0[] = {
    0, 0, 108, 162, 54};
constexpr double kMuAnd_n1[] = {
    -672, 536, 732, -1302, 801, -101};
constexpr double kMuAnd_d1[] = {
    0, 432, 648, 216};
constexpr double kMuAnd_n2[] = {
    96, -368, 288, 264, -448, 148, 30, -13,
    1};
constexpr double kMuAnd_d2[] = {
    0, 0, 0, 0, 16, 24, 8};
constexpr double kMuAnd_n3[] = {
    -2, 6, -3, -3, 1, 1};
constexpr double kMuAnd_d3[] = {
    0, 0, 0, 0, 1, 1};
const RationalPoly kMuAnd[] = {
  {kMuAnd_n0, 7, kMuAnd_d0, 5},
  {kMuAnd_n1, 6, kMuAnd_d1, 4},
  {kMuAnd_n2, 9, kMuAnd_d2, 7},
  {kMuAnd_n3, 6, kMuAnd_d3, 6},
};

constexpr double kMuOr_n0[] = {
    -256, 720, -108, -846, 860, -195, 47};
constexpr double kMuOr_d0[] = {
    0, 0, 216, 324, 108};
constexpr double kMuOr_n1[] = {
    672, -536, -732, 1450, -579, 175};
constexpr double kMuOr_d1[] = {
    0, 432, 648, 216};
constexpr double kMuOr_n2[] = {
    -96, 368, -144, -304, 264, -84, 30, 7,
    -3};
constexpr double kMuOr_d2[] = {
    0, 0, 0, 0, 16, 24, 8};
constexpr double kMuOr_n3[] = {
    2, -6, 0, 0, 1, 1};
constexpr double kMuOr_d3[] = {
    0, 0, 0, 0, 1, 1};
const RationalPoly kMuOr[] = {
  {kMuOr_n0, 7, kMuOr_d0, 5},
  {kMuOr_n1, 6, kMuOr_d1, 4},
  {kMuOr_n2, 9, kMuOr_d2, 7},
  {kMuOr_n3, 6, kMuOr_d3, 6},
};

constexpr double kVarAnd_n0[] = {
    -16384, 92160, -129600, -87552, 356676, -332820, 3953, 288054,
    -280323, 131940, -27609, 1530, -25};
constexpr double kVarAnd_d0[] = {
    0, 0, 0, 0, 11664, 34992, 37908, 17496,
    2916};
constexpr double kVarAnd_n1[] = {
    -451584, 430080, 492608, -2016192, 1964112, 572160, -2565412, 2341236,
    -926421, 161802, -10201};
constexpr double kVarAnd_d1[] = {
    0, 0, 186624, 559872, 606528, 279936, 46656};
constexpr double kVarAnd_n2[] = {
    -9216, 70656, -190720, 161280, 198912, -513792, 288064, 184064,
    -304416, 118720, 11712, -19360, 3788, 404, -221, 26,
    -1};
constexpr double kVarAnd_d2[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    256, 768, 832, 384, 64};
constexpr double kVarAnd_n3[] = {
    -4, 24, -48, 24, 29, -22, -12, 6,
    3};
constexpr double kVarAnd_d3[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    1, 2, 1};
const RationalPoly kVarAnd[] = {
  {kVarAnd_n0, 13, kVarAnd_d0, 9},
  {kVarAnd_n1, 11, kVarAnd_d1, 7},
  {kVarAnd_n2, 17, kVarAnd_d2, 13},
  {kVarAnd_n3, 9, kVarAnd_d3, 11},
};

constexpr double kVarOr_n0[] = {
    -65536, 368640, -628992, -205056, 1829200, -1660944, -325100, 1490472,
    -1019536, 409092, -113789, 18330, -2209};
constexpr double kVarOr_d0[] = {
    0, 0, 0, 0, 46656, 139968, 151632, 69984,
    11664};
constexpr double kVarOr_n1[] = {
    -451584, 1010688, 900416, -3251904, 1833040, 1798272, -2748948, 1923636,
    -804941, 202650, -30625};
constexpr double kVarOr_d1[] = {
    0, 0, 186624, 559872, 606528, 279936, 46656};
constexpr double kVarOr_n2[] = {
    -9216, 70656, -163072, 47616, 252160, -294400, 56960, 110208,
    -122080, 69376, -18928, -320, 2220, -940, 107, 42,
    -9};
constexpr double kVarOr_d2[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    256, 768, 832, 384, 64};
constexpr double kVarOr_n3[] = {
    -4, 24, -36, 0, -2, 4, 6};
constexpr double kVarOr_d3[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    1, 2, 1};
const RationalPoly kVarOr[] = {
  {kVarOr_n0, 13, kVarOr_d0, 9},
  {kVarOr_n1, 11, kVarOr_d1, 7},
  {kVarOr_n2, 17, kVarOr_d2, 13},
  {kVarOr_n3, 7, kVarOr_d3, 11},
};

constexpr double kNuAnd_n0[] = {
    81920, 21104, -514744, -595876, 1009438, 981562, 415884, -274992,
    3278351, -10097743, -5927912, 20927860, -3465204, -10316004, 4861328, -918460,
    514531, 114829, -60164, -27932, -6804, -972};
constexpr double kNuAnd_d0[] = {
    0, 0, 0, 0, 0, 0, 233280, 933120,
    1924560, 2974320, 3324240, 2274480, 816480, 116640};
constexpr double kNuAnd_n1[] = {
    -49152, -219936, 55952, 680120, 1616444, -586636, -3262952, -4185440,
    13013598, -7159710, -13293088, 27667544, -11140788, -13434672, 13836295, -3251855,
    -443518, 118850, 45155, 269, -3402, -486};
constexpr double kNuAnd_d1[] = {
    0, 0, 0, 0, 0, 0, 466560, 1866240,
    3849120, 5948640, 6648480, 4548960, 1632960, 233280};
constexpr double kNuAnd_n2[] = {
    -49152, -219936, 3041936, -2305864, -2364868, 4168820, -11101160, 2832544,
    30889822, -27137438, -24604048, 43009544, -8770788, -18084672, 13736295, -2751855,
    -443518, 118850, 45155, 269, -3402, -486};
constexpr double kNuAnd_d2[] = {
    0, 0, 0, 0, 0, 0, 466560, 1866240,
    3849120, 5948640, 6648480, 4548960, 1632960, 233280};
constexpr double kNuAnd_n3[] = {
    98304, 489024, -1931776, -4646688, 2004944, 9167580, 5806580, 11284026,
    -39974410, -32551926, 81700012, 2280753, -62283823, 26295324, 10894618, -12849927,
    4791125, 297666, -1353430, 441888, 60328, -25632, -3632};
constexpr double kNuAnd_d3[] = {
    0, 0, 0, 0, 0, 0, -933120, -4199040,
    -9097920, -13646880, -14463360, -7873200, 1807920, 5773680, 3674160, 1049760,
    116640};
constexpr double kNuAnd_n4[] = {
    -65536, -23328, -340736, 5513952, -4719720, -61038, 4936170, -27901506,
    30178496, 8239197, -39261953, 41623065, -11797395, -23837088, 23566328, -5424126,
    -1200518, 1167012, -958940, 364992, 49432, -25632, -3632};
constexpr double kNuAnd_d4[] = {
    0, 0, 0, 0, 0, 0, 466560, 2099520,
    5248800, 9972720, 14405040, 15746400, 13530240, 8922960, 4024080, 1049760,
    116640};
constexpr double kNuAnd_n5[] = {
    993024, -2545664, 15628032, -21111616, 17591952, 12246288, -97568688, 158439568,
    -69106464, -178092280, 262451196, -65530400, -76052574, 81624200, -69243129, 27825711,
    10220280, -9774118, 2105697, -103099, -11142, 1562};
constexpr double kNuAnd_d5[] = {
    0, 0, 0, 0, 0, 3732480, 16796160, 41990400,
    79781760, 115240320, 125971200, 108241920, 71383680, 32192640, 8398080, 933120};
constexpr double kNuAnd_n6[] = {
    993024, -2545664, 15628032, -21111616, 17591952, 12246288, -97568688, 158439568,
    -69106464, -178092280, 262451196, -65530400, -76052574, 81624200, -69243129, 27825711,
    10220280, -9774118, 2105697, -103099, -11142, 1562};
constexpr double kNuAnd_d6[] = {
    0, 0, 0, 0, 0, 3732480, 16796160, 41990400,
    79781760, 115240320, 125971200, 108241920, 71383680, 32192640, 8398080, 933120};
constexpr double kNuAnd_n7[] = {
    -61440, 116736, -635904, 3576320, -6666240, 4579328, 3864576, -17326976,
    28084416, -13109584, -20482512, 32987760, -22789584, 2665248, 18946136, -18512684,
    1589216, 5313494, -2066216, -245667, 268053, -29528, -8770, 2395,
    -281, 30, -2};
constexpr double kNuAnd_d7[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 15360, 69120, 172800, 328320, 474240, 518400,
    445440, 293760, 132480, 34560, 3840};
constexpr double kNuAnd_n8[] = {
    -63488, 107520, -640512, 3603200, -6638848, 4575488, 3862784, -17416832,
    27988416, -12930896, -20384720, 32858736, -22736336, 2598688, 18837080, -18337836,
    1608928, 5219030, -2052136, -225443, 262677, -31064, -8258, 2395,
    -281, 30, -2};
constexpr double kNuAnd_d8[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 15360, 69120, 172800, 328320, 474240, 518400,
    445440, 293760, 132480, 34560, 3840};
constexpr double kNuAnd_n9[] = {
    -63488, 171008, -430592, 3388672, -7327232, -7781120, 42614272, -27142272,
    -66358080, 98636848, 15515040, -106256352, 44860384, 40677696, -36944680, 437020,
    8676180, -2446870, -524994, 328867, -21934, -11572, 2612, -307,
    32, -2};
constexpr double kNuAnd_d9[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 15360, 53760, 26880, -113280, -172800, -34560,
    99840, 90240, 30720, 3840};
constexpr double kNuAnd_n10[] = {
    -2, 6, 44, -292, 295, 909, -1370, -858,
    1568, 320, -621, -127, 90, 30};
constexpr double kNuAnd_d10[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, -15, -45, -15, 75, 90, 30};
const RationalPoly kNuAnd[] = {
  {kNuAnd_n0, 22, kNuAnd_d0, 14},
  {kNuAnd_n1, 22, kNuAnd_d1, 14},
  {kNuAnd_n2, 22, kNuAnd_d2, 14},
  {kNuAnd_n3, 23, kNuAnd_d3, 17},
  {kNuAnd_n4, 23, kNuAnd_d4, 17},
  {kNuAnd_n5, 22, kNuAnd_d5, 16},
  {kNuAnd_n6, 22, kNuAnd_d6, 16},
  {kNuAnd_n7, 27, kNuAnd_d7, 21},
  {kNuAnd_n8, 27, kNuAnd_d8, 21},
  {kNuAnd_n9, 26, kNuAnd_d9, 20},
  {kNuAnd_n10, 14, kNuAnd_d10, 16},
};

constexpr double kNuOr_n0[] = {
    -30824, 132876, -1645826, 5608569, -7085471, 2234754, 10290256, -32338215,
    36606859, 1754523, -49876417, 60944766, -15883834, -37427862, 33432692, -2978697,
    -5576151, 1823223, 19193, 84225, -50731, -13122, -1458};
constexpr double kNuOr_d0[] = {
    0, 0, 0, 0, 0, 0, 466560, 2099520,
    5248800, 9972720, 14405040, 15746400, 13530240, 8922960, 4024080, 1049760,
    116640};
constexpr double kNuOr_n1[] = {
    -28880, 413208, -3070468, 11254002, -14541630, 3667716, 19812000, -64360782,
    74801558, 4883958, -99831906, 120628524, -33155180, -75243552, 67685050, -5055135,
    -11053023, 3300900, -156014, 175011, -62825, -13122, -1458};
constexpr double kNuOr_d1[] = {
    0, 0, 0, 0, 0, 0, 933120, 4199040,
    10497600, 19945440, 28810080, 31492800, 27060480, 17845920, 8048160, 2099520,
    233280};
constexpr double kNuOr_n2[] = {
    -28880, 413208, -3070468, 11254002, -14541630, 3667716, 19812000, -64360782,
    74801558, 4883958, -99831906, 120628524, -33155180, -75243552, 67685050, -5055135,
    -11053023, 3300900, -156014, 175011, -62825, -13122, -1458};
constexpr double kNuOr_d2[] = {
    0, 0, 0, 0, 0, 0, 933120, 4199040,
    10497600, 19945440, 28810080, 31492800, 27060480, 17845920, 8048160, 2099520,
    233280};
constexpr double kNuOr_n3[] = {
    28880, -413208, 7037340, -17019366, 13006396, 5940597, -43754559, 88962768,
    -56621894, -64653597, 152209261, -123606417, -27378901, 156173934, -85975304, -43450125,
    47189711, -2883672, -5942884, 986280, 36820, 149106, -29590, -8748,
    -972};
constexpr double kNuOr_d3[] = {
    0, 0, 0, 0, 0, 0, -933120, -4199040,
    -10031040, -17845920, -23561280, -21520080, -12655440, -2099520, 5482080, 6823440,
    3790800, 1049760, 116640};
constexpr double kNuOr_n4[] = {
    1944, -14580, -2292994, 5055609, -3136927, 115074, 9107024, -26778663,
    22237963, 7381467, -31497249, 43126062, -19600850, -26163354, 29416804, -4573731,
    -3745643, 1552026, -261546, 131610, -31534, -8748, -972};
constexpr double kNuOr_d4[] = {
    0, 0, 0, 0, 0, 0, 466560, 2099520,
    5248800, 9972720, 14405040, 15746400, 13530240, 8922960, 4024080, 1049760,
    116640};
constexpr double kNuOr_n5[] = {
    7776, -58320, 134136, 1593828, -8656508, 14179848, -12851392, -26383068,
    88057996, -57216612, -46658244, 125034492, -98093906, -29292735, 80028903, -33347697,
    1844321, 3921057, -2691213, 1024401, -181459, -7290, 486};
constexpr double kNuOr_d5[] = {
    0, 0, 0, 0, 0, 0, 1866240, 8398080,
    20995200, 39890880, 57620160, 62985600, 54120960, 35691840, 16096320, 4199040,
    466560};
constexpr double kNuOr_n6[] = {
    -31104, 544320, -4315680, 17736336, -40690240, 48283912, 4053376, -77449360,
    75311048, -39129236, -19357704, 80410332, 18577230, -122708655, 18516450, 91134324,
    -63559490, 7460036, 8763566, -4656806, 1205860, -174169, -7776, 486};
constexpr double kNuOr_d6[] = {
    0, 0, 0, 0, 0, 0, -1866240, -6531840,
    -12597120, -18895680, -17729280, -5365440, 8864640, 18429120, 19595520, 11897280,
    3732480, 466560};
constexpr double kNuOr_n7[] = {
    -245760, 1701888, -2687872, 523712, 1137696, -7797264, 10691376, 526744,
    -6773160, 9535720, -8695792, -1468692, 6565124, -3723120, 517846, 697707,
    -450859, 78713, 8367, -10685, 4137, 107, -161, -30,
    2};
constexpr double kNuOr_d7[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    7680, 34560, 86400, 164160, 237120, 259200, 222720, 146880,
    66240, 17280, 1920};
constexpr double kNuOr_n8[] = {
    -1024, -3584, -244480, 1959808, -4633984, 5155776, -4018976, -3823216,
    14466592, -13850504, 7126240, 2344968, -11014136, 9512164, -3001568, -634128,
    1161830, -511355, 67536, 21289, -15610, 4157, 236, -129,
    -32, 2};
constexpr double kNuOr_d8[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 7680, 26880, 59520, 104640, 132480, 126720,
    96000, 50880, 15360, 1920};
constexpr double kNuOr_n9[] = {
    -1024, -2560, -235776, 2217088, -5402752, -1262208, 20667776, -19910592,
    -14886656, 33980568, -12243496, -11274744, 12748688, -5130844, 89468, 1196092,
    -717366, 166787, 23049, -26982, 5400, 433, -101, -34,
    2};
constexpr double kNuOr_d9[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 7680, 19200, -5760, -50880, -35520, 18240,
    31680, 13440, 1920};
constexpr double kNuOr_n10[] = {
    2, -8, 78, -380, 428, 792, -1296, -96,
    360};
constexpr double kNuOr_d10[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, -15, -30, 15, 60, 30};
const RationalPoly kNuOr[] = {
  {kNuOr_n0, 23, kNuOr_d0, 17},
  {kNuOr_n1, 23, kNuOr_d1, 17},
  {kNuOr_n2, 23, kNuOr_d2, 17},
  {kNuOr_n3, 25, kNuOr_d3, 19},
  {kNuOr_n4, 23, kNuOr_d4, 17},
  {kNuOr_n5, 23, kNuOr_d5, 17},
  {kNuOr_n6, 24, kNuOr_d6, 18},
  {kNuOr_n7, 25, kNuOr_d7, 19},
  {kNuOr_n8, 26, kNuOr_d8, 20},
  {kNuOr_n9, 25, kNuOr_d9, 19},
  {kNuOr_n10, 9, kNuOr_d10, 15},
};

constexpr double kMuSegAnd_na0[] = {
    128, 0, 0, 0, 0, -360, 0, 0,
    0, 0, 54, 0, 0, 0, 576, 423,
    0, 0, 0, 864, -393, 0, 0, 0,
    -288, 153, 0, 0, 0, -864, -5, 0,
    0, 0, -288};
constexpr double kMuSegAnd_da0[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 108, 0, -864, 0, 1728, 162,
    0, -1296, 0, 2592, 54, 0, -432, 0,
    864};
constexpr double kMuSegAnd_na1[] = {
    -672, 0, 0, 0, 0, 536, 0, 0,
    0, 2304, 732, 0, 0, 0, 3456, -1302,
    0, 0, 0, -1152, 801, 0, 0, 0,
    -3456, -101, 0, 0, 0, -1152};
constexpr double kMuSegAnd_da1[] = {
    0, 0, 0, 0, 0, 432, 0, -3456,
    0, 6912, 648, 0, -5184, 0, 10368, 216,
    0, -1728, 0, 3456};
constexpr double kMuSegAnd_na2[] = {
    288, 0, 0, 0, 0, -1104, 0, 0,
    0, 0, 864, 0, 0, 0, 0, 792,
    0, 0, 0, 0, -1344, 0, 0, 0,
    256, 444, 0, 0, 0, 384, 90, 0,
    0, 0, -128, -39, 0, 0, 0, -384,
    3, 0, 0, 0, -128};
constexpr double kMuSegAnd_da2[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 48, 0, -384, 0,
    768, 72, 0, -576, 0, 1152, 24, 0,
    -192, 0, 384};
constexpr double kMuSegAnd_na3[] = {
    -6, 0, 0, 0, 0, 18, 0, 0,
    0, 0, -9, 0, 0, 0, 0, -9,
    0, 0, 0, 0, 3, 0, 0, 0,
    16, 3, 0, 0, 0, 16, 0, 0,
    0, 0, -16, 0, 0, 0, 0, -16};
constexpr double kMuSegAnd_da3[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 3, 0, -24, 0,
    48, 3, 0, -24, 0, 48};
const BivariateRational kMuSegAnd[] = {
  {{kMuSegAnd_na0, nullptr, 7, 5}, {kMuSegAnd_da0, nullptr, 5, 5}},
  {{kMuSegAnd_na1, nullptr, 6, 5}, {kMuSegAnd_da1, nullptr, 4, 5}},
  {{kMuSegAnd_na2, nullptr, 9, 5}, {kMuSegAnd_da2, nullptr, 7, 5}},
  {{kMuSegAnd_na3, nullptr, 8, 5}, {kMuSegAnd_da3, nullptr, 6, 5}},
};

constexpr double kMuSegOr_na0[] = {
    -256, 0, 0, 0, 0, 720, 0, 0,
    0, 0, -108, 0, -576, 0, 1152, -846,
    0, -864, 0, 1728, 860, 0, -288, 0,
    576, -195, 0, 0, 0, 0, 47, 0,
    0, 0, 0};
constexpr double kMuSegOr_da0[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 216, 0, -1728, 0, 3456, 324,
    0, -2592, 0, 5184, 108, 0, -864, 0,
    1728};
constexpr double kMuSegOr_na1[] = {
    672, 0, 0, 0, 0, -536, 0, -1152,
    0, 2304, -732, 0, -1728, 0, 3456, 1450,
    0, -576, 0, 1152, -579, 0, 0, 0,
    0, 175, 0, 0, 0, 0};
constexpr double kMuSegOr_da1[] = {
    0, 0, 0, 0, 0, 432, 0, -3456,
    0, 6912, 648, 0, -5184, 0, 10368, 216,
    0, -1728, 0, 3456};
constexpr double kMuSegOr_na2[] = {
    -864, 0, 0, 0, 0, 3312, 0, 0,
    0, 0, -1296, 0, -6912, 0, -1536, -2736,
    0, -1152, 0, -2304, 2376, 0, 6912, 0,
    0, -756, 0, -576, 0, 1152, 270, 0,
    -1728, 0, 384, 63, 0, 0, 0, 0,
    -27, 0, 0, 0, 0};
constexpr double kMuSegOr_nb2[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 3072, 0, 0,
    0, 0, 2560, 0, 0, 0, 0, -1536,
    0, 0, 0, 0, -1024, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0};
constexpr double kMuSegOr_da2[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 144, 0, -1152, 0,
    2304, 216, 0, -1728, 0, 3456, 72, 0,
    -576, 0, 1152};
constexpr double kMuSegOr_na3[] = {
    18, 0, 0, 0, 0, -54, 0, 0,
    0, 0, 0, 0, 144, 0, 32, 0,
    0, 144, 0, 32, 9, 0, -72, 0,
    48, 9, 0, -72, 0, 48};
constexpr double kMuSegOr_nb3[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, -64, 0, 0,
    0, 0, -64, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0};
constexpr double kMuSegOr_da3[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 9, 0, -72, 0,
    144, 9, 0, -72, 0, 144};
const BivariateRational kMuSegOr[] = {
  {{kMuSegOr_na0, nullptr, 7, 5}, {kMuSegOr_da0, nullptr, 5, 5}},
  {{kMuSegOr_na1, nullptr, 6, 5}, {kMuSegOr_da1, nullptr, 4, 5}},
  {{kMuSegOr_na2, kMuSegOr_nb2, 9, 5}, {kMuSegOr_da2, nullptr, 7, 5}},
  {{kMuSegOr_na3, kMuSegOr_nb3, 6, 5}, {kMuSegOr_da3, nullptr, 6, 5}},
};

constexpr double kMuAssocAnd_na0[] = {
    128, 0, -5760, 0, -8640, -360, 0, -1728,
    0, -12960, 54, 0, 12096, 0, 7776, 423,
    0, 3456, 0, 18144, -393, 0, -6912, 0,
    7776, 153, 0, -1728, 0, 2592, -5, 0,
    576, 0, 864};
constexpr double kMuAssocAnd_nb0[] = {
    0, 0, 0, 3072, 0, 0, 0, 0,
    0, 0, 0, 0, 0, -6912, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 4608,
    0, 0, 0, 0, 0, 0, 0, 0,
    0, -768, 0};
constexpr double kMuAssocAnd_da0[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 108, 0, -2592, 0, 15552, 162,
    0, -3888, 0, 23328, 54, 0, -1296, 0,
    7776};
constexpr double kMuAssocAnd_na1[] = {
    0, 0, 13824, 0, 20736, -672, 0, -6912,
    0, 31104, 536, 0, 4608, 0, 58752, 732,
    0, 17280, 0, 72576, -1302, 0, -17280, 0,
    31104, 801, 0, -6912, 0, 10368, -101, 0,
    2304, 0, 3456};
constexpr double kMuAssocAnd_nb1[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    -9216, 0, 0, 0, 0, -19968, 0, 0,
    0, 0, 4608, 0, 0, 0, 0, 18432,
    0, 0, 0, 0, 0, 0, 0, 0,
    0, -3072, 0};
constexpr double kMuAssocAnd_da1[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 432, 0, -10368, 0, 62208, 648,
    0, -15552, 0, 93312, 216, 0, -5184, 0,
    31104};
constexpr double kMuAssocAnd_na2[] = {
    96, 0, 0, 0, 0, -368, 0, 0,
    0, 0, 288, 0, 512, 0, 768, 264,
    0, 768, 0, 1152, -448, 0, -128, 0,
    2688, 148, 0, -576, 0, 3456, 30, 0,
    -192, 0, 1152, -13, 0, 0, 0, 0,
    1, 0, 0, 0, 0};
constexpr double kMuAssocAnd_da2[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 16, 0, -384, 0,
    2304, 24, 0, -576, 0, 3456, 8, 0,
    -192, 0, 1152};
constexpr double kMuAssocAnd_na3[] = {
    -2, 0, 0, 0, 0, 6, 0, 0,
    0, 0, -3, 0, 32, 0, 48, -3,
    0, 32, 0, 48, 1, 0, -24, 0,
    144, 1, 0, -24, 0, 144};
constexpr double kMuAssocAnd_da3[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 1, 0, -24, 0,
    144, 1, 0, -24, 0, 144};
const BivariateRational kMuAssocAnd[] = {
  {{kMuAssocAnd_na0, kMuAssocAnd_nb0, 7, 5}, {kMuAssocAnd_da0, nullptr, 5, 5}},
  {{kMuAssocAnd_na1, kMuAssocAnd_nb1, 7, 5}, {kMuAssocAnd_da1, nullptr, 5, 5}},
  {{kMuAssocAnd_na2, nullptr, 9, 5}, {kMuAssocAnd_da2, nullptr, 7, 5}},
  {{kMuAssocAnd_na3, nullptr, 6, 5}, {kMuAssocAnd_da3, nullptr, 6, 5}},
};

constexpr double kMuAssocOr_na0[] = {
    -256, 0, -9216, 0, -13824, 720, 0, 13824,
    0, -20736, -108, 0, 6912, 0, 31104, -846,
    0, -17280, 0, 57024, 860, 0, 1152, 0,
    12096, -195, 0, 0, 0, -10368, 47, 0,
    -2304, 0, -3456};
constexpr double kMuAssocOr_nb0[] = {
    0, 0, 0, -6144, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 13824, 0, 0,
    0, 0, 0, 0, 0, 0, 0, -6144,
    0, 0, 0, 0, 4608, 0, 0, 0,
    0, 3072, 0};
constexpr double kMuAssocOr_da0[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 216, 0, -5184, 0, 31104, 324,
    0, -7776, 0, 46656, 108, 0, -2592, 0,
    15552};
constexpr double kMuAssocOr_na1[] = {
    672, 0, 27648, 0, 0, -536, 0, -8064,
    0, 76032, -732, 0, -32832, 0, 114048, 1450,
    0, 7488, 0, 24192, -579, 0, 0, 0,
    -20736, 175, 0, -4608, 0, -6912};
constexpr double kMuAssocOr_nb1[] = {
    0, 0, 0, 9216, 0, 0, 0, 0,
    19968, 0, 0, 0, 0, -4608, 0, 0,
    0, 0, -12288, 0, 0, 0, 0, 9216,
    0, 0, 0, 0, 6144, 0};
constexpr double kMuAssocOr_da1[] = {
    0, 0, 0, 0, 0, 432, 0, -10368,
    0, 62208, 648, 0, -15552, 0, 93312, 216,
    0, -5184, 0, 31104};
constexpr double kMuAssocOr_na2[] = {
    -96, 0, 0, 0, 0, 368, 0, 0,
    0, 0, -144, 0, 0, 0, 0, -304,
    0, 0, 0, 0, 264, 0, -384, 0,
    2304, -84, 0, -576, 0, 3456, 30, 0,
    -192, 0, 1152, 7, 0, 0, 0, 0,
    -3, 0, 0, 0, 0};
constexpr double kMuAssocOr_da2[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 16, 0, -384, 0,
    2304, 24, 0, -576, 0, 3456, 8, 0,
    -192, 0, 1152};
constexpr double kMuAssocOr_na3[] = {
    2, 0, 0, 0, 0, -6, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 1, 0, -24, 0,
    144, 1, 0, -24, 0, 144};
constexpr double kMuAssocOr_da3[] = {
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 1, 0, -24, 0,
    144, 1, 0, -24, 0, 144};
const BivariateRational kMuAssocOr[] = {
  {{kMuAssocOr_na0, kMuAssocOr_nb0, 7, 5}, {kMuAssocOr_da0, nullptr, 5, 5}},
  {{kMuAssocOr_na1, kMuAssocOr_nb1, 6, 5}, {kMuAssocOr_da1, nullptr, 4, 5}},
  {{kMuAssocOr_na2, nullptr, 9, 5}, {kMuAssocOr_da2, nullptr, 7, 5}},
  {{kMuAssocOr_na3, nullptr, 6, 5}, {kMuAssocOr_da3, nullptr, 6, 5}},
};

}  // namespace pcdpe::tables
