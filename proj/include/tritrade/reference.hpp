#pragma once

// Reference tables for dimensions 0..7, shipped as data. Generated from
// data/reference_tables.json; a unit test keeps the two in sync.

#include <array>
#include <cstdint>
#include <span>

namespace tritrade::reference {

/// Number of line-sum-zero {-1,0,+1} functions on Q_3^n, n = 0..7.
inline constexpr std::array<std::uint64_t, 8> function_counts = {
    3ULL, 7ULL, 31ULL, 403ULL, 29875ULL, 32184151ULL, 1488159817231ULL, 6171914027409468739ULL};

/// Number of equivalence classes; the n = 7 entry is a lower bound only.
inline constexpr std::array<std::uint64_t, 8> class_counts = {
    2ULL, 2ULL, 3ULL, 5ULL, 13ULL, 92ULL, 25493ULL, 2187260868ULL};
inline constexpr int class_count_exact_max_n = 6;

struct HalfCardinality {
    int n;
    double mean;
    double stddev;
};

inline constexpr std::array<HalfCardinality, 6> half_cardinality = {{
    {2, 2.4, 0.49},
    {3, 6.448, 1.188},
    {4, 17.96, 2.342},
    {5, 50.527, 4.776},
    {6, 142.25, 10.07},
    {7, 398.17, 22.59},
}};

inline constexpr std::array<std::uint64_t, 1> spectrum_n1 = {
    3ULL,
};

inline constexpr std::array<std::uint64_t, 2> spectrum_n2 = {
    9ULL, 6ULL,
};

inline constexpr std::array<std::uint64_t, 6> spectrum_n3 = {
    27ULL, 0ULL, 54ULL, 108ULL, 0ULL, 12ULL,
};

inline constexpr std::array<std::uint64_t, 20> spectrum_n4 = {
    81ULL, 0ULL, 0ULL, 0ULL, 324ULL, 0ULL,
    1296ULL, 648ULL, 0ULL, 3888ULL, 2844ULL, 0ULL,
    4536ULL, 1296ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 24ULL,
};

inline constexpr std::array<std::uint64_t, 66> spectrum_n5 = {
    243ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 1620ULL, 0ULL, 0ULL, 0ULL,
    9720ULL, 0ULL, 9720ULL, 3888ULL, 0ULL, 0ULL,
    58320ULL, 0ULL, 41580ULL, 77760ULL, 0ULL, 116640ULL,
    301320ULL, 0ULL, 259200ULL, 660960ULL, 0ULL, 480816ULL,
    1368576ULL, 0ULL, 1156680ULL, 2468880ULL, 0ULL, 1415232ULL,
    2721600ULL, 0ULL, 1148040ULL, 2185056ULL, 0ULL, 583200ULL,
    816480ULL, 0ULL, 90720ULL, 104976ULL, 0ULL, 10800ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 48ULL,
};

inline constexpr std::array<std::uint64_t, 212> spectrum_n6 = {
    729ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 7290ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    58320ULL, 0ULL, 0ULL, 0ULL, 87480ULL, 0ULL,
    69984ULL, 23328ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    524880ULL, 0ULL, 0ULL, 0ULL, 370980ULL, 0ULL,
    1399680ULL, 0ULL, 0ULL, 699840ULL, 2099520ULL, 0ULL,
    4811400ULL, 466560ULL, 0ULL, 2799360ULL, 7290000ULL, 0ULL,
    16562880ULL, 2099520ULL, 0ULL, 6998400ULL, 15244848ULL, 0ULL,
    49968576ULL, 19012320ULL, 0ULL, 46889280ULL, 48114000ULL, 0ULL,
    149999040ULL, 48988800ULL, 0ULL, 173560320ULL, 158793696ULL, 0ULL,
    431451360ULL, 203303520ULL, 0ULL, 593464320ULL, 402077520ULL, 0ULL,
    1226726208ULL, 655983360ULL, 0ULL, 1759957632ULL, 1275108480ULL, 0ULL,
    3455693280ULL, 1610681760ULL, 0ULL, 4922674560ULL, 3332579760ULL, 0ULL,
    8667868320ULL, 4840793280ULL, 0ULL, 12263996160ULL, 7124630400ULL, 0ULL,
    19261521360ULL, 10458292320ULL, 0ULL, 25982259840ULL, 15546805632ULL, 0ULL,
    37437240960ULL, 17859890880ULL, 0ULL, 44159904000ULL, 26492909760ULL, 0ULL,
    56014493760ULL, 28054486080ULL, 0ULL, 58200653952ULL, 29447634240ULL, 0ULL,
    63563901120ULL, 30536701920ULL, 0ULL, 53914973760ULL, 27520508160ULL, 0ULL,
    44905723488ULL, 18151205760ULL, 0ULL, 28971976320ULL, 13573863360ULL, 0ULL,
    17778852000ULL, 6267067200ULL, 0ULL, 7903992960ULL, 2932269264ULL, 0ULL,
    2917632960ULL, 1190894400ULL, 0ULL, 772623360ULL, 243544320ULL, 0ULL,
    299531520ULL, 100077120ULL, 0ULL, 33592320ULL, 41290560ULL, 0ULL,
    5598720ULL, 6298560ULL, 0ULL, 0ULL, 1179360ULL, 0ULL,
    3079296ULL, 3429216ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 77760ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 96ULL,
};

inline constexpr std::array<std::uint64_t, 666> spectrum_n7 = {
    2187ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 30618ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    306180ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 612360ULL, 0ULL, 0ULL, 0ULL,
    734832ULL, 0ULL, 489888ULL, 139968ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    3674160ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 2585520ULL, 0ULL, 0ULL, 0ULL,
    14696640ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    14696640ULL, 0ULL, 22044960ULL, 5878656ULL, 0ULL, 0ULL,
    48376440ULL, 0ULL, 9797760ULL, 0ULL, 0ULL, 0ULL,
    58786560ULL, 0ULL, 105325920ULL, 9797760ULL, 0ULL, 29393280ULL,
    252292320ULL, 0ULL, 48988800ULL, 19595520ULL, 0ULL, 0ULL,
    264539520ULL, 0ULL, 258660864ULL, 39191040ULL, 0ULL, 58786560ULL,
    849465792ULL, 0ULL, 417384576ULL, 64665216ULL, 0ULL, 118599552ULL,
    1102248000ULL, 0ULL, 1026927720ULL, 440899200ULL, 0ULL, 117573120ULL,
    3241833840ULL, 0ULL, 1646023680ULL, 881798400ULL, 0ULL, 411505920ULL,
    5472048960ULL, 0ULL, 4595639328ULL, 1293304320ULL, 0ULL, 1175731200ULL,
    13190234400ULL, 0ULL, 6642881280ULL, 4967464320ULL, 0ULL, 2792361600ULL,
    23992754688ULL, 0ULL, 14767655616ULL, 8897345856ULL, 0ULL, 5232003840ULL,
    48779617824ULL, 0ULL, 29422673280ULL, 19428958080ULL, 0ULL, 13418032320ULL,
    86712135552ULL, 0ULL, 56942131680ULL, 43070952960ULL, 0ULL, 29628426240ULL,
    174586285440ULL, 0ULL, 108140326560ULL, 100338860160ULL, 0ULL, 60767667072ULL,
    333349188480ULL, 0ULL, 211194390960ULL, 197052549120ULL, 0ULL, 133406300160ULL,
    633974103504ULL, 0ULL, 394756649280ULL, 437915782080ULL, 0ULL, 284879669760ULL,
    1184769633600ULL, 0ULL, 732195313920ULL, 918265662720ULL, 0ULL, 553710608640ULL,
    2237431905072ULL, 0ULL, 1396486980000ULL, 1839642114240ULL, 0ULL, 1166266563840ULL,
    4133841505920ULL, 0ULL, 2463586985664ULL, 3699825232320ULL, 0ULL, 2436508916352ULL,
    7740828063360ULL, 0ULL, 4633391621376ULL, 7373480647680ULL, 0ULL, 4422630481920ULL,
    14095095607296ULL, 0ULL, 9008038009152ULL, 14256009258624ULL, 0ULL, 8787284896320ULL,
    25936010563680ULL, 0ULL, 15056472533760ULL, 27127920314880ULL, 0ULL, 17656455116160ULL,
    46489296385728ULL, 0ULL, 28595219380560ULL, 51865158776256ULL, 0ULL, 30807273127680ULL,
    84076043325120ULL, 0ULL, 53419783072320ULL, 96717020198400ULL, 0ULL, 59173324616448ULL,
    151123241747520ULL, 0ULL, 87927292938240ULL, 177969306401280ULL, 0ULL, 112318130615040ULL,
    267008385528864ULL, 0ULL, 160800706809792ULL, 321325302945024ULL, 0ULL, 188053645282560ULL,
    466481709832320ULL, 0ULL, 291050421480000ULL, 570238841894400ULL, 0ULL, 343218104712000ULL,
    806560729743456ULL, 0ULL, 464604287555520ULL, 996450456984192ULL, 0ULL, 620225396784000ULL,
    1373638417522560ULL, 0ULL, 816009087669552ULL, 1708948701149760ULL, 0ULL, 982341376894080ULL,
    2305937678879520ULL, 0ULL, 1414154728014336ULL, 2868447898270080ULL, 0ULL, 1691741075976000ULL,
    3783164938709184ULL, 0ULL, 2145564791750016ULL, 4708186964144640ULL, 0ULL, 2866434717250944ULL,
    6089563693805760ULL, 0ULL, 3543718526510400ULL, 7547844801104640ULL, 0ULL, 4235506218558720ULL,
    9574787807964288ULL, 0ULL, 5748041164944960ULL, 11803431065489280ULL, 0ULL, 6789801853310400ULL,
    14687203311950400ULL, 0ULL, 8100416661309504ULL, 17888868241614720ULL, 0ULL, 10588066580077056ULL,
    21840361606638720ULL, 0ULL, 12363491876450400ULL, 26269417255213440ULL, 0ULL, 14285288100787200ULL,
    31462082237108160ULL, 0ULL, 18299032850230272ULL, 37233543050766720ULL, 0ULL, 20709927455180544ULL,
    43720111582963200ULL, 0ULL, 23313370728464640ULL, 50763763455713280ULL, 0ULL, 28924064989464960ULL,
    58412989843236000ULL, 0ULL, 31813638206316480ULL, 66303578484210816ULL, 0ULL, 34565462372004480ULL,
    74583100623265920ULL, 0ULL, 41520901293714528ULL, 82545422286942720ULL, 0ULL, 43826073580183104ULL,
    90590698165121280ULL, 0ULL, 45970461276122880ULL, 97356175759100160ULL, 0ULL, 52673395505996160ULL,
    103853217900781440ULL, 0ULL, 53561231066238336ULL, 108100043912367360ULL, 0ULL, 53128915099827840ULL,
    111570541229580480ULL, 0ULL, 58350442395913920ULL, 112097875912081920ULL, 0ULL, 55765902028032000ULL,
    111406452367500864ULL, 0ULL, 52657506351233280ULL, 107575556428968768ULL, 0ULL, 53994455165468160ULL,
    102377410528901760ULL, 0ULL, 48778189150406400ULL, 94582347577421760ULL, 0ULL, 42669649619928576ULL,
    85745409629443200ULL, 0ULL, 40987358888555520ULL, 75337864538158080ULL, 0ULL, 34117558361470080ULL,
    64695169565885376ULL, 0ULL, 27623026142341056ULL, 53722349499008448ULL, 0ULL, 24230050550665344ULL,
    43420216983171840ULL, 0ULL, 18493690067425440ULL, 33854862632935680ULL, 0ULL, 13546143606925440ULL,
    25584444523483776ULL, 0ULL, 10783563464378880ULL, 18568192776336000ULL, 0ULL, 7350295708661760ULL,
    13016846960075520ULL, 0ULL, 4835426179046400ULL, 8727631849641600ULL, 0ULL, 3393591789458304ULL,
    5646375105114240ULL, 0ULL, 2053100209063680ULL, 3458776067268480ULL, 0ULL, 1173620938855680ULL,
    2041794442509696ULL, 0ULL, 728670130929216ULL, 1138311067888512ULL, 0ULL, 375048142382592ULL,
    609672959421120ULL, 0ULL, 191348768439360ULL, 307095833018880ULL, 0ULL, 99253170374400ULL,
    152237238241536ULL, 0ULL, 46874958318720ULL, 69750838786176ULL, 0ULL, 19948807630080ULL,
    31988971163520ULL, 0ULL, 10729375110720ULL, 13802819748480ULL, 0ULL, 3921475057920ULL,
    6002269439040ULL, 0ULL, 1657927958400ULL, 2388145213440ULL, 0ULL, 1007425278720ULL,
    1073677731840ULL, 0ULL, 520179426144ULL, 484107321600ULL, 0ULL, 144614937600ULL,
    245492674560ULL, 0ULL, 205312060800ULL, 136090886400ULL, 0ULL, 89050752000ULL,
    73071694080ULL, 0ULL, 20222576640ULL, 49468890240ULL, 0ULL, 45500797440ULL,
    28217548800ULL, 0ULL, 15872371200ULL, 12433357440ULL, 0ULL, 3174474240ULL,
    2821754880ULL, 0ULL, 12580323840ULL, 4938071040ULL, 0ULL, 3853785600ULL,
    1058158080ULL, 0ULL, 0ULL, 529079040ULL, 0ULL, 1410877440ULL,
    0ULL, 0ULL, 1162667520ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 235146240ULL, 0ULL, 0ULL, 264539520ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 12700800ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 129330432ULL, 120932352ULL, 0ULL, 71197056ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 520128ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 0ULL,
    0ULL, 0ULL, 0ULL, 0ULL, 0ULL, 192ULL,
};

/// Bitrade counts (sets, not signed functions) at sizes 2^n, 2^n + 2, ...,
/// 2 * 3^(n-1); empty span for n outside 1..7.
inline std::span<const std::uint64_t> spectrum(int n) {
    switch (n) {
    case 1: return spectrum_n1;
    case 2: return spectrum_n2;
    case 3: return spectrum_n3;
    case 4: return spectrum_n4;
    case 5: return spectrum_n5;
    case 6: return spectrum_n6;
    case 7: return spectrum_n7;
    default: return {};
    }
}

} // namespace tritrade::reference
