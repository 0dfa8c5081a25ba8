"""Closed-form ledger entries for the blown-quadric series, as rational
functions of the level n.  These are an independent check path for the
engine-computed S, M and F terms; the engine never evaluates them itself.
"""

from __future__ import annotations

from fractions import Fraction


def _poly(coeffs, n):
    return sum(c * n**k for k, c in enumerate(coeffs))


_A_N1 = (
    1536, 109312, 2935552, 42681728, 386407488, 2335296292, 9789648099,
    29038364761, 61312905318, 91454579804, 94035837280, 63317750608,
    25088413952, 4427367168,
)

_A_N2 = (
    1618654, 31459234, 271069253, 1362423916, 4419070194, 9654348284,
    14368501182, 14362052096, 9209328422, 3412762192, 553420896,
)

_A_N3 = (
    1167997914, 15454923336, 91492878645, 319934133575, 734395997090,
    1162203105378, 1294197714054, 1014406754242, 548632346402,
    195059453722, 41045383120, 3873946272,
)

_A_N4 = (
    365613573312, 4021500121920, 20341847967024, 62650071283024,
    131072047236004, 196698030664492, 217823761840153, 180219167765455,
    111395400841326, 50802960251820, 16615457209344, 3690223711216,
    498816700928, 30991570176,
)


def s_closed(n: int, i: int) -> Fraction:
    """S_{n,i}; the n = 0, i = 1 value is tabulated separately."""
    if i == 1:
        if n == 0:
            return Fraction(84365, 114688)
        num = (8 + 28 * n + 21 * n**2) * _poly(_A_N1, n)
        den = (
            448 * n**4 * (1 + n) * (2 + 7 * n) ** 4 * (3 + 7 * n) ** 4
            * (4 + 7 * n) ** 4 * (1 + 7 * n + 7 * n**2)
        )
        return Fraction(num, den)
    if i == 2:
        num = (1 + 2 * n) * _poly(_A_N2, n)
        den = (
            4 * (1 + n) * (2 + 7 * n) ** 4 * (3 + 7 * n) ** 4 * (4 + 7 * n) ** 4
            * (6 + 14 * n + 7 * n**2)
        )
        return Fraction(num, den)
    if i == 3:
        num = (3 + 2 * n) * _poly(_A_N3, n)
        den = (
            4 * (1 + n) * (3 + 7 * n) ** 4 * (6 + 7 * n) ** 4 * (8 + 7 * n) ** 4
            * (11 + 7 * n) * (6 + 14 * n + 7 * n**2)
        )
        return Fraction(num, den)
    if i == 4:
        num = (36 + 56 * n + 21 * n**2) * _poly(_A_N4, n)
        den = (
            448 * (1 + n) ** 4 * (6 + 7 * n) ** 4 * (8 + 7 * n) ** 4
            * (10 + 7 * n) ** 4 * (11 + 7 * n) * (15 + 21 * n + 7 * n**2)
        )
        return Fraction(num, den)
    raise ValueError(f"i must be 1..4, got {i}")


def f_closed(n: int, i: int) -> Fraction:
    """F_{n,i} for a single irreducible component of B_{n,i}."""
    if i == 1:
        if n == 0:
            return Fraction(281, 32256)
        num = 3 * (1 + 7 * n + 7 * n**2) ** 2
        den = (
            2 * n**2 * (1 + 3 * n) * (-1 + 7 * n) * (1 + 7 * n) * (2 + 7 * n)
            * (3 + 7 * n) ** 2 * (4 + 7 * n) * (2 + 21 * n)
        )
        return Fraction(num, den)
    if i == 2:
        if n == 0:
            return Fraction(5, 3584)
        num = 1 + n
        den = (
            112 * n * (1 + 2 * n) * (1 + 3 * n) * (2 + 7 * n)
            * (3 + 7 * n) ** 2 * (4 + 7 * n)
        )
        return Fraction(num, den)
    if i == 3:
        num = 15 * (6 + 14 * n + 7 * n**2) ** 2
        den = (
            4 * (1 + n) ** 2 * (1 + 2 * n) * (2 + 7 * n) * (3 + 7 * n) ** 2
            * (4 + 7 * n) * (6 + 7 * n) * (8 + 7 * n) * (13 + 14 * n)
        )
        return Fraction(num, den)
    if i == 4:
        num = (11 + 7 * n) ** 2
        den = (
            112 * (1 + n) ** 2 * (3 + 7 * n) * (6 + 7 * n) * (8 + 7 * n)
            * (10 + 7 * n) * (13 + 14 * n) * (23 + 21 * n)
        )
        return Fraction(num, den)
    raise ValueError(f"i must be 1..4, got {i}")


_AP_N1 = (1, 81, 2535, 37209, 301046, 1459736, 4420190, 8425410, 9821448, 6392736, 1778112)

_APP_N1 = (
    480574, 12906866, 157271760, 1149521334, 5612285145, 19278934535,
    47770884833, 86016481159, 111679016743, 101939513907, 62077730148,
    22635902898, 3735591048,
)

_AP_N2 = (
    1561176, 35176776, 356105548, 2137950448, 8458603286, 23158717414,
    44778314889, 61151030584, 57807289939, 36026947376, 13321631568,
    2213683584,
)

_APP_N2 = (11780, 111142, 430951, 875637, 978656, 566832, 131712)

_AP_N3 = (
    13726028, 164541190, 859036123, 2564002455, 4823323519, 5933644367,
    4776917782, 2428774768, 708314208, 90354432,
)

_APP_N3 = (
    67760261208, 703706084640, 3313300067388, 9335574166156, 17489294547578,
    22873117200584, 21308562209725, 14139587568253, 6548997703738,
    2016283621072, 371345421216, 30991570176,
)

_AP_N4 = (
    88135013250, 967134809574, 4853884596732, 14732868828434, 30120687035243,
    43697011451345, 46124583653603, 35692827118809, 20096052100397,
    8028312817917, 2160120347280, 351456857766, 26149137336,
)

_APP_N4 = (
    7582266167, 59702225967, 210973884925, 440580768679, 602090743422,
    562572998512, 363945674554, 160955181870, 46566357768, 7957643904,
    609892416,
)


def m_closed(n: int, i: int, half: str) -> Fraction:
    """M'_{n,i} (half="p") and M''_{n,i} (half="pp").

    The source's printed M'_{0,1} denominator 22268 is a misprint for 2268
    (the general machinery and the engine agree on 1403/2268).
    """
    if half not in ("p", "pp"):
        raise ValueError("half must be 'p' or 'pp'")
    if i == 1 and half == "p":
        if n == 0:
            return Fraction(1403, 2268)
        num = (1 + n) * _poly(_AP_N1, n)
        den = 448 * n**4 * (1 + 3 * n) ** 4 * (3 + 7 * n) ** 4 * (1 + 7 * n + 7 * n**2)
        return Fraction(num, den)
    if i == 1:
        num = (1 + 7 * n + 7 * n**2) * _poly(_APP_N1, n)
        den = (
            28 * (1 + n) * (1 + 3 * n) ** 4 * (2 + 7 * n) ** 4 * (3 + 7 * n) ** 4
            * (4 + 7 * n) ** 4
        )
        return Fraction(num, den)
    if i == 2 and half == "p":
        num = (6 + 14 * n + 7 * n**2) * _poly(_AP_N2, n)
        den = (
            224 * (1 + n) * (1 + 2 * n) ** 3 * (2 + 7 * n) ** 4 * (3 + 7 * n) ** 4
            * (4 + 7 * n) ** 4
        )
        return Fraction(num, den)
    if i == 2:
        num = _poly(_APP_N2, n)
        den = 224 * (1 + 2 * n) ** 3 * (3 + 7 * n) ** 4 * (6 + 14 * n + 7 * n**2)
        return Fraction(num, den)
    if i == 3 and half == "p":
        num = (11 + 7 * n) * _poly(_AP_N3, n)
        den = (
            224 * (1 + n) ** 3 * (3 + 7 * n) ** 4 * (13 + 14 * n) ** 4
            * (6 + 14 * n + 7 * n**2)
        )
        return Fraction(num, den)
    if i == 3:
        num = (6 + 14 * n + 7 * n**2) * _poly(_APP_N3, n)
        den = (
            224 * (1 + n) ** 3 * (6 + 7 * n) ** 4 * (8 + 7 * n) ** 4 * (11 + 7 * n)
            * (13 + 14 * n) ** 4
        )
        return Fraction(num, den)
    if i == 4 and half == "p":
        num = (15 + 21 * n + 7 * n**2) * _poly(_AP_N4, n)
        den = (
            28 * (1 + n) ** 4 * (6 + 7 * n) ** 4 * (8 + 7 * n) ** 4 * (11 + 7 * n)
            * (23 + 21 * n) ** 4
        )
        return Fraction(num, den)
    if i == 4:
        num = (11 + 7 * n) * _poly(_APP_N4, n)
        den = (
            448 * (1 + n) ** 4 * (10 + 7 * n) ** 4 * (23 + 21 * n) ** 4
            * (15 + 21 * n + 7 * n**2)
        )
        return Fraction(num, den)
    raise ValueError(f"i must be 1..4, got {i}")
