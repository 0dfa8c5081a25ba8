"""The blown-quadric surface series: B-classes, interval schedule, exact sums.

The ambient lattice is the Picard basis (l1, l2, e1..e8) of the quadric
surface blown up in eight points, with intersection form 2*a1*a2 - sum b_i^2
and anticanonical class (2, 2; 1, ..., 1).  For each n >= 0 the table below
produces seventeen verified (-1)-classes in five kinds; the family

    d(u, v) = (3 - u)(l1 + l2) - (1 + v) e1 - (e2 + ... + e8)

is decomposed band by band over the interval schedule I_{n,i}, and the
S / M / F ledger entries are exact double integrals over the chambers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .geometry import Polygon, integrate_polygon, polygon_clip
from .lattice import CurveLattice
from .poly import AffineForm, Polynomial2
from .rationals import format_decimal
from .zariski import DivisorData, decompose_parametric, effective_threshold

ANTICANONICAL_VOLUME = Fraction(14)

PICARD_NAMES = ("l1", "l2", "e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8")


def picard_gram() -> tuple[tuple[Fraction, ...], ...]:
    size = len(PICARD_NAMES)
    gram = [[Fraction(0)] * size for _ in range(size)]
    gram[0][1] = gram[1][0] = Fraction(1)
    for i in range(2, size):
        gram[i][i] = Fraction(-1)
    return tuple(tuple(row) for row in gram)


def picard_pair(a, b) -> Fraction:
    total = a[0] * b[1] + a[1] * b[0]
    for x, y in zip(a[2:], b[2:]):
        total -= x * y
    return total


MINUS_K = (Fraction(2), Fraction(2)) + (Fraction(1),) * 8  # 2l1 + 2l2 - sum e_i
# pairing against -K in these coordinates: 2*a2 + 2*a1 - sum b_i where the
# class is a1 l1 + a2 l2 - sum b_i e_i; MINUS_K stores b_i = 1.


def _minus_k_vector():
    return (Fraction(2), Fraction(2)) + (Fraction(-1),) * 8


class BClassError(ValueError):
    pass


def _row(n: int, kind: str, i: int | None):
    nn = n * n
    if kind == "1":
        a = 14 * nn + 7 * n
        b1 = 7 * nn + 7 * n + 1
        bj = 7 * nn + 3 * n
        if i == 1:
            return a + 1, a, b1, bj, None
        if i == 2:
            return a, a + 1, b1, bj, None
        raise BClassError("kind 1 needs i in {1, 2}")
    if kind == "2":
        a = 14 * nn + 13 * n + 3
        return a, a, 7 * nn + 10 * n + 3, 7 * nn + 6 * n + 1, 7 * nn + 6 * n + 2
    if kind == "3":
        a = 14 * nn + 21 * n + 7
        return a, a, 7 * nn + 14 * n + 6, 7 * nn + 10 * n + 3, None
    if kind == "4":
        a = 14 * nn + 29 * n + 15
        return a, a, 7 * nn + 18 * n + 11, 7 * nn + 14 * n + 7, 7 * nn + 14 * n + 6
    raise BClassError(f"unknown kind {kind!r}")


def b_class(n: int, kind: str, i: int | None = None) -> tuple[Fraction, ...]:
    """The class B_{n,kind[,i]} in Picard coordinates, verified (-1)."""
    if n < 0:
        raise BClassError("n must be non-negative")
    a1, a2, b1, bj, bi = _row(n, kind, i if kind in ("1",) else None)
    b = [Fraction(bj)] * 7
    if kind in ("2", "4"):
        if i is None or not 2 <= i <= 8:
            raise BClassError(f"kind {kind} needs i in 2..8")
        b[i - 2] = Fraction(bi)
    vector = (Fraction(a1), Fraction(a2), Fraction(-b1)) + tuple(-x for x in b)
    if picard_pair(vector, vector) != -1:
        raise BClassError(f"B_({n},{kind},{i}) is not a (-1)-class: table bug")
    if picard_pair(_minus_k_vector(), vector) != 1:
        raise BClassError(f"B_({n},{kind},{i}) has wrong anticanonical degree")
    return vector


def generate_b_classes(n: int) -> list[tuple[str, tuple[Fraction, ...]]]:
    """All seventeen verified (-1)-classes of level n, in table order."""
    out = [(f"B({n},1,1)", b_class(n, "1", 1)), (f"B({n},1,2)", b_class(n, "1", 2))]
    out += [(f"B({n},2,{i})", b_class(n, "2", i)) for i in range(2, 9)]
    out.append((f"B({n},3)", b_class(n, "3")))
    out += [(f"B({n},4,{i})", b_class(n, "4", i)) for i in range(2, 9)]
    return out


def kind_components(n: int, kind: int) -> list[tuple[str, tuple[Fraction, ...]]]:
    if kind == 1:
        return [(f"B({n},1,1)", b_class(n, "1", 1)), (f"B({n},1,2)", b_class(n, "1", 2))]
    if kind == 2:
        return [(f"B({n},2,{i})", b_class(n, "2", i)) for i in range(2, 9)]
    if kind == 3:
        return [(f"B({n},3)", b_class(n, "3"))]
    if kind == 4:
        return [(f"B({n},4,{i})", b_class(n, "4", i)) for i in range(2, 9)]
    raise BClassError(f"kind must be 1..4, got {kind}")


def e1_pairing_coefficient(n: int, kind: int) -> Fraction:
    """(component of B_{n,kind}) . e1, i.e. the table entry b1."""
    _, _, b1, _, _ = _row(n, str(kind), 1 if kind == 1 else None)
    return Fraction(b1)


# -- interval schedule -------------------------------------------------------


def _frac(num_poly, den_poly, n):
    num = sum(c * n**k for k, c in enumerate(num_poly))
    den = sum(c * n**k for k, c in enumerate(den_poly))
    return Fraction(num, den)


def interval_bounds(n: int, i: int, half: str) -> tuple[Fraction, Fraction]:
    """Endpoints of I'_{n,i} (half="p") or I''_{n,i} (half="pp")."""
    if n < 0 or i not in (1, 2, 3, 4) or half not in ("p", "pp"):
        raise ValueError("bad interval selector")
    if i == 1:
        if n == 0:
            return (Fraction(0), Fraction(1, 3)) if half == "p" else (Fraction(1, 3), Fraction(3, 8))
        left = _frac((-1, 4, 14), (0, 6, 14), n)
        mid = _frac((1, 13, 21), (3, 16, 21), n)
        right = _frac((3, 35, 49), (8, 42, 49), n)
    elif i == 2:
        left = _frac((3, 35, 49), (8, 42, 49), n)
        mid = _frac((3, 22, 28), (6, 26, 28), n)
        right = _frac((2, 7), (3, 7), n)
    elif i == 3:
        left = _frac((2, 7), (3, 7), n)
        mid = _frac((21, 50, 28), (26, 54, 28), n)
        right = _frac((39, 91, 49), (48, 98, 49), n)
    else:
        left = _frac((39, 91, 49), (48, 98, 49), n)
        mid = _frac((19, 41, 21), (23, 44, 21), n)
        right = _frac((17, 32, 14), (20, 34, 14), n)
    return (left, mid) if half == "p" else (mid, right)


@dataclass(frozen=True)
class IntervalSchedule:
    """The bands I_{n,i} = I'_{n,i} union I''_{n,i} for n <= n_max."""

    n_max: int

    def band(self, n: int, i: int) -> tuple[Fraction, Fraction]:
        return interval_bounds(n, i, "p")[0], interval_bounds(n, i, "pp")[1]

    def split(self, n: int, i: int) -> Fraction:
        return interval_bounds(n, i, "p")[1]

    def bands(self) -> Iterable[tuple[int, int, Fraction, Fraction]]:
        for n in range(self.n_max + 1):
            for i in (1, 2, 3, 4):
                lo, hi = self.band(n, i)
                yield n, i, lo, hi

    def validate(self) -> None:
        """Halves meet, consecutive bands chain, and lengths are positive."""
        prev_right = Fraction(0)
        for n in range(self.n_max + 1):
            for i in (1, 2, 3, 4):
                p_lo, p_hi = interval_bounds(n, i, "p")
                pp_lo, pp_hi = interval_bounds(n, i, "pp")
                if not (p_lo < p_hi == pp_lo < pp_hi):
                    raise ValueError(f"band I_({n},{i}) is not an increasing chain")
                if p_lo != prev_right:
                    raise ValueError(f"band I_({n},{i}) does not chain at {p_lo}")
                prev_right = pp_hi


def interval_schedule(n_max: int) -> IntervalSchedule:
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    schedule = IntervalSchedule(n_max)
    schedule.validate()
    return schedule


# -- band decompositions -----------------------------------------------------


def band_universe(n: int, i: int) -> tuple[CurveLattice, list[tuple[str, tuple[Fraction, ...]]]]:
    """e1 plus the components of the kinds that can support N on band I_{n,i}.

    Kind i-1 is included as an extra nefness witness; kind 0 of level n is
    kind 4 of level n-1 and kind 5 is kind 1 of level n+1.
    """
    e1 = tuple(Fraction(1) if name == "e1" else Fraction(0) for name in PICARD_NAMES)
    members: list[tuple[str, tuple[Fraction, ...]]] = [("e1", e1)]
    for kind in (i - 1, i, i + 1):
        level = n
        if kind == 0:
            if n == 0:
                continue
            level, kind = n - 1, 4
        elif kind == 5:
            level, kind = n + 1, 1
        members.extend(kind_components(level, kind))
    names = [name for name, _ in members]
    gram = [
        [picard_pair(a, b) for _, b in members]
        for _, a in members
    ]
    return CurveLattice(names, gram), members


def band_divisor(members) -> DivisorData:
    """(3 - u)(l1 + l2) - (1 + v) e1 - sum_{i >= 2} e_i, via its pairings."""
    three_minus_u = AffineForm(3, -1, 0)
    one_plus_v = AffineForm(1, 0, 1)
    pairings = []
    for _, vector in members:
        a1, a2 = vector[0], vector[1]
        form = three_minus_u * (a1 + a2) + one_plus_v * vector[2]
        for x in vector[3:]:
            form = form + AffineForm(x, 0, 0)
        pairings.append(form)
    # d^2 = 2 (3-u)^2 - (1+v)^2 - 7
    sq = (
        AffineForm(3, -1, 0) * AffineForm(3, -1, 0) * 2
        - AffineForm(1, 0, 1) * AffineForm(1, 0, 1)
        - Polynomial2.const(7)
    )
    return DivisorData(tuple(pairings), sq, None)


@dataclass(frozen=True)
class BandResult:
    n: int
    i: int
    u_lo: Fraction
    u_hi: Fraction
    threshold: AffineForm
    s_term: Fraction
    m_prime: Fraction
    m_double_prime: Fraction
    phi_by_kind: dict[tuple[int, int], Fraction]  # (level, kind) -> per-component Phi
    chamber_count: int


def band_threshold(n: int, i: int) -> AffineForm:
    lat, members = band_universe(n, i)
    lo, hi = interval_bounds(n, i, "p")[0], interval_bounds(n, i, "pp")[1]
    pieces = effective_threshold(lat, band_divisor(members), lo, hi)
    if len(pieces) != 1:
        raise ValueError(f"band I_({n},{i}) threshold is not a single affine piece")
    return pieces[0][2]


def compute_band(n: int, i: int, validate: bool = False) -> BandResult:
    """Decompose one band and integrate its S, M', M'' and Phi ledger entries.

    Phi for a component ell of kind (level, kind) is the integral
    (3/7) double-int (P . e1) * coeff_ell dv du over the band; the F-terms
    are Phi sums weighted by (ell . e1).  Components of one kind must carry
    identical coefficients (the configuration is symmetric); this is checked.
    """
    lat, members = band_universe(n, i)
    data = band_divisor(members)
    lo, hi = interval_bounds(n, i, "p")[0], interval_bounds(n, i, "pp")[1]
    split = interval_bounds(n, i, "p")[1]
    pieces = effective_threshold(lat, data, lo, hi)
    if len(pieces) != 1:
        raise ValueError(f"band I_({n},{i}) threshold is not affine")
    threshold = pieces[0][2]
    domain = Polygon.band(lo, hi, threshold)
    dec = decompose_parametric(lat, data, domain)
    if validate:
        dec.validate_continuity()
    kind_of: dict[int, tuple[int, int]] = {}
    for idx, name in enumerate(lat.names):
        if name == "e1":
            continue
        level = int(name.split("(")[1].split(",")[0])
        kind = int(name[name.index(",") + 1])
        kind_of[idx] = (level, kind)
    e1_idx = lat.index("e1")
    s_term = Fraction(0)
    m_lo = Fraction(0)
    m_hi = Fraction(0)
    phi: dict[tuple[int, int], list[Fraction]] = {}
    left_cut = AffineForm(split, -1, 0)  # u <= split
    right_cut = AffineForm(-split, 1, 0)
    for chamber in dec.chambers:
        s_term += integrate_polygon(chamber.p_squared, chamber.region)
        pe1 = chamber.p_pairings[e1_idx]
        pe1_sq = pe1 * pe1
        m_lo += integrate_polygon(pe1_sq, polygon_clip(chamber.region, left_cut))
        m_hi += integrate_polygon(pe1_sq, polygon_clip(chamber.region, right_cut))
        per_curve: dict[tuple[int, int], list[Fraction]] = {}
        for idx, coeff in zip(chamber.support, chamber.neg_coeffs):
            value = integrate_polygon(pe1 * coeff, chamber.region)
            per_curve.setdefault(kind_of[idx], []).append(value)
        for key, values in per_curve.items():
            if len(set(values)) != 1:
                raise ValueError(
                    f"asymmetric multiplicities within kind {key} on band I_({n},{i})"
                )
            phi.setdefault(key, []).append(values[0])
    scale = Fraction(3, 14)
    return BandResult(
        n=n,
        i=i,
        u_lo=lo,
        u_hi=hi,
        threshold=threshold,
        s_term=s_term * scale,
        m_prime=m_lo * scale,
        m_double_prime=m_hi * scale,
        phi_by_kind={k: sum(v, Fraction(0)) * Fraction(3, 7) for k, v in phi.items()},
        chamber_count=len(dec.chambers),
    )


# -- assembled series --------------------------------------------------------


@dataclass(frozen=True)
class SeriesEntry:
    n: int
    s_terms: tuple[Fraction, Fraction, Fraction, Fraction]
    m_terms: tuple[tuple[Fraction, Fraction], ...]  # (M', M'') per i
    f_terms: tuple[Fraction, Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class SeriesReport:
    n_max: int
    entries: tuple[SeriesEntry, ...]
    s_partial: Fraction
    m_partial: Fraction
    f_partial: Fraction

    @property
    def s_decimal(self) -> str:
        return format_decimal(self.s_partial)

    @property
    def f_decimal(self) -> str:
        return format_decimal(self.f_partial)

    def tail_estimate(self) -> float:
        """HEURISTIC tail for the S-sum: terms decay like n^-2, so the tail
        beyond n_max is roughly (last per-n term) * n_max.  Not a bound."""
        if not self.entries or self.n_max == 0:
            return float("nan")
        last = sum(self.entries[-1].s_terms, Fraction(0))
        return float(last * self.n_max)


def series_sum(n_max: int, validate: bool = False, threads: int = 1) -> SeriesReport:
    """Exact S / M / F ledger for all n <= n_max.

    F_{n,i} needs the bands of levels n and n-1, all of which are computed
    here.  Bands are independent, so they may be computed on a thread pool;
    the reduction walks them in deterministic band order either way, so the
    report is byte-identical for any thread count.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    interval_schedule(n_max)  # validates the chaining once
    keys = [(n, i) for n in range(n_max + 1) for i in (1, 2, 3, 4)]
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            computed = pool.map(lambda k: compute_band(*k, validate=validate), keys)
            results = dict(zip(keys, computed))
    else:
        results = {key: compute_band(*key, validate=validate) for key in keys}
    phi_total: dict[tuple[int, int], Fraction] = {}
    for band in results.values():
        for key, value in band.phi_by_kind.items():
            phi_total[key] = phi_total.get(key, Fraction(0)) + value
    entries = []
    for n in range(n_max + 1):
        s_terms = tuple(results[(n, i)].s_term for i in (1, 2, 3, 4))
        m_terms = tuple(
            (results[(n, i)].m_prime, results[(n, i)].m_double_prime) for i in (1, 2, 3, 4)
        )
        # every kind of level n receives all its band contributions within
        # n_max: kind (n, 1) also draws from band (n-1, 4), already computed
        f_terms = tuple(
            phi_total.get((n, i), Fraction(0)) * e1_pairing_coefficient(n, i)
            for i in (1, 2, 3, 4)
        )
        entries.append(SeriesEntry(n, s_terms, m_terms, f_terms))
    s_partial = sum((sum(e.s_terms, Fraction(0)) for e in entries), Fraction(0))
    m_partial = sum(
        (sum((a + b for a, b in e.m_terms), Fraction(0)) for e in entries), Fraction(0)
    )
    f_partial = sum((sum(e.f_terms, Fraction(0)) for e in entries), Fraction(0))
    return SeriesReport(n_max, tuple(entries), s_partial, m_partial, f_partial)


def series_term(n: int, i: int, kind: str) -> Fraction:
    """One ledger entry: kind in {"S", "Mp", "Mpp", "F"}."""
    if kind in ("S", "Mp", "Mpp"):
        band = compute_band(n, i)
        return {"S": band.s_term, "Mp": band.m_prime, "Mpp": band.m_double_prime}[kind]
    if kind == "F":
        # kind (n, i) can appear in the negative part on its own band and on
        # the previous one (which is band (n-1, 4) when i = 1)
        if i > 1:
            bands = [(n, i - 1), (n, i)]
        elif n > 0:
            bands = [(n - 1, 4), (n, 1)]
        else:
            bands = [(0, 1)]
        total = Fraction(0)
        for bn, bi in bands:
            band = compute_band(bn, bi)
            total += band.phi_by_kind.get((n, i), Fraction(0))
        return total * e1_pairing_coefficient(n, i)
    raise ValueError(f"unknown series term kind {kind!r}")
