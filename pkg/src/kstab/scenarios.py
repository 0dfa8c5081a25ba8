"""Declarative scenarios: one JSON file per source configuration.

A scenario carries a curve lattice, optional threefold data, restriction
families, flags, and a list of expectations; running it evaluates every
expectation and reports exact matches.  All numbers in scenario files are
rational strings ("p/q"); decimal expectations carry an explicit tolerance.

Schema (field names are part of the file format):

    {"id", "lemma", "V": "p/q", "curves": [...], "gram": [["p/q", ...]],
     "threefold": {...}, "families": {...}, "flags": {...},
     "expect": [{"op", "args", "value"}], "notes"}
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__
from .invariants import (
    FamilyDecomposition,
    FlagData,
    SurfaceFamily,
    SurfacePiece,
    ThreefoldFamilyData,
    ThreefoldInterval,
    beta,
    beta_lower_bound,
    decompose_family,
    delta_min_combinator,
    f_term,
    fiber_delta_bound,
    quartic_fiber_bound,
    s_curve,
    s_point,
    s_threefold,
    _point_base,
)
from .lattice import CurveLattice, DivisorClass, ParametricDivisor, is_negative_definite, pair
from .poly import AffineForm, Polynomial2, poly_from_terms
from .rationals import format_decimal, format_rational, parse_rational, rat
from .zariski import oracle_check


class ScenarioError(ValueError):
    """Malformed scenario file; the message carries the offending field path."""


def _ctx(path: str, exc: Exception) -> ScenarioError:
    return ScenarioError(f"{path}: {exc}")


def _affine(spec, path: str) -> AffineForm:
    try:
        parts = [rat(x) for x in spec]
    except Exception as exc:
        raise _ctx(path, exc) from None
    if len(parts) == 2:
        return AffineForm(parts[0], parts[1], 0)
    if len(parts) == 3:
        return AffineForm(parts[0], parts[1], parts[2])
    raise ScenarioError(f"{path}: affine form needs 2 or 3 entries")


def _poly(spec, path: str) -> Polynomial2:
    try:
        return poly_from_terms((int(du), int(dv), rat(c)) for du, dv, c in spec)
    except Exception as exc:
        raise _ctx(path, exc) from None


@dataclass(frozen=True)
class FlagSpec:
    family: str
    data: FlagData


@dataclass
class Scenario:
    id: str
    lemma: str
    V: Fraction
    lattice: CurveLattice
    threefold: ThreefoldSpec | None
    families: dict[str, SurfaceFamily]
    flags: dict[str, FlagSpec]
    expectations: list[dict]
    notes: str = ""


@dataclass(frozen=True)
class ThreefoldSpec:
    basis: tuple[str, ...]
    triple: dict[tuple[int, int, int], Fraction]
    families: dict[str, tuple[ThreefoldInterval, ...]]

    def family_data(self, name: str, volume: Fraction) -> ThreefoldFamilyData:
        if name not in self.families:
            raise ScenarioError(f"unknown threefold family {name!r}")
        return ThreefoldFamilyData(self.basis, self.triple, volume, self.families[name])

    def interval_for(self, name: str, lo: Fraction, hi: Fraction) -> ThreefoldInterval:
        for interval in self.families[name]:
            if interval.u_lo <= lo and hi <= interval.u_hi:
                return interval
        raise ScenarioError(f"no interval of {name!r} spans [{lo}, {hi}]")


def scenario_from_dict(raw: dict, origin: str = "<memory>") -> Scenario:
    try:
        sid = raw["id"]
        lemma = raw.get("lemma", "")
        volume = parse_rational(raw["V"])
        curves = list(raw["curves"])
        gram = raw["gram"]
    except KeyError as exc:
        raise ScenarioError(f"{origin}: missing field {exc}") from None
    try:
        lattice = CurveLattice(curves, [[parse_rational(x) for x in row] for row in gram])
    except Exception as exc:
        raise _ctx(f"{origin}:gram", exc) from None

    threefold = None
    if raw.get("threefold"):
        tf = raw["threefold"]
        basis = tuple(tf["basis"])
        triple = {}
        for entry in tf["triple"]:
            i, j, k, value = entry
            triple[tuple(sorted((int(i), int(j), int(k))))] = parse_rational(value)
        families = {}
        for name, spec in tf.get("families", {}).items():
            intervals = []
            for idx, piece in enumerate(spec["intervals"]):
                path = f"{origin}:threefold.{name}[{idx}]"
                lo, hi = (parse_rational(x) for x in piece["u"])
                p = tuple(_affine(c, path) for c in piece["P"])
                n = tuple(_affine(c, path) for c in piece["N"])
                intervals.append(ThreefoldInterval(lo, hi, p, n))
            families[name] = tuple(intervals)
        threefold = ThreefoldSpec(basis, triple, families)

    families: dict[str, SurfaceFamily] = {}
    for name, spec in raw.get("families", {}).items():
        pieces = []
        for idx, piece in enumerate(spec["pieces"]):
            path = f"{origin}:families.{name}[{idx}]"
            lo, hi = (parse_rational(x) for x in piece["u"])
            coeffs = tuple(_affine(c, path) for c in piece["coeffs"])
            if len(coeffs) != lattice.rank:
                raise ScenarioError(f"{path}: expected {lattice.rank} coefficients")
            pieces.append(SurfacePiece(lo, hi, ParametricDivisor(coeffs)))
        declared = None
        if "threshold" in spec:
            declared = tuple(
                (parse_rational(a), parse_rational(b), _affine(f, f"{origin}:families.{name}.threshold"))
                for a, b, f in spec["threshold"]
            )
        families[name] = SurfaceFamily(name, tuple(pieces), declared)

    flags: dict[str, FlagSpec] = {}
    for name, spec in raw.get("flags", {}).items():
        path = f"{origin}:flags.{name}"
        mults = {k: parse_rational(v) for k, v in spec.get("mults", {}).items()}
        for curve in mults:  # reject unknown curve names early
            try:
                lattice.index(curve)
            except Exception as exc:
                raise _ctx(path, exc) from None
        ords = tuple(
            (parse_rational(p["u"][0]), parse_rational(p["u"][1]), _affine(p["form"], path))
            for p in spec.get("threefold_ord", [])
        )
        data = FlagData(
            center=spec["center"],
            point_multiplicities=mults,
            weight=parse_rational(spec.get("A", "1")),
            different={k: parse_rational(v) for k, v in spec.get("different", {}).items()},
            threefold_ord=ords,
        )
        family = spec.get("family")
        if family is not None and family not in families:
            raise ScenarioError(f"{path}: unknown family {family!r}")
        flags[name] = FlagSpec(family, data)

    expectations = raw.get("expect", [])
    for idx, entry in enumerate(expectations):
        if "op" not in entry or "value" not in entry:
            raise ScenarioError(f"{origin}:expect[{idx}]: needs op and value")
    return Scenario(
        id=sid,
        lemma=lemma,
        V=volume,
        lattice=lattice,
        threefold=threefold,
        families=families,
        flags=flags,
        expectations=expectations,
        notes=raw.get("notes", ""),
    )


def load_scenario(path: str | Path) -> Scenario:
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return scenario_from_dict(raw, origin=str(path))


def corpus_dir() -> Path:
    return Path(__file__).parent / "corpus"


def corpus_paths() -> list[Path]:
    return sorted(corpus_dir().glob("*.json"))


def load_corpus() -> list[Scenario]:
    return [load_scenario(p) for p in corpus_paths()]


# -- evaluation --------------------------------------------------------------


class ScenarioRuntime:
    """Evaluates expectation operations against one scenario, with caching."""

    def __init__(self, scenario: Scenario):
        self.scenario = scenario
        self._decompositions: dict[str, FamilyDecomposition] = {}

    def family_decomposition(self, name: str) -> FamilyDecomposition:
        if name not in self._decompositions:
            family = self.scenario.families.get(name)
            if family is None:
                raise ScenarioError(f"unknown family {name!r}")
            self._decompositions[name] = decompose_family(self.scenario.lattice, family)
        return self._decompositions[name]

    def _divisor(self, spec) -> DivisorClass:
        if isinstance(spec, str):
            coeffs = [Fraction(0)] * self.scenario.lattice.rank
            coeffs[self.scenario.lattice.index(spec)] = Fraction(1)
            return DivisorClass(tuple(coeffs))
        return DivisorClass.of([rat(x) for x in spec])

    def _flag(self, name: str) -> tuple[FamilyDecomposition, FlagData]:
        spec = self.scenario.flags.get(name)
        if spec is None:
            raise ScenarioError(f"unknown flag {name!r}")
        return self.family_decomposition(spec.family), spec.data

    def _ord_pieces(self, spec) -> list[tuple[Fraction, Fraction, Polynomial2]]:
        """First-summand integrand pieces for s_curve: (P(u)^2 . face) * ord."""
        threefold = self.scenario.threefold
        if threefold is None:
            raise ScenarioError("ord pieces need threefold data")
        face = threefold.basis.index(spec["face"])
        name = spec["threefold_family"]
        out = []
        for piece in spec["pieces"]:
            lo, hi = (rat(x) for x in piece["u"])
            ord_form = _affine(piece["ord"], "ord")
            interval = threefold.interval_for(name, lo, hi)
            data = threefold.family_data(name, self.scenario.V)
            integrand = data.square_against(interval.p, face) * ord_form
            out.append((lo, hi, integrand))
        return out

    def evaluate(self, op: str, args: dict):
        scenario = self.scenario
        lat = scenario.lattice
        if op == "pair":
            return pair(lat, self._divisor(args["a"]), self._divisor(args["b"]))
        if op == "is_negative_definite":
            subset = [lat.index(name) for name in args["subset"]]
            return is_negative_definite(lat, subset)
        if op == "s_threefold":
            if scenario.threefold is None:
                raise ScenarioError("scenario has no threefold data")
            data = scenario.threefold.family_data(args["family"], scenario.V)
            return s_threefold(data)
        if op == "s_curve":
            famdec = self.family_decomposition(args["family"])
            ord_pieces = self._ord_pieces(args["ord"]) if "ord" in args else ()
            return s_curve(scenario.V, famdec, ord_pieces)
        if op == "s_curve_sum":
            total = Fraction(0)
            for name in args["families"]:
                total += s_curve(scenario.V, self.family_decomposition(name))
            return total
        if op == "s_point":
            famdec, flag = self._flag(args["flag"])
            return s_point(scenario.V, famdec, flag)
        if op == "point_base":
            famdec, flag = self._flag(args["flag"])
            return _point_base(scenario.V, famdec, flag)
        if op == "f_term":
            famdec, flag = self._flag(args["flag"])
            return f_term(scenario.V, famdec, flag)
        if op == "threshold":
            famdec = self.family_decomposition(args["family"])
            return [
                [format_rational(lo), format_rational(hi),
                 [format_rational(f.c), format_rational(f.cu)]]
                for lo, hi, f in famdec.thresholds
            ]
        if op == "chamber_count":
            famdec = self.family_decomposition(args["family"])
            return sum(len(dec.chambers) for _, dec in famdec.parts)
        if op == "chamber_supports":
            famdec = self.family_decomposition(args["family"])
            supports = []
            for _, dec in famdec.parts:
                for chamber in dec.chambers:
                    names = [lat.names[i] for i in chamber.support]
                    if names not in supports:
                        supports.append(names)
            return sorted(supports)
        if op == "chamber_pairing":
            famdec = self.family_decomposition(args["family"])
            chambers = list(famdec.chambers())
            chamber = chambers[int(args["chamber"])]
            form = chamber.p_pairings[lat.index(args["curve"])]
            return [format_rational(form.c), format_rational(form.cu), format_rational(form.cv)]
        if op == "oracle":
            famdec = self.family_decomposition(args["family"])
            samples = int(args.get("samples", 20))
            for _, dec in famdec.parts:
                report = oracle_check(lat, dec.divisor, dec, samples, seed=int(args.get("seed", 7)))
                if not report.passed:
                    return False
            return True
        if op == "continuity":
            famdec = self.family_decomposition(args["family"])
            for _, dec in famdec.parts:
                dec.validate_continuity()
            return True
        if op == "beta":
            return beta(rat(args["A"]), rat(args["S"]))
        if op == "beta_lower_bound":
            pieces = [
                (rat(p["u"][0]), rat(p["u"][1]), _poly(p["poly"], "beta piece"))
                for p in args["pieces"]
            ]
            return beta_lower_bound(scenario.V, rat(args["A"]), pieces)
        if op == "delta_min":
            return delta_min_combinator([(rat(n), rat(d)) for n, d in args["terms"]])
        if op == "fiber_delta_bound":
            return fiber_delta_bound(int(args["d"]), rat(args["delta"]), bool(args["on_E"]))
        if op == "quartic_fiber_bound":
            return quartic_fiber_bound(rat(args["delta"]), bool(args["singular"]))
        if op == "series_term":
            from .series import series_term

            return series_term(int(args["n"]), int(args["i"]), args["kind"])
        if op == "series_threshold":
            from .series import band_threshold

            form = band_threshold(int(args["n"]), int(args["i"]))
            return [format_rational(form.c), format_rational(form.cu)]
        if op == "series_partial":
            from .series import series_sum

            report = series_sum(int(args["n_max"]))
            return {"S": report.s_partial, "F": report.f_partial}[args["kind"]]
        raise ScenarioError(f"unknown quantity op {op!r}")


def _value_matches(expected, computed) -> bool:
    if isinstance(expected, dict):
        if "decimal" in expected:
            target = Fraction(expected["decimal"])
            tol = Fraction(expected["tol"])
            return isinstance(computed, Fraction) and abs(computed - target) <= tol
        if "max" in expected:
            return isinstance(computed, Fraction) and computed <= parse_rational(expected["max"])
        if "min" in expected:
            return isinstance(computed, Fraction) and computed >= parse_rational(expected["min"])
        raise ScenarioError(f"unrecognized expectation value {expected!r}")
    if isinstance(computed, Fraction):
        return isinstance(expected, str) and parse_rational(expected) == computed
    if isinstance(computed, bool):
        return expected is computed
    if isinstance(computed, int):
        return expected == computed
    return expected == computed  # structured lists compare directly


def _render(value):
    if isinstance(value, Fraction):
        return {"rational": format_rational(value), "decimal": format_decimal(value)}
    return value


@dataclass
class ExpectationRow:
    op: str
    args: dict
    expected: object
    computed: object
    status: str  # match | mismatch | error
    detail: str = ""


@dataclass
class ScenarioReport:
    scenario_id: str
    lemma: str
    rows: list[ExpectationRow]
    seconds: float
    engine_version: str = __version__

    @property
    def ok(self) -> bool:
        return all(row.status == "match" for row in self.rows)

    @property
    def errored(self) -> bool:
        return any(row.status == "error" for row in self.rows)

    def to_json_dict(self) -> dict:
        return {
            "scenario": self.scenario_id,
            "lemma": self.lemma,
            "engine_version": self.engine_version,
            "seconds": round(self.seconds, 3),
            "ok": self.ok,
            "rows": [
                {
                    "op": row.op,
                    "args": row.args,
                    "expected": row.expected,
                    "computed": _render(row.computed),
                    "status": row.status,
                    **({"detail": row.detail} if row.detail else {}),
                }
                for row in self.rows
            ],
        }


def run_expectations(scenario: Scenario) -> ScenarioReport:
    runtime = ScenarioRuntime(scenario)
    rows = []
    started = time.perf_counter()
    for entry in scenario.expectations:
        op = entry["op"]
        args = entry.get("args", {})
        expected = entry["value"]
        try:
            computed = runtime.evaluate(op, args)
        except Exception as exc:  # evaluation error: report, keep going
            rows.append(ExpectationRow(op, args, expected, None, "error", str(exc)))
            continue
        status = "match" if _value_matches(expected, computed) else "mismatch"
        rows.append(ExpectationRow(op, args, expected, computed, status))
    return ScenarioReport(scenario.id, scenario.lemma, rows, time.perf_counter() - started)
