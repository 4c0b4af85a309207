"""Orbit counts |G(n, k)/Z_n| and |G(n, k)/D_2n|.

Four independent routes:

* ``burnside``: average of closed-form fixed counts from `census`.
* ``formula``: the explicit term-by-term formulas, in ``printed`` form (a
  literal transcription, errors included) or ``corrected`` form.
* ``special``: closed forms for particular (n, k) families.
* ``canonical``: brute-force count of distinct canonical forms.

`reconcile` runs them all and fails loudly if the trustworthy ones disagree.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .census import (
    EDGE_AXIS,
    VERTEX_AXIS,
    _marked_weight,
    axial_fixed,
    check_capacity,
    perpendicular_terms,
    rotation_fixed,
)
from .exact import (
    as_integer,
    cayley_count as A,
    catalan as C,
    composition_sum,
    divisors_of,
    euler_totient as phi,
    require_integer,
)
from .model import canonical_indices, iter_index_sets

GROUPS = ("cyclic", "dihedral")
MODES = ("printed", "corrected")


class ReconciliationError(AssertionError):
    pass


def _check_range(n, k):
    if n < 3 or k < 0 or k > n - 3:
        raise ValueError(f"need n >= 3 and 0 <= k <= n - 3, got n={n}, k={k}")


# -- Burnside ---------------------------------------------------------------

def _rotation_sum(n, k):
    return sum(phi(d) * rotation_fixed(n, k, d) for d in divisors_of(n))


def cyclic_burnside(n, k):
    _check_range(n, k)
    return require_integer(Fraction(_rotation_sum(n, k), n), f"cyclic count ({n},{k})")


def dihedral_burnside(n, k):
    _check_range(n, k)
    value = Fraction(_rotation_sum(n, k), 2 * n)
    if n % 2 == 0:
        value += Fraction(axial_fixed(n, k, VERTEX_AXIS) + axial_fixed(n, k, EDGE_AXIS), 4)
    else:
        value += Fraction(axial_fixed(n, k, VERTEX_AXIS), 2)
    return require_integer(value, f"dihedral count ({n},{k})")


# -- explicit formulas ------------------------------------------------------

def _marked_polygon_sum(n, k, d):
    """Sum over r >= 3 of (1/r) * (composition sum) for the (n/d)-gon, as pairs (r, value)."""
    j, q = as_integer(Fraction(n, d)), as_integer(Fraction(k, d))
    if j is None or q is None:
        return []
    out = []
    for r in range(3, j + 1):
        s = composition_sum(_marked_weight, j, r, q)
        if s:
            out.append((r, s))
    return out


def _axis_sum(total, k, t_min, corrected):
    t_total = as_integer(total)
    if t_total is None:
        # compositions of a non-integral total are empty
        return 0
    return sum(perpendicular_terms(t_total, k, t_min, corrected).values())


def _rotation_terms(n, k, mode, scale):
    """Rotation-fixed contributions shared by both groups, each multiplied by `scale`."""
    corrected = mode == "corrected"
    terms = {"identity": scale * Fraction(A(n, k), n)}
    terms["bordered"] = scale * sum(
        (Fraction(phi(d), d) * A(Fraction(n, d) + 1, Fraction(k, d) - 1)
         for d in divisors_of(n) if d >= 3), Fraction(0))
    terms["unbordered_digon"] = scale * sum(
        (Fraction(phi(d) * (n + k - d), d * n) * A(Fraction(n, d), Fraction(k, d) - 1)
         for d in divisors_of(n) if 2 <= d and 3 * d <= n), Fraction(0))
    polygon_sum = Fraction(0)
    for d in divisors_of(n):
        if d < 2:
            continue
        for r, s in _marked_polygon_sum(n, k, d):
            coef = Fraction(phi(d), d * r) if corrected else Fraction(phi(d), r)
            polygon_sum += coef * s
    terms["unbordered_polygon"] = scale * polygon_sum
    return terms


def cyclic_terms(n, k, mode="corrected"):
    """Named terms of the explicit cyclic formula."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    terms = _rotation_terms(n, k, mode, Fraction(1))
    if mode == "corrected" and n % 2 == 0:
        terms["bordered_diameter"] = Fraction(1, 2) * A(n // 2 + 1, Fraction(k - 1, 2))
    return terms


def dihedral_terms(n, k, mode="corrected"):
    """Named terms of the explicit dihedral formula."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    corrected = mode == "corrected"
    terms = _rotation_terms(n, k, mode, Fraction(1, 2))
    if n % 2 == 0:
        h = n // 2
        terms["axis_diameter"] = Fraction(1, 2) * A(h + 1, Fraction(k - 1, 2))
        terms["axis_no_perpendicular"] = Fraction(1, 4) * A(h + 1, Fraction(k, 2))
        terms["vertex_axis"] = Fraction(1, 4) * _axis_sum(h, k, 1, corrected)
        terms["edge_axis"] = Fraction(1, 4) * _axis_sum(h - 1, k, 0, corrected)
    elif corrected:
        terms["vertex_axis"] = Fraction(1, 2) * _axis_sum((n - 1) // 2, k, 0, True)
    else:
        terms["vertex_axis"] = Fraction(1, 2) * _axis_sum(Fraction(n, 2), k, 1, False)
    return terms


def cyclic_formula(n, k, mode="corrected"):
    _check_range(n, k)
    if k == 0:
        return Fraction(1)
    return sum(cyclic_terms(n, k, mode).values(), Fraction(0))


def dihedral_formula(n, k, mode="corrected"):
    _check_range(n, k)
    if k == 0:
        return Fraction(1)
    return sum(dihedral_terms(n, k, mode).values(), Fraction(0))


def formula(n, k, group, mode="corrected"):
    if group == "cyclic":
        return cyclic_formula(n, k, mode)
    if group == "dihedral":
        return dihedral_formula(n, k, mode)
    raise ValueError(f"unknown group {group!r}")


# -- special families -------------------------------------------------------

def _F(a, b=1):
    return Fraction(a, b)


def _k1(n):
    return _F(n - 2, 2) if n % 2 == 0 else _F(n - 3, 2)


def _triangulations_dihedral(n):
    if n % 2 == 0:
        return _F(1, 2 * n) * C(n - 2) + _F(1, 3) * C(_F(n, 3) - 1) + _F(3, 4) * C(n // 2 - 1)
    return _F(1, 2 * n) * C(n - 2) + _F(1, 3) * C(_F(n, 3) - 1) + _F(1, 2) * C(_F(n - 3, 2))


def _triangulations_cyclic(n):
    return _F(1, n) * C(n - 2) + _F(1, 2) * C(_F(n, 2) - 1) + _F(2, 3) * C(_F(n, 3) - 1)


def _almost_dihedral(n, odd_axis_coef=_F(1, 2)):
    head = (_F(1, 4) - _F(3, 4 * n)) * C(n - 2)
    if n % 2 == 0:
        return (head + _F(3, 8) * C(n // 2 - 1) + (1 - _F(3, n)) * C(n // 2 - 2)
                + _F(1, 4) * C(_F(n, 4) - 1))
    # odd n: the only reflection-fixed almost-triangulations have one
    # perpendicular, C_{(n-3)/2} of them, weighted 1/2
    return head + odd_axis_coef * C(_F(n - 3, 2))


def _almost_dihedral_printed(n):
    return _almost_dihedral(n, _F(1, 4))


def _almost_cyclic(n):
    return (_F(n - 3, 2 * n) * C(n - 2) + _F(1, 2) * C(_F(n, 4) - 1)
            + _F(1, 4) * C(_F(n, 2) - 1))


def _faces2_cyclic(n):
    return (_F((n - 3) ** 2 * (n - 4), 4 * n * (2 * n - 5)) * C(n - 2)
            + _F(n - 4, 8) * C(_F(n, 2) - 1) + _F(4, 5) * C(_F(n, 5) - 1))


def _faces2_dihedral(n):
    head = _F((n - 3) ** 2 * (n - 4), 8 * n * (2 * n - 5)) * C(n - 2) + _F(2, 5) * C(_F(n, 5) - 1)
    if n % 2 == 0:
        return head + _F(3 * (n - 4) * (n - 1), 16 * (n - 3)) * C(n // 2 - 1)
    return head + _F(n * n - 2 * n - 11, 8 * (n - 4)) * C(_F(n - 3, 2))


def _faces3_cyclic(n):
    return (_F((n - 3) * (n - 4) ** 2 * (n - 5), 24 * n * (2 * n - 5)) * C(n - 2)
            + _F((n - 4) ** 2, 4 * n) * C(_F(n, 2) - 2)
            + _F(n - 3, 9) * C(_F(n, 3) - 1) + _F(1, 3) * C(_F(n, 6) - 1))


def _k2_cyclic(n):
    if n % 2 == 0:
        return _F(n * (n - 2) * (n - 4), 12)
    return _F((n + 1) * (n - 3) * (n - 4), 12)


def _k2_dihedral(n):
    if n % 2 == 0:
        return _F((n - 4) * (n - 2) * (n + 3), 24)
    return _F((n - 3) * (n * n - 13), 24)


# (name, group, applies(n, k), value(n))
SPECIAL_CASES = [
    ("k=1", "cyclic", lambda n, k: k == 1 and n >= 4, _k1),
    ("k=1", "dihedral", lambda n, k: k == 1 and n >= 4, _k1),
    ("k=2", "cyclic", lambda n, k: k == 2 and n >= 5, _k2_cyclic),
    ("k=2", "dihedral", lambda n, k: k == 2 and n >= 5, _k2_dihedral),
    ("k=n-3", "dihedral", lambda n, k: k == n - 3 and n >= 3, _triangulations_dihedral),
    ("k=n-3", "cyclic", lambda n, k: k == n - 3 and n >= 3, _triangulations_cyclic),
    ("k=n-4", "dihedral", lambda n, k: k == n - 4 and n >= 4, _almost_dihedral),
    ("k=n-4", "cyclic", lambda n, k: k == n - 4 and n >= 4, _almost_cyclic),
    ("k=n-5", "cyclic", lambda n, k: k == n - 5 and n >= 5, _faces2_cyclic),
    ("k=n-5", "dihedral", lambda n, k: k == n - 5 and n >= 5, _faces2_dihedral),
    ("k=n-6", "cyclic", lambda n, k: k == n - 6 and n >= 6, _faces3_cyclic),
]


# literal forms that differ from the true counts; reported, never trusted
PRINTED_SPECIAL_CASES = [
    ("k=n-4", "dihedral", lambda n, k: k == n - 4 and n >= 4, _almost_dihedral_printed),
]


def special_cases(n, k, group, printed=False):
    """All special-family values that apply to (n, k, group), keyed by family name.

    With ``printed=True`` the literal variants of families known to carry a
    misprint are returned instead of the corrected ones.
    """
    table = PRINTED_SPECIAL_CASES if printed else SPECIAL_CASES
    return {name: fn(n) for name, g, applies, fn in table
            if g == group and applies(n, k)}


def special_case(n, k, group):
    """Value of the first applicable special family, or None."""
    values = special_cases(n, k, group)
    return next(iter(values.values()), None)


# -- brute force ------------------------------------------------------------

def canonical_orbit_count(n, k, group):
    check_capacity(n)
    return len({canonical_indices(idx, n, group) for idx in iter_index_sets(n, k)})


# -- reconciliation ---------------------------------------------------------

@dataclass
class CountReport:
    n: int
    k: int
    group: str
    values: dict = field(default_factory=dict)  # method -> Fraction
    agrees: dict = field(default_factory=dict)  # method -> bool
    notes: dict = field(default_factory=dict)   # method -> str

    @property
    def value(self):
        return self.values["burnside"]

    def to_records(self):
        return [
            {
                "n": self.n,
                "k": self.k,
                "group": self.group,
                "method": method,
                "value": {"numerator": v.numerator, "denominator": v.denominator},
                "agrees": self.agrees[method],
                "note": self.notes.get(method, ""),
            }
            for method, v in self.values.items()
        ]


MANDATORY = ("burnside", "canonical", "formula_corrected")


def reconcile_group(n, k, group, canonical=None):
    """Evaluate every applicable method for one group.

    `canonical` forces (True) or skips (False) the brute-force count; by
    default it runs whenever n is within the brute-force bound.
    """
    _check_range(n, k)
    burnside = cyclic_burnside if group == "cyclic" else dihedral_burnside
    report = CountReport(n, k, group)
    truth = Fraction(burnside(n, k))
    report.values["burnside"] = truth
    if canonical is None:
        try:
            check_capacity(n)
            canonical = True
        except Exception:
            canonical = False
    if canonical:
        report.values["canonical"] = Fraction(canonical_orbit_count(n, k, group))
    report.values["formula_corrected"] = formula(n, k, group, "corrected")
    for name, value in special_cases(n, k, group).items():
        report.values[f"special:{name}"] = value
    for name, value in special_cases(n, k, group, printed=True).items():
        report.values[f"special_printed:{name}"] = value
    if k >= 1:
        report.values["formula_printed"] = formula(n, k, group, "printed")

    for method, value in report.values.items():
        report.agrees[method] = value == truth
    bad = [m for m in report.values
           if not report.agrees[m] and (m in MANDATORY or m.startswith("special:"))]
    if bad:
        raise ReconciliationError(
            f"({n},{k}) {group}: methods disagree: "
            + ", ".join(f"{m}={report.values[m]}" for m in ["burnside"] + bad))
    for method in report.values:
        if method.startswith("special_printed:") and not report.agrees[method]:
            report.notes[method] = (
                f"printed closed form gives {report.values[method]}, true {truth}")
    if "formula_printed" in report.values and not report.agrees["formula_printed"]:
        terms = cyclic_terms if group == "cyclic" else dihedral_terms
        printed, corrected = terms(n, k, "printed"), terms(n, k, "corrected")
        diffs = [f"{name}: printed {printed.get(name, 0)} vs corrected {corrected.get(name, 0)}"
                 for name in sorted(set(printed) | set(corrected))
                 if printed.get(name, 0) != corrected.get(name, 0)]
        report.notes["formula_printed"] = (
            f"printed formula gives {report.values['formula_printed']}, true {truth}; "
            + "; ".join(diffs))
    return report


def reconcile(n, k, canonical=None):
    """Reports for both groups, cyclic first."""
    return [reconcile_group(n, k, g, canonical) for g in GROUPS]


__all__ = [
    "GROUPS", "MODES", "ReconciliationError", "cyclic_burnside", "dihedral_burnside",
    "cyclic_terms", "dihedral_terms", "cyclic_formula", "dihedral_formula", "formula",
    "SPECIAL_CASES", "PRINTED_SPECIAL_CASES", "special_cases", "special_case", "canonical_orbit_count",
    "CountReport", "reconcile_group", "reconcile", "EDGE_AXIS",
]
