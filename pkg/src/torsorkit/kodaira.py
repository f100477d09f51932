"""Singular-fiber classification over the formal punctured disk.

A Weierstrass model y^2 = x^3 + a(t)x + b(t) with exact Laurent
coefficients is minimalized and classified by the valuation triple
(v(c4), v(c6), v(Delta)) with c4 = -48a, c6 = -864b.  Over a complex
base (residue characteristic 0) the full case analysis of Tate's
algorithm collapses to a fixed valuation table and exactly the Kodaira
catalog occurs.

Multiple fibers mI_n carry no Weierstrass equation (they have no
section); they are represented symbolically via log_transform on the
fiber type, which scales every component multiplicity by m.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DegenerateModel, UnclassifiedValuations, UnsupportedType
from .laurent import LaurentPoly
from .multiplicity import MultiplicityVector, admissibility_report

_FAMILIES = ("I", "II", "III", "IV", "I*", "II*", "III*", "IV*")


@dataclass(frozen=True)
class WeierstrassModel:
    """y^2 = x^3 + a(t)x + b(t) with exact Laurent coefficient polynomials."""

    a: LaurentPoly
    b: LaurentPoly


@dataclass(frozen=True)
class KodairaType:
    """A catalog fiber type: family tag, I-index n, and fiber multiplicity m.

    n is meaningful for families "I" and "I*"; m >= 2 marks the multiple
    fiber mI_n and is only allowed for family "I".
    """

    family: str
    n: int = 0
    m: int = 1

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown fiber family {self.family!r}")
        if self.family not in ("I", "I*") and self.n:
            raise ValueError(f"family {self.family} carries no index n")
        if self.m != 1 and self.family != "I":
            raise ValueError("multiple fibers exist only for I_n types here")
        if self.n < 0 or self.m < 1:
            raise ValueError("n >= 0 and m >= 1 required")

    @property
    def tag(self) -> str:
        if self.family == "I":
            base = f"I{self.n}"
            return base if self.m == 1 else f"{self.m}{base}"
        if self.family == "I*":
            return f"I{self.n}*"
        return self.family

    def __repr__(self):
        return f"KodairaType({self.tag})"


@dataclass(frozen=True)
class FiberData:
    """Classified fiber with its multiplicity bookkeeping.

    v_delta is the discriminant valuation of the minimal model; it is
    None for multiple fibers, which admit no Weierstrass model.
    min == gcd holds for every catalog type and is enforced here as an
    internal cross-check; a violation is a bug, not a data condition.
    """

    kodaira: KodairaType
    multiplicities: MultiplicityVector
    v_delta: Optional[int]
    component_count: int
    min: int
    gcd: int

    def __post_init__(self):
        if self.component_count != len(self.multiplicities):
            raise ValueError("component_count must match the multiplicity vector")
        if self.min != self.gcd:
            raise AssertionError(
                f"internal error: min {self.min} != gcd {self.gcd} for {self.kodaira.tag}"
            )


def discriminant(model: WeierstrassModel) -> LaurentPoly:
    """Delta(t) = -16(4a^3 + 27b^2), exactly."""
    delta = (model.a**3 * 4 + model.b**2 * 27) * (-16)
    if delta.is_zero():
        raise DegenerateModel("discriminant is identically zero")
    return delta


def minimalize(model: WeierstrassModel) -> WeierstrassModel:
    """Rescale (a, b) -> (a/t^4, b/t^6) while v(a) >= 4 and v(b) >= 6.

    Each step is the substitution x -> t^2 x, y -> t^3 y and drops
    v(Delta) by 12.  v(0) = +inf, so identically-zero coefficients never
    block a rescale.
    """
    discriminant(model)  # reject Delta == 0 up front
    a, b = model.a, model.b
    while a.valuation() >= 4 and b.valuation() >= 6:
        a = a.shift(-4)
        b = b.shift(-6)
    return WeierstrassModel(a, b)


def classify_fiber(model: WeierstrassModel) -> KodairaType:
    """Fiber type at t = 0 from the minimal valuation triple.

    c4 = -48a and c6 = -864b, so v(c4) = v(a) and v(c6) = v(b) over a
    characteristic-0 coefficient field.
    """
    m = minimalize(model)
    v4 = m.a.valuation()
    v6 = m.b.valuation()
    vd = discriminant(m).valuation()

    if v4 < 0 or v6 < 0:
        # coefficient poles: not an integral model, and downward-only
        # rescaling cannot repair it (a t^-1-twist can even fake vd == 0)
        raise UnclassifiedValuations(
            f"coefficients have poles at t = 0: (v(c4), v(c6)) = ({v4}, {v6})"
        )
    if vd == 0:
        return KodairaType("I", 0)
    if v4 == 0:
        return KodairaType("I", vd)
    if v6 == 1 and vd == 2:
        return KodairaType("II")
    if v4 == 1 and vd == 3:
        return KodairaType("III")
    if v6 == 2 and vd == 4:
        return KodairaType("IV")
    if v4 >= 2 and v6 >= 3 and vd == 6:
        return KodairaType("I*", 0)
    if v4 == 2 and v6 == 3 and vd > 6:
        return KodairaType("I*", vd - 6)
    if v6 == 4 and vd == 8:
        return KodairaType("IV*")
    if v4 == 3 and vd == 9:
        return KodairaType("III*")
    if v6 == 5 and vd == 10:
        return KodairaType("II*")
    raise UnclassifiedValuations(f"no table row for (v(c4), v(c6), v(Delta)) = ({v4}, {v6}, {vd})")


# Component multiplicities of the additive catalog types.  I_n rows are
# generated (n ones); the starred/exceptional rows follow the standard
# extended-Dynkin marks.
_ADDITIVE_MULTIPLICITIES = {
    "II": (1,),
    "III": (1, 1),
    "IV": (1, 1, 1),
    "IV*": (1, 1, 1, 2, 2, 2, 3),
    "III*": (1, 1, 2, 2, 2, 3, 3, 4),
    "II*": (1, 2, 2, 3, 3, 4, 4, 5, 6),
}


def component_multiplicities(kt: KodairaType) -> MultiplicityVector:
    """The catalog multiplicity vector of a fiber type (scaled by m for mI_n)."""
    if kt.family == "I":
        base = (1,) * max(kt.n, 1)
        return MultiplicityVector(tuple(kt.m * x for x in base))
    if kt.family == "I*":
        return MultiplicityVector((1, 1, 1, 1) + (2,) * (kt.n + 1))
    return MultiplicityVector(_ADDITIVE_MULTIPLICITIES[kt.family])


def log_transform(kt: KodairaType, m: int) -> KodairaType:
    """The multiple fiber mI_n obtained by a logarithmic transform.

    Only (semi)stable I_n fibers admit the classical transform over a
    disk, so other inputs are rejected.
    """
    if m < 2:
        raise ValueError("log transform multiplicity must be >= 2")
    if kt.family != "I" or kt.m != 1:
        raise UnsupportedType(f"logarithmic transform not supported along {kt.tag}")
    return KodairaType("I", kt.n, m)


def nominal_v_delta(kt: KodairaType) -> Optional[int]:
    """Discriminant valuation of the minimal Weierstrass model, None for mI_n."""
    if kt.m != 1:
        return None
    if kt.family == "I":
        return kt.n
    if kt.family == "I*":
        return 6 + kt.n
    return {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}[kt.family]


def fiber_data(kt: KodairaType, v_delta: Optional[int] = None) -> FiberData:
    mu = component_multiplicities(kt)
    report = admissibility_report(mu)
    return FiberData(
        kodaira=kt,
        multiplicities=mu,
        v_delta=nominal_v_delta(kt) if v_delta is None else v_delta,
        component_count=len(mu),
        min=report.minimum,
        gcd=report.gcd,
    )


def fiber_report(model: WeierstrassModel) -> FiberData:
    """classify -> multiplicities -> min/gcd, with v(Delta) of the minimal model."""
    kt = classify_fiber(model)
    vd = discriminant(minimalize(model)).valuation()
    return fiber_data(kt, v_delta=int(vd))


def catalog(i_max: int = 10, star_max: int = 10, m_max: int = 6, multiple_n_max: int = 10):
    """The fiber catalog as FiberData rows, in a fixed deterministic order.

    Plain types first (I_0..I_{i_max}, II, III, IV, I_0*..I_{star_max}*,
    IV*, III*, II*), then multiple fibers mI_n for 2 <= m <= m_max,
    0 <= n <= multiple_n_max.
    """
    rows = [fiber_data(KodairaType("I", n)) for n in range(i_max + 1)]
    rows += [fiber_data(KodairaType(f)) for f in ("II", "III", "IV")]
    rows += [fiber_data(KodairaType("I*", n)) for n in range(star_max + 1)]
    rows += [fiber_data(KodairaType(f)) for f in ("IV*", "III*", "II*")]
    for m in range(2, m_max + 1):
        for n in range(multiple_n_max + 1):
            rows.append(fiber_data(log_transform(KodairaType("I", n), m)))
    return rows
