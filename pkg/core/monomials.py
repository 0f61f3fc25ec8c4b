"""Bigraded monomials in k[x1, x2, y1, y2] and monomial bigraded ideals.

deg x1 = deg x2 = (1, 0) and deg y1 = deg y2 = (0, 1). Ideals are kept as
generator sets; bidegree slices are computed on demand and are exact only
inside the rectangle a caller works in.
"""
import enum
import itertools
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from core.errors import ClosureError, MonomialError, NonBilexError
from core.partitions import SidedPartition

VARIABLES = ("x1", "x2", "y1", "y2")

_FACTOR = re.compile(r"^(x1|x2|y1|y2)(?:\^(\d+))?$", re.ASCII)


@dataclass(frozen=True)
class BiDegree:
    """A bidegree (a, b): x-degree a, y-degree b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise MonomialError(f"bidegree must be natural, got ({self.a},{self.b})")

    def leq(self, other: "BiDegree") -> bool:
        """Componentwise order."""
        return self.a <= other.a and self.b <= other.b

    @property
    def sides(self) -> Tuple[int, int]:
        """Sides of the partitions living in this bidegree."""
        return self.a + 1, self.b + 1

    @property
    def dimension(self) -> int:
        """dim_k R_(a,b)."""
        return (self.a + 1) * (self.b + 1)

    def cells(self) -> Iterable["BiDegree"]:
        """Every bidegree in the rectangle (0,0)..(a,b), row by row."""
        for i in range(self.a + 1):
            for j in range(self.b + 1):
                yield BiDegree(i, j)

    def __iter__(self):
        return iter((self.a, self.b))

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class BiMonomial:
    """x1^i1 x2^i2 y1^j1 y2^j2."""

    i1: int
    i2: int
    j1: int
    j2: int

    def __post_init__(self):
        if min(self.exponents) < 0:
            raise MonomialError(f"negative exponent in {self.exponents}")

    @property
    def exponents(self) -> Tuple[int, int, int, int]:
        return self.i1, self.i2, self.j1, self.j2

    @property
    def bidegree(self) -> BiDegree:
        return BiDegree(self.i1 + self.i2, self.j1 + self.j2)

    def divides(self, other: "BiMonomial") -> bool:
        return all(p <= q for p, q in zip(self.exponents, other.exponents))

    def times(self, variable: str) -> "BiMonomial":
        """Multiply by one of x1, x2, y1, y2."""
        exps = list(self.exponents)
        exps[VARIABLES.index(variable)] += 1
        return BiMonomial(*exps)

    def divided_by(self, variable: str) -> Optional["BiMonomial"]:
        exps = list(self.exponents)
        k = VARIABLES.index(variable)
        if exps[k] == 0:
            return None
        exps[k] -= 1
        return BiMonomial(*exps)

    def order_key(self) -> Tuple[int, int, int, int, int, int]:
        """Sort key for degree-lex with x1 > x2 > y1 > y2 (larger key = larger monomial)."""
        return (self.i1 + self.i2, self.j1 + self.j2) + self.exponents

    def __str__(self) -> str:
        factors = []
        for name, exp in zip(VARIABLES, self.exponents):
            if exp == 1:
                factors.append(name)
            elif exp > 1:
                factors.append(f"{name}^{exp}")
        return " ".join(factors) if factors else "1"

    @classmethod
    def parse(cls, text: str) -> "BiMonomial":
        """Read ``x1^2 y1 y2^3``, ``x1^2*y1``, ``1`` or the quadruple ``2 0 1 3``."""
        stripped = text.strip()
        if stripped == "1":
            return cls(0, 0, 0, 0)
        tokens = stripped.replace("*", " ").split()
        if not tokens:
            raise MonomialError("empty monomial")
        if all(t.isascii() and t.isdigit() for t in tokens):
            if len(tokens) != 4:
                raise MonomialError(f"exponent form needs 4 integers, got {len(tokens)}")
            return cls(*map(int, tokens))
        exps = [0, 0, 0, 0]
        for token in tokens:
            match = _FACTOR.match(token)
            if not match:
                raise MonomialError(f"unrecognised factor {token!r}")
            exps[VARIABLES.index(match.group(1))] += int(match.group(2) or 1)
        return cls(*exps)


def monomials_of(at: BiDegree) -> List[BiMonomial]:
    """Every monomial of R_(a,b), largest first."""
    return [
        BiMonomial(i1, at.a - i1, j1, at.b - j1)
        for i1 in range(at.a, -1, -1)
        for j1 in range(at.b, -1, -1)
    ]


def maximal_ideal_power(d: int) -> FrozenSet[BiMonomial]:
    """Generators of (x1, x2, y1, y2)^d."""
    return frozenset(
        BiMonomial(*exps)
        for exps in itertools.product(range(d + 1), repeat=4)
        if sum(exps) == d
    )


def t_monomial(p: int, q: int, at: BiDegree) -> Optional[BiMonomial]:
    """T(p,q)_(a,b) = x1^(p-1) x2^(a-p+1) y1^(q-1) y2^(b-q+1); None stands for 0."""
    if not (0 <= p <= at.a + 1 and 0 <= q <= at.b + 1):
        raise MonomialError(f"(p,q)=({p},{q}) outside (0,0)..{at.sides}")
    if p == 0 or q == 0:
        return None
    return BiMonomial(p - 1, at.a - p + 1, q - 1, at.b - q + 1)


def dictionary_coordinates(m: BiMonomial) -> Tuple[int, int]:
    """(p, q) with T(p,q) = m."""
    return m.i1 + 1, m.j1 + 1


def monomial_set_of(alpha: SidedPartition) -> FrozenSet[BiMonomial]:
    """M(alpha): T(p',q') with 1 <= p' <= p_q' for each column q'."""
    l1, l2 = alpha.sides
    if l1 < 1 or l2 < 1:
        raise MonomialError(f"partition sides {alpha.sides} do not match a bidegree")
    at = BiDegree(l1 - 1, l2 - 1)
    return frozenset(
        t_monomial(p, q, at)
        for q, top in enumerate(alpha.entries, start=1)
        for p in range(1, top + 1)
    )


class VariableOrder(enum.Enum):
    """Which variable of each pair is the larger one."""

    STANDARD = "x1>x2,y1>y2"
    REVERSED = "x2>x1,y2>y1"


def is_bilex(
    monomials: Iterable[BiMonomial],
    at: BiDegree,
    order: VariableOrder = VariableOrder.STANDARD,
) -> bool:
    """Def. of a bilex set: raising the x-part or the y-part stays inside the set.

    Raises:
        MonomialError: if some monomial does not have bidegree ``at``
    """
    members = frozenset(monomials)
    for m in members:
        if m.bidegree != at:
            raise MonomialError(f"{m} has bidegree {m.bidegree}, expected {at}")
    step = 1 if order is VariableOrder.STANDARD else -1
    for m in members:
        # larger x-parts differ by moving degree from x2 to x1 (or back when reversed)
        larger_x = m.i1 + step
        if 0 <= larger_x <= at.a:
            if BiMonomial(larger_x, at.a - larger_x, m.j1, m.j2) not in members:
                return False
        larger_y = m.j1 + step
        if 0 <= larger_y <= at.b:
            if BiMonomial(m.i1, m.i2, larger_y, at.b - larger_y) not in members:
                return False
    return True


@dataclass(frozen=True)
class MonomialBiIdeal:
    """A monomial ideal given by a finite generator set; the empty set is the zero ideal."""

    generators: FrozenSet[BiMonomial] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "generators", frozenset(self.generators))

    def __add__(self, other: "MonomialBiIdeal") -> "MonomialBiIdeal":
        return MonomialBiIdeal(self.generators | other.generators)

    def contains(self, m: BiMonomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def slice(self, at: BiDegree) -> FrozenSet[BiMonomial]:
        """Monomials of I in bidegree at."""
        return frozenset(m for m in monomials_of(at) if self.contains(m))

    def hilbert_value(self, at: BiDegree) -> int:
        return sum(1 for m in monomials_of(at) if not self.contains(m))

    def hilbert_table(self, bounds: BiDegree):
        # Local import: tables sit above monomials in the dependency order
        from core.tables import HilbertTable

        return HilbertTable.from_function(bounds, lambda i, j: self.hilbert_value(BiDegree(i, j)))

    def __str__(self) -> str:
        if not self.generators:
            return "(0)"
        ordered = sorted(self.generators, key=BiMonomial.order_key, reverse=True)
        return "(" + ", ".join(map(str, ordered)) + ")"


def membership(ideal: MonomialBiIdeal, m: BiMonomial) -> bool:
    return ideal.contains(m)


def hilbert_value(ideal: MonomialBiIdeal, at: BiDegree) -> int:
    return ideal.hilbert_value(at)


def hilbert_table(ideal: MonomialBiIdeal, bounds: BiDegree):
    return ideal.hilbert_table(bounds)


def alpha_from_ideal(ideal: MonomialBiIdeal, at: BiDegree) -> SidedPartition:
    """The partition alpha_{M_ab(I)} of the monomials of degree (a,b) outside I.

    Raises:
        NonBilexError: when the outside monomials are not the set M(alpha) of a
            partition, i.e. the slice of I is not spanned by a bilex set
    """
    outside = frozenset(m for m in monomials_of(at) if not ideal.contains(m))
    tops = []
    for q in range(1, at.b + 2):
        present = [p for p in range(1, at.a + 2) if t_monomial(p, q, at) in outside]
        tops.append(max(present, default=0))
    for left, right in zip(tops, tops[1:]):
        if left < right:
            raise NonBilexError(
                f"column profile {tuple(tops)} at {at} is not weakly decreasing", at=at
            )
    alpha = SidedPartition(at.sides, tuple(tops))
    if monomial_set_of(alpha) != outside:
        raise NonBilexError(
            f"monomials outside the ideal at {at} do not form a Ferrers diagram", at=at
        )
    return alpha


def _bounding_box(degrees: Iterable[BiDegree]) -> BiDegree:
    degrees = list(degrees)
    if not degrees:
        return BiDegree(0, 0)
    return BiDegree(max(d.a for d in degrees), max(d.b for d in degrees))


def minimal_generators(
    monomials_by_bidegree: Mapping[BiDegree, Iterable[BiMonomial]],
    bounds: Optional[BiDegree] = None,
) -> FrozenSet[BiMonomial]:
    """Reduce a bidegree-wise spanning family to minimal monomial generators.

    Args:
        monomials_by_bidegree: For each bidegree, the monomials of the ideal there;
            missing bidegrees count as empty
        bounds: The rectangle; defaults to the bounding box of the keys

    Returns:
        Monomials of the family that no other monomial of the family divides

    Raises:
        ClosureError: if the family is not closed under multiplication by a
            variable inside the rectangle
    """
    family: Dict[BiDegree, FrozenSet[BiMonomial]] = {}
    for at, monomials in monomials_by_bidegree.items():
        members = frozenset(monomials)
        for m in members:
            if m.bidegree != at:
                raise MonomialError(f"{m} is filed under {at} but has bidegree {m.bidegree}")
        family[at] = members
    box = bounds if bounds is not None else _bounding_box(family)

    def holds(m: BiMonomial) -> bool:
        return m in family.get(m.bidegree, frozenset())

    for at, members in family.items():
        if not at.leq(box):
            continue
        for m in members:
            for variable in VARIABLES:
                product = m.times(variable)
                if product.bidegree.leq(box) and not holds(product):
                    raise ClosureError(m, variable)

    minimal = set()
    for at, members in family.items():
        if not at.leq(box):
            continue
        for m in members:
            divisors = (m.divided_by(v) for v in VARIABLES)
            if not any(d is not None and holds(d) for d in divisors):
                minimal.add(m)
    return frozenset(minimal)
