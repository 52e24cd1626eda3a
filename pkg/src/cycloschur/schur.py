"""Exact Laurent-polynomial arithmetic, cyclotomic polynomials, and the
factored form of Ariki-Koike Schur elements.

The Schur element attached to a multipartition of rank n and level l is
a signed monomial times a product of n q-integer factors [h]_q (h the
classical hook length of a box) and n(l-1) pair factors
q^h Q_a Q_b^{-1} - 1 (h the generalised hook length of a box of
component a against component b).  ``GenericSchurFactors`` keeps this
structure unexpanded; defects are read off the factors one by one,
while ``specialize_integer`` expands the product into an honest Laurent
polynomial as an independent oracle.

Roots of unity live in a single ambient cyclic group Z/NZ so that every
equality test is exact integer arithmetic.  A ``CycloSpec`` records a
one-variable specialisation: component a carries the twist
omega^(twist_a) (omega the fixed root of order `level`) times
y^(charges_a), q goes to y^(q_exp), and y is finally evaluated at a
root eta.  ``defect_general`` computes the multiplicity of the minimal
polynomial of eta in the specialised Schur element by testing each
factor for vanishing at eta; a factor with zero y-exponent and trivial
twist vanishes identically, which is reported as a bad specialisation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .partitions import Multipartition, generalized_hook, n_invariant


class BadSpecialisationError(ValueError):
    """A specialisation that sends a Schur element to zero."""


class LaurentPoly:
    """A Laurent polynomial in one variable with exact rational
    coefficients, stored as a sparse exponent -> coefficient table."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        table: dict[int, Fraction] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for exp, c in items:
                c = Fraction(c)
                if c:
                    c += table.get(exp, 0)
                    if c:
                        table[int(exp)] = c
                    else:
                        table.pop(int(exp), None)
        self.coeffs = table

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, exp: int, coeff=1) -> "LaurentPoly":
        return cls({exp: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        table = dict(self.coeffs)
        for exp, c in other.coeffs.items():
            s = table.get(exp, 0) + c
            if s:
                table[exp] = s
            else:
                table.pop(exp, None)
        out = LaurentPoly()
        out.coeffs = table
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly()
        out.coeffs = {exp: -c for exp, c in self.coeffs.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        table: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                exp = e1 + e2
                s = table.get(exp, 0) + c1 * c2
                if s:
                    table[exp] = s
                else:
                    table.pop(exp, None)
        out = LaurentPoly()
        out.coeffs = table
        return out

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = LaurentPoly.one()
        for _ in range(k):
            out = out * self
        return out

    @property
    def min_exp(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree")
        return min(self.coeffs)

    @property
    def max_exp(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree")
        return max(self.coeffs)

    @property
    def span(self) -> int:
        """max_exp - min_exp; 0 for monomials."""
        return self.max_exp - self.min_exp

    def exact_divide(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient self / other when the division is exact in the
        Laurent ring; raises ValueError otherwise."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly.zero()
        sp, so = self.min_exp, other.min_exp
        num = [self.coeffs.get(sp + k, Fraction(0)) for k in range(self.span + 1)]
        den = [other.coeffs.get(so + k, Fraction(0)) for k in range(other.span + 1)]
        if len(num) < len(den):
            raise ValueError("inexact division")
        lead = den[-1]
        quot = [Fraction(0)] * (len(num) - len(den) + 1)
        for k in range(len(quot) - 1, -1, -1):
            q = num[k + len(den) - 1] / lead
            quot[k] = q
            if q:
                for idx, d in enumerate(den):
                    num[k + idx] -= q * d
        if any(num):
            raise ValueError("inexact division")
        return LaurentPoly({sp - so + k: c for k, c in enumerate(quot)})

    def to_pairs(self) -> tuple[tuple[int, str], ...]:
        """Sorted (exponent, coefficient) pairs with exact coefficients
        rendered as 'p' or 'p/q' strings."""
        return tuple((exp, str(self.coeffs[exp])) for exp in sorted(self.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        chunks = []
        for exp in sorted(self.coeffs, reverse=True):
            c = self.coeffs[exp]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            else:
                var = "y" if exp == 1 else f"y^{exp}"
                body = var if mag == 1 else f"{mag}*{var}"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"


def q_integer(h: int) -> LaurentPoly:
    """[h]_y = 1 + y + ... + y^(h-1)."""
    if h < 1:
        raise ValueError("q-integers are defined for h >= 1")
    return LaurentPoly({k: 1 for k in range(h)})


@lru_cache(maxsize=None)
def cyclotomic_poly(e: int) -> LaurentPoly:
    """The e-th cyclotomic polynomial over the rationals, computed as
    (y^e - 1) / prod_{d | e, d < e} Phi_d."""
    if e < 1:
        raise ValueError("e must be positive")
    result = LaurentPoly({e: 1, 0: -1})
    for d in range(1, e):
        if e % d == 0:
            result = result.exact_divide(cyclotomic_poly(d))
    return result


def nu_phi(p: LaurentPoly, e: int) -> int:
    """Multiplicity of the e-th cyclotomic polynomial in p, by repeated
    exact division."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no valuation")
    phi = cyclotomic_poly(e)
    count = 0
    while True:
        try:
            p = p.exact_divide(phi)
        except ValueError:
            return count
        count += 1


@dataclass(frozen=True)
class GenericSchurFactors:
    """The factored Schur element: a sign, a power of q and two factor
    lists.  A rank-n level-l multipartition has n q-integer entries
    (classical hook lengths, all >= 1) and n(l-1) pair entries
    (h, a, b) standing for q^h Q_a Q_b^{-1} - 1."""

    sign: int
    q_exponent: int
    q_integers: tuple[int, ...]
    pair_factors: tuple[tuple[int, int, int], ...]

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "q_exp": self.q_exponent,
            "qints": list(self.q_integers),
            "pairs": [list(p) for p in self.pair_factors],
        }


@lru_cache(maxsize=None)
def schur_factors(mp: Multipartition) -> GenericSchurFactors:
    """The factored Schur element of a multipartition."""
    n, level = mp.rank, mp.level
    sign = -1 if (n * (level - 1)) % 2 else 1
    qints: list[int] = []
    pairs: list[tuple[int, int, int]] = []
    for a, comp in enumerate(mp):
        for i, j in comp.nodes():
            qints.append(generalized_hook(comp, comp, i, j))
            for b in range(level):
                if b != a:
                    pairs.append((generalized_hook(comp, mp[b], i, j), a, b))
    return GenericSchurFactors(sign, -n_invariant(mp.bar()), tuple(qints), tuple(pairs))


def specialize_integer(mp: Multipartition, charges: Sequence[int]) -> LaurentPoly:
    """Expand the Schur element under Q_a -> y^(s_a), q -> y.

    Every pair factor must have a nonzero charged hook h + s_a - s_b;
    otherwise the product vanishes and BadSpecialisationError is raised.
    """
    if len(charges) != mp.level:
        raise ValueError("multicharge length must equal the level")
    f = schur_factors(mp)
    poly = LaurentPoly.term(f.q_exponent, f.sign)
    for h in f.q_integers:
        poly = poly * q_integer(h)
    for h, a, b in f.pair_factors:
        ch = h + charges[a] - charges[b]
        if ch == 0:
            raise BadSpecialisationError(
                f"zero charged hook between components {a} and {b}"
            )
        poly = poly * LaurentPoly({ch: 1, 0: -1})
    return poly


def defect_integer(mp: Multipartition, charges: Sequence[int], e: int) -> int:
    """The e-defect from the factor structure.

    For e >= 2 it counts the factors whose (charged) hook is divisible
    by e, zero charged hooks included.  For e = 1 the q-integer factors
    never contribute and the count is the number of pair factors with a
    nonzero charged hook, which is n(l-1) whenever the multicharge never
    produces a zero charged hook.
    """
    if e < 1:
        raise ValueError("e must be positive")
    if len(charges) != mp.level:
        raise ValueError("multicharge length must equal the level")
    f = schur_factors(mp)
    if e == 1:
        return sum(1 for h, a, b in f.pair_factors if h + charges[a] - charges[b] != 0)
    total = sum(1 for h in f.q_integers if h % e == 0)
    total += sum(
        1 for h, a, b in f.pair_factors if (h + charges[a] - charges[b]) % e == 0
    )
    return total


@dataclass(frozen=True)
class RootOfUnity:
    """zeta_N^t: the exponent t inside the cyclic group of order N."""

    ambient: int
    exponent: int

    def __post_init__(self):
        if self.ambient < 1:
            raise ValueError("ambient order must be positive")
        object.__setattr__(self, "exponent", self.exponent % self.ambient)

    @property
    def element_order(self) -> int:
        return self.ambient // math.gcd(self.ambient, self.exponent)

    @property
    def is_one(self) -> bool:
        return self.exponent == 0

    def _check(self, other: "RootOfUnity") -> None:
        if self.ambient != other.ambient:
            raise ValueError("mismatched ambient orders")

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        self._check(other)
        return RootOfUnity(self.ambient, self.exponent + other.exponent)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.ambient, self.exponent * k)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(self.ambient, -self.exponent)


def _common_ambient(roots: Iterable[RootOfUnity], u: RootOfUnity) -> int:
    ambient = u.ambient
    for xi in roots:
        if xi.ambient != ambient:
            raise ValueError("mismatched ambient orders")
    return ambient


def semisimple_check(
    xi: Sequence[RootOfUnity], u: RootOfUnity, n: int
) -> bool:
    """Whether the rank-n algebra with parameters (xi_0..xi_{l-1}; u) is
    semisimple: no vanishing q-integer up to n and no relation
    u^h xi_a = xi_b with 0 <= a < b < l and |h| < n."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    ambient = _common_ambient(xi, u)
    if u.element_order != 1 and u.element_order <= n:
        return False
    for a in range(len(xi)):
        for b in range(a + 1, len(xi)):
            delta = (xi[b].exponent - xi[a].exponent) % ambient
            for h in range(-(n - 1), n):
                if (u.exponent * h - delta) % ambient == 0:
                    return False
    return True


def dipper_mathas_classes(
    xi: Sequence[RootOfUnity], u: RootOfUnity, n: int
) -> tuple[tuple[int, ...], ...]:
    """The finest partition of the component indices such that parameters
    in different parts never differ by u^h with |h| < n: the connected
    components of that relation."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    ambient = _common_ambient(xi, u)
    parent = list(range(len(xi)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(len(xi)):
        for b in range(a + 1, len(xi)):
            delta = (xi[b].exponent - xi[a].exponent) % ambient
            if any(
                (u.exponent * h - delta) % ambient == 0 for h in range(-(n - 1), n)
            ):
                parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for a in range(len(xi)):
        groups.setdefault(find(a), []).append(a)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))


def class_multicharge(
    members: Sequence[int], xi: Sequence[RootOfUnity], u: RootOfUnity
) -> tuple[int, ...]:
    """Exponents s with xi_a / xi_{a_1} = u^(s_a) for the members of one
    parameter class, each reduced into [0, order(u)); the first member
    gets 0."""
    if not members:
        raise ValueError("a parameter class cannot be empty")
    ambient = _common_ambient((xi[a] for a in members), u)
    e = u.element_order
    g = math.gcd(u.exponent, ambient)
    base = xi[members[0]].exponent
    out = []
    for a in members:
        delta = (xi[a].exponent - base) % ambient
        if delta % g != 0:
            raise ValueError(f"component {a} is not in the class of {members[0]}")
        if e == 1:
            out.append(0)
        else:
            out.append(((delta // g) * pow(u.exponent // g, -1, e)) % e)
    return tuple(out)


@dataclass(frozen=True)
class CycloSpec:
    """A one-variable specialisation of the level-l parameters.

    Component a is sent to omega^(twist_a) * y^(charges_a) where omega
    is the fixed root of order `level` inside Z/NZ, q is sent to
    y^(q_exp), and y is evaluated at `eta`.  The default twist
    (0, 1, ..., l-1) is the standard choice; an all-zero twist encodes
    plain integer-multicharge parameters.
    """

    level: int
    charges: tuple[int, ...]
    q_exp: int
    eta: RootOfUnity
    twist: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be at least 1")
        if len(self.charges) != self.level:
            raise ValueError("one charge per component required")
        if self.q_exp == 0:
            raise ValueError("the q-exponent must be nonzero")
        if self.eta.ambient % self.level != 0:
            raise ValueError("the level must divide the ambient order")
        if self.twist is None:
            object.__setattr__(self, "twist", tuple(range(self.level)))
        elif len(self.twist) != self.level:
            raise ValueError("one twist exponent per component required")

    def parameter(self, a: int) -> RootOfUnity:
        """The specialised value of component a, evaluated at eta."""
        step = self.eta.ambient // self.level
        return RootOfUnity(
            self.eta.ambient,
            self.twist[a] * step + self.charges[a] * self.eta.exponent,
        )

    def u(self) -> RootOfUnity:
        """The specialised value of q, evaluated at eta."""
        return RootOfUnity(self.eta.ambient, self.q_exp * self.eta.exponent)


def defect_general(mp: Multipartition, spec: CycloSpec) -> int:
    """Multiplicity of the minimal polynomial of eta in the specialised
    Schur element, factor by factor.

    A q-integer factor [h]_q contributes 1 when y^(q_exp * h) - 1
    vanishes at eta but y^(q_exp) - 1 does not.  A pair factor (h, a, b)
    with y-exponent M = q_exp*h + r_a - r_b contributes 1 when M != 0
    and omega^(w_a - w_b) * eta^M = 1; with M = 0 it is the constant
    omega^(w_a - w_b) - 1, which contributes 0 when nonzero and makes
    the whole specialisation vanish otherwise.
    """
    if mp.level != spec.level:
        raise ValueError("multipartition level must match the specialisation")
    ambient = spec.eta.ambient
    t = spec.eta.exponent
    step = ambient // spec.level
    f = schur_factors(mp)
    total = 0
    u_is_one = (spec.q_exp * t) % ambient == 0
    if not u_is_one:
        for h in f.q_integers:
            if (spec.q_exp * h * t) % ambient == 0:
                total += 1
    for h, a, b in f.pair_factors:
        m_exp = spec.q_exp * h + spec.charges[a] - spec.charges[b]
        twist = ((spec.twist[a] - spec.twist[b]) * step) % ambient
        if m_exp == 0:
            if twist == 0:
                raise BadSpecialisationError(
                    f"the pair factor of components {a} and {b} vanishes identically"
                )
            continue
        if (twist + m_exp * t) % ambient == 0:
            total += 1
    return total
