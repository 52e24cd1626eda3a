"""Weights, cores and residue vectors of charged multipartitions.

The residue of the box (a, i, j) is (j - i + s_a) mod e.  The weight of
a charged multipartition can be computed from its residue vector
(``fayers_weight``) or by reducing its abacus to a terminal state
(``uglov_weight`` / ``core``): while some bead of component c-1 is
missing from component c, transfer it across at the same position
(Step 1); once the components are nested, while some bead x of the last
component has position x - e free on the first component and above the
window floor, transfer it there (Step 3).  The number of transfers is
the weight and the terminal abacus is the core.  Neither depends on the
order in which eligible transfers are applied nor on the window size;
both facts are exercised by the test suite.

The reduction requires the multicharge to lie in the fundamental domain
s_0 <= ... <= s_{l-1} <= s_0 + e.  ``normalized_instance`` brings an
arbitrary integer multicharge there by reducing mod e and sorting,
permuting the components of the multipartition accordingly.

Residue vectors double as block keys: block membership of the
specialised algebra is approximated by equality of residue vectors,
the finest purely combinatorial invariant computed here.  Members of
one key class provably share their weight; the scan harness checks
that they share their defect as well.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .abacus import (
    beta_numbers,
    in_fundamental_domain,
    multi_beta,
    normalize_multicharge,
    partition_from_beta,
)
from .partitions import (
    Multipartition,
    Partition,
    format_multipartition,
    generalized_hook,
    hooks_multiset,
)


@dataclass(frozen=True)
class ResidueVector:
    """Counts of box residues mod e; the proxy block key."""

    modulus: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        if len(self.counts) != self.modulus:
            raise ValueError("one count per residue class required")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")

    @property
    def rank(self) -> int:
        return sum(self.counts)


def residue_vector(
    mp: Multipartition, charges: Sequence[int], e: int
) -> ResidueVector:
    """Count the boxes of each residue class (col - row + s_a) mod e."""
    if e < 2:
        raise ValueError("e must be at least 2")
    if len(charges) != mp.level:
        raise ValueError("multicharge length must equal the level")
    counts = [0] * e
    for node in mp.nodes():
        counts[(node.col - node.row + charges[node.comp]) % e] += 1
    return ResidueVector(e, tuple(counts))


def proxy_block_key(
    mp: Multipartition, charges: Sequence[int], e: int
) -> ResidueVector:
    """The residue vector used as a stand-in for block membership: two
    multipartitions of equal rank lie in the same proxy block iff their
    keys are equal."""
    return residue_vector(mp, charges, e)


def fayers_weight(mp: Multipartition, charges: Sequence[int], e: int) -> int:
    """The weight from the residue vector:
    sum_i c_{s_i} - (1/2) sum_{i mod e} (c_i - c_{i-1})^2."""
    rv = residue_vector(mp, charges, e)
    c = rv.counts
    total = sum(c[s % e] for s in charges)
    square = sum((c[i] - c[i - 1]) ** 2 for i in range(e))
    if square % 2:
        raise ArithmeticError("residue differences must have even square sum")
    weight = total - square // 2
    if weight < 0:
        raise ArithmeticError("weight must be nonnegative")
    return weight


def _reduce_runners(
    runners: list[set], m: int, e: int, rng: random.Random | None = None
) -> int:
    """Run the bead reduction in place and return the number of moves.

    The deterministic strategy takes the smallest target component and
    the largest eligible bead; passing an rng picks uniformly among the
    currently eligible moves of the active step instead.
    """
    floor = 1 - m
    level = len(runners)
    moves = 0
    while True:
        step1 = sorted(
            (
                (c, x)
                for c in range(1, level)
                for x in runners[c - 1]
                if x not in runners[c]
            ),
            key=lambda cx: (cx[0], -cx[1]),
        )
        if step1:
            c, x = step1[0] if rng is None else step1[rng.randrange(len(step1))]
            runners[c - 1].discard(x)
            runners[c].add(x)
            moves += 1
            continue
        step3 = sorted(
            (
                x
                for x in runners[level - 1]
                if x - e >= floor and x - e not in runners[0]
            ),
            reverse=True,
        )
        if step3:
            x = step3[0] if rng is None else step3[rng.randrange(len(step3))]
            runners[level - 1].discard(x)
            runners[0].add(x - e)
            moves += 1
            continue
        return moves


def _start_reduction(
    mp: Multipartition, charges: Sequence[int], e: int, m: int | None
) -> tuple[list[set], int]:
    if e < 2:
        raise ValueError("e must be at least 2")
    if not in_fundamental_domain(charges, e):
        raise ValueError("multicharge outside the fundamental domain")
    cfg = multi_beta(mp, charges, m)
    return [set(r) for r in cfg.runners], cfg.m


def uglov_weight(
    mp: Multipartition,
    charges: Sequence[int],
    e: int,
    m: int | None = None,
    rng: random.Random | None = None,
) -> int:
    """The weight as the number of bead moves of the reduction."""
    runners, m = _start_reduction(mp, charges, e, m)
    return _reduce_runners(runners, m, e, rng)


@dataclass(frozen=True)
class CoreResult:
    """Terminal state of the reduction: the core multipartition, the
    terminal charges (bead counts change as beads cross runners), and
    the number of moves performed."""

    core: Multipartition
    charges: tuple[int, ...]
    weight: int

    def to_json(self) -> dict:
        return {
            "core": format_multipartition(self.core),
            "charges": list(self.charges),
            "weight": self.weight,
        }


def core(
    mp: Multipartition, charges: Sequence[int], e: int, m: int | None = None
) -> CoreResult:
    """Reduce to the terminal abacus and read it back as a multipartition."""
    runners, m = _start_reduction(mp, charges, e, m)
    moves = _reduce_runners(runners, m, e)
    comps = []
    terminal = []
    for runner in runners:
        part, charge = partition_from_beta(sorted(runner, reverse=True), m)
        comps.append(part)
        terminal.append(charge)
    return CoreResult(Multipartition(comps), tuple(terminal), moves)


def _remove_rim_hook(p: Partition, i: int, j: int) -> Partition:
    # rows i..f-1 take the next row shortened by one; the foot row f is cut at j-1
    foot = sum(1 for q in p if q >= j)
    parts = list(p)
    for r in range(i, foot):
        parts[r - 1] = p.part(r + 1) - 1
    parts[foot - 1] = j - 1
    return Partition(parts)


def ecore_classical(p: Partition, e: int) -> tuple[Partition, int]:
    """Remove rim hooks of length e until none remain, always taking the
    topmost removable box; returns (core, number of hooks removed)."""
    if e < 2:
        raise ValueError("e must be at least 2")
    current = p
    removed = 0
    while True:
        target = None
        for i, j in current.nodes():
            if generalized_hook(current, current, i, j) == e:
                target = (i, j)
                break
        if target is None:
            return current, removed
        current = _remove_rim_hook(current, *target)
        removed += 1


def ecore_abacus(p: Partition, e: int) -> tuple[Partition, int]:
    """The e-core by sliding beads left by e on a single runner; the
    independent oracle for ``ecore_classical``."""
    if e < 2:
        raise ValueError("e must be at least 2")
    m = len(p) + 1
    runners = [set(beta_numbers(p, 0, m))]
    moves = _reduce_runners(runners, m, e)
    part, charge = partition_from_beta(sorted(runners[0], reverse=True), m)
    assert charge == 0
    return part, moves


def bgo_check(p: Partition, e: int) -> bool:
    """Whether the hook multiset of the e-core is contained in the hook
    multiset of p.  True for every partition; fails for the level > 1
    analogue, which is why it is only defined here for partitions."""
    core_hooks = hooks_multiset(ecore_classical(p, e)[0])
    hooks = hooks_multiset(p)
    return all(hooks[v] >= mult for v, mult in core_hooks.items())


def normalized_instance(
    mp: Multipartition, charges: Sequence[int], e: int
) -> tuple[Multipartition, tuple[int, ...]]:
    """Reduce the multicharge mod e, sort it into the fundamental domain
    and permute the components of mp along with it."""
    norm, perm = normalize_multicharge(charges, e)
    comps: list = [None] * mp.level
    for old, new in enumerate(perm):
        comps[new] = mp[old]
    return Multipartition(comps), norm
