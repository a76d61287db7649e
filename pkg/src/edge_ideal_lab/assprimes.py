"""Associated primes of monomial ideals via irredundant irreducible decomposition.

Two decomposition engines produce the same (unique) irredundant decomposition:

* ``splitting`` recursively factors a generator with two or more support
  variables into coprime parts, intersecting the two simpler ideals; memoized,
  with a node budget since the recursion can blow up on large ideals.
* ``corner`` localizes at each candidate support (inverting the other
  variables) and reads components off the socle of the localized ideal: c is a
  corner iff c is outside the ideal but every c*x_i is inside, and then the
  component has exponents c+1. Membership over the bounded exponent box is one
  boolean array, so the scan is a handful of slice operations per support.

A third, search-based witness oracle re-derives the associated primes from the
definition (colon by a candidate monomial equals the prime) and is used as an
independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import prod
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceededError, UsageError
from .graphs import Graph
from .monomials import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    VariableSet,
    minimalize_rows,
)

SPLITTING_AUTO_LIMIT = 2048  # box-size proxy below which splitting is the default
SPLITTING_NODE_BUDGET = 50_000
CORNER_CELL_CAP = 40_000_000  # per-support membership mask cells


@dataclass(frozen=True)
class IrreducibleComponent:
    """An ideal generated by pure powers: entries (variable index, exponent)."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.entries:
            raise UsageError("an irreducible component needs non-empty support")
        if self.entries != tuple(sorted(self.entries)) or any(
            e <= 0 for _, e in self.entries
        ):
            raise UsageError("entries must be sorted with positive exponents")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    def radical(self, vset: VariableSet) -> MonomialPrime:
        return MonomialPrime.from_indices(vset, self.support)

    def as_ideal(self, vset: VariableSet) -> MonomialIdeal:
        rows = []
        for i, e in self.entries:
            row = [0] * vset.n
            row[i] = e
            rows.append(tuple(row))
        return MonomialIdeal.from_exponents(vset, rows)

    def contains_component(self, other: IrreducibleComponent) -> bool:
        """Ideal containment other <= self: other's support inside self's, with
        other's exponents at least self's there."""
        mine = dict(self.entries)
        return all(i in mine and e >= mine[i] for i, e in other.entries)


def _require_decomposable(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise UsageError("cannot decompose the zero ideal")
    if ideal.is_unit:
        raise UsageError("cannot decompose the unit ideal")


# ---------------------------------------------------------------------------
# splitting engine
# ---------------------------------------------------------------------------


def _splitting_components(
    ideal: MonomialIdeal, node_budget: int
) -> frozenset[tuple[tuple[int, int], ...]]:
    n = ideal.vset.n
    memo: dict[tuple, frozenset] = {}

    def minimal(gens: list[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
        kept = minimalize_rows(np.array(gens, dtype=np.int64))
        return tuple(tuple(int(v) for v in row) for row in kept)

    def recurse(gens: tuple[tuple[int, ...], ...]) -> frozenset:
        if gens in memo:
            return memo[gens]
        if len(memo) >= node_budget:
            raise BudgetExceededError(
                f"splitting decomposition exceeded {node_budget} subproblems"
            )
        pivot = next((g for g in gens if sum(1 for e in g if e > 0) >= 2), None)
        if pivot is None:
            # all generators are pure powers of distinct variables
            component = tuple(
                sorted((next(i for i, e in enumerate(g) if e > 0), max(g)) for g in gens)
            )
            result = frozenset({component})
        else:
            rest = [g for g in gens if g != pivot]
            var = next(i for i, e in enumerate(pivot) if e > 0)
            pure = tuple(pivot[var] if i == var else 0 for i in range(n))
            other = tuple(0 if i == var else pivot[i] for i in range(n))
            result = recurse(minimal(rest + [pure])) | recurse(minimal(rest + [other]))
        memo[gens] = result
        return result

    return recurse(tuple(g.exps for g in ideal.gens))


def _filter_redundant(
    components: Iterable[tuple[tuple[int, int], ...]]
) -> tuple[IrreducibleComponent, ...]:
    """Drop components containing another component.

    For irreducible monomial ideals, an intersection lies inside Q exactly when
    a single member does (pick a monomial outside Q from each member otherwise;
    their lcm stays outside Q), so the pairwise check gives full irredundancy.
    """
    comps = [IrreducibleComponent(c) for c in sorted(set(components))]
    kept = [
        c
        for c in comps
        if not any(o is not c and c.contains_component(o) for o in comps)
    ]
    return tuple(kept)


# ---------------------------------------------------------------------------
# corner engine
# ---------------------------------------------------------------------------


def _corner_components(
    ideal: MonomialIdeal, cell_cap: int = CORNER_CELL_CAP
) -> tuple[IrreducibleComponent, ...]:
    n = ideal.vset.n
    if n > 20:
        raise BudgetExceededError(f"corner decomposition sweeps 2^{n} supports")
    exps = ideal.exponent_array
    support_masks = [
        sum(1 << i for i in range(n) if row[i] > 0) for row in exps.tolist()
    ]
    out: list[tuple[tuple[int, int], ...]] = []
    for mask in range(1, 1 << n):
        # localization is proper only if every generator meets the support
        if any(sup & mask == 0 for sup in support_masks):
            continue
        indices = [i for i in range(n) if mask & (1 << i)]
        localized = minimalize_rows(exps[:, indices])
        u = localized.max(axis=0)
        if (u == 0).any():
            continue
        shape = tuple(int(v) + 1 for v in u)
        cells = prod(shape)
        if cells > cell_cap:
            raise BudgetExceededError(
                f"corner membership mask needs {cells} cells for support "
                f"{[ideal.vset.names[i] for i in indices]} (cap {cell_cap})"
            )
        member = np.zeros(shape, dtype=bool)
        for row in localized:
            member[tuple(slice(int(e), None) for e in row)] = True
        inner = tuple(slice(0, int(v)) for v in u)
        corners = ~member[inner]
        for axis in range(len(indices)):
            shifted = list(inner)
            shifted[axis] = slice(1, int(u[axis]) + 1)
            corners &= member[tuple(shifted)]
        if not corners.any():
            continue
        for witness in np.argwhere(corners):
            out.append(
                tuple((indices[j], int(witness[j]) + 1) for j in range(len(indices)))
            )
    return tuple(IrreducibleComponent(c) for c in sorted(out))


# ---------------------------------------------------------------------------
# public decomposition API
# ---------------------------------------------------------------------------


def irreducible_decomposition(
    ideal: MonomialIdeal, method: str = "auto"
) -> tuple[IrreducibleComponent, ...]:
    """The unique irredundant decomposition of a proper nonzero monomial ideal
    into ideals generated by pure variable powers."""
    _require_decomposable(ideal)
    if method == "auto":
        box = prod(e + 1 for e in ideal.max_exponents())
        method = "splitting" if box <= SPLITTING_AUTO_LIMIT else "corner"
    if method == "splitting":
        raw = _splitting_components(ideal, SPLITTING_NODE_BUDGET)
        return _filter_redundant(raw)
    if method == "corner":
        return _corner_components(ideal)
    raise UsageError(f"unknown decomposition method: {method}")


@lru_cache(maxsize=512)
def _associated_primes_cached(
    ideal: MonomialIdeal, method: str
) -> tuple[MonomialPrime, ...]:
    comps = irreducible_decomposition(ideal, method=method)
    primes = {c.radical(ideal.vset) for c in comps}
    return tuple(sorted(primes))


def associated_primes(
    ideal: MonomialIdeal, method: str = "auto"
) -> tuple[MonomialPrime, ...]:
    """Radical supports of the irredundant irreducible components, sorted."""
    return _associated_primes_cached(ideal, method)


def minimal_primes(ideal: MonomialIdeal) -> tuple[MonomialPrime, ...]:
    primes = associated_primes(ideal)
    supports = [set(p.names) for p in primes]
    return tuple(
        sorted(
            p
            for p, s in zip(primes, supports)
            if not any(o < s for o in supports)
        )
    )


def minimal_vertex_covers(graph: Graph) -> tuple[frozenset[str], ...]:
    """Inclusion-minimal vertex sets meeting every edge, by direct enumeration."""
    if graph.has_isolated_vertices():
        raise UsageError("vertex covers are for graphs without isolated vertices")
    if graph.n > 20:
        raise BudgetExceededError("cover enumeration capped at 20 vertices")
    covers = []
    for r in range(graph.n + 1):
        for subset in combinations(range(graph.n), r):
            s = set(subset)
            if all(u in s or v in s for u, v in graph.edges):
                if not any(c <= s for c in covers):
                    covers.append(s)
    return tuple(
        sorted(frozenset(graph.labels[v] for v in c) for c in covers)
    )


# ---------------------------------------------------------------------------
# witness oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AssWitness:
    """A prime realized as (ideal : witness), with the witness outside the ideal."""

    prime: MonomialPrime
    power: int | None
    witness: Monomial


def associated_primes_witness_oracle(
    ideal: MonomialIdeal,
    cap: int = 10**7,
    power: int | None = None,
    chunk: int = 4096,
) -> tuple[AssWitness, ...]:
    """Brute-force search for associated primes straight from the definition.

    Enumerates every monomial below the componentwise generator maximum, skips
    ideal members, and keeps candidates whose colon ideal is generated by
    single variables. Independent of the decomposition engines.
    """
    _require_decomposable(ideal)
    u = ideal.max_exponents()
    total = prod(e + 1 for e in u)
    if total > cap:
        raise BudgetExceededError(
            f"witness oracle box has {total} candidates (cap {cap})"
        )
    n = ideal.vset.n
    gens = ideal.exponent_array.astype(np.int16)
    radices = np.array([e + 1 for e in u], dtype=np.int64)
    found: dict[tuple[str, ...], Monomial] = {}
    for start in range(0, total, chunk):
        ids = np.arange(start, min(start + chunk, total), dtype=np.int64)
        cand = np.zeros((len(ids), n), dtype=np.int16)
        rem = ids
        for axis in range(n - 1, -1, -1):
            cand[:, axis] = (rem % radices[axis]).astype(np.int16)
            rem = rem // radices[axis]
        member = np.zeros(len(ids), dtype=bool)
        for row in gens:
            member |= (cand >= row).all(axis=1)
        cand = cand[~member]
        if not len(cand):
            continue
        quotients = np.maximum(gens[None, :, :] - cand[:, None, :], 0)
        degrees = quotients.sum(axis=2, dtype=np.int32)
        unit_rows = degrees == 1
        in_prime = (quotients.astype(bool) & unit_rows[:, :, None]).any(axis=1)
        covered = (quotients.astype(bool) & in_prime[:, None, :]).any(axis=2)
        is_prime = covered.all(axis=1)
        for idx in np.nonzero(is_prime)[0]:
            names = tuple(
                sorted(
                    ideal.vset.names[i] for i in np.nonzero(in_prime[idx])[0]
                )
            )
            if names not in found:
                found[names] = Monomial(
                    ideal.vset, tuple(int(v) for v in cand[idx])
                )
    witnesses = [
        AssWitness(MonomialPrime(names), power, monomial)
        for names, monomial in found.items()
    ]
    return tuple(sorted(witnesses, key=lambda w: w.prime))


# ---------------------------------------------------------------------------
# disjoint unions
# ---------------------------------------------------------------------------


def disjoint_union_ass(
    parts: Sequence[MonomialIdeal], k: int
) -> tuple[MonomialPrime, ...]:
    """Associated primes of the k-th power of a sum of ideals in pairwise
    disjoint variables: unions of per-part primes at powers k_i >= 1 with
    sum (k_i - 1) = k - 1."""
    if not parts or k < 1:
        raise UsageError("need at least one part and a positive power")
    for part in parts:
        _require_decomposable(part)
    same_vset = all(p.vset.names == parts[0].vset.names for p in parts)
    if same_vset and len(parts) > 1:
        supports = [
            set(i for g in p.gens for i in g.support) for p in parts
        ]
        for a, b in combinations(range(len(parts)), 2):
            if supports[a] & supports[b]:
                raise UsageError("parts must have pairwise disjoint supports")
    else:
        all_names: list[str] = []
        for p in parts:
            all_names.extend(p.vset.names)
        if len(set(all_names)) != len(all_names):
            raise UsageError("parts must use pairwise disjoint variable names")

    ass_cache: dict[tuple[int, int], tuple[MonomialPrime, ...]] = {}

    def part_ass(i: int, ki: int) -> tuple[MonomialPrime, ...]:
        if (i, ki) not in ass_cache:
            ass_cache[(i, ki)] = associated_primes(parts[i].power(ki))
        return ass_cache[(i, ki)]

    s = len(parts)
    results: set[MonomialPrime] = set()

    def compositions(remaining: int, slots: int):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(1, remaining - slots + 2):
            for rest in compositions(remaining - first, slots - 1):
                yield (first,) + rest

    for combo in compositions(k + s - 1, s):
        choices = [part_ass(i, combo[i]) for i in range(s)]

        def expand(i: int, names: tuple[str, ...]):
            if i == s:
                results.add(MonomialPrime(tuple(sorted(names))))
                return
            for p in choices[i]:
                expand(i + 1, names + p.names)

        expand(0, ())
    return tuple(sorted(results))


def combined_ideal(parts: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """The sum of the parts inside the concatenated variable set (or their
    shared one), for direct cross-checks of disjoint_union_ass."""
    if all(p.vset.names == parts[0].vset.names for p in parts):
        total = parts[0]
        for p in parts[1:]:
            total = total.sum(p)
        return total
    names: list[str] = []
    for p in parts:
        names.extend(p.vset.names)
    joint = VariableSet(tuple(names))
    rows = []
    offset = 0
    for p in parts:
        for g in p.gens:
            row = [0] * len(names)
            row[offset : offset + p.vset.n] = list(g.exps)
            rows.append(tuple(row))
        offset += p.vset.n
    return MonomialIdeal.from_exponents(joint, rows)
