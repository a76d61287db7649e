"""Chains of associated primes across powers and their closures.

Builds per-power reports (is the chain ascending, where does it become
constant, how does that compare to the theoretical bound), the analytic
spread as an exponent-matrix rank, and the four-way equivalence battery for
the maximal ideal.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Sequence

from .assprimes import associated_primes
from .closure import integral_closure_power
from .errors import UsageError
from .graphs import Graph, edge_ideal, incidence_rank
from .linalg import integer_rank
from .monomials import (
    MonomialIdeal,
    MonomialPrime,
    maximal_prime,
    primes_to_lists,
)

SCHEMA_VERSION = "edge-ideal-lab/1"

PrimeSet = tuple[MonomialPrime, ...]


def _first_constant_index(sets: Sequence[PrimeSet]) -> int:
    """1-based index from which all later sets agree with the last one."""
    n1 = len(sets)
    for j in range(len(sets) - 1, 0, -1):
        if set(sets[j - 1]) == set(sets[-1]):
            n1 = j
        else:
            break
    return n1


@dataclass(frozen=True)
class ChainReport:
    """Associated-prime chains of the powers (and closures of powers) of an ideal."""

    ideal_label: str
    max_power: int
    ass_sets: tuple[PrimeSet, ...] | None
    closure_ass_sets: tuple[PrimeSet, ...] | None
    n1_bound: int | None = None
    complete: bool = True

    @property
    def computed_powers(self) -> int:
        side = self.ass_sets if self.ass_sets is not None else self.closure_ass_sets
        return len(side) if side is not None else 0

    @staticmethod
    def _ascending(sets: Sequence[PrimeSet]) -> list[bool]:
        return [set(a) <= set(b) for a, b in zip(sets, sets[1:])]

    @staticmethod
    def _strict(sets: Sequence[PrimeSet]) -> list[bool]:
        return [set(a) < set(b) for a, b in zip(sets, sets[1:])]

    @property
    def ass_ascending_steps(self) -> list[bool] | None:
        return None if self.ass_sets is None else self._ascending(self.ass_sets)

    @property
    def ass_strict_steps(self) -> list[bool] | None:
        return None if self.ass_sets is None else self._strict(self.ass_sets)

    @property
    def closure_ascending_steps(self) -> list[bool] | None:
        return (
            None
            if self.closure_ass_sets is None
            else self._ascending(self.closure_ass_sets)
        )

    @property
    def closure_strict_steps(self) -> list[bool] | None:
        return (
            None
            if self.closure_ass_sets is None
            else self._strict(self.closure_ass_sets)
        )

    @property
    def ascending(self) -> bool:
        flags: list[bool] = []
        if self.ass_ascending_steps is not None:
            flags.extend(self.ass_ascending_steps)
        if self.closure_ascending_steps is not None:
            flags.extend(self.closure_ascending_steps)
        return all(flags)

    @property
    def n1_observed(self) -> int | None:
        if not self.ass_sets:
            return None
        return _first_constant_index(self.ass_sets)

    @property
    def n2_observed(self) -> int | None:
        if not self.closure_ass_sets:
            return None
        return _first_constant_index(self.closure_ass_sets)

    @property
    def n1_certified(self) -> bool:
        """Constancy proven, not just observed: the computed range reaches the
        theoretical stability bound (the chain is ascending and bounded)."""
        return (
            self.n1_bound is not None
            and self.complete
            and self.computed_powers >= self.n1_bound
        )

    @property
    def stable_sets_equal(self) -> bool | None:
        if not self.ass_sets or not self.closure_ass_sets:
            return None
        n1, n2 = self.n1_observed, self.n2_observed
        assert n1 is not None and n2 is not None
        k = max(n1, n2)
        if k > min(len(self.ass_sets), len(self.closure_ass_sets)):
            return None
        return set(self.ass_sets[k - 1]) == set(self.closure_ass_sets[k - 1])

    def to_json_dict(self) -> dict:
        chains = []
        for i in range(self.computed_powers):
            entry: dict = {"k": i + 1}
            entry["ass"] = (
                primes_to_lists(self.ass_sets[i]) if self.ass_sets else None
            )
            entry["closure_ass"] = (
                primes_to_lists(self.closure_ass_sets[i])
                if self.closure_ass_sets
                else None
            )
            chains.append(entry)
        return {
            "schema": SCHEMA_VERSION,
            "ideal": self.ideal_label,
            "K": self.max_power,
            "chains": chains,
            "verdicts": {
                "ascending": self.ascending,
                "n1_observed": self.n1_observed,
                "n1_bound": self.n1_bound,
                "n2_observed": self.n2_observed,
                "stable_sets_equal": self.stable_sets_equal,
            },
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> ChainReport:
        if doc.get("schema") != SCHEMA_VERSION:
            raise UsageError(f"unsupported schema: {doc.get('schema')!r}")
        chains = doc["chains"]
        ass_sets = None
        closure_sets = None
        if chains and chains[0].get("ass") is not None:
            ass_sets = tuple(
                tuple(MonomialPrime(tuple(names)) for names in entry["ass"])
                for entry in chains
            )
        if chains and chains[0].get("closure_ass") is not None:
            closure_sets = tuple(
                tuple(MonomialPrime(tuple(names)) for names in entry["closure_ass"])
                for entry in chains
            )
        return cls(
            ideal_label=doc["ideal"],
            max_power=doc["K"],
            ass_sets=ass_sets,
            closure_ass_sets=closure_sets,
            n1_bound=doc["verdicts"].get("n1_bound"),
            complete=len(chains) == doc["K"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"ideal: {self.ideal_label}   (max power {self.max_power})"]
        if not self.complete:
            lines.append(
                f"INCOMPLETE: budget stopped the chain after {self.computed_powers} powers"
            )
        for i in range(self.computed_powers):
            k = i + 1
            if self.ass_sets is not None:
                names = ", ".join(str(p) for p in sorted(self.ass_sets[i]))
                lines.append(f"  Ass(R/I^{k}) = {{{names}}}")
            if self.closure_ass_sets is not None:
                names = ", ".join(str(p) for p in sorted(self.closure_ass_sets[i]))
                lines.append(f"  Ass(R/closure(I^{k})) = {{{names}}}")
        lines.append(f"  ascending: {self.ascending}")
        if self.ass_sets is not None:
            claim = "certified" if self.n1_certified else "constant within computed range"
            lines.append(
                f"  stability index observed: {self.n1_observed} ({claim};"
                f" theoretical bound {self.n1_bound})"
            )
        if self.closure_ass_sets is not None:
            lines.append(
                f"  closure-chain constant from: {self.n2_observed} (observational)"
            )
        if self.stable_sets_equal is not None:
            lines.append(f"  stable sets equal: {self.stable_sets_equal}")
        return "\n".join(lines)


def ass_chain(
    ideal: MonomialIdeal,
    max_power: int,
    label: str = "I",
    n1_bound: int | None = None,
    budget_seconds: float | None = None,
) -> ChainReport:
    """Associated primes of each power 1..max_power."""
    sets, complete = _chain_sets(ideal, max_power, closures=False, budget=budget_seconds)
    return ChainReport(label, max_power, tuple(sets), None, n1_bound, complete)


def closure_ass_chain(
    ideal: MonomialIdeal,
    max_power: int,
    label: str = "I",
    budget_seconds: float | None = None,
    closure_cap: int = 10**7,
) -> ChainReport:
    """Associated primes of the closure of each power 1..max_power."""
    sets, complete = _chain_sets(
        ideal, max_power, closures=True, budget=budget_seconds, closure_cap=closure_cap
    )
    return ChainReport(label, max_power, None, tuple(sets), None, complete)


def _chain_sets(
    ideal: MonomialIdeal,
    max_power: int,
    closures: bool,
    budget: float | None,
    closure_cap: int = 10**7,
) -> tuple[list[PrimeSet], bool]:
    if max_power < 1:
        raise UsageError("max power must be >= 1")
    start = time.monotonic()
    sets: list[PrimeSet] = []
    power = ideal
    for k in range(1, max_power + 1):
        if k > 1:
            power = power.product(ideal)
        target = (
            integral_closure_power(ideal, k, cap=closure_cap) if closures else power
        )
        sets.append(associated_primes(target))
        if budget is not None and time.monotonic() - start > budget and k < max_power:
            return sets, False
    return sets, True


def both_chains(
    ideal: MonomialIdeal,
    max_power: int,
    label: str = "I",
    n1_bound: int | None = None,
    budget_seconds: float | None = None,
    closure_cap: int = 10**7,
) -> ChainReport:
    ass_sets, complete_a = _chain_sets(ideal, max_power, False, budget_seconds)
    closure_sets, complete_c = _chain_sets(
        ideal, max_power, True, budget_seconds, closure_cap
    )
    k = min(len(ass_sets), len(closure_sets))
    return ChainReport(
        label,
        max_power,
        tuple(ass_sets[:k]),
        tuple(closure_sets[:k]),
        n1_bound,
        complete_a and complete_c and k == max_power,
    )


# ---------------------------------------------------------------------------
# bounds and spreads
# ---------------------------------------------------------------------------


def stability_bound(graph: Graph) -> int | None:
    """Upper bound for the index where the chain of prime sets turns constant.

    Per connected component: 1 when bipartite, otherwise n - k - s where the
    shortest odd cycle has length 2k+1 and s counts leaves. Components combine
    as sum(bound - 1) + 1, matching how powers distribute over disjoint parts.
    """
    components = graph.components()
    if not components:
        return None
    bounds = []
    for comp in components:
        if comp.is_bipartite():
            bounds.append(1)
        else:
            og = comp.odd_girth()
            assert og is not None
            bounds.append(comp.n - (og - 1) // 2 - comp.leaf_count())
    return sum(b - 1 for b in bounds) + 1


def analytic_spread(ideal: MonomialIdeal) -> int:
    """Rank of the exponent matrix of an equigenerated ideal (the dimension of
    the subring generated by its monomials)."""
    if ideal.is_zero:
        raise UsageError("analytic spread of the zero ideal is undefined")
    if ideal.generated_degree() is None:
        raise UsageError("analytic spread formula needs a single generator degree")
    columns = [list(g.exps) for g in ideal.gens]
    rows = [[col[i] for col in columns] for i in range(ideal.vset.n)]
    return integer_rank(rows)


# ---------------------------------------------------------------------------
# maximal ideal battery and torsion-freeness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MaximalIdealReport:
    """Four views of when the full variable prime is eventually associated."""

    max_power: int
    in_ass_at: int | None  # first k <= K with the maximal ideal associated
    components_nonbipartite: bool
    in_closure_ass_at: int | None
    rank_is_vertex_count: bool
    inconclusive: bool  # nonbipartite but not realized within the budget

    @property
    def rank_matches_components(self) -> bool:
        return self.components_nonbipartite == self.rank_is_vertex_count

    @property
    def consistent(self) -> bool:
        if not self.rank_matches_components:
            return False
        if self.components_nonbipartite:
            return True  # realization may legitimately exceed the budget
        return self.in_ass_at is None and self.in_closure_ass_at is None


def maximal_ideal_criteria(graph: Graph, max_power: int) -> MaximalIdealReport:
    ideal = edge_ideal(graph)
    m = maximal_prime(ideal.vset)
    in_ass = None
    in_closure = None
    power = ideal
    for k in range(1, max_power + 1):
        if k > 1:
            power = power.product(ideal)
        if in_ass is None and m in associated_primes(power):
            in_ass = k
        if in_closure is None and m in associated_primes(
            integral_closure_power(ideal, k)
        ):
            in_closure = k
        if in_ass is not None and in_closure is not None:
            break
    nonbip = all(not c.is_bipartite() for c in graph.components())
    rank_full = incidence_rank(graph) == graph.n
    return MaximalIdealReport(
        max_power=max_power,
        in_ass_at=in_ass,
        components_nonbipartite=nonbip,
        in_closure_ass_at=in_closure,
        rank_is_vertex_count=rank_full,
        inconclusive=nonbip and (in_ass is None or in_closure is None),
    )


@dataclass(frozen=True)
class TorsionFreeReport:
    max_power: int
    holds: bool
    first_failure: int | None  # power where some prime set differs from Ass(R/I)


def ntf_check(graph: Graph, max_power: int) -> TorsionFreeReport:
    """Whether Ass stays equal to Ass(R/I) for powers and closures up to K."""
    ideal = edge_ideal(graph)
    base = set(associated_primes(ideal))
    power = ideal
    for k in range(1, max_power + 1):
        if k > 1:
            power = power.product(ideal)
        if set(associated_primes(power)) != base:
            return TorsionFreeReport(max_power, False, k)
        closure = integral_closure_power(ideal, k)
        if set(associated_primes(closure)) != base:
            return TorsionFreeReport(max_power, False, k)
    return TorsionFreeReport(max_power, True, None)
