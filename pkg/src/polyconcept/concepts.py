"""Enumeration of all n-concepts of a context.

Two routes are provided.  ``enumerate_concepts`` is the working enumerator: a
recursive binary partition of the element space (every element is either kept
as a candidate or discarded) with forced-inclusion propagation and a
closedness prune, in the family of closed n-set miners.
``brute_force_concepts`` is the exhaustive oracle: it walks every subset
combination of all dimensions but the largest, derives the remaining maximal
component, and keeps what passes ``is_concept``.  The two must agree on every
input the oracle can afford, and the test suite holds them to that.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .context import ComponentTuple, InputError, NContext

DEFAULT_ORACLE_CAP = 1 << 20


class OracleInfeasibleError(RuntimeError):
    """The exhaustive oracle would exceed its configured work cap."""


class ConceptLimitError(RuntimeError):
    """Enumeration hit an explicitly configured concept-count cap."""


class ConceptSet:
    """Deduplicated concepts of one context in a total canonical order.

    The order is lexicographic over components, each component compared as
    its tuple of element indices, so iteration is deterministic for a fixed
    context no matter how the set was assembled.
    """

    __slots__ = ("_concepts", "_as_set")

    def __init__(self, concepts: tuple[ComponentTuple, ...]):
        self._concepts = concepts
        self._as_set = frozenset(concepts)

    @classmethod
    def collect(
        cls,
        ctx: NContext,
        items: Iterable[ComponentTuple],
        *,
        verify: bool = True,
    ) -> "ConceptSet":
        """Deduplicate, canonically sort, and (by default) verify members."""
        unique = set(items)
        if verify:
            for t in unique:
                if not ctx.is_concept(t):
                    raise InputError(f"{t} is not a concept of {ctx!r}")
        return cls(tuple(sorted(unique, key=ctx.sort_key)))

    @property
    def concepts(self) -> tuple[ComponentTuple, ...]:
        return self._concepts

    def as_frozenset(self) -> frozenset[ComponentTuple]:
        return self._as_set

    def __iter__(self) -> Iterator[ComponentTuple]:
        return iter(self._concepts)

    def __len__(self) -> int:
        return len(self._concepts)

    def __contains__(self, t) -> bool:
        return t in self._as_set

    def __getitem__(self, k) -> ComponentTuple:
        return self._concepts[k]

    def __eq__(self, other) -> bool:
        if isinstance(other, ConceptSet):
            return self._as_set == other._as_set
        if isinstance(other, (set, frozenset)):
            return self._as_set == other
        return NotImplemented

    def __hash__(self):
        return hash(self._as_set)

    def __repr__(self) -> str:
        return f"<ConceptSet of {len(self._concepts)}>"


def enumerate_concepts(
    ctx: NContext, *, max_concepts: int | None = None
) -> ConceptSet:
    """All n-concepts of ``ctx``, canonically ordered.

    Search state per dimension: elements already committed to the box (kept),
    undecided candidates, and discarded elements.  At each node, a candidate
    whose layer covers the whole still-reachable box is forced in (every
    closed box below this node must contain it), and the node is abandoned as
    soon as a discarded element's layer covers the still-reachable box (no
    closed box below can avoid it).  When no candidates remain the kept box
    is full and maximal by construction.  Branching order is fixed (lowest
    dimension, then lowest element index) so the search is deterministic.

    ``max_concepts`` is an optional hard cap; exceeding it raises
    ``ConceptLimitError``.
    """
    n = ctx.arity
    sizes = [len(d) for d in ctx.dims]
    found: list[tuple[tuple[int, ...], ...]] = []

    def search(
        kept: list[set[int]], cand: list[set[int]], out: list[set[int]]
    ) -> None:
        # Widths below use kept|cand, which forced moves do not change, so a
        # single pass per dimension is a fixpoint.
        for i in range(n):
            if not cand[i] and not out[i]:
                continue
            merged = [
                sorted(kept[j] | cand[j]) for j in range(n) if j != i
            ]
            w = ctx._width_bits(i, merged)
            layer = ctx._layers[i]
            if any(layer.get(e, 0) & w == w for e in out[i]):
                return
            forced = {e for e in cand[i] if layer.get(e, 0) & w == w}
            if forced:
                cand[i] -= forced
                kept[i] |= forced
        pick = None
        for i in range(n):
            if cand[i]:
                pick = (i, min(cand[i]))
                break
        if pick is None:
            found.append(tuple(tuple(sorted(k)) for k in kept))
            if max_concepts is not None and len(found) > max_concepts:
                raise ConceptLimitError(
                    f"more than {max_concepts} concepts in {ctx!r}"
                )
            return
        i, e = pick
        rest = [sorted(kept[j]) for j in range(n) if j != i]
        w = ctx._width_bits(i, rest)
        if ctx._layers[i].get(e, 0) & w == w:
            search(
                [k | {e} if j == i else set(k) for j, k in enumerate(kept)],
                [c - {e} if j == i else set(c) for j, c in enumerate(cand)],
                [set(o) for o in out],
            )
        cand[i].discard(e)
        out[i].add(e)
        search(kept, cand, out)

    search(
        [set() for _ in range(n)],
        [set(range(s)) for s in sizes],
        [set() for _ in range(n)],
    )
    concepts = [
        ComponentTuple(
            tuple(
                tuple(d.elements[p] for p in comp)
                for d, comp in zip(ctx.dims, pos)
            )
        )
        for pos in found
    ]
    return ConceptSet.collect(ctx, concepts)


def oracle_cost(ctx: NContext) -> int:
    """Subset combinations the exhaustive oracle must walk for ``ctx``.

    The product of 2**|dimension| over every dimension except the largest
    (ties resolved to the first), which is also the known ceiling on the
    number of concepts the context can have.
    """
    sizes = [len(d) for d in ctx.dims]
    k = sizes.index(max(sizes))
    cost = 1
    for j, s in enumerate(sizes):
        if j != k:
            cost <<= s
    return cost


def brute_force_concepts(
    ctx: NContext, *, cap: int = DEFAULT_ORACLE_CAP
) -> ConceptSet:
    """Definitionally complete concept enumeration, for verification only.

    Walks every subset combination of all dimensions except the largest,
    derives the maximal remaining component, and filters with ``is_concept``.
    Refuses inputs whose combination count exceeds ``cap``.
    """
    cost = oracle_cost(ctx)
    if cost > cap:
        raise OracleInfeasibleError(
            f"oracle infeasible: {cost} subset combinations exceed cap {cap}"
        )
    n = ctx.arity
    sizes = [len(d) for d in ctx.dims]
    k = sizes.index(max(sizes))
    width_dims = [j for j in range(n) if j != k]

    def subsets(size: int):
        return itertools.chain.from_iterable(
            itertools.combinations(range(size), r) for r in range(size + 1)
        )

    hits = set()
    for combo in itertools.product(*(subsets(sizes[j]) for j in width_dims)):
        ext = ctx._extend_pos(k, combo)
        pos = list(combo)
        pos.insert(k, ext)
        t = ComponentTuple(
            tuple(
                tuple(d.elements[p] for p in comp)
                for d, comp in zip(ctx.dims, pos)
            )
        )
        if ctx.is_concept(t):
            hits.add(t)
    return ConceptSet.collect(ctx, hits, verify=False)
