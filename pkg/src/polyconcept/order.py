"""Quasi-orders over concept sets, structural axiom checks, and diagrams.

Concepts are compared per dimension by inclusion of the matching component.
``check_n_ordered`` verifies the two axioms that make a family of quasi-orders
an n-ordered set: no two distinct members agree in every dimension
(uniqueness), and whenever one member is below another in all dimensions but
one, the other is below it in the remaining dimension (antiordinal
dependency).  A stricter probe, that every distinct pair admits opposite
inclusions in two different dimensions, is computed alongside for reporting
but does not affect the verdict.

Since a single dimension induces only a quasi-order, diagrams group members
into equivalence classes (equal component) and draw the covering relation of
the classes after transitive reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .context import ArityError, ComponentTuple, InputError, NContext
from .introducers import IntroducerRecord, introducers


def _tuple_of(member) -> ComponentTuple:
    if isinstance(member, IntroducerRecord):
        return member.concept
    if isinstance(member, ComponentTuple):
        return member
    raise InputError(
        f"expected ComponentTuple or IntroducerRecord, got {type(member).__name__}"
    )


def leq(a, b, dim: int) -> bool:
    """Is a below b in dimension ``dim`` (1-based)?  Subset of components."""
    ta, tb = _tuple_of(a), _tuple_of(b)
    if ta.arity != tb.arity:
        raise InputError("cannot compare tuples of different arity")
    if not 1 <= dim <= ta.arity:
        raise InputError(f"dimension index {dim} out of range 1..{ta.arity}")
    return set(ta.components[dim - 1]) <= set(tb.components[dim - 1])


@dataclass(frozen=True)
class OrderReport:
    """Outcome of the n-ordered-set axiom checks over one member list.

    ``per_dimension_relation_sizes`` counts, per dimension, the ordered pairs
    of distinct positions that are comparable there.  The ``strict_*`` fields
    carry the stricter reporting-only probe; they do not enter ``ok``.
    """

    uniqueness_ok: bool
    uniqueness_violations: tuple[tuple[ComponentTuple, ComponentTuple], ...]
    antiordinal_ok: bool
    antiordinal_violations: tuple[tuple[ComponentTuple, ComponentTuple], ...]
    per_dimension_relation_sizes: tuple[int, ...]
    strict_probe_ok: bool
    strict_probe_violations: tuple[tuple[ComponentTuple, ComponentTuple], ...]

    @property
    def ok(self) -> bool:
        return self.uniqueness_ok and self.antiordinal_ok


def check_n_ordered(members: Sequence) -> OrderReport:
    """Run both axioms (and the strict probe) over a list of members.

    Members may be ComponentTuples or IntroducerRecords; duplicates by
    component content count as uniqueness violations, which is the point of
    accepting a list rather than an already deduplicated set.
    """
    tuples = [_tuple_of(m) for m in members]
    if tuples:
        n = tuples[0].arity
        for t in tuples:
            if t.arity != n:
                raise InputError("members have mixed arity")
    else:
        n = 0
    comps = [[frozenset(c) for c in t.components] for t in tuples]

    uniq: set[tuple[ComponentTuple, ComponentTuple]] = set()
    anti: set[tuple[ComponentTuple, ComponentTuple]] = set()
    probe: set[tuple[ComponentTuple, ComponentTuple]] = set()
    sizes = [0] * n

    for p in range(len(tuples)):
        for q in range(len(tuples)):
            if p == q:
                continue
            below = [comps[p][i] <= comps[q][i] for i in range(n)]
            above = [comps[q][i] <= comps[p][i] for i in range(n)]
            for i in range(n):
                if below[i]:
                    sizes[i] += 1
            if p < q:
                if all(below) and all(above):
                    uniq.add((tuples[p], tuples[q]))
                elif tuples[p] != tuples[q]:
                    # stricter probe: opposite inclusions in two distinct dims
                    witnessed = any(
                        below[i] and above[j]
                        for i in range(n)
                        for j in range(n)
                        if i != j
                    )
                    if not witnessed:
                        probe.add(_sorted_pair(tuples[p], tuples[q]))
            for j in range(n):
                if all(below[i] for i in range(n) if i != j) and not above[j]:
                    anti.add((tuples[p], tuples[q]))

    def order_pairs(pairs):
        return tuple(sorted(pairs, key=lambda ab: (ab[0].components, ab[1].components)))

    return OrderReport(
        uniqueness_ok=not uniq,
        uniqueness_violations=order_pairs(uniq),
        antiordinal_ok=not anti,
        antiordinal_violations=order_pairs(anti),
        per_dimension_relation_sizes=tuple(sizes),
        strict_probe_ok=not probe,
        strict_probe_violations=order_pairs(probe),
    )


def _sorted_pair(a: ComponentTuple, b: ComponentTuple):
    return (a, b) if a.components <= b.components else (b, a)


@dataclass(frozen=True)
class DiagramNode:
    """One equivalence class: members sharing the same focus component."""

    component: tuple[str, ...]
    members: tuple  # ComponentTuples or IntroducerRecords, canonical order


@dataclass(frozen=True)
class DimensionDiagram:
    """Covering diagram of the classes of one dimension's quasi-order.

    ``edges`` are (lower, upper) node indices after transitive reduction, so
    the reachability of the edge set equals the full inclusion order on the
    class components.
    """

    dimension: int  # 1-based
    nodes: tuple[DiagramNode, ...]
    edges: tuple[tuple[int, int], ...]


def dimension_diagram(ctx: NContext, members: Sequence, dim) -> DimensionDiagram:
    """Group members by their component in ``dim``; order classes by inclusion.

    Edges are the covering pairs of the class order (transitive reduction by
    direct reachability elimination; class counts are small).
    """
    i0 = ctx._dim0(dim)
    groups: dict[tuple[str, ...], list] = {}
    for m in members:
        t = _tuple_of(m)
        if t.arity != ctx.arity:
            raise InputError("member arity does not match the context")
        groups.setdefault(t.components[i0], []).append(m)

    def comp_key(component: tuple[str, ...]):
        return tuple(ctx.dims[i0].position(lb) for lb in component)

    keys = sorted(groups, key=comp_key)
    nodes = tuple(
        DiagramNode(
            component=key,
            members=tuple(
                sorted(groups[key], key=lambda m: ctx.sort_key(_tuple_of(m)))
            ),
        )
        for key in keys
    )
    sets = [frozenset(k) for k in keys]
    less = [
        [a != b and sa < sb for b, sb in enumerate(sets)]
        for a, sa in enumerate(sets)
    ]
    edges = []
    for a in range(len(sets)):
        for b in range(len(sets)):
            if less[a][b] and not any(
                less[a][c] and less[c][b] for c in range(len(sets))
            ):
                edges.append((a, b))
    return DimensionDiagram(dimension=i0 + 1, nodes=nodes, edges=tuple(sorted(edges)))


def gsh_2d(ctx: NContext, *, checked: bool = True) -> DimensionDiagram:
    """The introducer sub-order of a 2-dimensional context.

    Nodes are the introducer concepts (annotated with what they introduce),
    ordered by inclusion of the first component and transitively reduced.
    """
    if ctx.arity != 2:
        raise ArityError(
            f"this diagram is defined on 2-dimensional contexts, arity is {ctx.arity}"
        )
    return dimension_diagram(ctx, introducers(ctx, checked=checked), 1)
