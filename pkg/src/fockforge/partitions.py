"""Partitions, multipartitions, charges and the abacus (core/quotient) dictionary.

Partitions are plain tuples of positive integers in weakly decreasing order and
multipartitions are tuples of partitions.  Both are hashable and cheap to use as
dictionary keys, which is how every vector in this package is stored.

A node of a multipartition is written ``(p, i, j)``: component ``p`` counted from
1 (so that it pairs with the charge entry ``s_p``), row ``i`` and column ``j``
counted from 1.  Its content is ``j - i``.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from functools import lru_cache
from itertools import product
from typing import Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]
Charge = tuple[int, ...]
Node = tuple[int, int, int]

EMPTY: Partition = ()


class CoreQuotient(NamedTuple):
    core: Partition
    quotient: Multipartition


def make_partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return it as a partition (zeros are stripped)."""
    parts = tuple(int(x) for x in parts if x != 0)
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return parts


def make_multipartition(components: Sequence[Sequence[int]]) -> Multipartition:
    return tuple(make_partition(c) for c in components)


def size(lam: Partition) -> int:
    return sum(lam)


def multisize(lam: Multipartition) -> int:
    return sum(sum(c) for c in lam)


def charge_weight(s: Charge) -> int:
    return sum(s)


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        return ()
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for k in range(min(remaining, cap), 0, -1):
            prefix.append(k)
            rec(remaining - k, k, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


@lru_cache(maxsize=None)
def multipartitions(n: int, ell: int) -> tuple[Multipartition, ...]:
    """All ``ell``-partitions of total size ``n``, in a fixed deterministic order."""
    if ell < 1:
        raise ValueError("ell must be positive")
    out: list[Multipartition] = []
    for sizes in _compositions(n, ell):
        for combo in product(*(partitions(k) for k in sizes)):
            out.append(tuple(combo))
    return tuple(out)


def _compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def count_multipartitions(n: int, ell: int) -> int:
    """Coefficient of t^n in prod_k (1 - t^k)^(-ell)."""
    series = [1] + [0] * n
    for _ in range(ell):
        for k in range(1, n + 1):
            for d in range(k, n + 1):
                series[d] += series[d - k]
    return series[n]


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def dilate(m: int, lam: Partition) -> Partition:
    if m < 1:
        raise ValueError("dilation factor must be positive")
    return tuple(m * x for x in lam)


def z_value(lam: Partition) -> int:
    """prod_i i^{m_i} m_i!  where m_i is the multiplicity of i in ``lam``."""
    out = 1
    for part, mult in Counter(lam).items():
        out *= part**mult * math.factorial(mult)
    return out


def cells(lam: Partition) -> Iterator[tuple[int, int]]:
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield i, j


def content_polynomial(lam: Partition) -> Counter:
    """Multiset of contents ``j - i``; represents prod (X + content)."""
    return Counter(j - i for i, j in cells(lam))


def nodes_with_residue(lam: Multipartition, s: Charge, m: int) -> list[int]:
    """Counts ``n_q`` of nodes with ``s_p + j - i = q (mod m)``, for q = 0..m-1."""
    if len(s) != len(lam):
        raise ValueError(f"charge length {len(s)} does not match {len(lam)} components")
    counts = [0] * m
    for comp, sp in zip(lam, s):
        for i, row in enumerate(comp, start=1):
            for j in range(1, row + 1):
                counts[(sp + j - i) % m] += 1
    return counts


def addable_cells(lam: Partition) -> list[tuple[int, int]]:
    out = []
    for i in range(1, len(lam) + 2):
        row = lam[i - 1] if i <= len(lam) else 0
        above = lam[i - 2] if i >= 2 else math.inf
        if row < above:
            out.append((i, row + 1))
    return out


def removable_cells(lam: Partition) -> list[tuple[int, int]]:
    out = []
    for i, row in enumerate(lam, start=1):
        below = lam[i] if i < len(lam) else 0
        if row > below:
            out.append((i, row))
    return out


def add_cell(lam: Partition, i: int) -> Partition:
    if i == len(lam) + 1:
        return lam + (1,)
    return lam[: i - 1] + (lam[i - 1] + 1,) + lam[i:]


def remove_cell(lam: Partition, i: int) -> Partition:
    if lam[i - 1] == 1:
        return lam[: i - 1] + lam[i:]
    return lam[: i - 1] + (lam[i - 1] - 1,) + lam[i:]


def _node_key(node: Node) -> tuple[int, int]:
    p, i, j = node
    return p, -(j - i)


def addable_removable(
    lam: Multipartition, s: Charge, m: int, q: int
) -> tuple[list[Node], list[Node]]:
    """Addable and removable nodes of residue ``q``.

    Both lists are sorted by component, then by decreasing content.
    """
    if len(s) != len(lam):
        raise ValueError(f"charge length {len(s)} does not match {len(lam)} components")
    q %= m
    addable: list[Node] = []
    removable: list[Node] = []
    for p, (comp, sp) in enumerate(zip(lam, s), start=1):
        addable.extend((p, i, j) for i, j in addable_cells(comp) if (sp + j - i) % m == q)
        removable.extend((p, i, j) for i, j in removable_cells(comp) if (sp + j - i) % m == q)
    addable.sort(key=_node_key)
    removable.sort(key=_node_key)
    return addable, removable


def add_node(lam: Multipartition, node: Node) -> Multipartition:
    p, i, _ = node
    return lam[: p - 1] + (add_cell(lam[p - 1], i),) + lam[p:]


def remove_node(lam: Multipartition, node: Node) -> Multipartition:
    p, i, _ = node
    return lam[: p - 1] + (remove_cell(lam[p - 1], i),) + lam[p:]


# -- abacus ------------------------------------------------------------------


def _window(lam: Partition, ell: int) -> int:
    return ell * max(1, -(-len(lam) // ell))


def beta_numbers(lam: Partition, length: int) -> list[int]:
    """beta_k = lam_k - k + length for k = 1..length (decreasing)."""
    if length < len(lam):
        raise ValueError("window shorter than the partition")
    padded = list(lam) + [0] * (length - len(lam))
    return [padded[k - 1] - k + length for k in range(1, length + 1)]


def from_beta_numbers(beta: Sequence[int]) -> Partition:
    beads = sorted(beta, reverse=True)
    length = len(beads)
    return make_partition([b + k - length for k, b in enumerate(beads, start=1)])


def _runners(lam: Partition, ell: int) -> tuple[int, list[list[int]]]:
    length = _window(lam, ell)
    runners: list[list[int]] = [[] for _ in range(ell)]
    for b in beta_numbers(lam, length):
        runners[b % ell].append(b // ell)
    return length, runners


def core_quotient(lam: Partition, ell: int) -> CoreQuotient:
    """ell-core and ell-quotient via an abacus with ``ell`` runners.

    Beads sit at beta_k = lam_k - k + L with L a multiple of ``ell``; runner p
    holds the beads congruent to p mod ``ell`` and yields quotient component p.
    """
    if ell < 1:
        raise ValueError("ell must be positive")
    length, runners = _runners(lam, ell)
    quotient = tuple(from_beta_numbers(r) for r in runners)
    core_beads = [ell * x + p for p, r in enumerate(runners) for x in range(len(r))]
    return CoreQuotient(from_beta_numbers(core_beads), quotient)


def is_core(lam: Partition, ell: int) -> bool:
    _, runners = _runners(lam, ell)
    return all(sorted(r) == list(range(len(r))) for r in runners)


def core_charge(core: Partition, ell: int) -> Charge:
    """Bead excess of each runner relative to the balanced abacus; sums to 0.

    Entry k (0-based) is runner k, i.e. the charge entry ``s_{k+1}``.
    """
    if not is_core(core, ell):
        raise ValueError(f"{core} is not a {ell}-core")
    length, runners = _runners(core, ell)
    return tuple(len(r) - length // ell for r in runners)


def core_from_charge(s: Charge) -> Partition:
    ell = len(s)
    if sum(s) != 0:
        raise ValueError("charge must have weight 0")
    base = max(0, *(-x for x in s)) + 1
    beads = [ell * x + p for p, sp in enumerate(s) for x in range(base + sp)]
    return from_beta_numbers(beads)


def rebuild_from_core_quotient(cq: CoreQuotient, ell: int) -> Partition:
    core, quotient = cq
    if len(quotient) != ell:
        raise ValueError("quotient must have ell components")
    s = core_charge(core, ell)
    base = max([0] + [len(q) - sp for q, sp in zip(quotient, s)]) + 1
    beads = []
    for p, (q, sp) in enumerate(zip(quotient, s)):
        count = base + sp
        beads.extend(ell * b + p for b in beta_numbers(q, count))
    return from_beta_numbers(beads)


def cores(max_size: int, ell: int) -> list[Partition]:
    return [lam for n in range(max_size + 1) for lam in partitions(n) if is_core(lam, ell)]


# -- text form -----------------------------------------------------------------

_PART_RE = re.compile(r"^\[\s*(\d+(\s*,\s*\d+)*)?\s*\]$")


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(map(str, lam)) + "]"


def format_multipartition(lam: Multipartition) -> str:
    return "|".join(format_partition(c) for c in lam)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not _PART_RE.match(text):
        raise ValueError(f"malformed partition {text!r}")
    body = text[1:-1].strip()
    if not body:
        return EMPTY
    return make_partition([int(x) for x in body.split(",")])


def parse_multipartition(text: str) -> Multipartition:
    return tuple(parse_partition(piece) for piece in text.split("|"))
