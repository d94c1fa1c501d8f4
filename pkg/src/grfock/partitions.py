"""Partitions, charge-0 Maya diagrams, the transpose bijection between them,
the orders used by the straightening machinery (mlex, dominance, n-jump,
n-dominance), n-regularity, the gap/regularize maps, and n-cores.

A partition is a plain tuple of weakly decreasing positive ints; () is empty.
A Maya diagram is stored canonically as (charge, mu) where mu is a partition
and the bead positions are i_k = (k-1) + charge - mu_k.  The charge-0
partition label of a diagram is the transpose of mu.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


Partition = tuple  # tuple[int, ...], weakly decreasing, strictly positive entries


def check_partition(p) -> Partition:
    p = tuple(int(x) for x in p)
    if any(x <= 0 for x in p):
        raise ValueError(f"nonpositive part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts not weakly decreasing in {p}")
    return p


def size(p: Partition) -> int:
    return sum(p)


def transpose(p: Partition) -> Partition:
    if not p:
        return ()
    out = [0] * p[0]
    for part in p:
        for i in range(part):
            out[i] += 1
    return tuple(out)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)

    def gen(remaining, maxpart):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, maxpart), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def multiplicities(p: Partition) -> dict:
    out: dict = {}
    for part in p:
        out[part] = out.get(part, 0) + 1
    return out


def is_n_regular(p: Partition, n: int) -> bool:
    """True iff no part value occurs n or more times."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return all(m < n for m in multiplicities(p).values())


def n_regular_partitions(n: int, total: int) -> tuple[Partition, ...]:
    return tuple(p for p in partitions_of(total) if is_n_regular(p, n))


# ---------------------------------------------------------------------------
# Maya diagrams


@dataclass(frozen=True)
class MayaDiagram:
    """Bead positions i_k = (k-1) + charge - mu_k, mu a partition."""

    charge: int
    mu: Partition

    def __post_init__(self):
        object.__setattr__(self, "mu", check_partition(self.mu))

    def bead(self, k: int) -> int:
        """Position of the k-th bead, k >= 1; strictly increasing in k."""
        muk = self.mu[k - 1] if k <= len(self.mu) else 0
        return (k - 1) + self.charge - muk

    def beads(self, count: int) -> tuple:
        return tuple(self.bead(k) for k in range(1, count + 1))

    def tail_start(self) -> int:
        """All slots >= this value are beads, and bead k = k-1+charge from index len(mu)+1 on."""
        return len(self.mu) + self.charge

    def is_bead(self, i: int) -> bool:
        if i >= self.tail_start():
            return True
        k = self.bead_index(i)
        return k is not None

    def bead_index(self, i: int) -> int | None:
        """1-based index k with bead(k) == i, or None."""
        k = 1
        while True:
            b = self.bead(k)
            if b == i:
                return k
            if b > i:
                return None
            k += 1

    def beads_below(self, i: int) -> int:
        """Number of beads at positions < i; finite since positions are bounded below."""
        count = 0
        k = 1
        while self.bead(k) < i:
            count += 1
            k += 1
        return count

    def to_json(self) -> dict:
        return {"charge": self.charge, "mu": list(self.mu)}


def maya_from_beads(beads, tail_start: int) -> MayaDiagram:
    """Diagram whose beads below tail_start are exactly `beads`, all slots from tail_start on full."""
    beads = sorted(beads)
    if any(b >= tail_start for b in beads):
        raise ValueError("bead at or above tail_start")
    if len(set(beads)) != len(beads):
        raise ValueError("repeated bead")
    charge = tail_start - len(beads)
    mu = []
    for k, b in enumerate(beads, start=1):
        mu.append((k - 1) + charge - b)
    return MayaDiagram(charge, tuple(x for x in mu if x != 0))


def maya_of_partition(p: Partition) -> MayaDiagram:
    """The charge-0 diagram whose partition label is p (storage mu = p^T)."""
    return MayaDiagram(0, transpose(check_partition(p)))


def partition_of_maya(m: MayaDiagram) -> Partition:
    """Partition label of a charge-0 diagram: the transpose of the stored mu."""
    if m.charge != 0:
        raise ValueError("partition labels are defined for charge-0 diagrams")
    return transpose(m.mu)


# ---------------------------------------------------------------------------
# the gap map ell_n and the regularize map rho_n


def gap_and_regularize(p: Partition, n: int) -> tuple[int | None, Partition, int]:
    """(ell_n(p), rho_n(p), d): least ell with a bead gap > n, the diagram with
    the first ell beads shifted right by n, and d = ell (0 if ell is infinite,
    returned as None).  ell is None exactly when p is n-regular.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    m = maya_of_partition(p)
    ell = None
    for k in range(1, len(m.mu) + 1):  # gaps beyond the stored prefix are all 1
        if m.bead(k + 1) - m.bead(k) > n:
            ell = k
            break
    if ell is None:
        return None, p, 0
    tail = m.tail_start()
    new_below = [m.bead(k) + n for k in range(1, ell + 1)]
    new_below += [m.bead(k) for k in range(ell + 1, len(m.mu) + 1)]
    m2 = maya_from_beads(new_below, tail)
    return ell, partition_of_maya(m2), ell


# ---------------------------------------------------------------------------
# orders


class Cmp(Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def mlex_key(p: Partition) -> Partition:
    # lex on transposes == bead-sequence order with earlier smaller bead greater
    return transpose(p)


def compare_mlex(p: Partition, q: Partition) -> Cmp:
    a, b = mlex_key(p), mlex_key(q)
    if a == b:
        return Cmp.EQUAL
    return Cmp.GREATER if a > b else Cmp.LESS


def compare_dominance(p: Partition, q: Partition) -> Cmp:
    """Classical dominance by partial sums; partitions of different sizes are incomparable."""
    if size(p) != size(q):
        return Cmp.INCOMPARABLE
    if p == q:
        return Cmp.EQUAL
    ge = le = True
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp < sq:
            ge = False
        if sp > sq:
            le = False
    if ge:
        return Cmp.GREATER
    if le:
        return Cmp.LESS
    return Cmp.INCOMPARABLE


def dominates(p: Partition, q: Partition) -> bool:
    return compare_dominance(p, q) in (Cmp.GREATER, Cmp.EQUAL)


def n_jump_raises(p: Partition, n: int) -> tuple[Partition, ...]:
    """Partitions one n-jump above p.

    A move picks bead indices a < b of Maya(p) with i_a + n <= i_b, target
    slots i_a + n and i_b - n distinct and unoccupied (apart from the moved
    beads), and squeezes the pair together.  The label of the squeezed diagram
    dominates p, so these are the covers above p in the n-jump order.

    A valid lower bead i_b sits below tail_start + n (its target must be a hole
    or the vacated upper slot), so a finite window sees every move.
    """
    m = maya_of_partition(p)
    hi = m.tail_start() + n
    window = []
    k = 1
    while m.bead(k) < hi:
        window.append(m.bead(k))
        k += 1
    bead_set = set(window)
    out = set()
    for ai in range(len(window)):
        for bi in range(ai + 1, len(window)):
            ia, ib = window[ai], window[bi]
            if ia + n > ib:
                continue
            ta, tb = ia + n, ib - n
            if ta == tb or {ta, tb} == {ia, ib}:
                continue
            others = bead_set - {ia, ib}
            if ta in others or tb in others:
                continue
            m2 = maya_from_beads(sorted(others | {ta, tb}), hi)
            out.add(partition_of_maya(m2))
    out.discard(p)
    return tuple(sorted(out, reverse=True))


def _n_jump_up_closure(p: Partition, n: int) -> set:
    seen = {p}
    frontier = [p]
    while frontier:
        q = frontier.pop()
        for r in n_jump_raises(q, n):
            if r not in seen:
                seen.add(r)
                frontier.append(r)
    return seen


def compare_n_jump(p: Partition, q: Partition, n: int) -> Cmp:
    """BFS over n-jump covers; oriented so that GREATER refines dominance."""
    if size(p) != size(q):
        return Cmp.INCOMPARABLE
    if p == q:
        return Cmp.EQUAL
    if p in _n_jump_up_closure(q, n):
        return Cmp.GREATER
    if q in _n_jump_up_closure(p, n):
        return Cmp.LESS
    return Cmp.INCOMPARABLE


def compare(p: Partition, q: Partition, order: str, n: int | None = None) -> Cmp:
    """Compare under one of: "mlex", "dominance", "n_jump", "n_dominance"."""
    p, q = check_partition(p), check_partition(q)
    if order == "mlex":
        return compare_mlex(p, q)
    if order == "dominance":
        return compare_dominance(p, q)
    if order in ("n_jump", "n_dominance"):
        if n is None:
            raise ValueError(f"{order} needs n")
        return compare_n_jump(p, q, n)
    raise ValueError(f"unknown order {order!r}")


# ---------------------------------------------------------------------------
# n-cores via the abacus


def n_core(p: Partition, n: int) -> Partition:
    """Remove rim n-hooks until none remain, by justifying the abacus runners.

    Beads of Maya(p) are grouped by residue mod n; pushing every bead as far
    left as possible within its runner (preserving the runner's bead count at
    cofinite level) yields the diagram of the core, independent of order.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    m = maya_of_partition(p)
    tail = m.tail_start()
    # choose a split point divisible by n at or above the tail, so each runner
    # is full from the split on
    split = tail if tail % n == 0 else tail + (n - tail % n)
    below = []
    k = 1
    while m.bead(k) < split:
        below.append(m.bead(k))
        k += 1
    new_below = []
    for r in range(n):
        slots = [(b - r) // n for b in below if b % n == r]
        hi = (split - 1 - r) // n + 1  # slot j has position r + n*j; slots < hi are below split
        count = len(slots)
        new_below.extend(r + n * j for j in range(hi - count, hi))
    return partition_of_maya(maya_from_beads(sorted(new_below), split))


def hook_lengths(p: Partition) -> list:
    pt = transpose(p)
    return [[p[i] - j + pt[j] - i - 1 for j in range(p[i])] for i in range(len(p))]


def n_core_by_rim_hooks(p: Partition, n: int) -> Partition:
    """Oracle: strip rim n-hooks one at a time until none remain."""
    beta_len = max(len(p), 1)
    beta = [p[i] + (beta_len - 1 - i) if i < len(p) else beta_len - 1 - i for i in range(beta_len)]
    beta = sorted(beta)
    # removing a rim n-hook == lowering some beta value by n onto a free slot
    changed = True
    while changed:
        changed = False
        bs = set(beta)
        for i, b in enumerate(beta):
            if b - n >= 0 and (b - n) not in bs:
                beta[i] = b - n
                beta.sort()
                changed = True
                break
    parts = sorted((b - i for i, b in enumerate(beta)), reverse=True)
    return tuple(x for x in parts if x > 0)


def weight_class(p: Partition, n: int) -> tuple:
    """(n-core, size): the invariant shared by diagrams connected by n-jumps."""
    return (n_core(p, n), size(p))
