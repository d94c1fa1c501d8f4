"""The straightening algorithm for dual wedge vectors modulo the shuffle
relations, the d-matrix of the dual basis, finite-rank verification of the
shuffle-span theorem, the Kostka-Foulkes cross-check, n-dominance
connectivity experiments, and ideal-generator export.
"""

from __future__ import annotations

from itertools import combinations

from .exact import IntMatrix, cyclotomic_reduce, hermite_normal_form
from .fock import basis_vector, shuffle_adjoint
from .grassmann import jordan_matrix, is_nilpotent
from .exterior import ExtTensor, t_shuffle
from .exact import GF, ZZ
from .partitions import (
    MayaDiagram,
    Partition,
    gap_and_regularize,
    is_n_regular,
    maya_of_partition,
    n_jump_raises,
    n_regular_partitions,
    partition_of_maya,
    partitions_of,
    size,
    weight_class,
)
from .symfunc import kf_transition_matrices


# ---------------------------------------------------------------------------
# straightening


class StraighteningResult:
    """Expansion of a dual basis vector over n-regular partitions, with trace."""

    def __init__(self, partition: Partition, n: int, coeffs: dict, trace: tuple):
        self.partition = partition
        self.n = n
        self.coeffs = coeffs  # n-regular Partition -> int
        self.trace = trace    # (partition, ell, d, term_count) per rewrite

    def __repr__(self):
        return f"StraighteningResult({self.partition}, n={self.n}, {self.coeffs})"


_memo: dict = {}


def straighten_coeffs(lam: Partition, n: int, _trace: list | None = None) -> dict:
    """Integer coefficients of s*_lam modulo the shuffle relations, on the
    n-regular dual basis.  Memoized; each non-regular partition has a unique
    (ell, rho) rewrite, so the result is canonical.
    """
    lam = tuple(lam)
    key = (n, lam)
    if key in _memo:
        return _memo[key]
    if is_n_regular(lam, n):
        result = {lam: 1}
        _memo[key] = result
        return result
    ell, rho, d = gap_and_regularize(lam, n)
    image = shuffle_adjoint(n, d, basis_vector(rho, dual=True))
    terms = {partition_of_maya(m): c for m, c in image.coeffs.items()}
    lead = terms.pop(lam, 0)
    if lead not in (1, -1):
        raise ArithmeticError(f"leading coefficient {lead} is not a unit at {lam}")
    if _trace is not None:
        _trace.append((lam, ell, d, len(terms) + 1))
    result: dict = {}
    for nu, c in terms.items():
        sub = straighten_coeffs(nu, n, _trace)
        for reg, c2 in sub.items():
            result[reg] = result.get(reg, 0) + (-lead) * c * c2
    result = {reg: c for reg, c in result.items() if c}
    _memo[key] = result
    return result


def straighten(lam: Partition, n: int) -> StraighteningResult:
    if n < 2:
        raise ValueError("n must be >= 2")
    trace: list = []
    coeffs = straighten_coeffs(tuple(lam), n, trace)
    return StraighteningResult(tuple(lam), n, coeffs, tuple(trace))


def d_matrix(n: int, total: int) -> dict:
    """d_{lam,nu} for lam n-regular and nu arbitrary of the given size.

    By duality d_{lam,nu} is the coefficient of v*_lam in the straightening
    of s*_nu.
    """
    out: dict = {}
    for nu in partitions_of(total):
        for lam, c in straighten_coeffs(nu, n).items():
            out[(lam, nu)] = c
    return out


# ---------------------------------------------------------------------------
# finite-rank shuffle span


def shuffle_span_dim(n: int, total: int) -> int:
    """Rank of the span of all adjoint-shuffle images landing in the given degree."""
    if total == 0:
        return 0
    parts = partitions_of(total)
    index = {p: i for i, p in enumerate(parts)}
    vectors = []
    d = 1
    while n * d <= total:
        for mu in partitions_of(total - n * d):
            image = shuffle_adjoint(n, d, basis_vector(mu, dual=True))
            row = [0] * len(parts)
            for m, c in image.coeffs.items():
                row[index[partition_of_maya(m)]] = c
            vectors.append(tuple(row))
        d += 1
    if not vectors:
        return 0
    _, rank = hermite_normal_form(IntMatrix.from_rows(vectors, len(parts)))
    return rank


# ---------------------------------------------------------------------------
# Kostka-Foulkes cross-check


def kf_compare(n: int, total: int, convention: str = "charge") -> dict:
    """Compare D(zeta) entrywise with the straightening d-matrix.

    Every entry of D(t) reduced modulo Phi_n must be a rational integer; the
    report carries the first discrepancy if any.
    """
    kf = kf_transition_matrices(total, n, convention)
    dm = d_matrix(n, total)
    mismatches = []
    entries = {}
    for i, lam in enumerate(kf.regular_labels):
        for j, nu in enumerate(kf.labels):
            residue = cyclotomic_reduce(kf.D[i][j], n)
            if not residue.is_integer():
                raise ArithmeticError(
                    f"D({lam},{nu}) at zeta_{n} is not an integer: {residue!r}")
            val = residue.integer_value()
            entries[(lam, nu)] = val
            expected = dm.get((lam, nu), 0)
            if val != expected:
                mismatches.append({
                    "lam": lam, "nu": nu,
                    "d_zeta": val, "d_straighten": expected,
                    "D_poly": repr(kf.D[i][j]),
                })
    return {
        "n": n, "size": total, "convention": convention,
        "match": not mismatches,
        "entries": entries,
        "mismatches": mismatches,
        "regular_labels": kf.regular_labels,
        "labels": kf.labels,
    }


# ---------------------------------------------------------------------------
# n-dominance connectivity


def n_dominance_components(n: int, total: int) -> dict:
    """Connected components of the n-jump graph vs (n-core, size) classes."""
    parts = list(partitions_of(total))
    adj = {p: set() for p in parts}
    for p in parts:
        for q in n_jump_raises(p, n):
            adj[p].add(q)
            adj[q].add(p)
    components = []
    seen = set()
    for p in parts:
        if p in seen:
            continue
        comp = set()
        stack = [p]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(adj[x] - comp)
        seen |= comp
        components.append(frozenset(comp))
    classes: dict = {}
    for p in parts:
        classes.setdefault(weight_class(p, n), set()).add(p)
    class_sets = {k: frozenset(v) for k, v in classes.items()}
    split = []
    for wc, members in class_sets.items():
        covering = {comp for comp in components if comp & members}
        if len(covering) != 1:
            split.append({"class": wc, "members": sorted(members), "components": len(covering)})
    return {
        "n": n, "size": total,
        "components": components,
        "classes": class_sets,
        "match": not split and len(components) == len(class_sets),
        "split_classes": split,
    }


# ---------------------------------------------------------------------------
# generator export


def _serialize_ints(xs) -> str:
    return ",".join(str(x) for x in xs)


def _serialize_maya(m: MayaDiagram) -> str:
    return f"{m.charge};{_serialize_ints(m.mu)}"


def _format_generator(terms) -> str:
    body = " ".join(f"{'+' if c >= 0 else '-'}{abs(c)}*X[{idx}]" for idx, c in terms)
    return f"gen: {body}"


def emit_sato_shuffle_generators(n: int, max_degree: int) -> str:
    """Linear shuffle forms in Pluecker coordinates X[maya], output degree bounded.

    The generator attached to a diagram m and d >= 1 is the coordinate
    expansion of the adjoint shuffle applied to the dual basis vector of m;
    its terms sit in degree |m| + n d.
    """
    lines = ["ring: X indexed by maya(charge;mu); char: 0"]
    gens = []
    for total in range(0, max_degree + 1):
        for mu in partitions_of(total):
            d = 1
            while total + n * d <= max_degree:
                image = shuffle_adjoint(n, d, basis_vector(mu, dual=True))
                if not image.is_zero():
                    terms = sorted(
                        ((_serialize_maya(m), c) for m, c in image.coeffs.items()),
                    )
                    gens.append(_format_generator(terms))
                d += 1
    lines.extend(sorted(set(gens)))
    return "\n".join(lines) + "\n"


def emit_t_shuffle_generators(T, k: int) -> str:
    """Linear forms lambda . sh_d^T in coordinates X[k-subset], d = 1..k."""
    n = len(T)
    if not is_nilpotent(T):
        raise ValueError("export expects a nilpotent operator")
    lines = ["ring: X indexed by subset; char: 0"]
    keys = list(combinations(range(1, n + 1), k))
    gens = []
    for d in range(1, k + 1):
        rows: dict = {}
        for key in keys:
            tau = ExtTensor(n, k, {key: 1}, ZZ)
            img = t_shuffle(d, T, tau)
            for key2, c in img.coeffs.items():
                rows.setdefault(key2, []).append((key, c))
        for key2 in sorted(rows):
            terms = sorted(((_serialize_ints(key), c) for key, c in rows[key2]))
            gens.append(_format_generator(terms))
    lines.extend(sorted(set(gens)))
    return "\n".join(lines) + "\n"
