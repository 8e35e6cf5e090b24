"""Cluster seeds with coefficients, their mutation, and mutation graphs.

A seed stores a skew-symmetric integer matrix, its cluster variables as
reduced rational functions of the initial variables ``x1 .. xn`` and one
coefficient per position.  Coefficients live in one of three semifields:

``universal``  rational functions of ``c1 .. cn`` with ``a (+) b = a + b``
``tropical``   integer exponent vectors over ``y1 .. ym``; the product adds
               vectors and ``(+)`` takes the componentwise minimum
``trivial``    the tropical semifield on zero generators, so every
               coefficient is 1 and ``1 (+) 1 = 1``

Mutation in direction ``k`` (1-based) follows the exchange relations::

    b'_ij = -b_ij                                   if i = k or j = k
    b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2  otherwise
    c'_k  = 1 / c_k
    c'_j  = c_j c_k^max(b_kj, 0) / (c_k (+) 1)^b_kj
    x'_k  = (c_k prod x_i^max(b_ik, 0) + prod x_i^max(-b_ik, 0)) / ((c_k (+) 1) x_k)
"""

from __future__ import annotations

import itertools
import json
import random
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence, Union

from .errors import FrozenDirection, IndexOutOfRange
from .laurent import LaurentPoly, RationalFn

__all__ = [
    "Seed",
    "initial_seed",
    "preset_seed",
    "seed_from_json",
    "mutate_seed",
    "mutate_matrix",
    "involutivity_check",
    "is_skew_symmetric",
    "matrices_equivalent",
    "check_laurent_phenomenon",
    "LaurentReport",
    "MutationGraph",
    "mutation_graph",
    "BratteliDiagram",
    "bratteli_from_mutations",
    "random_seed",
    "PRESET_MATRICES",
]

Matrix = tuple[tuple[int, ...], ...]
Coefficient = Union[RationalFn, tuple[int, ...]]

SEMIFIELDS = ("universal", "tropical", "trivial")

PRESET_MATRICES: dict[str, Matrix] = {
    "S02": ((0, 2), (-2, 0)),
    "S11": ((0, 2, -2), (-2, 0, 2), (2, -2, 0)),
}


def is_skew_symmetric(B: Sequence[Sequence[int]]) -> bool:
    n = len(B)
    return all(len(row) == n for row in B) and all(
        B[i][j] == -B[j][i] for i in range(n) for j in range(n)
    )


def mutate_matrix(B: Matrix, k: int) -> Matrix:
    """Matrix mutation in the 0-based direction ``k``."""
    n = len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-B[i][j])
            else:
                bik, bkj = B[i][k], B[k][j]
                row.append(B[i][j] + (abs(bik) * bkj + bik * abs(bkj)) // 2)
        out.append(tuple(row))
    return tuple(out)


def matrices_equivalent(B1: Matrix, B2: Matrix) -> bool:
    """Equal up to a simultaneous row/column permutation and a global sign."""
    n = len(B1)
    if len(B2) != n:
        return False
    targets = {tuple(map(tuple, B2)), tuple(tuple(-x for x in row) for row in B2)}
    for perm in itertools.permutations(range(n)):
        permuted = tuple(tuple(B1[perm[i]][perm[j]] for j in range(n)) for i in range(n))
        if permuted in targets:
            return True
    return False


# ---------------------------------------------------------------------------
# semifield helpers


def _tropical_monomial(v: tuple[int, ...]) -> RationalFn:
    powers = {f"y{i + 1}": e for i, e in enumerate(v) if e}
    return RationalFn(LaurentPoly.monomial(powers)) if powers else RationalFn(1)


def _coeff_value(seed: Seed, c: Coefficient) -> RationalFn:
    """The coefficient as a rational function (a monomial in ``y`` for tropical modes)."""
    return c if seed.semifield == "universal" else _tropical_monomial(c)


def _oplus_one(seed: Seed, c: Coefficient) -> Coefficient:
    if seed.semifield == "universal":
        return c + 1
    return tuple(min(e, 0) for e in c)


def _coeff_mul_pow(seed: Seed, c: Coefficient, d: Coefficient, e: int) -> Coefficient:
    """``c * d^e`` in the semifield."""
    if e == 0:
        return c
    if seed.semifield == "universal":
        return c * d ** e
    return tuple(a + e * b for a, b in zip(c, d))


def _coeff_inverse(seed: Seed, c: Coefficient) -> Coefficient:
    if seed.semifield == "universal":
        return c.inverse()
    return tuple(-a for a in c)


def _coeff_key(seed: Seed, c: Coefficient):
    return c.key() if seed.semifield == "universal" else tuple(c)


# ---------------------------------------------------------------------------
# seeds


@dataclass(frozen=True)
class Seed:
    """An immutable seed.  ``frozen`` holds 0-based positions that never mutate."""

    matrix: Matrix
    cluster: tuple[RationalFn, ...]
    coeffs: tuple[Coefficient, ...]
    semifield: str = "universal"
    frozen: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        n = len(self.matrix)
        if not is_skew_symmetric(self.matrix):
            raise ValueError("exchange matrix must be skew-symmetric")
        if len(self.cluster) != n or len(self.coeffs) != n:
            raise ValueError("cluster, coefficients and matrix must have the same size")
        if self.semifield not in SEMIFIELDS:
            raise ValueError(f"unknown semifield {self.semifield!r}")
        if any(not 0 <= f < n for f in self.frozen):
            raise IndexOutOfRange("frozen position outside the seed")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def mutable(self) -> list[int]:
        """1-based mutable directions."""
        return [k + 1 for k in range(self.rank) if k not in self.frozen]

    def initial_names(self) -> list[str]:
        return [f"x{i + 1}" for i in range(self.rank)]

    def coefficient_value(self, k: int) -> RationalFn:
        """Coefficient at 1-based position ``k`` as a rational function."""
        return _coeff_value(self, self.coeffs[k - 1])

    def canonical_key(self) -> tuple:
        """Least key over permutations of positions that keep frozen positions frozen.

        The key covers the matrix and cluster variables, and the coefficients
        in universal mode only.
        """
        n = self.rank
        mutable = [i for i in range(n) if i not in self.frozen]
        frozen = sorted(self.frozen)
        best = None
        with_coeffs = self.semifield == "universal"
        xkeys = [x.key() for x in self.cluster]
        ckeys = [_coeff_key(self, c) for c in self.coeffs] if with_coeffs else None
        for pm in itertools.permutations(mutable):
            for pf in itertools.permutations(frozen):
                perm = list(pm) + list(pf)
                key = (
                    tuple(tuple(self.matrix[perm[i]][perm[j]] for j in range(n)) for i in range(n)),
                    tuple(xkeys[p] for p in perm),
                    tuple(ckeys[p] for p in perm) if with_coeffs else (),
                )
                if best is None or key < best:
                    best = key
        return best

    def same_as(self, other: Seed) -> bool:
        return (
            self.matrix == other.matrix
            and self.cluster == other.cluster
            and self.coeffs == other.coeffs
            and self.frozen == other.frozen
        )

    def to_json(self) -> dict:
        def coeff(c):
            return c.to_json() if isinstance(c, RationalFn) else list(c)

        return {
            "n": self.rank,
            "entries": [list(r) for r in self.matrix],
            "frozen": sorted(f + 1 for f in self.frozen),
            "semifield": self.semifield,
            "cluster": [x.to_text() for x in self.cluster],
            "coeffs": [
                c.to_text() if isinstance(c, RationalFn) else list(c) for c in self.coeffs
            ],
        }


def initial_seed(
    matrix: Sequence[Sequence[int]],
    frozen: Iterable[int] = (),
    semifield: str = "universal",
    tropical_coeffs: Sequence[Sequence[int]] | None = None,
) -> Seed:
    """Seed with cluster ``x1 .. xn``.

    ``frozen`` lists 1-based positions.  Universal coefficients are ``c1 ..
    cn``; tropical ones default to principal coefficients ``y1 .. yn``.
    """
    B = tuple(tuple(int(x) for x in row) for row in matrix)
    n = len(B)
    frozen0 = frozenset(int(f) - 1 for f in frozen)
    if any(not 0 <= f < n for f in frozen0):
        raise IndexOutOfRange("frozen index outside 1..n")
    cluster = tuple(RationalFn.var(f"x{i + 1}") for i in range(n))
    if semifield == "universal":
        coeffs: tuple = tuple(RationalFn.var(f"c{i + 1}") for i in range(n))
    elif semifield == "tropical":
        if tropical_coeffs is None:
            coeffs = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
        else:
            coeffs = tuple(tuple(int(e) for e in v) for v in tropical_coeffs)
    elif semifield == "trivial":
        coeffs = tuple(() for _ in range(n))
    else:
        raise ValueError(f"unknown semifield {semifield!r}")
    return Seed(B, cluster, coeffs, semifield, frozen0)


def preset_seed(name: str, semifield: str = "universal") -> Seed:
    try:
        B = PRESET_MATRICES[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESET_MATRICES)}") from None
    return initial_seed(B, semifield=semifield)


def seed_from_json(source: str | Path | dict, semifield: str = "universal") -> Seed:
    """Load ``{n, entries, frozen}`` (frozen positions 1-based) from a file, string or dict."""
    if isinstance(source, dict):
        data = source
    else:
        text = Path(source).read_text() if Path(str(source)).exists() else str(source)
        data = json.loads(text)
    entries = data["entries"]
    n = int(data.get("n", len(entries)))
    if len(entries) != n:
        raise ValueError("entries do not match n")
    return initial_seed(entries, data.get("frozen", ()), semifield)


def mutate_seed(seed: Seed, k: int) -> Seed:
    """Mutate in the 1-based direction ``k``."""
    if not 1 <= k <= seed.rank:
        raise IndexOutOfRange(f"direction {k} outside 1..{seed.rank}")
    idx = k - 1
    if idx in seed.frozen:
        raise FrozenDirection(f"direction {k} is frozen")
    B = seed.matrix
    n = seed.rank
    ck = seed.coeffs[idx]
    ck_plus = _oplus_one(seed, ck)

    coeffs = []
    for j in range(n):
        if j == idx:
            coeffs.append(_coeff_inverse(seed, ck))
            continue
        bkj = B[idx][j]
        c = _coeff_mul_pow(seed, seed.coeffs[j], ck, max(bkj, 0))
        c = _coeff_mul_pow(seed, c, ck_plus, -bkj)
        coeffs.append(c)

    up = RationalFn(1)
    down = RationalFn(1)
    for i in range(n):
        b = B[i][idx]
        if b > 0:
            up = up * seed.cluster[i] ** b
        elif b < 0:
            down = down * seed.cluster[i] ** (-b)
    numer = _coeff_value(seed, ck) * up + down
    new_x = numer / (_coeff_value(seed, ck_plus) * seed.cluster[idx])

    cluster = list(seed.cluster)
    cluster[idx] = new_x
    result = Seed(mutate_matrix(B, idx), tuple(cluster), tuple(coeffs), seed.semifield, seed.frozen)
    return result


def involutivity_check(seed: Seed, k: int) -> bool:
    return mutate_seed(mutate_seed(seed, k), k).same_as(seed)


def random_seed(rng: random.Random, rank: int, max_entry: int = 2, semifield: str = "universal") -> Seed:
    B = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        for j in range(i + 1, rank):
            v = rng.randint(-max_entry, max_entry)
            B[i][j], B[j][i] = v, -v
    return initial_seed(B, semifield=semifield)


# ---------------------------------------------------------------------------
# Laurent phenomenon


def _laurent_shape(f: RationalFn, xnames: set[str]) -> tuple[bool, LaurentPoly | None]:
    """Whether ``f`` is Laurent in the x-variables over the coefficient ring.

    The reduced denominator must be an x-monomial times a polynomial in the
    coefficient variables alone, and the numerator must have integer
    coefficients.  Returns the flag and the x-monomial of the denominator.
    """
    den = f.denominator
    dv = den.variables
    xpos = [i for i, v in enumerate(dv) if v in xnames]
    xparts = {tuple(e[i] for i in xpos) for e in den.terms}
    if len(xparts) != 1:
        return False, None
    (xe,) = xparts
    mono = LaurentPoly.monomial({dv[i]: e for i, e in zip(xpos, xe) if e})
    return f.numerator.has_integer_coefficients(), mono


@dataclass
class LaurentReport:
    depth: int
    semifield: str
    entries: list[dict]
    violations: list[dict]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "semifield": self.semifield,
            "checked": len(self.entries),
            "violations": self.violations,
            "entries": self.entries,
        }


def check_laurent_phenomenon(seed: Seed, depth: int) -> LaurentReport:
    """Mutate along every sequence of length <= depth without immediate back-steps.

    Every cluster variable created along the way is tested for Laurentness
    in the initial cluster variables (frozen ones included).
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    xnames = set(seed.initial_names())
    entries: list[dict] = []
    violations: list[dict] = []
    seen: dict[tuple, str] = {}
    if depth == 0:
        for i, x in enumerate(seed.cluster):
            entries.append({"sequence": [], "position": i + 1, "variable": x.to_text(), "denominator": f"x{i + 1}^0", "laurent": True})
    stack: list[tuple[Seed, tuple[int, ...]]] = [(seed, ())]
    while stack:
        s, seq = stack.pop()
        if len(seq) == depth:
            continue
        for k in s.mutable:
            if seq and seq[-1] == k:
                continue
            child = mutate_seed(s, k)
            new_seq = seq + (k,)
            x = child.cluster[k - 1]
            key = x.key()
            if key not in seen:
                ok, mono = _laurent_shape(x, xnames)
                entry = {
                    "sequence": list(new_seq),
                    "position": k,
                    "variable": x.to_text(),
                    "denominator": mono.to_text() if mono is not None else x.denominator.to_text(),
                    "laurent": ok,
                }
                seen[key] = entry["variable"]
                entries.append(entry)
                if not ok:
                    violations.append(entry)
            stack.append((child, new_seq))
    entries.sort(key=lambda e: (len(e["sequence"]), e["sequence"]))
    violations.sort(key=lambda e: (len(e["sequence"]), e["sequence"]))
    return LaurentReport(depth, seed.semifield, entries, violations)


# ---------------------------------------------------------------------------
# mutation graphs and Bratteli diagrams


@dataclass
class MutationGraph:
    """Seed classes per level and edge multiplicities between consecutive levels."""

    levels: list[list[Seed]]
    edges: list[Counter]  # edges[k][(i, j)]: mutations from class i at level k to class j at level k+1
    labels: list[list[tuple[int, ...]]]  # one mutation sequence reaching each class

    @property
    def level_sizes(self) -> list[int]:
        return [len(level) for level in self.levels]


def mutation_graph(seed: Seed, depth: int) -> MutationGraph:
    """Breadth-first mutation tree, identified level by level under seed equivalence.

    Every mutable direction is applied at every vertex, including the one
    that undoes the previous step, so a class may reappear at a later level.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    levels = [[seed]]
    labels = [[()]]
    edges: list[Counter] = []
    for _ in range(depth):
        index: dict[tuple, int] = {}
        nxt: list[Seed] = []
        nxt_labels: list[tuple[int, ...]] = []
        counts: Counter = Counter()
        for i, s in enumerate(levels[-1]):
            for k in s.mutable:
                child = mutate_seed(s, k)
                key = child.canonical_key()
                j = index.get(key)
                if j is None:
                    j = index[key] = len(nxt)
                    nxt.append(child)
                    nxt_labels.append(labels[-1][i] + (k,))
                counts[(i, j)] += 1
        levels.append(nxt)
        labels.append(nxt_labels)
        edges.append(counts)
    return MutationGraph(levels, edges, labels)


@dataclass
class BratteliDiagram:
    levels: list[list[str]]
    edges: list[dict[tuple[int, int], int]]

    @property
    def level_sizes(self) -> list[int]:
        return [len(v) for v in self.levels]

    def to_json(self) -> dict:
        return {
            "levels": self.levels,
            "edges": [
                [{"from": i, "to": j, "multiplicity": m} for (i, j), m in sorted(level.items())]
                for level in self.edges
            ],
        }

    def to_dot(self, name: str = "bratteli") -> str:
        lines = [f"digraph {name} {{", "  rankdir=TB;"]
        for k, level in enumerate(self.levels):
            lines.append(f"  subgraph level_{k} {{")
            lines.append("    rank=same;")
            for i, label in enumerate(level):
                lines.append(f'    v{k}_{i} [label="{label}"];')
            lines.append("  }")
        for k, level in enumerate(self.edges):
            for (i, j), m in sorted(level.items()):
                lines.append(f'  v{k}_{i} -> v{k + 1}_{j} [label="{m}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_networkx(self):
        import networkx as nx

        g = nx.DiGraph()
        for k, level in enumerate(self.levels):
            for i in range(len(level)):
                g.add_node((k, i), level=k)
        for k, level in enumerate(self.edges):
            for (i, j), m in level.items():
                g.add_edge((k, i), (k + 1, j), multiplicity=m)
        return g


def bratteli_from_mutations(g: MutationGraph) -> BratteliDiagram:
    levels = [
        [".".join(map(str, lab)) if lab else "root" for lab in level] for level in g.labels
    ]
    return BratteliDiagram(levels, [dict(e) for e in g.edges])
