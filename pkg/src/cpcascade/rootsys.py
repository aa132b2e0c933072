"""Root systems of the simple Lie algebras with exact arithmetic.

Simple roots are numbered as in the Vinberg-Onishchik tables:

* ``A_n``, ``B_n``, ``C_n`` -- a chain ``1 - 2 - ... - n``; ``alpha_n`` is
  short for ``B_n`` and long for ``C_n``.
* ``D_n`` -- a chain ``1 - ... - (n-2)`` with ``n-1`` and ``n`` both attached
  to ``n-2``.
* ``E_6`` -- chain ``1..5``, ``alpha_6`` attached to ``alpha_3``.
* ``E_7`` -- chain ``1..6``, ``alpha_7`` attached to ``alpha_4``.
* ``E_8`` -- chain ``1..7``, ``alpha_8`` attached to ``alpha_5``.
* ``F_4`` -- ``1 - 2 => 3 - 4`` with ``alpha_1, alpha_2`` short.
* ``G_2`` -- ``alpha_1`` short, ``alpha_2`` long.

Internally simple roots are indexed from 0; everything user-facing is 1-based.
Roots are tuples of integer coefficients over the simple roots.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

Root = tuple[int, ...]


class InvalidType(ValueError):
    """Raised for a (family, rank) pair that names no simple Lie algebra."""


_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        if not isinstance(n, int) or n < 1:
            raise InvalidType(f"bad rank {n!r}")
        if f in _MIN_RANK:
            if n < _MIN_RANK[f]:
                raise InvalidType(f"{f}{n} is not admissible (need rank >= {_MIN_RANK[f]})")
        elif f in _EXCEPTIONAL:
            if n not in _EXCEPTIONAL[f]:
                raise InvalidType(f"{f}{n} is not admissible")
        else:
            raise InvalidType(f"unknown family {f!r}")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise InvalidType(f"cannot parse type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _gram_matrix(t: SimpleType) -> list[list[Fraction]]:
    """Symmetric form on the simple roots, long roots of squared length 2."""
    n = t.rank
    g = [[Fraction(0)] * n for _ in range(n)]
    lengths = [Fraction(2)] * n
    edges: list[tuple[int, int]] = []

    f = t.family
    if f in "ABC":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif f == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif f == "E":
        branch = {6: 2, 7: 3, 8: 4}[n]
        edges = [(i, i + 1) for i in range(n - 2)] + [(branch, n - 1)]
    elif f == "F":
        edges = [(0, 1), (1, 2), (2, 3)]
    elif f == "G":
        edges = [(0, 1)]

    if f == "B":
        lengths[n - 1] = Fraction(1)
    elif f == "C":
        lengths = [Fraction(1)] * (n - 1) + [Fraction(2)]
    elif f == "F":
        lengths = [Fraction(1), Fraction(1), Fraction(2), Fraction(2)]
    elif f == "G":
        lengths = [Fraction(2, 3), Fraction(2)]

    for i in range(n):
        g[i][i] = lengths[i]
    for i, j in edges:
        # (a_i, a_j) = -max(|a_i|^2, |a_j|^2) / 2 on every Dynkin edge
        v = -max(lengths[i], lengths[j]) / 2
        g[i][j] = g[j][i] = v
    return g


@dataclass(frozen=True)
class RootSystem:
    """Positive roots, root order and the invariant form of a simple type."""

    type: SimpleType
    gram: tuple[tuple[Fraction, ...], ...]
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    index: dict = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    def __len__(self):
        return len(self.positive_roots)

    def __hash__(self):
        return hash(self.type)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.type == self.type

    # -- basic root arithmetic ------------------------------------------------

    def simple_root(self, i: int) -> Root:
        return tuple(int(j == i) for j in range(self.rank))

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(self.simple_root(i) for i in range(self.rank))

    @cached_property
    def all_roots(self) -> frozenset:
        neg = (tuple(-c for c in r) for r in self.positive_roots)
        return frozenset(self.positive_roots) | frozenset(neg)

    def is_root(self, v) -> bool:
        return tuple(v) in self.all_roots

    def is_positive(self, v) -> bool:
        return tuple(v) in self.index

    @cached_property
    def _gram6(self) -> tuple[tuple[int, ...], ...]:
        # 6 * gram is integral for every type
        return tuple(tuple(int(6 * x) for x in row) for row in self.gram)

    def form6(self, u, v) -> int:
        """``6 (u, v)`` as an exact integer."""
        g = self._gram6
        total = 0
        for i, a in enumerate(u):
            if a:
                row = g[i]
                total += a * sum(b * row[j] for j, b in enumerate(v) if b)
        return total

    def form(self, u, v) -> Fraction:
        return Fraction(self.form6(u, v), 6)

    def pairing(self, u, v) -> Fraction:
        """``<u, v^vee> = 2 (u, v) / (v, v)``."""
        return Fraction(2 * self.form6(u, v), self.form6(v, v))

    def norm(self, v) -> Fraction:
        return self.form(v, v)

    @cached_property
    def theta(self) -> Root:
        return self.positive_roots[-1]

    def is_long(self, v) -> bool:
        return self.norm(v) == self.norm(self.theta)

    @cached_property
    def long_simple(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.rank) if self.is_long(self.simple_root(i)))

    def coroot(self, v) -> tuple[int, ...]:
        """Coefficients of ``v^vee`` over the simple coroots (always integral)."""
        nv = self.norm(v)
        out = []
        for i, c in enumerate(v):
            x = Fraction(c) * self.gram[i][i] / nv
            assert x.denominator == 1
            out.append(int(x))
        return tuple(out)

    # -- root order --------------------------------------------------------------

    @staticmethod
    def height(v) -> int:
        return sum(v)

    @staticmethod
    def support(v) -> frozenset:
        return frozenset(i for i, c in enumerate(v) if c)

    @staticmethod
    def leq(u, v) -> bool:
        return all(a <= b for a, b in zip(u, v))

    @cached_property
    def half_theta(self) -> Root | None:
        """``[theta/2]``; ``None`` stands for the zero element (family A)."""
        h = tuple(m // 2 for m in self.theta)
        if not any(h):
            return None
        if h not in self.index:
            raise AssertionError(f"[theta/2] = {h} is not a root of {self.type}")
        return h

    def is_commutative(self, v) -> bool:
        h = self.half_theta
        return h is None or not self.leq(v, h)

    @cached_property
    def commutative_mask(self) -> int:
        return sum(1 << k for k, r in enumerate(self.positive_roots) if self.is_commutative(r))

    @cached_property
    def commutative_simple(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.rank) if self.is_commutative(self.simple_root(i)))

    @cached_property
    def dynkin_edges(self) -> tuple[tuple[int, int], ...]:
        n = self.rank
        return tuple((i, j) for i in range(n) for j in range(i + 1, n) if self.gram[i][j])

    def components(self, nodes) -> list[frozenset]:
        """Connected components of the Dynkin diagram restricted to ``nodes``."""
        nodes = set(nodes)
        adj = {i: set() for i in nodes}
        for i, j in self.dynkin_edges:
            if i in nodes and j in nodes:
                adj[i].add(j)
                adj[j].add(i)
        seen: set = set()
        comps = []
        for s in sorted(nodes):
            if s in seen:
                continue
            stack, comp = [s], set()
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(adj[x] - comp)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    # -- bitsets over positive roots ---------------------------------------------

    def mask(self, roots) -> int:
        m = 0
        for r in roots:
            m |= 1 << self.index[tuple(r)]
        return m

    def roots_of(self, mask: int) -> list[Root]:
        return [r for k, r in enumerate(self.positive_roots) if mask >> k & 1]

    @cached_property
    def full_mask(self) -> int:
        return (1 << len(self.positive_roots)) - 1

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        """``up_masks[k]`` is the principal upper ideal of root ``k`` as a bitset."""
        pr = self.positive_roots
        return tuple(
            sum(1 << j for j, s in enumerate(pr) if self.leq(r, s)) for r in pr
        )

    @cached_property
    def sum_partners(self) -> tuple[int, ...]:
        """``sum_partners[k]``: bitset of positive roots ``d`` with ``root_k + d`` a root."""
        pr = self.positive_roots
        out = []
        for r in pr:
            m = 0
            for j, s in enumerate(pr):
                if tuple(a + b for a, b in zip(r, s)) in self.index:
                    m |= 1 << j
            out.append(m)
        return tuple(out)


def _cartan_from_gram(g) -> tuple[tuple[int, ...], ...]:
    n = len(g)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            x = 2 * g[i][j] / g[j][j]
            assert x.denominator == 1
            row.append(int(x))
        out.append(tuple(row))
    return tuple(out)


def _positive_roots(cartan) -> list[Root]:
    """Root-string closure: ``r + a_i`` is a root iff ``p - <r, a_i^vee> > 0``."""
    n = len(cartan)
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for r in layer:
            for i in range(n):
                p = 0
                down = list(r)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                pair = sum(r[j] * cartan[j][i] for j in range(n))
                if p - pair > 0:
                    up = tuple(c + (j == i) for j, c in enumerate(r))
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType | str) -> RootSystem:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    gram = _gram_matrix(t)
    cartan = _cartan_from_gram(gram)
    pos = _positive_roots(cartan)
    rs = RootSystem(
        type=t,
        gram=tuple(tuple(row) for row in gram),
        cartan=cartan,
        positive_roots=tuple(pos),
        index={r: k for k, r in enumerate(pos)},
    )
    # theta must be the unique maximal element of the root order
    assert all(rs.leq(r, rs.theta) for r in pos)
    rs.half_theta  # validates membership
    return rs


def all_types(max_rank: int = 8, min_rank: int = 1) -> list[SimpleType]:
    """Every admissible simple type with ``min_rank <= rank <= max_rank``."""
    out = []
    for fam, lo in _MIN_RANK.items():
        out += [SimpleType(fam, n) for n in range(max(lo, min_rank), max_rank + 1)]
    for fam, ranks in _EXCEPTIONAL.items():
        out += [SimpleType(fam, n) for n in ranks if min_rank <= n <= max_rank]
    return out


def root_order_leq(rs: RootSystem, gamma, delta) -> bool:
    return rs.leq(gamma, delta)


def half_theta(rs: RootSystem) -> Root | None:
    return rs.half_theta


def is_commutative_root(rs: RootSystem, gamma) -> bool:
    return rs.is_commutative(gamma)
