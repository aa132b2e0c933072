"""Brute-force checks that do not rely on the cascade theory.

Concrete Lie algebras are assembled from Chevalley structure constants, the
index is read off from the generic rank of the Kirillov form over ``F_p``,
and CP-ideals are found by exhaustive search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .abelian import RankCapExceeded, UpperIdeal, max_abelian_dim_in
from .chevalley import ChevalleyConstants, structure_constants
from .parabolic import Nilradical, is_optimal, optimise
from .rootsys import RootSystem

DEFAULT_PRIME = 2147483647
DEFAULT_TRIALS = 3
DEFAULT_SEED = 0
BRUTEFORCE_RANK_CAP = 7


class DegenerateField(ValueError):
    pass


class NotOptimal(ValueError):
    pass


class NotClosed(ValueError):
    """The requested span is not closed under the bracket."""


@dataclass(frozen=True)
class LiePresentation:
    """Structure constants ``[x_i, x_j] = sum_k c x_k`` on a labelled basis.

    ``brackets`` holds only pairs ``i < j`` with a nonzero result.
    """

    basis_labels: tuple
    brackets: dict = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def bracket(self, i: int, j: int) -> list:
        if i == j:
            return []
        if i < j:
            return self.brackets.get((i, j), [])
        return [(k, -c) for k, c in self.brackets.get((j, i), [])]

    def max_coefficient(self) -> int:
        m = 1
        for terms in self.brackets.values():
            for _, c in terms:
                c = Fraction(c)
                m = max(m, abs(c.numerator), c.denominator)
        return m


@dataclass(frozen=True)
class RankWitness:
    claimed_rank: int
    trials: int
    field_prime: int
    seed: int
    ranks: tuple = ()


# -- exact linear algebra --------------------------------------------------------


def rref(rows) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows, ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : rows . x = 0}``, one vector per free column."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for row, pcol in zip(red, pivots):
            v[pcol] = -row[fcol]
        out.append(v)
    return out


def _primitive(v) -> tuple[int, ...]:
    from math import gcd, lcm

    den = lcm(*(Fraction(x).denominator for x in v))
    ints = [int(Fraction(x) * den) for x in v]
    g = gcd(*ints) or 1
    return tuple(x // g for x in ints)


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Rank over ``F_p`` of an integer matrix with entries in ``[0, p)``; ``p < 2**31``."""
    m = np.array(mat, dtype=np.int64) % p
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        below = m[r + 1 :, c].copy()
        mask = below != 0
        if mask.any():
            idx = np.nonzero(mask)[0] + r + 1
            m[idx] = (m[idx] - (np.outer(below[mask], m[r]) % p)) % p
        r += 1
    return r


# -- presentations ---------------------------------------------------------------


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _build(rs: RootSystem, cc: ChevalleyConstants, cartan_vecs, cartan_labels, roots) -> LiePresentation:
    """Span of the given Cartan vectors (over simple coroots) and root vectors."""
    r = rs.rank
    nh = len(cartan_vecs)
    roots = [tuple(x) for x in roots]
    pos = {g: nh + k for k, g in enumerate(roots)}
    labels = tuple(cartan_labels) + tuple(roots)

    # expressing a Cartan vector in the chosen Cartan basis
    solve_cache: dict = {}

    def express(h):
        if h in solve_cache:
            return solve_cache[h]
        if nh == 0:
            raise NotClosed(f"coroot {h} needed but no Cartan part")
        cols = [[Fraction(cartan_vecs[k][i]) for k in range(nh)] + [Fraction(h[i])] for i in range(r)]
        red, piv = rref(cols)
        if nh in piv:
            raise NotClosed(f"coroot {h} is outside the Cartan part")
        coef = [Fraction(0)] * nh
        for row, pc in zip(red, piv):
            coef[pc] = row[nh]
        out = [(k, _intify(c)) for k, c in enumerate(coef) if c]
        solve_cache[h] = out
        return out

    def weight(g, h):
        return sum(h[i] * sum(g[j] * rs.cartan[j][i] for j in range(r)) for i in range(r))

    brackets: dict = {}
    for a in range(nh):
        for k, g in enumerate(roots):
            w = weight(g, cartan_vecs[a])
            if w:
                brackets[(a, nh + k)] = [(nh + k, w)]
    for k1, g1 in enumerate(roots):
        for k2 in range(k1 + 1, len(roots)):
            g2 = roots[k2]
            z = _add(g1, g2)
            if not any(z):
                terms = express(rs.coroot(g1))
            elif rs.is_root(z):
                if z not in pos:
                    raise NotClosed(f"[{g1}, {g2}] leaves the span")
                terms = [(pos[z], cc.N(g1, g2))]
            else:
                continue
            if terms:
                brackets[(nh + k1, nh + k2)] = terms
    return LiePresentation(labels, brackets)


def _intify(c: Fraction):
    return int(c) if c.denominator == 1 else c


def presentation_of_nilradical(rs: RootSystem, cc: ChevalleyConstants | None, n: Nilradical) -> LiePresentation:
    cc = cc or structure_constants(rs)
    return _build(rs, cc, [], [], n.roots)


def presentation_of_g(rs: RootSystem, cc: ChevalleyConstants | None = None) -> LiePresentation:
    """The whole simple Lie algebra in its Chevalley basis."""
    cc = cc or structure_constants(rs)
    hs = [rs.simple_root(i) for i in range(rs.rank)]
    neg = [tuple(-x for x in g) for g in rs.positive_roots]
    return _build(rs, cc, hs, [f"h{i + 1}" for i in range(rs.rank)], list(rs.positive_roots) + neg)


def _levi_positive(rs: RootSystem, T) -> list:
    return [g for g in rs.positive_roots if not any(g[i] for i in T)]


def _coroot_labels(vecs, prefix="h"):
    return [f"{prefix}{tuple(v)}" for v in vecs]


def presentation_of_subalgebra(rs: RootSystem, cc: ChevalleyConstants | None, kind: str, n: Nilradical) -> LiePresentation:
    """``kind`` is ``"p"`` (parabolic ``p_T``), ``"f"`` (Frobenius envelope) or ``"r"`` (``s + n``)."""
    cc = cc or structure_constants(rs)
    T = n.T
    if kind == "n":
        return presentation_of_nilradical(rs, cc, n)
    if kind == "p":
        hs = [rs.simple_root(i) for i in range(rs.rank)]  # simple coroots h_i
        neg = [tuple(-x for x in g) for g in _levi_positive(rs, T)]
        return _build(rs, cc, hs, [f"h{i + 1}" for i in range(rs.rank)], list(rs.positive_roots) + neg)
    if kind == "f":
        hs = [rs.coroot(n.cascade[i].beta) for i in sorted(n.cascade_ideal)]
        return _build(rs, cc, hs, _coroot_labels(hs), optimise(n).roots)
    if kind == "r":
        if not is_optimal(n):
            raise NotOptimal(f"{n} is not optimal; s + n is defined for optimal p only")
        hs = s_cartan_basis(rs, n)
        neg = [tuple(-x for x in g) for g in _levi_positive(rs, T)]
        return _build(rs, cc, hs, _coroot_labels(hs), list(rs.positive_roots) + neg)
    raise ValueError(f"unknown subalgebra kind {kind!r}")


def s_cartan_basis(rs: RootSystem, n: Nilradical) -> list[tuple[int, ...]]:
    """Integral basis of ``{h : beta(h) = 0 for beta in K(n)}`` over simple coroots."""
    rows = []
    for i in sorted(n.cascade_ideal):
        b = n.cascade[i].beta
        rows.append([sum(b[j] * rs.cartan[j][k] for j in range(rs.rank)) for k in range(rs.rank)])
    return [_primitive(v) for v in nullspace(rows, rs.rank)]


def jacobi_violations(lp: LiePresentation, triples=None) -> list[tuple[int, int, int]]:
    """Triples ``(i, j, k)`` on which the Jacobi identity fails."""

    def br_vec(i, vec):
        out: dict = {}
        for j, c in vec.items():
            for k, d in lp.bracket(i, j):
                out[k] = out.get(k, 0) + c * d
        return out

    bad = []
    it = triples if triples is not None else combinations(range(lp.dim), 3)
    for i, j, k in it:
        total: dict = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = dict(lp.bracket(b, c))
            for key, val in br_vec(a, inner).items():
                total[key] = total.get(key, 0) + val
        if any(total.values()):
            bad.append((i, j, k))
    return bad


# -- index ------------------------------------------------------------------------


def _coef_mod(c, p: int) -> int:
    c = Fraction(c)
    return c.numerator % p * pow(c.denominator, p - 2, p) % p


def kirillov_rank_mod_p(lp: LiePresentation, xi, p: int) -> int:
    d = lp.dim
    m = np.zeros((d, d), dtype=np.int64)
    for (i, j), terms in lp.brackets.items():
        v = 0
        for k, c in terms:
            v = (v + _coef_mod(c, p) * int(xi[k])) % p
        m[i, j] = v
        m[j, i] = (-v) % p
    return rank_mod_p(m, p)


def index_by_generic_rank(
    lp: LiePresentation,
    prime: int = DEFAULT_PRIME,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> tuple[int, RankWitness]:
    """``ind q = dim q - max rank xi([x_i, x_j])`` over random ``xi``.

    The estimate can only overshoot the true index, and does so with
    probability at most ``(dim / prime) ** trials``.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if prime >= 2**31:
        raise DegenerateField("prime must stay below 2**31 for int64 elimination")
    if prime <= 2 * lp.max_coefficient() * max(lp.dim, 1) ** 2:
        raise DegenerateField(f"prime {prime} too small for dim {lp.dim}")
    ranks = []
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        xi = rng.integers(0, prime, size=lp.dim, dtype=np.int64)
        ranks.append(kirillov_rank_mod_p(lp, xi, prime) if lp.dim else 0)
    best = max(ranks)
    return lp.dim - best, RankWitness(best, trials, prime, seed, tuple(ranks))


# -- cascade point ----------------------------------------------------------------


def _kernel_at(lp: LiePresentation, xi: dict) -> list[list[Fraction]]:
    d = lp.dim
    rows = [[Fraction(0)] * d for _ in range(d)]
    for (i, j), terms in lp.brackets.items():
        v = sum(Fraction(c) * xi.get(k, 0) for k, c in terms)
        rows[i][j] = v
        rows[j][i] = -v
    return nullspace(rows, d)


def stabiliser_at_cascade_point(rs: RootSystem, cc: ChevalleyConstants | None, n: Nilradical) -> frozenset:
    """Root labels spanning ``n^xi`` for ``xi = sum e_{-beta}``, ``beta in K(n)``.

    Raises ``AssertionError`` if the kernel is not spanned by root vectors.
    """
    if not is_optimal(n):
        raise NotOptimal(f"{n} is not optimal")
    lp = presentation_of_nilradical(rs, cc, n)
    betas = {n.cascade[i].beta for i in n.cascade_ideal}
    xi = {k: 1 for k, g in enumerate(lp.basis_labels) if g in betas}
    kernel = _kernel_at(lp, xi)
    red, piv = rref(kernel)
    for row, pc in zip(red, piv):
        if any(x for c, x in enumerate(row) if c != pc):
            raise AssertionError("stabiliser is not spanned by root vectors")
    return frozenset(lp.basis_labels[pc] for pc in piv)


def envelope_stabiliser_dim(rs: RootSystem, cc: ChevalleyConstants | None, n: Nilradical) -> int:
    """Dimension of the stabiliser in ``f_n`` of the cascade point (zero on the Cartan part)."""
    lp = presentation_of_subalgebra(rs, cc, "f", n)
    betas = {n.cascade[i].beta for i in n.cascade_ideal}
    xi = {k: 1 for k, g in enumerate(lp.basis_labels) if g in betas}
    return len(_kernel_at(lp, xi))


# -- exhaustive CP search ---------------------------------------------------------


def cp_bruteforce(rs: RootSystem, n: Nilradical, rank_cap: int = BRUTEFORCE_RANK_CAP, prune: bool = True):
    """An abelian upper ideal inside ``Delta(n)`` of dimension ``b(n)``, or ``None``.

    The search grows ideals one root at a time on plain root tuples; it shares
    no code with the classification.  Among the hits the one with the smallest
    bitset is returned.
    """
    if rs.rank > rank_cap:
        raise RankCapExceeded(f"{rs.type}: rank {rs.rank} exceeds brute-force cap {rank_cap}")
    target = n.b
    if prune and max_abelian_dim_in(rs, n) < target:
        return None
    inside = [g for g in rs.positive_roots if any(g[i] for i in n.T)]

    def covers(g):
        for i in range(rs.rank):
            up = tuple(c + (j == i) for j, c in enumerate(g))
            if rs.is_root(up):
                yield up

    seen = {frozenset()}
    layer = [frozenset()]
    for _ in range(target):
        nxt = []
        for ideal in layer:
            for g in inside:
                if g in ideal:
                    continue
                if not all(u in ideal for u in covers(g)):
                    continue
                if any(rs.is_root(_add(g, d)) for d in ideal) or rs.is_root(_add(g, g)):
                    continue
                new = ideal | {g}
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        layer = nxt
        if not layer:
            return None
    best = min(rs.mask(ideal) for ideal in layer)
    return UpperIdeal(rs, best)


def nilradical_index_check(rs: RootSystem, n: Nilradical, **cfg) -> tuple[bool, int, RankWitness]:
    ind, w = index_by_generic_rank(presentation_of_nilradical(rs, None, n), **cfg)
    return ind == n.index, ind, w


__all__ = [
    "DegenerateField",
    "LiePresentation",
    "NotOptimal",
    "RankWitness",
    "cp_bruteforce",
    "envelope_stabiliser_dim",
    "index_by_generic_rank",
    "jacobi_violations",
    "presentation_of_g",
    "presentation_of_nilradical",
    "presentation_of_subalgebra",
    "rank_mod_p",
    "stabiliser_at_cascade_point",
]
