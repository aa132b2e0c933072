"""Chevalley basis structure constants via extraspecial pairs.

Conventions: ``[e_r, e_s] = N(r, s) e_{r+s}``, ``[e_r, e_{-r}] = h_r`` (the
coroot), ``[h, e_s] = s(h) e_s``, and ``N(-r, -s) = -N(r, s)``.  The sign
of ``N`` on every extraspecial pair is ``+``; all other constants follow from
the usual identities between structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootsys import Root, RootSystem


def _add(u, v) -> Root:
    return tuple(a + b for a, b in zip(u, v))


def _neg(u) -> Root:
    return tuple(-a for a in u)


@dataclass(frozen=True)
class ChevalleyConstants:
    rs: RootSystem
    positive: dict  # (r, s) -> N for positive r, s with r + s a root

    def N(self, r, s) -> int:
        """Structure constant for any two roots (0 when ``r + s`` is not a root)."""
        r, s = tuple(r), tuple(s)
        rs = self.rs
        z = _add(r, s)
        if not rs.is_root(z):
            return 0
        pr, ps = rs.is_positive(r), rs.is_positive(s)
        if pr and ps:
            return self.positive[(r, s)]
        if not pr and not ps:
            return -self.positive[(_neg(r), _neg(s))]
        if not pr:
            return -self.N(s, r)
        # r positive, s negative; use the triple (r, s, -z) summing to zero
        if rs.is_positive(z):
            # N(r,s)/(z,z) = N(s,-z)/(r,r) and N(s,-z) = -N(-s, z)
            val = -Fraction(rs.norm(z)) / rs.norm(r) * self.positive[(_neg(s), z)]
        else:
            # N(r,s)/(z,z) = N(-z,r)/(s,s)
            val = Fraction(rs.norm(z)) / rs.norm(s) * self.positive[(_neg(z), r)]
        assert val.denominator == 1
        return int(val)

    def string_p(self, r, s) -> int:
        """Largest ``p`` with ``s - p r`` a root."""
        p = 0
        v = tuple(s)
        while True:
            v = tuple(a - b for a, b in zip(v, r))
            if not self.rs.is_root(v):
                return p
            p += 1

    def cartan_part(self, r) -> tuple[int, ...]:
        """``[e_r, e_{-r}] = h_r`` written over the simple coroots."""
        return self.rs.coroot(r)


def _extraspecial(rs: RootSystem) -> dict:
    pos = rs.positive_roots
    out = {}
    for xi in pos:
        if sum(xi) == 1:
            continue
        for r in pos:
            s = tuple(a - b for a, b in zip(xi, r))
            if s in rs.index:
                out[xi] = (r, s)
                break
    return out


@lru_cache(maxsize=None)
def structure_constants(rs: RootSystem) -> ChevalleyConstants:
    cc = ChevalleyConstants(rs, {})
    table = cc.positive
    extra = _extraspecial(rs)
    pos = rs.positive_roots
    by_sum: dict = {}
    for a in pos:
        for b in pos:
            z = _add(a, b)
            if z in rs.index:
                by_sum.setdefault(z, []).append((a, b))

    # heights increase along ``pos`` so all smaller sums are already filled
    for xi in pos:
        if xi not in by_sum:
            continue
        r, s = extra[xi]
        table[(r, s)] = cc.string_p(r, s) + 1
        table[(s, r)] = -table[(r, s)]
        nxi = rs.norm(xi)
        for a, b in by_sum[xi]:
            if (a, b) in table:
                continue
            if rs.index[a] > rs.index[b]:
                continue
            # four-term identity for a + b + (-r) + (-s) = 0
            mr, ms = _neg(r), _neg(s)
            t1 = Fraction(0)
            if rs.is_root(_add(b, mr)):
                t1 = Fraction(cc.N(b, mr) * cc.N(a, ms)) / rs.norm(_add(b, mr))
            t2 = Fraction(0)
            if rs.is_root(_add(mr, a)):
                t2 = Fraction(cc.N(mr, a) * cc.N(b, ms)) / rs.norm(_add(mr, a))
            n_mr_ms = -table[(r, s)]
            val = -nxi * (t1 + t2) / n_mr_ms
            assert val.denominator == 1, (a, b, val)
            table[(a, b)] = int(val)
            table[(b, a)] = -int(val)
    return cc
