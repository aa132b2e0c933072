"""Upper ideals of the root poset and abelian b-ideals."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .cascade import Cascade, build_cascade
from .rootsys import Root, RootSystem

DEFAULT_RANK_CAP = 9


class RankCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class UpperIdeal:
    """An upper ideal of ``(Delta+, <=)`` stored as a bitset over ``rs.positive_roots``."""

    rs: RootSystem = field(repr=False, compare=False, hash=False)
    members: int

    @property
    def dim(self) -> int:
        return self.members.bit_count()

    @property
    def roots(self) -> list[Root]:
        return self.rs.roots_of(self.members)

    def __contains__(self, root) -> bool:
        k = self.rs.index.get(tuple(root))
        return k is not None and bool(self.members >> k & 1)

    def __len__(self):
        return self.dim

    def __le__(self, other: "UpperIdeal") -> bool:
        return self.members & ~other.members == 0

    def generators(self) -> list[Root]:
        """Minimal elements (an antichain)."""
        rs = self.rs
        out = []
        for k in _bits(self.members):
            r = rs.positive_roots[k]
            below = (tuple(c - (j == i) for j, c in enumerate(r)) for i in range(rs.rank))
            if not any(b in self for b in below):
                out.append(r)
        return out

    def is_upper(self) -> bool:
        return all(self.rs.up_masks[k] & ~self.members == 0 for k in _bits(self.members))

    def sort_key(self):
        return (self.dim, self.members)


def _bits(m: int):
    k = 0
    while m:
        if m & 1:
            yield k
        m >>= 1
        k += 1


def _check_cap(rs: RootSystem, cap: int | None):
    cap = DEFAULT_RANK_CAP if cap is None else cap
    if rs.rank > cap:
        raise RankCapExceeded(f"{rs.type}: rank {rs.rank} exceeds cap {cap}")


def principal_upper_ideal(rs: RootSystem, gamma) -> UpperIdeal:
    return UpperIdeal(rs, rs.up_masks[rs.index[tuple(gamma)]])


def is_abelian_mask(rs: RootSystem, m: int) -> bool:
    partners = rs.sum_partners
    return all(partners[k] & m == 0 for k in _bits(m))


def is_abelian_ideal(rs: RootSystem, ideal: UpperIdeal) -> bool:
    return is_abelian_mask(rs, ideal.members)


@lru_cache(maxsize=None)
def _covers(rs: RootSystem) -> tuple[int, ...]:
    """``covers[k]``: bitset of roots ``root_k + alpha_i``."""
    out = []
    for r in rs.positive_roots:
        m = 0
        for i in range(rs.rank):
            up = tuple(c + (j == i) for j, c in enumerate(r))
            if up in rs.index:
                m |= 1 << rs.index[up]
        out.append(m)
    return tuple(out)


def abelian_masks_within(rs: RootSystem, allowed: int) -> list[int]:
    """All abelian upper ideals of ``Delta+`` whose members lie in ``allowed``.

    ``allowed`` is assumed to be an upper ideal.  Roots are decided from the
    top down, so a root may join only when every cover is already present.
    """
    covers = _covers(rs)
    partners = rs.sum_partners
    order = [k for k in reversed(range(len(rs.positive_roots))) if allowed >> k & 1]
    out: list[int] = []

    def dfs(pos: int, cur: int):
        if pos == len(order):
            out.append(cur)
            return
        k = order[pos]
        bit = 1 << k
        if covers[k] & ~cur == 0 and partners[k] & (cur | bit) == 0:
            dfs(pos + 1, cur | bit)
        dfs(pos + 1, cur)

    dfs(0, 0)
    return out


def enumerate_abelian_ideals(rs: RootSystem, rank_cap: int | None = None) -> list[UpperIdeal]:
    _check_cap(rs, rank_cap)
    masks = sorted(set(abelian_masks_within(rs, rs.full_mask)), key=lambda m: (m.bit_count(), m))
    return [UpperIdeal(rs, m) for m in masks]


def _maximal(masks) -> list[int]:
    masks = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    kept: list[int] = []
    for m in masks:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return sorted(kept, key=lambda m: (m.bit_count(), m))


def maximal_abelian_ideals(rs: RootSystem, rank_cap: int | None = None) -> list[UpperIdeal]:
    _check_cap(rs, rank_cap)
    return [UpperIdeal(rs, m) for m in _maximal(abelian_masks_within(rs, rs.full_mask))]


def heisenberg_cp_ideals(rs: RootSystem, c: Cascade | None = None, rank_cap: int | None = None) -> list[UpperIdeal]:
    """The ideals ``n_theta cap a`` over maximal abelian ``a``, deduplicated."""
    if c is None:
        c = build_cascade(rs)
    h = c.heisenberg_masks[0]
    found = {a.members & h for a in maximal_abelian_ideals(rs, rank_cap)}
    return [UpperIdeal(rs, m) for m in sorted(found, key=lambda m: (m.bit_count(), m))]


def max_abelian_dim_in(rs: RootSystem, n, rank_cap: int | None = None) -> int:
    """Largest abelian upper ideal inside ``Delta(n)``.

    Intersecting with ``Delta(n)`` keeps an abelian ideal abelian and upward
    closed, so scanning the maximal abelian ideals is enough.
    """
    mask = n if isinstance(n, int) else n.mask
    return max((a.members & mask).bit_count() for a in maximal_abelian_ideals(rs, rank_cap))
