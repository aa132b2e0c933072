"""Standard nilradicals ``n_T``, their optimisation, index and Frobenius envelope."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .cascade import Cascade, build_cascade, highest_root
from .rootsys import RootSystem


class EmptyT(ValueError):
    """The empty subset gives the whole algebra, which is not a nilradical here."""


@dataclass(frozen=True)
class Nilradical:
    """The nilradical of the standard parabolic ``p_T``.

    ``T`` holds 0-based simple-root indices.  Equality is equality of root sets.
    """

    rs: RootSystem = field(repr=False, compare=False)
    cascade: Cascade = field(repr=False, compare=False)
    T: frozenset = field(compare=False)
    mask: int  # bitset of Delta(n_T) over the positive roots

    @property
    def roots(self) -> list:
        return self.rs.roots_of(self.mask)

    @property
    def dim(self) -> int:
        return self.mask.bit_count()

    @cached_property
    def cascade_ideal(self) -> frozenset:
        """``K(n)``: ids of cascade nodes whose root lies in ``n``."""
        idx = self.rs.index
        return frozenset(nd.id for nd in self.cascade if self.mask >> idx[nd.beta] & 1)

    @cached_property
    def T_tilde(self) -> frozenset:
        return frozenset().union(*(self.cascade.phi(i) for i in self.cascade_ideal))

    @cached_property
    def index(self) -> int:
        return index_joseph(self)

    @property
    def b(self) -> int:
        return b_of(self)

    def contains(self, other: "Nilradical") -> bool:
        return other.mask & ~self.mask == 0

    def __str__(self):
        ts = ",".join(str(i + 1) for i in sorted(self.T))
        return f"n_T[{self.rs.type}; T={{{ts}}}]"


def roots_mask_for_T(rs: RootSystem, T) -> int:
    T = frozenset(T)
    m = 0
    for k, r in enumerate(rs.positive_roots):
        if any(r[i] for i in T):
            m |= 1 << k
    return m


def nilradical_from_T(rs: RootSystem, c: Cascade | None, T) -> Nilradical:
    T = frozenset(T)
    if not T:
        raise EmptyT("T must be a nonempty set of simple roots")
    if not T <= frozenset(range(rs.rank)):
        raise ValueError(f"T={sorted(T)} is not a subset of the simple roots of {rs.type}")
    if c is None:
        c = build_cascade(rs)
    return Nilradical(rs, c, T, roots_mask_for_T(rs, T))


def optimise(n: Nilradical) -> Nilradical:
    if n.T == n.T_tilde:
        return n
    return nilradical_from_T(n.rs, n.cascade, n.T_tilde)


def is_optimal(n: Nilradical) -> bool:
    return n.T == n.T_tilde


def index_joseph(n: Nilradical) -> int:
    """``ind n = dim n~ + #K(n) - dim n``."""
    opt = roots_mask_for_T(n.rs, n.T_tilde)
    return opt.bit_count() + len(n.cascade_ideal) - n.dim


def b_of(n: Nilradical) -> int:
    total = n.dim + n.index
    assert total % 2 == 0
    return total // 2


@dataclass(frozen=True)
class FrobeniusEnvelope:
    """``f_n = n~ + t_n``, where ``t_n`` is spanned by the coroots of ``K(n)``."""

    nilradical_part: Nilradical
    coroots: tuple  # coroot coefficient vectors h_beta, beta in K(n)

    @property
    def toral_rank(self) -> int:
        return len(self.coroots)

    @property
    def dim(self) -> int:
        return self.nilradical_part.dim + self.toral_rank


def frobenius_envelope(n: Nilradical) -> FrobeniusEnvelope:
    rs = n.rs
    ids = sorted(n.cascade_ideal)
    return FrobeniusEnvelope(optimise(n), tuple(rs.coroot(n.cascade[i].beta) for i in ids))


def heisenberg_nilradical(rs: RootSystem, c: Cascade | None = None) -> Nilradical:
    if c is None:
        c = build_cascade(rs)
    return nilradical_from_T(rs, c, c.phi(0))


def all_nilradicals(rs: RootSystem, c: Cascade | None = None):
    """Every ``n_T`` with ``T`` nonempty, in order of the bitmask of ``T``."""
    if c is None:
        c = build_cascade(rs)
    n = rs.rank
    for bits in range(1, 1 << n):
        yield nilradical_from_T(rs, c, frozenset(i for i in range(n) if bits >> i & 1))


def optimal_nilradicals(rs: RootSystem, c: Cascade | None = None) -> list[Nilradical]:
    """One optimal nilradical per nonempty upper ideal of the cascade poset."""
    if c is None:
        c = build_cascade(rs)
    out = []
    for bits in range(1, 1 << len(c)):
        ids = frozenset(i for i in range(len(c)) if bits >> i & 1)
        if 0 in ids and c.is_upper_ideal(ids):
            T = frozenset().union(*(c.phi(i) for i in ids))
            out.append(nilradical_from_T(rs, c, T))
    return out


def levi_cascade(rs: RootSystem, T) -> set:
    """Cascade of the standard Levi subalgebra of ``p_T``, taken componentwise on ``Pi - T``."""
    out = set()

    def visit(support):
        beta = highest_root(rs, support)
        out.add(beta)
        rest = frozenset(a for a in support if rs.form6(beta, rs.simple_root(a)) == 0)
        for comp in rs.components(rest):
            visit(comp)

    for comp in rs.components(frozenset(range(rs.rank)) - frozenset(T)):
        visit(comp)
    return out


def is_optimal_by_levi(rs: RootSystem, c: Cascade, T) -> bool:
    """Optimality test through ``K(l) subset K(g)`` for the Levi ``l`` of ``p_T``."""
    return levi_cascade(rs, T) <= set(c.betas)
