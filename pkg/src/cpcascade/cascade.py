"""The Kostant cascade and its marked poset ``(K, <=, Phi)``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .rootsys import Root, RootSystem


@dataclass(frozen=True)
class CascadeNode:
    id: int
    beta: Root
    parent: int | None
    level: int
    support: frozenset  # simple-root indices of the irreducible subsystem
    heisenberg: frozenset  # H_beta, a set of positive roots
    phi: frozenset  # simple roots in H_beta

    @property
    def label(self) -> str:
        return f"beta{self.id + 1}"


def highest_root(rs: RootSystem, support) -> Root:
    """Highest root of the irreducible subsystem spanned by ``support``."""
    support = frozenset(support)
    best = None
    for r in rs.positive_roots:
        if rs.support(r) <= support:
            best = r  # positive_roots are sorted by height
    return best


def _sibling_key(rs: RootSystem):
    n = rs.rank
    perm = list(range(n))
    if rs.type.family == "D":
        # the fork ends are listed as eps_{n-1}+eps_n before eps_{n-1}-eps_n
        perm[n - 2], perm[n - 1] = n - 1, n - 2
    return lambda support: min(perm[i] for i in support)


@dataclass(frozen=True)
class Cascade:
    rs: RootSystem
    nodes: tuple[CascadeNode, ...]

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, i) -> CascadeNode:
        return self.nodes[i]

    @cached_property
    def betas(self) -> tuple[Root, ...]:
        return tuple(nd.beta for nd in self.nodes)

    def phi(self, i: int) -> frozenset:
        return self.nodes[i].phi

    @cached_property
    def _phi_inv(self) -> dict:
        return {a: nd.id for nd in self.nodes for a in nd.phi}

    def phi_inverse(self, alpha: int) -> int:
        return self._phi_inv[alpha]

    def heisenberg_subset(self, i: int) -> frozenset:
        return self.nodes[i].heisenberg

    @cached_property
    def heisenberg_masks(self) -> tuple[int, ...]:
        return tuple(self.rs.mask(nd.heisenberg) for nd in self.nodes)

    def hasse_edges(self) -> list[tuple[int, int]]:
        return [(nd.parent, nd.id) for nd in self.nodes if nd.parent is not None]

    def children(self, i: int) -> list[int]:
        return [nd.id for nd in self.nodes if nd.parent == i]

    def chain(self, i: int) -> list[int]:
        """The interval ``[beta_i, beta_1]``, listed from ``beta_i`` upward."""
        out = [i]
        while self.nodes[out[-1]].parent is not None:
            out.append(self.nodes[out[-1]].parent)
        return out

    def precedes(self, i: int, j: int) -> bool:
        """``beta_i <= beta_j`` in the cascade poset."""
        return j in self.chain(i)

    def is_upper_ideal(self, ids) -> bool:
        ids = set(ids)
        return all(self.nodes[i].parent in ids for i in ids if self.nodes[i].parent is not None)

    def minimal(self, ids) -> list[int]:
        ids = set(ids)
        return sorted(i for i in ids if not any(self.nodes[j].parent == i for j in ids))

    def is_chain(self, ids) -> bool:
        return len(self.minimal(ids)) <= 1


def build_cascade(rs: RootSystem) -> Cascade:
    return _build_cascade(rs)


@lru_cache(maxsize=None)
def _build_cascade(rs: RootSystem) -> Cascade:
    raw = []  # (level, key, beta, parent_raw_index, support, phi)
    key = _sibling_key(rs)

    def visit(support: frozenset, parent, level):
        beta = highest_root(rs, support)
        phi = frozenset(a for a in support if rs.form6(beta, rs.simple_root(a)) != 0)
        me = len(raw)
        raw.append((level, key(support), beta, parent, support, phi))
        for comp in rs.components(support - phi):
            visit(comp, me, level + 1)

    visit(frozenset(range(rs.rank)), None, 1)

    order = sorted(range(len(raw)), key=lambda k: (raw[k][0], raw[k][1]))
    new_id = {old: new for new, old in enumerate(order)}
    nodes = []
    for old in order:
        level, _, beta, parent, support, phi = raw[old]
        heis = frozenset(
            r
            for r in rs.positive_roots
            if rs.support(r) <= support and rs.form6(r, beta) > 0
        )
        nodes.append(
            CascadeNode(
                id=new_id[old],
                beta=beta,
                parent=None if parent is None else new_id[parent],
                level=level,
                support=support,
                heisenberg=heis,
                phi=phi,
            )
        )
    return Cascade(rs, tuple(nodes))


def phi(c: Cascade, i: int) -> frozenset:
    return c.phi(i)


def phi_inverse(c: Cascade, alpha: int) -> int:
    return c.phi_inverse(alpha)


def heisenberg_subset(c: Cascade, i: int) -> frozenset:
    return c.heisenberg_subset(i)


def cascade_hasse_edges(c: Cascade) -> list[tuple[int, int]]:
    return c.hasse_edges()
