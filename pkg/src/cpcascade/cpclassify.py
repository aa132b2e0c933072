"""Which nilradicals admit a commutative polarisation, and a CP-ideal for those that do.

A nilradical ``n`` has a CP exactly when ``n = n_theta`` or ``n`` sits inside
the optimisation of ``n_{alpha}`` for some commutative simple root ``alpha``.
The witness is an abelian b-ideal of ``n`` of dimension ``b(n)``; every
witness returned here has been checked against both requirements.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abelian import UpperIdeal, heisenberg_cp_ideals, is_abelian_mask
from .cascade import Cascade
from .parabolic import Nilradical, nilradical_from_T, optimise, roots_mask_for_T

HEISENBERG = "heisenberg"
PI_COM_COVER = "pi_com_cover"
NONE = "none"


class WitnessVerificationFailed(AssertionError):
    """A constructed witness was not a CP-ideal; this is a bug, not an input error."""


class WrongType(ValueError):
    pass


@dataclass(frozen=True)
class CPReport:
    has_cp: bool
    branch: str
    chosen_alpha: int | None  # 0-based simple root used for the witness
    witness: UpperIdeal | None
    witness_dim: int | None
    admissible_nodes: frozenset = field(default_factory=frozenset)
    j_adm: frozenset = field(default_factory=frozenset)
    witness_source: str | None = None  # "construction" or "bruteforce"


def admissibility_counts(c: Cascade, i: int) -> tuple[int, int]:
    """``(#H, #(H cap Delta_com))`` for node ``i``."""
    h = c.heisenberg_masks[i]
    return h.bit_count(), (h & c.rs.commutative_mask).bit_count()


def is_admissible(c: Cascade, i: int) -> bool:
    total, com = admissibility_counts(c, i)
    return 2 * com >= total + 1


def max_admissible_upper_ideal(c: Cascade) -> frozenset:
    return frozenset(nd.id for nd in c if all(is_admissible(c, j) for j in c.chain(nd.id)))


def good_chains(c: Cascade) -> list[tuple[int, list[int]]]:
    com = set(c.rs.commutative_simple)
    return [(nd.id, c.chain(nd.id)) for nd in c if nd.phi <= com]


def type_a_middle_index(n: Nilradical) -> int:
    """The index ``i`` (0-based) of the root of ``T`` closest to the middle of the diagram.

    The returned value satisfies ``i <= n - 1 - i`` (0-based), one of
    ``alpha_i``, ``alpha_{n-1-i}`` lies in ``T``, and nothing of ``T`` lies
    strictly between them.
    """
    rs = n.rs
    if rs.type.family != "A":
        raise WrongType(f"middle index is only defined for type A, got {rs.type}")
    r = rs.rank
    # 1-based: i = ((r+1) - min |r+1 - 2 i_j|) / 2
    m = min(abs(r + 1 - 2 * (j + 1)) for j in n.T)
    return (r + 1 - m) // 2 - 1


def _cover_alphas(n: Nilradical) -> list[int]:
    """Commutative simple roots ``alpha`` with ``Delta(n)`` inside ``Delta(opt n_alpha)``."""
    rs, c = n.rs, n.cascade
    out = []
    for a in rs.commutative_simple:
        big = optimise(nilradical_from_T(rs, c, {a}))
        if n.mask & ~big.mask == 0:
            # same test on the cascade side: K(n) inside the chain below Phi^-1(alpha)
            assert n.cascade_ideal <= set(c.chain(c.phi_inverse(a)))
            out.append(a)
    return out


def _verified(n: Nilradical, mask: int) -> bool:
    rs = n.rs
    upper = all(rs.up_masks[k] & ~mask == 0 for k in range(len(rs.positive_roots)) if mask >> k & 1)
    return (
        upper
        and mask & ~n.mask == 0
        and mask.bit_count() == n.b
        and is_abelian_mask(rs, mask)
    )


def _candidates(n: Nilradical, branch: str) -> list[tuple[int | None, int]]:
    rs, c = n.rs, n.cascade
    if branch == HEISENBERG:
        return [(None, ideal.members) for ideal in heisenberg_cp_ideals(rs, c)]
    out = []
    if rs.type.family == "A":
        i = type_a_middle_index(n)
        for a in sorted({i, rs.rank - 1 - i} & n.T):
            out.append((a, n.mask & roots_mask_for_T(rs, {a})))
    for alpha in _cover_alphas(n):
        for a in sorted(c.phi(c.phi_inverse(alpha))):
            out.append((a, n.mask & roots_mask_for_T(rs, {a})))
    return out


def _branch(n: Nilradical) -> str:
    if n.mask == n.cascade.heisenberg_masks[0]:
        return HEISENBERG
    if _cover_alphas(n):
        return PI_COM_COVER
    return NONE


def cp_witness(n: Nilradical) -> tuple[int | None, UpperIdeal]:
    """``(chosen simple root, CP-ideal)`` for a nilradical that has a CP."""
    branch = _branch(n)
    if branch == NONE:
        raise ValueError(f"{n} has no commutative polarisation")
    for alpha, mask in _candidates(n, branch):
        if _verified(n, mask):
            return alpha, UpperIdeal(n.rs, mask)
    raise WitnessVerificationFailed(f"no candidate witness verified for {n}")


def has_cp(n: Nilradical) -> CPReport:
    c = n.cascade
    adm = frozenset(nd.id for nd in c if is_admissible(c, nd.id))
    jadm = max_admissible_upper_ideal(c)
    branch = _branch(n)
    if branch == NONE:
        return CPReport(False, NONE, None, None, None, adm, jadm)
    source = "construction"
    try:
        alpha, w = cp_witness(n)
    except WitnessVerificationFailed:
        from .oracle import cp_bruteforce

        alpha, w = None, cp_bruteforce(n.rs, n)
        source = "bruteforce"
        if w is None:
            raise
    return CPReport(True, branch, alpha, w, w.dim, adm, jadm, source)
