"""Constructive solvers for the classical equations of the free monoid:
conjugacy (vu = uw), commutation (uv = vu), the three-word palindromic
equation (uvw = wvu), internal-factor and sandwich factorisations, and the
periodicity bound of Fine and Wilf.

Instances are always small here, so the solvers enumerate split points and
verify the reconstruction identities before returning; a returned solution
is therefore correct by construction.  Tie-breaks are fixed (documented per
solver) so outputs are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from os.path import commonprefix

from .words import Alphabet, Word, _is_primitive, _iter_texts, _root_and_exponent

__all__ = [
    "ConjugacySolution",
    "CommutationSolution",
    "PalindromicSolution",
    "InternalFactorSolution",
    "solve_vu_eq_uw",
    "solve_commutation",
    "solve_uvw_eq_wvu",
    "solve_internal_factor",
    "solve_sandwich",
    "fine_wilf_bound",
    "find_fine_wilf_optimality_witness",
]


@dataclass(frozen=True)
class ConjugacySolution:
    """Witness for ``vu = uw``: ``u = r(sr)**n``, ``v = rs``, ``w = sr``."""

    r: Word
    s: Word
    n: int


@dataclass(frozen=True)
class CommutationSolution:
    """Witness for ``uv = vu``: both words are powers of one primitive root."""

    root: Word
    exp_u: int
    exp_v: int


@dataclass(frozen=True)
class PalindromicSolution:
    """Witness for ``uvw = wvu``: ``u = (t1 t2)**n t1``, ``v = (t2 t1)**p t2``,
    ``w = (t1 t2)**q t1``."""

    t1: Word
    t2: Word
    n: int
    p: int
    q: int


@dataclass(frozen=True)
class InternalFactorSolution:
    """Witness for ``vv = xvy`` with x, y nonempty: ``x = t**i``, ``y = t**j``,
    ``v = t**(i+j)``."""

    t: Word
    i: int
    j: int


def solve_vu_eq_uw(v: Word, u: Word, w: Word) -> ConjugacySolution:
    """Decompose an instance of ``vu = uw`` with ``v`` nonempty.

    Returns (r, s, n) with ``u = r(sr)**n``, ``v = rs`` and ``w = sr``; among
    the valid decompositions the one with minimal ``n`` is chosen (for a
    given ``n`` the split of ``v`` is forced by lengths).
    """
    vt, ut, wt = v.text, u.text, w.text
    if not vt:
        raise ValueError("v must be nonempty")
    if vt + ut != ut + wt:
        raise ValueError("equation vu = uw does not hold")
    for n in range(len(ut) // len(vt) + 1):
        rlen = len(ut) - n * len(vt)
        if not 0 <= rlen <= len(vt):
            continue
        r, s = vt[:rlen], vt[rlen:]
        if ut == r + (s + r) * n and wt == s + r:
            mk = v.alphabet.word
            return ConjugacySolution(mk(r), mk(s), n)
    raise ValueError("no decomposition found; equation instance is inconsistent")


def solve_commutation(u: Word, v: Word) -> CommutationSolution:
    """Decompose commuting words as powers of their shared primitive root."""
    ut, vt = u.text, v.text
    if not ut and not vt:
        raise ValueError("u and v must not both be empty")
    if ut + vt != vt + ut:
        raise ValueError("words do not commute")
    root, _ = _root_and_exponent(ut or vt)
    if len(ut) % len(root) or len(vt) % len(root):
        raise ValueError("no common root; words do not commute")
    exp_u, exp_v = len(ut) // len(root), len(vt) // len(root)
    if root * exp_u != ut or root * exp_v != vt:
        raise ValueError("no common root; words do not commute")
    return CommutationSolution(u.alphabet.word(root), exp_u, exp_v)


def solve_uvw_eq_wvu(u: Word, v: Word, w: Word) -> PalindromicSolution:
    """Decompose an instance of ``uvw = wvu`` with (u, v) not both empty.

    All valid (t1, t2) pairs are enumerated (t1 a prefix of u, t2 a prefix
    of v); the lexicographically least (t1, t2) is returned.
    """
    ut, vt, wt = u.text, v.text, w.text
    if not ut and not vt:
        raise ValueError("u and v must not both be empty")
    if ut + vt + wt != wt + vt + ut:
        raise ValueError("equation uvw = wvu does not hold")
    best: tuple[str, str, int, int, int] | None = None
    for i in range(len(ut) + 1):
        t1 = ut[:i]
        for j in range(len(vt) + 1):
            t2 = vt[:j]
            L = i + j
            if L == 0:
                continue
            if (len(ut) - i) % L or (len(vt) - j) % L or (len(wt) - i) % L:
                continue
            n, p, q = (len(ut) - i) // L, (len(vt) - j) // L, (len(wt) - i) // L
            if (
                ut == (t1 + t2) * n + t1
                and vt == (t2 + t1) * p + t2
                and wt == (t1 + t2) * q + t1
            ):
                cand = (t1, t2, n, p, q)
                if best is None or cand[:2] < best[:2]:
                    best = cand
    if best is None:
        raise ValueError("no decomposition found; equation instance is inconsistent")
    mk = u.alphabet.word
    return PalindromicSolution(mk(best[0]), mk(best[1]), *best[2:])


def solve_internal_factor(v: Word, x: Word, y: Word) -> InternalFactorSolution:
    """Decompose an internal occurrence ``vv = xvy`` (x, y nonempty).

    The shared root is ``t = primitive_root(x)``; it satisfies ``x = t**i``,
    ``y = t**j`` and ``v = t**(i+j)``, which also shows v is not primitive.
    """
    vt, xt, yt = v.text, x.text, y.text
    if not xt or not yt:
        raise ValueError("x and y must be nonempty")
    if vt + vt != xt + vt + yt:
        raise ValueError("equation vv = xvy does not hold")
    t, i = _root_and_exponent(xt)
    if len(yt) % len(t) or yt != t * (len(yt) // len(t)):
        raise ValueError("no decomposition found; equation instance is inconsistent")
    j = len(yt) // len(t)
    if vt != t * (i + j):
        raise ValueError("no decomposition found; equation instance is inconsistent")
    return InternalFactorSolution(v.alphabet.word(t), i, j)


def solve_sandwich(x1: Word, x2: Word, y: Word) -> tuple[Word, int, int]:
    """Decompose an instance of ``x2 y x = y x x1`` where ``x = x1 x2`` and
    x1, x2 are nonempty.

    Both ``x`` and ``y`` are then powers of a common word t; returns
    (t, alpha, beta) with ``x = t**alpha`` (alpha >= 2) and ``y = t**beta``.
    """
    x1t, x2t, yt = x1.text, x2.text, y.text
    if not x1t or not x2t:
        raise ValueError("x1 and x2 must be nonempty")
    xt = x1t + x2t
    if x2t + yt + xt != yt + xt + x1t:
        raise ValueError("equation x2·y·x = y·x·x1 does not hold")
    t, alpha = _root_and_exponent(xt)
    if alpha < 2 or len(yt) % len(t) or yt != t * (len(yt) // len(t)):
        raise ValueError("no decomposition found; equation instance is inconsistent")
    return x1.alphabet.word(t), alpha, len(yt) // len(t)


def fine_wilf_bound(p: int, q: int) -> int:
    """``p + q - gcd(p, q)``: a common prefix of powers this long forces a
    common primitive root of the two period words."""
    if p < 1 or q < 1:
        raise ValueError("periods must be positive")
    return p + q - math.gcd(p, q)


def _periodic_prefix(t: str, length: int) -> str:
    return (t * (length // len(t) + 1))[:length]


def find_fine_wilf_optimality_witness(
    p: int, q: int, alphabet: Alphabet
) -> tuple[Word, Word] | None:
    """Search for words u, v of lengths p, q with distinct primitive roots
    whose powers share a common prefix of length exactly
    ``fine_wilf_bound(p, q) - 1`` — i.e. a witness that the bound is tight.

    The search is exhaustive over the alphabet, in lexicographic (u, v)
    order; ``None`` means no witness exists in that space, nothing more.
    """
    if p == q or p < 2 or q < 2:
        raise ValueError("need p != q with both periods at least 2")
    if len(alphabet) < 2:
        raise ValueError("need at least a binary alphabet")
    target = fine_wilf_bound(p, q) - 1
    for ut in _iter_texts(alphabet.letters, p, p):
        ru = _root_and_exponent(ut)[0]
        pu = _periodic_prefix(ut, target + 1)
        for vt in _iter_texts(alphabet.letters, q, q):
            if _root_and_exponent(vt)[0] == ru:
                continue
            pv = _periodic_prefix(vt, target + 1)
            if len(commonprefix([pu, pv])) == target:
                return alphabet.word(ut), alphabet.word(vt)
    return None
