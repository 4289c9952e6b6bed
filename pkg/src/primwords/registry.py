"""A catalog of bounded empirical verifiers, one per supported statement
about primitive words, word equations and power-free morphisms, plus the
independent brute-force oracles used to cross-check the rest of the package.

Every verifier runs a finite search at explicit bounds and returns a
:class:`StatementVerdict`.  Statements are either *universal* (they assert
the absence of violations, so a counterexample signals an implementation
bug, the statements being established results) or *constructive* (they
assert that specific witnesses exist and reproduce them).  Default bounds
are chosen so each verifier finishes in well under a minute single-threaded.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field, replace
from os.path import commonprefix
from typing import Any, Callable, Iterator, Mapping, Sequence

from .equations import (
    fine_wilf_bound,
    find_fine_wilf_optimality_witness,
    solve_commutation,
    solve_internal_factor,
    solve_sandwich,
    solve_uvw_eq_wvu,
    solve_vu_eq_uw,
)
from .morphisms import (
    COUNTEREXAMPLE as MORPH_COUNTEREXAMPLE,
    Morphism,
    certify_primitive_binary_via_tk,
    CERTIFIED_PRIMITIVE,
    is_k_power_free_up_to,
    is_n_primitive,
    is_pure_code_bounded,
    decide_primitive_uniform_binary,
    make_counterexample_family,
    make_primitive_not_kpf,
    profile,
)
from .words import (
    Alphabet,
    Word,
    _is_primitive,
    _iter_k_power_free_texts,
    _iter_texts,
    _max_power_site,
    _root_and_exponent,
)

__all__ = [
    "PASS",
    "COUNTEREXAMPLE",
    "BOUND_EXHAUSTED",
    "UNIVERSAL",
    "CONSTRUCTIVE",
    "VerificationBounds",
    "StatementVerdict",
    "CatalogEntry",
    "CATALOG",
    "STATEMENT_IDS",
    "verify",
    "oracle_is_primitive",
    "count_primitive_words",
    "enumerate_words",
    "enumerate_k_power_free_words",
    "enumerate_morphisms",
    "render_catalog_markdown",
]

PASS = "pass"
COUNTEREXAMPLE = "counterexample"
BOUND_EXHAUSTED = "bound_exhausted_no_witness"

UNIVERSAL = "universal"
CONSTRUCTIVE = "constructive"

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class VerificationBounds:
    """Knobs of a bounded verifier run.

    ``extra`` carries statement-specific settings (exponent caps, k ranges,
    secondary depths); unknown keys are ignored by checkers.
    """

    max_word_len: int = 6
    max_image_len: int = 3
    alphabet_size: int = 2
    extra: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.max_word_len < 1 or self.max_image_len < 1:
            raise ValueError("bounds must be at least 1")
        if self.alphabet_size not in (2, 3):
            raise ValueError("alphabet size must be 2 or 3")

    def get(self, key: str, default: Any) -> Any:
        return self.extra.get(key, default)


@dataclass(frozen=True)
class StatementVerdict:
    """Outcome of one verifier run.

    The witness payload accompanies exactly the counterexample status; a
    pass always reports how many cases were examined.
    """

    statement: str
    status: str
    cases_checked: int
    witness: dict[str, Any] | None
    elapsed_seconds: float

    def __post_init__(self) -> None:
        if (self.status == COUNTEREXAMPLE) != (self.witness is not None):
            raise ValueError("witness payload must accompany exactly a counterexample")
        if self.status == PASS and self.cases_checked <= 0:
            raise ValueError("a pass must have examined at least one case")


# checker contract: bounds -> (status, cases_checked, witness payload or None)
_CheckResult = tuple[str, int, "dict[str, Any] | None"]


@dataclass(frozen=True)
class CatalogEntry:
    statement: str
    description: str
    polarity: str
    defaults: VerificationBounds
    checker: Callable[[VerificationBounds], _CheckResult]


# ---------------------------------------------------------------------------
# independent oracles and enumeration streams


def oracle_is_primitive(w: Word) -> bool:
    """Divisor-enumeration primitivity oracle.

    Deliberately independent of the doubling test in :mod:`primwords.words`:
    a nonempty word is non-primitive iff some proper divisor length prefix
    reconstructs it by repetition.
    """
    return _oracle_prim_text(w.text)


def _oracle_prim_text(t: str) -> bool:
    n = len(t)
    if n == 0:
        return False
    for d in range(1, n):
        if n % d == 0 and t[:d] * (n // d) == t:
            return False
    return True


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def count_primitive_words(alphabet_size: int, n: int) -> int:
    """Number of primitive words of length ``n`` over ``alphabet_size``
    letters, by Moebius inversion over the divisors of ``n``."""
    if alphabet_size < 1 or n < 1:
        raise ValueError("alphabet size and length must be positive")
    return sum(_mobius(d) * alphabet_size ** (n // d) for d in _divisors(n))


def enumerate_words(alphabet: Alphabet, min_len: int, max_len: int) -> Iterator[Word]:
    """All words with lengths in [min_len, max_len], length-then-lex order."""
    if not 0 <= min_len <= max_len:
        raise ValueError("need 0 <= min_len <= max_len")
    for t in _iter_texts(alphabet.letters, min_len, max_len):
        yield alphabet.word(t)


def enumerate_k_power_free_words(
    alphabet: Alphabet, k: int, max_len: int
) -> Iterator[Word]:
    """Exactly the k-power-free words up to ``max_len`` (the empty word
    included), in length-then-lex order, generated by pruned extension."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    for t in _iter_k_power_free_texts(alphabet.letters, k, max_len):
        yield alphabet.word(t)


def _normalize_ranges(
    source_size: int,
    image_lens: tuple[int, int] | Sequence[tuple[int, int]],
) -> list[tuple[int, int]]:
    if (
        isinstance(image_lens, tuple)
        and len(image_lens) == 2
        and all(isinstance(x, int) for x in image_lens)
    ):
        ranges = [image_lens] * source_size
    else:
        ranges = [tuple(r) for r in image_lens]  # type: ignore[misc]
    if len(ranges) != source_size:
        raise ValueError("need one length range per source letter")
    for lo, hi in ranges:
        if not 0 <= lo <= hi:
            raise ValueError("image length ranges must satisfy 0 <= lo <= hi")
    return ranges


def enumerate_morphisms(
    source_size: int,
    target: Alphabet,
    image_lens: tuple[int, int] | Sequence[tuple[int, int]],
) -> Iterator[Morphism]:
    """All morphisms from the ``source_size``-letter alphabet a, b(, c) into
    ``target`` whose image lengths lie in the given ranges.

    ``image_lens`` is a single (lo, hi) pair applied to every letter or one
    pair per letter.  Canonical order: per-letter image candidates run in
    length-then-lex order, with the leftmost letter varying slowest; each
    morphism appears exactly once.
    """
    if source_size not in (2, 3):
        raise ValueError("source size must be 2 or 3")
    ranges = _normalize_ranges(source_size, image_lens)
    source = Alphabet.from_string(_LETTERS[:source_size])
    pools = [list(_iter_texts(target.letters, lo, hi)) for lo, hi in ranges]
    for combo in itertools.product(*pools):
        yield Morphism(source, target, tuple(target.word(t) for t in combo))


def _binary_morphisms(
    max_image_len: int, min_image_len: int = 0, uniform: bool = False
) -> Iterator[Morphism]:
    target = Alphabet.from_string("ab")
    if uniform:
        for L in range(max(1, min_image_len), max_image_len + 1):
            yield from enumerate_morphisms(2, target, (L, L))
    else:
        for f in enumerate_morphisms(2, target, (min_image_len, max_image_len)):
            if not f.is_all_empty:
                yield f


# ---------------------------------------------------------------------------
# statement checkers


def _periodic(t: str, length: int) -> str:
    return (t * (length // len(t) + 1))[:length]


def _check_fine_wilf(b: VerificationBounds) -> _CheckResult:
    letters = _LETTERS[: b.alphabet_size]
    cases = 0
    texts = list(_iter_texts(letters, 1, b.max_word_len))
    roots = {t: _root_and_exponent(t)[0] for t in texts}
    for u in texts:
        for v in texts:
            if roots[u] == roots[v]:
                continue
            cases += 1
            bound = fine_wilf_bound(len(u), len(v))
            if _periodic(u, bound) == _periodic(v, bound):
                return COUNTEREXAMPLE, cases, {"u": u, "v": v, "bound": bound}
    alphabet = Alphabet.from_string(letters)
    limit = int(b.get("max_optimality_len", 4))
    for p in range(2, limit + 1):
        for q in range(p + 1, limit + 1):
            cases += 1
            if find_fine_wilf_optimality_witness(p, q, alphabet) is None:
                return BOUND_EXHAUSTED, cases, None
    return PASS, cases, None


def _check_lothaire1(b: VerificationBounds) -> _CheckResult:
    letters = _LETTERS[: b.alphabet_size]
    mk = Alphabet.from_string(letters).word
    max_v = int(b.get("max_v_len", 4))
    cases = 0
    for v in _iter_texts(letters, 1, max_v):
        for u in _iter_texts(letters, 0, b.max_word_len):
            vu = v + u
            if not vu.startswith(u):
                continue
            w = vu[len(u):]
            cases += 1
            sol = solve_vu_eq_uw(mk(v), mk(u), mk(w))
            r, s, n = sol.r.text, sol.s.text, sol.n
            if u != r + (s + r) * n or v != r + s or w != s + r:
                return COUNTEREXAMPLE, cases, {"v": v, "u": u, "w": w}
    return PASS, cases, None


def _check_lothaire2(b: VerificationBounds) -> _CheckResult:
    letters = _LETTERS[: b.alphabet_size]
    mk = Alphabet.from_string(letters).word
    cases = 0
    texts = list(_iter_texts(letters, 0, b.max_word_len))
    for u in texts:
        for v in texts:
            if (not u and not v) or u + v != v + u:
                continue
            cases += 1
            sol = solve_commutation(mk(u), mk(v))
            root = sol.root.text
            if (
                not _is_primitive(root)
                or root * sol.exp_u != u
                or root * sol.exp_v != v
            ):
                return COUNTEREXAMPLE, cases, {"u": u, "v": v}
    return PASS, cases, None


def _check_lothaire3(b: VerificationBounds) -> _CheckResult:
    letters = _LETTERS[: b.alphabet_size]
    mk = Alphabet.from_string(letters).word
    cases = 0
    texts = list(_iter_texts(letters, 0, b.max_word_len))
    for u in texts:
        for v in texts:
            if not u and not v:
                continue
            for w in texts:
                if u + v + w != w + v + u:
                    continue
                cases += 1
                sol = solve_uvw_eq_wvu(mk(u), mk(v), mk(w))
                t1, t2 = sol.t1.text, sol.t2.text
                if (
                    u != (t1 + t2) * sol.n + t1
                    or v != (t2 + t1) * sol.p + t2
                    or w != (t1 + t2) * sol.q + t1
                ):
                    return COUNTEREXAMPLE, cases, {"u": u, "v": v, "w": w}
    return PASS, cases, None


def _check_internal_factor(b: VerificationBounds) -> _CheckResult:
    letters = _LETTERS[: b.alphabet_size]
    mk = Alphabet.from_string(letters).word
    cases = 0
    for v in _iter_texts(letters, 1, b.max_word_len):
        vv = v + v
        for o in range(1, len(v)):
            if vv[o : o + len(v)] != v:
                continue
            cases += 1
            x, y = vv[:o], vv[o + len(v):]
            sol = solve_internal_factor(mk(v), mk(x), mk(y))
            t = sol.t.text
            ok = (
                x == t * sol.i
                and y == t * sol.j
                and v == t * (sol.i + sol.j)
                and t == _root_and_exponent(x)[0]
                and not _is_primitive(v)
            )
            if not ok:
                return COUNTEREXAMPLE, cases, {"v": v, "offset": o}
    return PASS, cases, None


def _check_conj_count(b: VerificationBounds) -> _CheckResult:
    letters = _LETTERS[: b.alphabet_size]
    cases = 0
    for t in _iter_texts(letters, 1, b.max_word_len):
        cases += 1
        rotations = {t[k:] + t[:k] for k in range(len(t))}
        if _is_primitive(t) != (len(rotations) == len(t)):
            return COUNTEREXAMPLE, cases, {"word": t}
    return PASS, cases, None


def _check_unbordered_conj(b: VerificationBounds) -> _CheckResult:
    from .words import has_unbordered_conjugate

    letters = _LETTERS[: b.alphabet_size]
    mk = Alphabet.from_string(letters).word
    cases = 0
    for t in _iter_texts(letters, 1, b.max_word_len):
        cases += 1
        if has_unbordered_conjugate(mk(t)) != _is_primitive(t):
            return COUNTEREXAMPLE, cases, {"word": t}
    return PASS, cases, None


def _check_conj_roots(b: VerificationBounds) -> _CheckResult:
    letters = _LETTERS[: b.alphabet_size]
    cases = 0
    for t in _iter_texts(letters, 1, b.max_word_len):
        rt = _root_and_exponent(t)[0]
        doubled_root = rt + rt
        for k in range(1, len(t)):
            rot = t[k:] + t[:k]
            cases += 1
            rr = _root_and_exponent(rot)[0]
            if len(rr) != len(rt) or rr not in doubled_root:
                return COUNTEREXAMPLE, cases, {"word": t, "rotation": rot}
    return PASS, cases, None


def _check_eq_zy(b: VerificationBounds) -> _CheckResult:
    letters = _LETTERS[: b.alphabet_size]
    cases = 0
    texts = list(_iter_texts(letters, 0, b.max_word_len))
    for y in texts:
        for z in texts:
            zy = z + y
            y2 = zy[: len(y)]
            if zy[len(y):] != z:
                continue
            yz = y + z
            z2 = yz[: len(z)]
            if yz[len(z):] != y2:
                continue
            cases += 1
            if y != y2:
                return COUNTEREXAMPLE, cases, {"y": y, "z": z, "y_prime": y2, "z_prime": z2}
    return PASS, cases, None


def _check_eq_yz_mirror(b: VerificationBounds) -> _CheckResult:
    letters = _LETTERS[: b.alphabet_size]
    cases = 0
    texts = list(_iter_texts(letters, 0, b.max_word_len))
    for y in texts:
        for z in texts:
            yz = y + z
            if yz[: len(z)] != z:
                continue
            y2 = yz[len(z):]
            zy = z + y
            if zy[: len(y)] != y2:
                continue
            z2 = zy[len(y):]
            cases += 1
            if y != y2:
                return COUNTEREXAMPLE, cases, {"y": y, "z": z, "y_prime": y2, "z_prime": z2}
    return PASS, cases, None


def _check_sandwich(b: VerificationBounds) -> _CheckResult:
    letters = _LETTERS[: b.alphabet_size]
    mk = Alphabet.from_string(letters).word
    max_part = int(b.get("max_part_len", 3))
    cases = 0
    parts = list(_iter_texts(letters, 1, max_part))
    ys = list(_iter_texts(letters, 0, b.max_word_len))
    for x1 in parts:
        for x2 in parts:
            x = x1 + x2
            for y in ys:
                if x2 + y + x != y + x + x1:
                    continue
                cases += 1
                t, alpha, beta = solve_sandwich(mk(x1), mk(x2), mk(y))
                tt = t.text
                if alpha < 2 or tt * alpha != x or tt * beta != y:
                    return COUNTEREXAMPLE, cases, {"x1": x1, "x2": x2, "y": y}
    return PASS, cases, None


def _check_conj_power_prim(b: VerificationBounds) -> _CheckResult:
    letters = _LETTERS[: b.alphabet_size]
    cap = int(b.get("max_exponent", 3))
    cases = 0
    for t in _iter_texts(letters, 2, b.max_word_len):
        if not _is_primitive(t):
            continue
        for k in range(1, len(t)):
            rot = t[k:] + t[:k]
            for i in range(1, cap + 1):
                for j in range(1, cap + 1):
                    cases += 1
                    if not _is_primitive(t * i + rot * j):
                        return COUNTEREXAMPLE, cases, {
                            "word": t,
                            "conjugate": rot,
                            "i": i,
                            "j": j,
                        }
    return PASS, cases, None


def _check_rs_sr_power(b: VerificationBounds) -> _CheckResult:
    letters = _LETTERS[: b.alphabet_size]
    max_part = int(b.get("max_part_len", 3))
    max_z = int(b.get("max_z_len", 6))
    cap = int(b.get("max_exponent", 2))
    cases = 0
    parts = list(_iter_texts(letters, 1, max_part))
    for r in parts:
        for s in parts:
            rs, sr = r + s, s + r
            for i in range(1, cap + 1):
                for j in range(1, cap + 1):
                    w = rs * i + sr * j
                    for n in (2, 3):
                        if len(w) % n:
                            continue
                        z = w[: len(w) // n]
                        if len(z) > max_z or z * n != w:
                            continue
                        cases += 1
                        rroot = _root_and_exponent(r)[0]
                        if (
                            _root_and_exponent(s)[0] != rroot
                            or _root_and_exponent(z)[0] != rroot
                        ):
                            return COUNTEREXAMPLE, cases, {
                                "r": r,
                                "s": s,
                                "z": z,
                                "i": i,
                                "j": j,
                                "n": n,
                            }
    return PASS, cases, None


def _check_xmyn_zq(b: VerificationBounds) -> _CheckResult:
    letters = _LETTERS[: b.alphabet_size]
    cases = 0
    texts = list(_iter_texts(letters, 1, b.max_word_len))
    exps = (2, 3)
    for x in texts:
        for y in texts:
            for m in exps:
                for n in exps:
                    w = x * m + y * n
                    for q in exps:
                        if len(w) % q:
                            continue
                        z = w[: len(w) // q]
                        if len(z) > b.max_word_len or z * q != w:
                            continue
                        cases += 1
                        xroot = _root_and_exponent(x)[0]
                        if (
                            _root_and_exponent(y)[0] != xroot
                            or _root_and_exponent(z)[0] != xroot
                        ):
                            return COUNTEREXAMPLE, cases, {
                                "x": x,
                                "y": y,
                                "z": z,
                                "m": m,
                                "n": n,
                                "q": q,
                            }
    return PASS, cases, None


def _check_xmyn_prim(b: VerificationBounds) -> _CheckResult:
    letters = _LETTERS[: b.alphabet_size]
    cases = 0
    prims = [t for t in _iter_texts(letters, 1, b.max_word_len) if _is_primitive(t)]
    exps = (2, 3)
    for x in prims:
        for y in prims:
            if x == y:
                continue
            for m in exps:
                for n in exps:
                    cases += 1
                    if not _is_primitive(x * m + y * n):
                        return COUNTEREXAMPLE, cases, {"x": x, "y": y, "m": m, "n": n}
    return PASS, cases, None


def _images_payload(f: Morphism) -> dict[str, str]:
    return {ch: img.text for ch, img in zip(f.source.letters, f.images)}


def _check_prim_implies_inj(b: VerificationBounds) -> _CheckResult:
    depth = int(b.get("depth", 6))
    cases = 0
    for f in _binary_morphisms(b.max_image_len):
        if profile(f).injective:
            continue
        cases += 1
        if is_n_primitive(f, depth).status != MORPH_COUNTEREXAMPLE:
            return COUNTEREXAMPLE, cases, {"images": _images_payload(f)}
    return PASS, cases, None


def _check_pure_code_char(b: VerificationBounds) -> _CheckResult:
    pure_bound = int(b.get("pure_bound", 9))
    cases = 0
    for f in _binary_morphisms(b.max_image_len, min_image_len=1):
        if not profile(f).injective:
            continue
        cases += 1
        impure = (
            is_pure_code_bounded(set(f.images), pure_bound).status
            == MORPH_COUNTEREXAMPLE
        )
        not_prim = is_n_primitive(f, b.max_word_len).status == MORPH_COUNTEREXAMPLE
        if impure != not_prim:
            return COUNTEREXAMPLE, cases, {
                "images": _images_payload(f),
                "impure_up_to_bound": impure,
                "refuted_primitive": not_prim,
            }
    return PASS, cases, None


def _check_uniform_binary_2prim(b: VerificationBounds) -> _CheckResult:
    depth = int(b.get("depth", 10))
    cases = 0
    for f in _binary_morphisms(b.max_image_len, uniform=True):
        cases += 1
        decided = decide_primitive_uniform_binary(f)
        exhaustive = is_n_primitive(f, depth).holds
        if decided != exhaustive:
            return COUNTEREXAMPLE, cases, {
                "images": _images_payload(f),
                "two_primitive": decided,
                "exhaustive_up_to_depth": exhaustive,
            }
    return PASS, cases, None


def _extra_int_list(b: VerificationBounds, key: str, default: Sequence[int]) -> list[int]:
    value = b.get(key, default)
    if isinstance(value, int):
        return [value]
    return [int(v) for v in value]


def _check_theorem12_family(b: VerificationBounds) -> _CheckResult:
    cases = 0
    for n in _extra_int_list(b, "n", (2, 3, 4)):
        cases += 1
        f = make_counterexample_family(n)
        payload = {"n": n, "images": _images_payload(f)}
        if not is_n_primitive(f, n).holds:
            return COUNTEREXAMPLE, cases, payload | {"reason": "not primitive up to n"}
        image = f.apply(f.source.word("a" * n + "b")).text
        half = "aba" * (n - 1) + "ab"
        if image != half * 2:
            return COUNTEREXAMPLE, cases, payload | {"reason": "image of a^n b is not the expected square"}
        refutation = is_n_primitive(f, n + 1)
        if refutation.status != MORPH_COUNTEREXAMPLE or len(refutation.witness.text) != n + 1:
            return COUNTEREXAMPLE, cases, payload | {"reason": "shortest witness is not of length n+1"}
    return PASS, cases, None


def _check_bifixe(b: VerificationBounds) -> _CheckResult:
    cases = 0
    for k in _extra_int_list(b, "k", (2, 3)):
        bound = 2 * (k - 1) + 1
        for f in _binary_morphisms(b.max_image_len):
            if not is_k_power_free_up_to(f, k, bound).holds:
                continue
            cases += 1
            if not profile(f).bifixe:
                return COUNTEREXAMPLE, cases, {"k": k, "images": _images_payload(f)}
    return PASS, cases, None


def _check_prim_not_kpf_family(b: VerificationBounds) -> _CheckResult:
    depth = int(b.get("depth", 8))
    cases = 0
    for k in _extra_int_list(b, "k", (2, 3)):
        cases += 1
        f = make_primitive_not_kpf(k)
        payload = {"k": k, "images": _images_payload(f)}
        kpf = is_k_power_free_up_to(f, k, 1)
        if kpf.status != MORPH_COUNTEREXAMPLE or kpf.witness.text != "a":
            return COUNTEREXAMPLE, cases, payload | {"reason": "expected witness 'a' at depth 1"}
        if not is_n_primitive(f, depth).holds:
            return COUNTEREXAMPLE, cases, payload | {"reason": "family member refuted primitive"}
    return PASS, cases, None


def _check_tk_sufficient(b: VerificationBounds) -> _CheckResult:
    depth = int(b.get("depth", 10))
    cases = 0
    for k in _extra_int_list(b, "k", (2, 3)):
        for f in _binary_morphisms(b.max_image_len):
            cases += 1
            if certify_primitive_binary_via_tk(f, k) != CERTIFIED_PRIMITIVE:
                continue
            if not is_n_primitive(f, depth).holds:
                return COUNTEREXAMPLE, cases, {"k": k, "images": _images_payload(f)}
    return PASS, cases, None


def _check_maxpower_lemma(b: VerificationBounds) -> _CheckResult:
    letters = _LETTERS[: b.alphabet_size]
    j_max = int(b.get("j_max", 5))
    cases = 0
    for t in _iter_texts(letters, 1, b.max_word_len):
        if not _is_primitive(t):
            continue
        ks = [_max_power_site(t * j)[0] for j in range(1, max(3, j_max) + 1)]
        base = max(ks[0], ks[1], ks[2])
        for j in range(1, j_max + 1):
            cases += 1
            if ks[j - 1] > max(j, base):
                return COUNTEREXAMPLE, cases, {"word": t, "j": j, "k_j": ks[j - 1]}
    return PASS, cases, None


def _check_kpf_implies_prim(b: VerificationBounds, ks: Sequence[int], uniform: bool) -> _CheckResult:
    kpf_bound = int(b.get("kpf_bound", 8))
    depth = int(b.get("depth", 7))
    cases = 0
    for k in ks:
        for f in _binary_morphisms(b.max_image_len, uniform=uniform):
            cases += 1
            if is_n_primitive(f, depth).holds:
                continue
            # primitivity was refuted, so k-power-freeness must fail too
            if is_k_power_free_up_to(f, k, kpf_bound).holds:
                return COUNTEREXAMPLE, cases, {"k": k, "images": _images_payload(f)}
    return PASS, cases, None


def _check_kpf_implies_prim_k5(b: VerificationBounds) -> _CheckResult:
    return _check_kpf_implies_prim(b, _extra_int_list(b, "k", (5,)), uniform=False)


def _check_uniform_kpf_implies_prim(b: VerificationBounds) -> _CheckResult:
    return _check_kpf_implies_prim(b, _extra_int_list(b, "k", (2, 3)), uniform=True)


def _check_squarefree_implies_prim(b: VerificationBounds) -> _CheckResult:
    kpf_bound = int(b.get("kpf_bound", 5))
    depth = int(b.get("depth", 5))
    target = Alphabet.from_string(_LETTERS[: b.alphabet_size])
    cases = 0
    for f in enumerate_morphisms(
        b.alphabet_size, target, (0, b.max_image_len)
    ):
        if f.is_all_empty:
            continue
        cases += 1
        if is_n_primitive(f, depth).holds:
            continue
        if is_k_power_free_up_to(f, 2, kpf_bound).holds:
            return COUNTEREXAMPLE, cases, {"images": _images_payload(f)}
    return PASS, cases, None


def _check_kpf_step(b: VerificationBounds, k: int, uniform: bool) -> _CheckResult:
    first_bound = int(b.get("kpf_bound", 6))
    second_bound = int(b.get("step_bound", 6))
    cases = 0
    for f in _binary_morphisms(b.max_image_len, uniform=uniform):
        if not is_k_power_free_up_to(f, k, first_bound).holds:
            continue
        cases += 1
        if not is_k_power_free_up_to(f, k + 1, second_bound).holds:
            return COUNTEREXAMPLE, cases, {"k": k, "images": _images_payload(f)}
    return PASS, cases, None


def _check_kpf_step_k5(b: VerificationBounds) -> _CheckResult:
    return _check_kpf_step(b, int(b.get("k", 5)), uniform=False)


def _check_kpf_step_uniform(b: VerificationBounds) -> _CheckResult:
    return _check_kpf_step(b, int(b.get("k", 3)), uniform=True)


# ---------------------------------------------------------------------------
# catalog


def _entry(
    statement: str,
    description: str,
    checker: Callable[[VerificationBounds], _CheckResult],
    polarity: str = UNIVERSAL,
    **defaults: Any,
) -> CatalogEntry:
    return CatalogEntry(
        statement, description, polarity, VerificationBounds(**defaults), checker
    )


CATALOG: dict[str, CatalogEntry] = {
    e.statement: e
    for e in (
        _entry(
            "FINE_WILF",
            "Words with distinct primitive roots never share a prefix of their "
            "powers as long as p + q - gcd(p, q); witnesses of length exactly "
            "one less exist, so the bound is tight.",
            _check_fine_wilf,
            max_word_len=5,
        ),
        _entry(
            "LOTHAIRE_1",
            "Every instance of vu = uw with v nonempty decomposes as u = r(sr)^n, "
            "v = rs, w = sr.",
            _check_lothaire1,
            max_word_len=6,
            extra={"max_v_len": 4},
        ),
        _entry(
            "LOTHAIRE_2",
            "Commuting words are powers of one shared primitive root.",
            _check_lothaire2,
            max_word_len=5,
        ),
        _entry(
            "LOTHAIRE_3",
            "Every instance of uvw = wvu (u, v not both empty) decomposes as "
            "u = (t1 t2)^n t1, v = (t2 t1)^p t2, w = (t1 t2)^q t1.",
            _check_lothaire3,
            max_word_len=4,
        ),
        _entry(
            "INTERNAL_FACTOR",
            "A nonempty word occurring strictly inside its own square is a "
            "proper power: vv = xvy forces x, y, v to be powers of one root.",
            _check_internal_factor,
            max_word_len=10,
        ),
        _entry(
            "CONJ_COUNT",
            "A nonempty word is primitive iff it has as many distinct rotations "
            "as letters.",
            _check_conj_count,
            max_word_len=8,
        ),
        _entry(
            "UNBORDERED_CONJ",
            "A nonempty word is primitive iff some rotation of it is unbordered.",
            _check_unbordered_conj,
            max_word_len=8,
        ),
        _entry(
            "CONJ_ROOTS",
            "Conjugate words have conjugate primitive roots.",
            _check_conj_roots,
            max_word_len=8,
        ),
        _entry(
            "EQ_ZY",
            "zy = y'z together with yz = z'y' forces y = y'.",
            _check_eq_zy,
            max_word_len=4,
        ),
        _entry(
            "EQ_YZ_MIRROR",
            "yz = zy' together with zy = y'z' forces y = y' (mirror variant).",
            _check_eq_yz_mirror,
            max_word_len=4,
        ),
        _entry(
            "SANDWICH",
            "x2 y x = y x x1 with x = x1 x2 (x1, x2 nonempty) forces x = t^a "
            "(a >= 2) and y = t^b for a common t.",
            _check_sandwich,
            max_word_len=4,
            extra={"max_part_len": 3},
        ),
        _entry(
            "CONJ_POWER_PRIM",
            "For primitive w and a proper rotation w', every w^i w'^j is "
            "primitive (i, j >= 1).",
            _check_conj_power_prim,
            max_word_len=6,
            extra={"max_exponent": 3},
        ),
        _entry(
            "RS_SR_POWER",
            "(rs)^i (sr)^j = z^n with n >= 2 forces r, s, z to share one "
            "primitive root.",
            _check_rs_sr_power,
            max_word_len=6,
            extra={"max_part_len": 3, "max_z_len": 6, "max_exponent": 2},
        ),
        _entry(
            "XMYN_ZQ",
            "x^m y^n = z^q with m, n, q >= 2 forces x, y, z to share one "
            "primitive root.",
            _check_xmyn_zq,
            max_word_len=4,
        ),
        _entry(
            "XMYN_PRIM",
            "For distinct primitive x and y, x^m y^n is primitive whenever "
            "m, n >= 2.",
            _check_xmyn_prim,
            max_word_len=4,
        ),
        _entry(
            "PRIM_IMPLIES_INJ",
            "Contrapositive scan: every enumerated non-injective morphism is "
            "refuted primitive at a small depth.",
            _check_prim_implies_inj,
            extra={"depth": 6},
        ),
        _entry(
            "PURE_CODE_CHAR",
            "Bounded consistency of the pure-code characterization: an "
            "injective morphism's image set is impure within the bound iff the "
            "morphism is refuted primitive within the bound.",
            _check_pure_code_char,
            max_word_len=9,
            extra={"pure_bound": 9},
        ),
        _entry(
            "UNIFORM_BINARY_2PRIM",
            "A uniform binary morphism is primitive iff it preserves "
            "primitivity of words up to length 2; checked against an "
            "exhaustive scan.",
            _check_uniform_binary_2prim,
            extra={"depth": 10},
        ),
        _entry(
            "THEOREM12_FAMILY",
            "The family a -> aba, b -> (baa)^(n-1) b preserves primitivity "
            "exactly up to length n: the image of a^n b is a perfect square "
            "and no shorter witness exists.",
            _check_theorem12_family,
            polarity=CONSTRUCTIVE,
            extra={"n": (2, 3, 4)},
        ),
        _entry(
            "BIFIXE",
            "A morphism k-power-free up to 2(k-1)+1 is bifixe (no image is a "
            "prefix or suffix of another).",
            _check_bifixe,
            extra={"k": (2, 3)},
        ),
        _entry(
            "PRIM_NOT_KPF_FAMILY",
            "The family a -> a c^k, b -> b c^k, c -> ab c^k is primitive yet "
            "fails k-power-freeness already on the single letter a.",
            _check_prim_not_kpf_family,
            polarity=CONSTRUCTIVE,
            extra={"k": (2, 3), "depth": 8},
        ),
        _entry(
            "TK_SUFFICIENT",
            "The t_k certificate is sound: a binary morphism certified via "
            "k-power-freeness up to t_k is never refuted by an exhaustive "
            "primitivity scan.",
            _check_tk_sufficient,
            extra={"k": (2, 3), "depth": 10},
        ),
        _entry(
            "MAXPOWER_LEMMA",
            "For primitive w, the largest power inside w^j is bounded by "
            "max(j, k_1, k_2, k_3).",
            _check_maxpower_lemma,
            max_word_len=6,
            alphabet_size=3,
            extra={"j_max": 5},
        ),
        _entry(
            "KPF_IMPLIES_PRIM_K5",
            "A morphism k-power-free (k >= 5) is primitive: any enumerated "
            "morphism refuted primitive also fails k-power-freeness within "
            "the bound.",
            _check_kpf_implies_prim_k5,
            extra={"k": (5,), "kpf_bound": 8, "depth": 7},
        ),
        _entry(
            "UNIFORM_KPF_IMPLIES_PRIM",
            "A uniform morphism k-power-free (k >= 2) is primitive: any "
            "uniform morphism refuted primitive also fails k-power-freeness "
            "within the bound.",
            _check_uniform_kpf_implies_prim,
            extra={"k": (2, 3), "kpf_bound": 8, "depth": 7},
        ),
        _entry(
            "SQUAREFREE_IMPLIES_PRIM",
            "A square-free morphism is primitive: any enumerated morphism "
            "refuted primitive also produces a square within the bound.",
            _check_squarefree_implies_prim,
            max_image_len=2,
            alphabet_size=3,
            extra={"kpf_bound": 5, "depth": 5},
        ),
        _entry(
            "KPF_STEP_K5",
            "k-power-freeness implies (k+1)-power-freeness for k >= 5 "
            "(bounded check of the cited step property).",
            _check_kpf_step_k5,
            extra={"k": 5, "kpf_bound": 6, "step_bound": 6},
        ),
        _entry(
            "KPF_STEP_UNIFORM",
            "For uniform morphisms, k-power-freeness implies (k+1)-power-"
            "freeness for k >= 3 (bounded check of the cited step property).",
            _check_kpf_step_uniform,
            extra={"k": 3, "kpf_bound": 7, "step_bound": 7},
        ),
    )
}

STATEMENT_IDS: tuple[str, ...] = tuple(CATALOG)


def verify(statement: str, bounds: VerificationBounds | None = None) -> StatementVerdict:
    """Run one catalog statement at the given (or its default) bounds."""
    try:
        entry = CATALOG[statement]
    except KeyError:
        known = ", ".join(STATEMENT_IDS)
        raise ValueError(f"unknown statement id {statement!r}; known ids: {known}") from None
    effective = entry.defaults if bounds is None else bounds
    start = time.perf_counter()
    status, cases, witness = entry.checker(effective)
    elapsed = time.perf_counter() - start
    return StatementVerdict(statement, status, cases, witness, elapsed)


def merge_bounds(statement: str, **overrides: Any) -> VerificationBounds:
    """The statement's default bounds with the given fields replaced;
    ``extra`` overrides are merged key by key."""
    entry = CATALOG.get(statement)
    if entry is None:
        known = ", ".join(STATEMENT_IDS)
        raise ValueError(f"unknown statement id {statement!r}; known ids: {known}")
    defaults = entry.defaults
    extra = dict(defaults.extra)
    extra.update(overrides.pop("extra", {}))
    return replace(defaults, extra=extra, **overrides)


def render_catalog_markdown() -> str:
    """The statement reference page: id, polarity, default bounds, meaning."""
    lines = [
        "# Statement catalog",
        "",
        "Every statement is checked by a bounded exhaustive search.  For",
        "*universal* statements a counterexample would indicate a bug in this",
        "package (the statements are established results); *constructive*",
        "statements assert that specific witnesses exist and reproduce them.",
        "A `pass` verdict always refers to the bounds it was obtained at.",
        "",
        "| id | polarity | default bounds | statement |",
        "|---|---|---|---|",
    ]
    for entry in CATALOG.values():
        d = entry.defaults
        bounds = (
            f"word len <= {d.max_word_len}, image len <= {d.max_image_len}, "
            f"{d.alphabet_size} letters"
        )
        if d.extra:
            extras = ", ".join(f"{k}={v}" for k, v in sorted(d.extra.items()))
            bounds += f", {extras}"
        lines.append(
            f"| `{entry.statement}` | {entry.polarity} | {bounds} | {entry.description} |"
        )
    lines.append("")
    return "\n".join(lines)
