"""Morphisms between free monoids and the analyses that decide, bound or
certify whether they preserve primitivity and k-power-freeness.

Exact decisions exist only in special situations (uniform binary morphisms,
or k-power-freeness up to the ``t_k`` length bound for binary morphisms);
everything else is reported as a :class:`BoundedVerdict` that carries the
bound it was checked at, so a passing verdict is never mistaken for an
unbounded claim.  Bounded scans search in length-then-lexicographic order,
which makes every reported witness canonical (a shortest one).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .words import (
    Alphabet,
    Word,
    _contains_k_power,
    _is_primitive,
    _iter_k_power_free_texts,
    _iter_texts,
)

__all__ = [
    "Morphism",
    "MorphismProfile",
    "BoundedVerdict",
    "HOLDS_UP_TO_BOUND",
    "COUNTEREXAMPLE",
    "NOT_APPLICABLE",
    "CERTIFIED_PRIMITIVE",
    "INCONCLUSIVE",
    "mirror_morphism",
    "profile",
    "is_code",
    "is_comma_free",
    "is_pure_code_bounded",
    "is_n_primitive",
    "is_k_power_free_up_to",
    "decide_primitive_uniform_binary",
    "t_k",
    "certify_primitive_binary_via_tk",
    "lentin_schutzenberger_scan",
    "make_counterexample_family",
    "make_primitive_not_kpf",
    "detect_overlap_violation",
]

HOLDS_UP_TO_BOUND = "holds_up_to_bound"
COUNTEREXAMPLE = "counterexample"
NOT_APPLICABLE = "not_applicable"

CERTIFIED_PRIMITIVE = "certified_primitive"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Morphism:
    """A monoid morphism, determined by one image word per source letter.

    The all-empty morphism is representable (so it can be inspected and
    serialized) but every analysis operation rejects it.
    """

    source: Alphabet
    target: Alphabet
    images: tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(self.images) != len(self.source):
            raise ValueError("need exactly one image per source letter")
        for img in self.images:
            if img.alphabet != self.target:
                raise ValueError("every image must be a word over the target alphabet")

    @classmethod
    def from_images(
        cls,
        images: Mapping[str, str],
        source: Alphabet | None = None,
        target: Alphabet | None = None,
    ) -> "Morphism":
        """Build a morphism from a letter -> image-text mapping.

        Missing alphabets are inferred: the source from the sorted keys, the
        target from the sorted letters of the images (falling back to the
        source letters when every image is empty).
        """
        if source is None:
            source = Alphabet(tuple(sorted(images)))
        if target is None:
            used = sorted(set("".join(images.values())))
            target = Alphabet(tuple(used)) if used else source
        missing = [ch for ch in source.letters if ch not in images]
        if missing:
            raise ValueError(f"no image given for letter(s) {missing}")
        extra = [ch for ch in images if ch not in source.letters]
        if extra:
            raise ValueError(f"image given for letter(s) {extra} outside the source")
        return cls(
            source, target, tuple(target.word(images[ch]) for ch in source.letters)
        )

    @cached_property
    def _table(self) -> dict[int, str]:
        # str.translate table: source letter -> image text
        return {
            ord(ch): img.text for ch, img in zip(self.source.letters, self.images)
        }

    def image(self, letter: str) -> Word:
        return self.images[self.source.index(letter)]

    def apply(self, w: Word) -> Word:
        """The image of ``w``: letter images concatenated in order."""
        if w.alphabet != self.source:
            raise ValueError("word is not over the morphism's source alphabet")
        return self.target.word(w.text.translate(self._table))

    __call__ = apply

    @property
    def is_all_empty(self) -> bool:
        return all(not img.symbols for img in self.images)

    @property
    def is_erasing(self) -> bool:
        return any(not img.symbols for img in self.images)

    @property
    def uniform_length(self) -> int | None:
        lengths = {len(img.symbols) for img in self.images}
        return lengths.pop() if len(lengths) == 1 else None

    def __repr__(self) -> str:
        rules = ", ".join(
            f"{ch}->{img.text!r}" for ch, img in zip(self.source.letters, self.images)
        )
        return f"Morphism({rules})"


@dataclass(frozen=True)
class MorphismProfile:
    """Structural flags of a morphism.

    ``bifixe`` is prefix_code and suffix_code together; a ps-morphism is
    always bifixe, and a prefix (or suffix) morphism is always injective
    and non-erasing.
    """

    uniform_length: int | None
    erasing: bool
    prefix_code: bool
    suffix_code: bool
    bifixe: bool
    ps_morphism: bool
    injective: bool


@dataclass(frozen=True)
class BoundedVerdict:
    """Outcome of a bounded scan; the bound is part of the result.

    ``holds_up_to_bound`` is not an unbounded claim.  A witness (the
    violating input word) accompanies exactly the counterexample status.
    """

    status: str
    bound: int
    witness: Word | None = None

    def __post_init__(self) -> None:
        if (self.status == COUNTEREXAMPLE) != (self.witness is not None):
            raise ValueError("witness must accompany exactly the counterexample status")

    @property
    def holds(self) -> bool:
        return self.status == HOLDS_UP_TO_BOUND


def _reject_all_empty(f: Morphism) -> None:
    if f.is_all_empty:
        raise ValueError("the all-empty morphism is excluded from analysis")


def mirror_morphism(f: Morphism) -> Morphism:
    """Letterwise reversal: the image of each letter is reversed, so that
    applying the result equals reversing the image of the reversed word."""
    return Morphism(
        f.source,
        f.target,
        tuple(Word(img.alphabet, img.symbols[::-1]) for img in f.images),
    )


# ---------------------------------------------------------------------------
# structural profile


def _is_prefix_code(texts: list[str]) -> bool:
    return not any(
        i != j and b.startswith(a) for i, a in enumerate(texts) for j, b in enumerate(texts)
    )


def _is_suffix_code(texts: list[str]) -> bool:
    return not any(
        i != j and b.endswith(a) for i, a in enumerate(texts) for j, b in enumerate(texts)
    )


def _is_ps_morphism(texts: list[str]) -> bool:
    # violated iff some image splits as p+s such that another letter's image
    # starts with p and another one (possibly the same) ends with s
    for a, fa in enumerate(texts):
        for cut in range(len(fa) + 1):
            p, s = fa[:cut], fa[cut:]
            if any(b != a and texts[b].startswith(p) for b in range(len(texts))) and any(
                c != a and texts[c].endswith(s) for c in range(len(texts))
            ):
                return False
    return True


def profile(f: Morphism) -> MorphismProfile:
    """Compute all structural flags of ``f``.

    Injectivity is decided through unique decodability of the image set
    (Sardinas-Patterson), with repeated or empty images failing immediately.
    """
    _reject_all_empty(f)
    texts = [img.text for img in f.images]
    prefix = _is_prefix_code(texts)
    suffix = _is_suffix_code(texts)
    erasing = f.is_erasing
    injective = (
        not erasing
        and len(set(texts)) == len(texts)
        and _sardinas_patterson(sorted(set(texts), key=lambda t: (len(t), t)))[0]
    )
    return MorphismProfile(
        uniform_length=f.uniform_length,
        erasing=erasing,
        prefix_code=prefix,
        suffix_code=suffix,
        bifixe=prefix and suffix,
        ps_morphism=_is_ps_morphism(texts),
        injective=injective,
    )


# ---------------------------------------------------------------------------
# codes


def _sardinas_patterson(texts: list[str]) -> tuple[bool, str | None]:
    """Unique-decodability test with witness reconstruction.

    States are dangling overhangs; reaching the empty overhang closes two
    distinct factorisations of the accumulated word.  Breadth-first over
    sorted inputs, so the witness is deterministic.
    """
    queue: deque[tuple[str, str]] = deque()
    seen: set[str] = set()
    for x in texts:
        for y in texts:
            if x != y and y.startswith(x):
                over = y[len(x):]
                if over not in seen:
                    seen.add(over)
                    queue.append((over, y))
    while queue:
        over, acc = queue.popleft()
        for x in texts:
            if x == over:
                return False, acc
            if over.startswith(x):
                nxt = over[len(x):]
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append((nxt, acc))
            elif x.startswith(over):
                nxt = x[len(over):]
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append((nxt, acc + nxt))
    return True, None


def is_code(words_in: Iterable[Word]) -> tuple[bool, Word | None]:
    """Decide whether a finite set of nonempty words is uniquely decodable.

    Returns ``(True, None)`` for a code, otherwise ``(False, w)`` where the
    witness ``w`` admits two distinct factorisations over the set.
    """
    items = list(words_in)
    if not items:
        raise ValueError("the empty set is not a valid code candidate")
    alphabet = items[0].alphabet
    if any(w.alphabet != alphabet for w in items):
        raise ValueError("all candidate words must share one alphabet")
    texts = sorted({w.text for w in items}, key=lambda t: (len(t), t))
    if "" in texts:
        raise ValueError("the empty word cannot belong to a code")
    ok, witness = _sardinas_patterson(texts)
    return (True, None) if ok else (False, alphabet.word(witness))


def is_comma_free(words_in: Iterable[Word]) -> bool:
    """True iff the uniform set has no codeword occurring strictly inside
    the concatenation of two codewords."""
    items = list(words_in)
    if not items:
        raise ValueError("the empty set is not a valid code candidate")
    lengths = {len(w.symbols) for w in items}
    if lengths != {next(iter(lengths))} or 0 in lengths:
        raise ValueError("comma-freeness is defined for uniform sets of nonempty words")
    L = lengths.pop()
    texts = sorted(w.text for w in items)
    for x in texts:
        for y in texts:
            for z in texts:
                yz = y + z
                if any(yz[o : o + L] == x for o in range(1, L)):
                    return False
    return True


def _in_star(t: str, texts: list[str]) -> bool:
    ok = [False] * (len(t) + 1)
    ok[0] = True
    for i in range(len(t)):
        if ok[i]:
            for x in texts:
                if t.startswith(x, i):
                    ok[i + len(x)] = True
    return ok[len(t)]


def is_pure_code_bounded(words_in: Iterable[Word], max_len: int) -> BoundedVerdict:
    """Check purity of a code up to a length bound: every word of the
    generated submonoid, up to ``max_len`` letters, must keep its primitive
    root inside the submonoid.

    Enumeration is length-then-lex, so a reported witness is a shortest
    impure product.  A holds verdict only covers words up to the bound.
    """
    items = list(words_in)
    ok, _ = is_code(items)
    if not ok:
        raise ValueError("the given set is not a code")
    alphabet = items[0].alphabet
    texts = sorted({w.text for w in items}, key=lambda t: (len(t), t))
    products: set[str] = set()
    frontier = [""]
    while frontier:
        nxt = []
        for stem in frontier:
            for x in texts:
                cand = stem + x
                if len(cand) <= max_len and cand not in products:
                    products.add(cand)
                    nxt.append(cand)
        frontier = nxt
    from .words import _root_and_exponent

    for prod in sorted(products, key=lambda t: (len(t), t)):
        root, _ = _root_and_exponent(prod)
        if not _in_star(root, texts):
            return BoundedVerdict(COUNTEREXAMPLE, max_len, alphabet.word(prod))
    return BoundedVerdict(HOLDS_UP_TO_BOUND, max_len)


# ---------------------------------------------------------------------------
# bounded preservation scans


def is_n_primitive(f: Morphism, n: int) -> BoundedVerdict:
    """Scan every primitive source word of length at most ``n``; the witness,
    when present, is the shortest (then lexicographically first) primitive
    word whose image fails to be primitive."""
    _reject_all_empty(f)
    if n < 1:
        raise ValueError("the bound must be at least 1")
    table = f._table
    for t in _iter_texts(f.source.letters, 1, n):
        if _is_primitive(t) and not _is_primitive(t.translate(table)):
            return BoundedVerdict(COUNTEREXAMPLE, n, f.source.word(t))
    return BoundedVerdict(HOLDS_UP_TO_BOUND, n)


def is_k_power_free_up_to(f: Morphism, k: int, n: int) -> BoundedVerdict:
    """Scan every nonempty k-power-free source word of length at most ``n``
    for an image containing a k-th power."""
    _reject_all_empty(f)
    if k < 2:
        raise ValueError("k must be at least 2")
    if n < 1:
        raise ValueError("the bound must be at least 1")
    table = f._table
    for t in _iter_k_power_free_texts(f.source.letters, k, n):
        if t and _contains_k_power(t.translate(table), k):
            return BoundedVerdict(COUNTEREXAMPLE, n, f.source.word(t))
    return BoundedVerdict(HOLDS_UP_TO_BOUND, n)


def decide_primitive_uniform_binary(f: Morphism) -> bool:
    """Exact primitivity decision for uniform binary morphisms.

    Such a morphism is primitive iff the images of both letters and of both
    two-letter primitive words are primitive, so four checks decide the
    unbounded property.
    """
    _reject_all_empty(f)
    if len(f.source) != 2:
        raise ValueError("source alphabet must be binary")
    if f.uniform_length is None:
        raise ValueError("morphism must be uniform")
    a, b = f.source.letters
    table = f._table
    return all(_is_primitive(t.translate(table)) for t in (a, b, a + b, b + a))


def t_k(k: int) -> int:
    """Length bound: a binary morphism k-power-free up to ``t_k`` is primitive.

    The first two values are 3 and 4; from k = 4 on the closed form
    ``k * (k // 2) + 2 * (k % 2)`` applies.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if k == 2:
        return 3
    if k == 3:
        return 4
    return k * (k // 2) + 2 * (k % 2)


def certify_primitive_binary_via_tk(f: Morphism, k: int) -> str:
    """One-sided primitivity certificate for binary morphisms.

    k-power-freeness up to ``t_k(k)`` suffices for primitivity, so a
    ``certified_primitive`` answer is sound and unbounded; ``inconclusive``
    decides nothing.
    """
    _reject_all_empty(f)
    if len(f.source) != 2:
        raise ValueError("source alphabet must be binary")
    verdict = is_k_power_free_up_to(f, k, t_k(k))
    return CERTIFIED_PRIMITIVE if verdict.holds else INCONCLUSIVE


def lentin_schutzenberger_scan(f: Morphism, max_exp: int) -> BoundedVerdict:
    """Probe the classical primitivity test set a*b and ab* up to exponent
    ``max_exp``.

    A counterexample disproves primitivity of the morphism; exhausting the
    scan certifies nothing, because the full test set is infinite.
    """
    _reject_all_empty(f)
    if len(f.source) != 2:
        raise ValueError("source alphabet must be binary")
    if max_exp < 1:
        raise ValueError("the exponent bound must be at least 1")
    a, b = f.source.letters
    table = f._table
    tests = {a * i + b for i in range(max_exp + 1)}
    tests |= {a + b * i for i in range(max_exp + 1)}
    for t in sorted(tests, key=lambda t: (len(t), t)):
        if not _is_primitive(t.translate(table)):
            return BoundedVerdict(COUNTEREXAMPLE, max_exp, f.source.word(t))
    return BoundedVerdict(HOLDS_UP_TO_BOUND, max_exp)


# ---------------------------------------------------------------------------
# the two constructive families


def make_counterexample_family(n: int) -> Morphism:
    """The binary morphism a -> aba, b -> (baa)^(n-1) b.

    It preserves primitivity of all words up to length n, yet the image of
    a^n b is a perfect square, so it is not primitive.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    return Morphism.from_images({"a": "aba", "b": "baa" * (n - 1) + "b"})


def make_primitive_not_kpf(k: int) -> Morphism:
    """The ternary morphism a -> a c^k, b -> b c^k, c -> ab c^k.

    It is primitive but obviously not k-power-free: already the image of
    the single letter a contains c^k.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    tail = "c" * k
    return Morphism.from_images({"a": "a" + tail, "b": "b" + tail, "c": "ab" + tail})


def detect_overlap_violation(
    f: Morphism,
) -> tuple[str, str, Word, Word] | None:
    """Search for letters a, b and a factorisation f(a) = X f(b) Y with X, Y
    not both empty, where X is a nonempty suffix of f(a) or Y is a nonempty
    prefix of f(a).

    Such an overlap forces a square in the image of a word of length at
    most 3, so finding one rules out square-freeness of the morphism on
    short words.  Letters and offsets are scanned in order; the first
    witness found is returned, or ``None``.
    """
    _reject_all_empty(f)
    letters = f.source.letters
    texts = [img.text for img in f.images]
    for a, fa in zip(letters, texts):
        for b, fb in zip(letters, texts):
            start = 0
            while start <= len(fa) - len(fb):
                o = fa.find(fb, start)
                if o < 0:
                    break
                x, y = fa[:o], fa[o + len(fb):]
                if (x or y) and (
                    (x and fa.endswith(x)) or (y and fa.startswith(y))
                ):
                    return a, b, f.target.word(x), f.target.word(y)
                start = o + 1
    return None
