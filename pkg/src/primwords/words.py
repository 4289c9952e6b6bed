"""Finite words over small alphabets: primitivity, periodicity, borders,
conjugacy and repetition search.

All values are immutable and every operation is pure, so words can be
shared freely across threads.  The empty word is the monoid identity; by
convention it is neither primitive nor a carrier of powers.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

__all__ = [
    "Alphabet",
    "Word",
    "PowerDecomposition",
    "concat",
    "power",
    "mirror",
    "factor",
    "is_primitive",
    "primitive_root",
    "borders",
    "conjugates",
    "are_conjugate",
    "has_unbordered_conjugate",
    "max_power",
    "is_k_power_free",
    "max_power_in_power",
]


@dataclass(frozen=True)
class Alphabet:
    """An ordered collection of 1 to 26 distinct single-character letters.

    The declared order is total and fixed at construction; enumerations and
    reports use it as the base lexicographic order.
    """

    letters: tuple[str, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.letters) <= 26:
            raise ValueError("an alphabet needs between 1 and 26 letters")
        seen = set()
        for ch in self.letters:
            if not isinstance(ch, str) or len(ch) != 1:
                raise ValueError(f"letter {ch!r} is not a single character")
            if not ch.isascii() or not ch.isprintable() or ch.isspace():
                raise ValueError(f"letter {ch!r} is not printable ASCII")
            if ch in seen:
                raise ValueError(f"duplicate letter {ch!r}")
            seen.add(ch)

    @classmethod
    def from_string(cls, letters: str) -> "Alphabet":
        return cls(tuple(letters))

    @classmethod
    def inferred(cls, text: str) -> "Alphabet":
        """The smallest alphabet covering ``text``, letters sorted."""
        if not text:
            raise ValueError("cannot infer an alphabet from the empty string")
        return cls(tuple(sorted(set(text))))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {ch: i for i, ch in enumerate(self.letters)}

    def index(self, letter: str) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise ValueError(
                f"letter {letter!r} not in alphabet {''.join(self.letters)!r}"
            ) from None

    def word(self, text: str) -> "Word":
        """Build a word over this alphabet from its letter string."""
        index = self._index
        try:
            return Word(self, tuple(index[ch] for ch in text))
        except KeyError as exc:
            raise ValueError(
                f"letter {exc.args[0]!r} not in alphabet {''.join(self.letters)!r}"
            ) from None

    def __contains__(self, letter: object) -> bool:
        return letter in self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __repr__(self) -> str:
        return f"Alphabet({''.join(self.letters)!r})"


@dataclass(frozen=True)
class Word:
    """An immutable word: a sequence of symbol indices into a fixed alphabet.

    Two words are equal only when they agree on the alphabet as well as on
    the symbol sequence.  Length 0 is the empty word.
    """

    alphabet: Alphabet
    symbols: tuple[int, ...]

    def __post_init__(self) -> None:
        size = len(self.alphabet)
        for s in self.symbols:
            if not 0 <= s < size:
                raise ValueError(f"symbol index {s} out of range for {self.alphabet!r}")

    @classmethod
    def from_text(cls, text: str, alphabet: Alphabet) -> "Word":
        return alphabet.word(text)

    @classmethod
    def epsilon(cls, alphabet: Alphabet) -> "Word":
        return cls(alphabet, ())

    @cached_property
    def text(self) -> str:
        letters = self.alphabet.letters
        return "".join(letters[s] for s in self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"Word({self.text!r})"

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return concat(self, other)

    def __mul__(self, n: int) -> "Word":
        if not isinstance(n, int):
            return NotImplemented
        return power(self, n)

    __rmul__ = __mul__


@dataclass(frozen=True)
class PowerDecomposition:
    """A word written as ``root`` repeated ``exponent`` times, root primitive."""

    root: Word
    exponent: int


# ---------------------------------------------------------------------------
# text-level workhorses, shared with the rest of the package


def _is_primitive(t: str) -> bool:
    # doubling test: a nonempty word occurs in its square only at offsets
    # 0 and len(t) exactly when it is primitive
    return bool(t) and (t + t).find(t, 1) == len(t)


def _root_and_exponent(t: str) -> tuple[str, int]:
    # the first nontrivial occurrence of t in tt is at the primitive-root
    # length, which always divides len(t)
    p = (t + t).find(t, 1)
    return t[:p], len(t) // p


def _contains_k_power(t: str, k: int) -> bool:
    n = len(t)
    for p in range(1, n // k + 1):
        need = (k - 1) * p
        run = 0
        for i in range(n - p):
            if t[i] == t[i + p]:
                run += 1
                if run >= need:
                    return True
            else:
                run = 0
    return False


def _has_k_power_suffix(t: str, k: int) -> bool:
    # used by backtracking generators: does some k-power end at the last letter?
    n = len(t)
    for p in range(1, n // k + 1):
        if t[n - (k - 1) * p :] == t[n - k * p : n - (k - 1) * p] * (k - 1):
            return True
    return False


def _max_power_site(t: str) -> tuple[int, int, int]:
    """Maximal repetition in ``t`` as (exponent, start, period).

    Among all sites reaching the maximal exponent the (start, period)
    lexicographically first one is reported, so results are reproducible.
    """
    n = len(t)
    best_k, best_i, best_p = 1, 0, 1
    for p in range(1, n // 2 + 1):
        mask = "".join("1" if t[i] == t[i + p] else "0" for i in range(n - p))
        for m in re.finditer("1+", mask):
            k = (m.end() - m.start()) // p + 1
            if k > best_k or (k == best_k and (m.start(), p) < (best_i, best_p)):
                best_k, best_i, best_p = k, m.start(), p
    return best_k, best_i, best_p


def _iter_texts(letters: Iterable[str], min_len: int, max_len: int) -> Iterator[str]:
    letters = tuple(letters)
    for n in range(min_len, max_len + 1):
        for combo in itertools.product(letters, repeat=n):
            yield "".join(combo)


def _iter_k_power_free_texts(
    letters: Iterable[str], k: int, max_len: int
) -> Iterator[str]:
    # grow level by level so the output is in length-then-lex order; a new
    # k-power in an extension must end at the appended letter
    letters = tuple(letters)
    level = [""]
    yield ""
    for _ in range(max_len):
        nxt = []
        for stem in level:
            for ch in letters:
                cand = stem + ch
                if not _has_k_power_suffix(cand, k):
                    nxt.append(cand)
                    yield cand
        level = nxt


# ---------------------------------------------------------------------------
# public operations


def concat(u: Word, v: Word) -> Word:
    """Juxtaposition ``uv``; both operands must share an alphabet."""
    if u.alphabet != v.alphabet:
        raise ValueError("cannot concatenate words over different alphabets")
    return Word(u.alphabet, u.symbols + v.symbols)


def power(u: Word, n: int) -> Word:
    """``u`` repeated ``n`` times; ``n = 0`` gives the empty word."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    return Word(u.alphabet, u.symbols * n)


def mirror(u: Word) -> Word:
    """The reversal of ``u``; an involution fixing the empty word."""
    return Word(u.alphabet, u.symbols[::-1])


def factor(w: Word, i: int, j: int) -> Word:
    """The factor from the i-th through the j-th letter, 1-based inclusive.

    ``j = i - 1`` denotes the empty factor; indices must satisfy
    ``0 <= i - 1 <= j <= len(w)``.
    """
    if not 0 <= i - 1 <= j <= len(w):
        raise ValueError(
            f"factor indices ({i}, {j}) violate 0 <= i-1 <= j <= {len(w)}"
        )
    return Word(w.alphabet, w.symbols[i - 1 : j])


def is_primitive(w: Word) -> bool:
    """True iff ``w`` is nonempty and is not a proper power of any word.

    Decided by the doubling test: a nonempty word is primitive exactly when
    it occurs in its own square only at offsets 0 and ``len(w)`` (an
    internal occurrence would force a period splitting the word evenly).
    The empty word is not primitive.
    """
    return _is_primitive(w.text)


def primitive_root(w: Word) -> PowerDecomposition:
    """The shortest ``t`` with ``w = t**e`` for maximal ``e``; ``t`` is primitive."""
    if not w.symbols:
        raise ValueError("the empty word has no primitive root")
    p = (w.text + w.text).find(w.text, 1)
    return PowerDecomposition(Word(w.alphabet, w.symbols[:p]), len(w.symbols) // p)


def borders(w: Word) -> list[Word]:
    """All borders of ``w`` in increasing length.

    A border is a nonempty proper prefix that is also a proper suffix;
    words of length at most 1 have none.
    """
    t = w.text
    return [Word(w.alphabet, w.symbols[:L]) for L in range(1, len(t)) if t[:L] == t[-L:]]


def conjugates(w: Word) -> list[Word]:
    """The rotations of ``w`` in rotation order starting at ``w`` itself,
    duplicates removed; a primitive word has exactly ``len(w)`` of them."""
    if not w.symbols:
        raise ValueError("the empty word has no conjugates")
    out: list[Word] = []
    seen: set[tuple[int, ...]] = set()
    for k in range(len(w.symbols)):
        rot = w.symbols[k:] + w.symbols[:k]
        if rot not in seen:
            seen.add(rot)
            out.append(Word(w.alphabet, rot))
    return out


def are_conjugate(u: Word, v: Word) -> bool:
    """True iff ``v`` is a rotation of ``u`` (letter content is compared)."""
    return len(u.symbols) == len(v.symbols) and v.text in (u.text + u.text)


def has_unbordered_conjugate(w: Word) -> bool:
    """True iff some rotation of ``w`` has no border.

    This characterizes primitivity, giving an independent cross-check of
    :func:`is_primitive`.
    """
    if not w.symbols:
        raise ValueError("the empty word has no conjugates")
    t = w.text
    tt = t + t
    n = len(t)
    for k in range(n):
        rot = tt[k : k + n]
        if not any(rot[:L] == rot[-L:] for L in range(1, n)):
            return True
    return False


def max_power(w: Word) -> tuple[int, Word]:
    """The largest ``k`` such that some factor of ``w`` is a k-th power of a
    nonempty word, together with a witness root.

    Every letter is a 1-power, so the exponent is at least 1.  The witness
    is the root of the first maximal repetition in (start, period) scan
    order; witness identity beyond validity is a convention, not a claim.
    """
    if not w.symbols:
        raise ValueError("the empty word carries no powers")
    k, start, period = _max_power_site(w.text)
    return k, Word(w.alphabet, w.symbols[start : start + period])


def is_k_power_free(w: Word, k: int) -> bool:
    """True iff no factor of ``w`` is a k-th power; the empty word passes."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return not _contains_k_power(w.text, k)


def max_power_in_power(w: Word, j: int) -> int:
    """The maximal exponent of a repetition inside ``w**j``, ``w`` primitive."""
    if j < 1:
        raise ValueError("j must be at least 1")
    if not _is_primitive(w.text):
        raise ValueError("base word must be primitive")
    return _max_power_site(w.text * j)[0]
