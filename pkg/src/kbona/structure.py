"""The palindrome catalog: the four families of maximal palindromic
factors, the maximal bordering/straddling words, admissible length sets,
and a classifier from a palindrome back to its catalog membership.

Every family element is a k*i digit shift of a small base template, so
templates are materialized once per k and membership reduces to exact
template matching at the unique candidate shift.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

from . import counting
from .palindromes import is_palindrome
from .words import DomainError, Word, shift_add, word


class PalFamily(enum.Enum):
    P1 = "p1"
    P2 = "p2"
    P3 = "p3"
    P4 = "p4"


@dataclass(frozen=True, order=True)
class PalClass:
    """Membership token: family plus the parameters naming the element."""

    family: PalFamily
    shift: int
    n: int | None = None
    j: int | None = None
    m: int | None = None
    variant: str | None = None  # "double" | "triple" | "kk"

    def describe(self) -> str:
        parts = [self.family.value, f"i={self.shift}"]
        if self.n is not None:
            parts.append(f"n={self.n}")
        if self.j is not None:
            parts.append(f"j={self.j}")
        if self.m is not None:
            parts.append(f"m={self.m}")
        if self.variant is not None:
            parts.append(self.variant)
        return "(" + ", ".join(parts) + ")"


@dataclass(frozen=True)
class StraddlingPair:
    """A straddling palindrome split at the block boundary: left is the
    suffix part before the cut, right the prefix part after it."""

    left: Word
    right: Word

    def __post_init__(self):
        if len(self.left) == 0 or len(self.right) == 0:
            raise DomainError("both parts of a straddling pair must be nonempty")

    @property
    def concatenation(self) -> Word:
        return self.left + self.right


@dataclass(frozen=True)
class LengthSet:
    k: int
    family: PalFamily | None  # None means the union over all families
    mode: counting.FormulaMode
    lengths: frozenset[int]


def _require_k3(k: int) -> None:
    if not isinstance(k, int) or k < 3:
        raise DomainError(f"palindrome structure requires k >= 3, got {k!r}")


def _block_product(k: int, hi: int, lo: int) -> Word:
    """W_hi W_{hi-1} ... W_lo (empty when hi < lo)."""
    out = Word()
    for i in range(hi, lo - 1, -1):
        out = out + word(k, i)
    return out


def maximal_bordering_word(k: int, n: int, j: int) -> Word:
    """The maximal bordering palindrome of type j:
    (W_{j-1} ... W_{n-k+1})^R j (W_{j-1} ... W_{n-k+1})."""
    _require_k3(k)
    if not (k <= n <= 2 * k - 3 and n - k + 2 <= j <= k - 1):
        raise DomainError(f"(n={n}, j={j}) outside the bordering range for k={k}")
    tail = _block_product(k, j - 1, n - k + 1)
    return tail.reverse() + Word((j,)) + tail


@functools.lru_cache(maxsize=None)
def _templates(k: int) -> tuple[tuple[Word, PalClass], ...]:
    """Base (shift 0) templates of all four families; the PalClass carries
    the minimal admissible shift."""
    _require_k3(k)
    out: list[tuple[Word, PalClass]] = []
    for n in range(2, k):
        out.append((word(k, n).drop_last(), PalClass(PalFamily.P1, 0, n=n)))
    for n in range(k, 2 * k - 2):
        for j in range(n - k + 2, k):
            out.append(
                (maximal_bordering_word(k, n, j), PalClass(PalFamily.P2, 0, n=n, j=j))
            )
    for m in range(1, k - 1):
        wm = word(k, m)
        core = wm.drop_last()
        out.append((wm + core, PalClass(PalFamily.P3, 1, m=m, variant="double")))
        out.append((wm + wm + core, PalClass(PalFamily.P3, 1, m=m, variant="triple")))
    wk1 = word(k, k - 1)
    out.append((wk1 + wk1.drop_last(), PalClass(PalFamily.P4, 1, variant="double")))
    triple = (wk1 + wk1 + wk1).drop_first(1).drop_last(2)
    out.append((triple, PalClass(PalFamily.P4, 1, variant="triple")))
    out.append((Word((0, 0)), PalClass(PalFamily.P4, 1, variant="kk")))
    return tuple(out)


def catalog_elements(
    k: int, family: PalFamily, i_max: int
) -> list[tuple[Word, PalClass]]:
    """All elements of the family with shift at most i_max."""
    _require_k3(k)
    if i_max < 0:
        raise DomainError(f"i_max must be >= 0, got {i_max}")
    out = []
    for template, base in _templates(k):
        if base.family is not family:
            continue
        for i in range(base.shift, i_max + 1):
            cls = PalClass(
                family=base.family,
                shift=i,
                n=base.n,
                j=base.j,
                m=base.m,
                variant=base.variant,
            )
            out.append((shift_add(k * i, template), cls))
    return out


def maximal_straddling_words(k: int, n: int) -> list[StraddlingPair]:
    """The maximal straddling palindromes of W_n as (suffix, prefix)
    pairs at the final block boundary; empty outside 2k-1 <= n <= 3k-2."""
    _require_k3(k)
    if n < 2 * k - 1 or n > 3 * k - 2:
        return []
    if n == 2 * k - 1:
        return [StraddlingPair(Word((k,)), Word((k,)))]
    if n < 3 * k - 2:
        m = n - 2 * k + 1
        wm = word(k, m)
        core = wm.drop_last()
        left = shift_add(k, wm)
        return [
            StraddlingPair(left, shift_add(k, core)),
            StraddlingPair(left, shift_add(k, wm + core)),
        ]
    wk1 = word(k, k - 1)
    return [
        StraddlingPair(shift_add(k, wk1), shift_add(k, wk1.drop_last())),
        StraddlingPair(
            shift_add(k, wk1.drop_first(1)),
            shift_add(k, (wk1 + wk1).drop_last(2)),
        ),
    ]


def _centered_sublengths(w: Word, min_len: int = 2) -> set[int]:
    """Lengths of the palindromic centered subwords of w (computed by
    actual palindrome checks, not assumed)."""
    out = set()
    n = len(w)
    length = n
    while length >= min_len:
        start = (n - length) // 2
        sub = Word(w.digits[start : start + length])
        if is_palindrome(sub):
            out.add(length)
        length -= 2
    return out


_AS_STATED_MAX = {
    PalFamily.P1: lambda k: 2 ** (k - 1) - 1,
    PalFamily.P2: lambda k: 2**k - 3,
    PalFamily.P3: lambda k: 3 * 2 ** (k - 2) - 1,
    PalFamily.P4: lambda k: 3 * 2 ** (k - 1) - 1,
}


def length_set(
    k: int,
    family: PalFamily,
    mode: counting.FormulaMode = counting.FormulaMode.DERIVED,
) -> LengthSet:
    """Admissible palindrome lengths of one family. AS_STATED is the
    printed set; DERIVED recomputes lengths from the actual templates."""
    _require_k3(k)
    if mode is counting.FormulaMode.AS_STATED:
        lengths = set(range(3, _AS_STATED_MAX[family](k) + 1, 2))
        if family is PalFamily.P4:
            lengths.add(2)
    else:
        lengths = set()
        for template, base in _templates(k):
            if base.family is family:
                lengths |= _centered_sublengths(template)
    return LengthSet(k=k, family=family, mode=mode, lengths=frozenset(lengths))


def allowed_lengths(
    k: int, mode: counting.FormulaMode = counting.FormulaMode.DERIVED
) -> LengthSet:
    """Union of the four family length sets: the palindrome lengths that
    occur (infinitely often) in the infinite word."""
    _require_k3(k)
    lengths: frozenset[int] = frozenset()
    for family in PalFamily:
        lengths |= length_set(k, family, mode).lengths
    return LengthSet(k=k, family=None, mode=mode, lengths=lengths)


class Complexity(enum.Enum):
    INFINITE = "infinite"
    ZERO = "zero"


def complexity(
    k: int, length: int, mode: counting.FormulaMode = counting.FormulaMode.DERIVED
) -> Complexity:
    """Palindrome complexity of the infinite word at the given factor
    length: infinite on the admissible set, zero elsewhere. Length 1 is
    rejected: every digit is trivially a palindrome and the dichotomy
    does not apply."""
    _require_k3(k)
    if length < 2:
        raise DomainError(f"complexity is defined for lengths >= 2, got {length}")
    if length in allowed_lengths(k, mode).lengths:
        return Complexity.INFINITE
    return Complexity.ZERO


def classify_palindrome(k: int, w: Word) -> set[PalClass]:
    """All catalog memberships of w; empty means w is not a maximal
    palindromic factor of the infinite word."""
    _require_k3(k)
    if not is_palindrome(w):
        raise DomainError(f"{w!r} is not a palindrome")
    out: set[PalClass] = set()
    if len(w) == 0:
        return out
    for template, base in _templates(k):
        if len(template) != len(w):
            continue
        diff = w.digits[0] - template.digits[0]
        if diff < 0 or diff % k != 0:
            continue
        i = diff // k
        if i < base.shift:
            continue
        if all(a == b + diff for a, b in zip(w.digits, template.digits)):
            out.add(
                PalClass(
                    family=base.family,
                    shift=i,
                    n=base.n,
                    j=base.j,
                    m=base.m,
                    variant=base.variant,
                )
            )
    return out
