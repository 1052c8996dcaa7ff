"""Core word machinery: k-bonacci numbers and k-bonacci words over the
infinite alphabet of nonnegative integers.

Two independent generation routes are provided (direct morphism iteration
and the block recurrence); they must agree everywhere and the test suite
holds them to that.
"""

from __future__ import annotations

import enum
import functools
from collections.abc import Iterable, Iterator

# Digits are conceptually machine-width; anything past 2**63 - 1 is treated
# as arithmetic overflow rather than silently growing.
MAX_DIGIT = 2**63 - 1

# Generation guard: |W_n| grows like 2**n, so refuse absurd requests
# instead of filling memory. Overridable per call (and via KBONA_MAX_LEN in
# the CLI).
DEFAULT_MAX_LEN = 1 << 26


class DomainError(ValueError):
    """A parameter is outside the range an operation is defined on."""


class LengthGuardError(ValueError):
    """Generating the requested word would exceed the length guard."""


class DigitOverflowError(OverflowError):
    """A digit computation exceeded the machine-width contract."""


class Word:
    """An immutable finite word of nonnegative integer digits.

    Public slicing is 1-based and inclusive on both ends, matching the
    usual W[j, j'] convention for factors.
    """

    __slots__ = ("digits",)

    digits: tuple[int, ...]

    def __init__(self, digits: Iterable[int] = ()):
        ds = tuple(digits)
        for d in ds:
            if not isinstance(d, int) or d < 0:
                raise DomainError(f"digits must be nonnegative integers, got {d!r}")
            if d > MAX_DIGIT:
                raise DigitOverflowError(f"digit {d} exceeds machine width")
        object.__setattr__(self, "digits", ds)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse a word from text: either contiguous single digits
        ("0102013") or whitespace/comma separated integers ("45 46 45")."""
        text = text.strip()
        if not text:
            return cls()
        if any(sep in text for sep in (" ", ",", "\t")):
            parts = text.replace(",", " ").split()
        else:
            parts = list(text)
        try:
            return cls(int(p) for p in parts)
        except ValueError as exc:
            raise DomainError(f"cannot parse word from {text!r}") from exc

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self.digits == other.digits
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.digits)

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.digits + other.digits)

    def at(self, j: int) -> int:
        """The j-th digit, 1-based."""
        if not 1 <= j <= len(self.digits):
            raise DomainError(f"index {j} out of range 1..{len(self.digits)}")
        return self.digits[j - 1]

    def factor(self, j: int, jp: int) -> "Word":
        """The factor W[j, j'] with 1-based inclusive bounds; empty when
        j' < j."""
        if jp < j:
            return Word()
        if not (1 <= j and jp <= len(self.digits)):
            raise DomainError(
                f"factor bounds [{j},{jp}] out of range 1..{len(self.digits)}"
            )
        return Word(self.digits[j - 1 : jp])

    def reverse(self) -> "Word":
        return Word(self.digits[::-1])

    def shift(self, d: int) -> "Word":
        return shift_add(d, self)

    def alphabet(self) -> set[int]:
        return set(self.digits)

    def is_palindrome(self) -> bool:
        return self.digits == self.digits[::-1]

    def drop_last(self, count: int = 1) -> "Word":
        """Remove the last `count` digits (the paper's suffix-inverse)."""
        if count > len(self.digits):
            raise DomainError("cannot drop more digits than the word has")
        return Word(self.digits[: len(self.digits) - count])

    def drop_first(self, count: int = 1) -> "Word":
        if count > len(self.digits):
            raise DomainError("cannot drop more digits than the word has")
        return Word(self.digits[count:])

    def contains(self, other: "Word") -> bool:
        """Factor test. Uses a bytes fast path when every digit fits."""
        if len(other) == 0:
            return True
        if len(other) > len(self.digits):
            return False
        if all(d < 256 for d in self.digits):
            return bytes(other.digits) in bytes(self.digits)
        n, m = len(self.digits), len(other.digits)
        first = other.digits[0]
        for s in range(n - m + 1):
            if self.digits[s] == first and self.digits[s : s + m] == other.digits:
                return True
        return False

    def to_plain(self) -> str:
        """Contiguous decimal rendering; refused when any digit exceeds 9
        because the result would be ambiguous."""
        if any(d > 9 for d in self.digits):
            raise DomainError(
                "plain format is ambiguous for digits > 9; use spaced or json"
            )
        return "".join(str(d) for d in self.digits)

    def to_spaced(self) -> str:
        return " ".join(str(d) for d in self.digits)

    def __repr__(self) -> str:
        if all(d <= 9 for d in self.digits):
            return f"Word({self.to_plain()!r})"
        return f"Word({self.to_spaced()!r})"


class GenMethod(enum.Enum):
    MORPHISM = "morphism"
    RECURRENCE = "recurrence"


def _require_k(k: int, minimum: int = 2) -> None:
    if not isinstance(k, int) or k < minimum:
        raise DomainError(f"k must be an integer >= {minimum}, got {k!r}")


def kbonacci_number(k: int, n: int) -> int:
    """The n-th k-bonacci number: k-1 leading zeros, then 1, then each
    term the sum of the previous k."""
    _require_k(k)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if n <= k - 2:
        return 0
    if n == k - 1:
        return 1
    window = [0] * (k - 1) + [1]
    for _ in range(n - k + 1):
        nxt = sum(window)
        if nxt > MAX_DIGIT:
            raise DigitOverflowError(f"k-bonacci number f_{n} exceeds machine width")
        window = window[1:] + [nxt]
    return window[-1]


def morphism_image(k: int, digit: int) -> tuple[int, ...]:
    """Image of a single digit under the infinite-alphabet morphism:
    ki+j -> (ki)(ki+j+1) for 0 <= j <= k-2, and ki+(k-1) -> (ki+k)."""
    _require_k(k)
    if digit < 0:
        raise DomainError(f"digit must be >= 0, got {digit}")
    if digit + 1 > MAX_DIGIT:
        raise DigitOverflowError("morphism image digit exceeds machine width")
    i, j = divmod(digit, k)
    if j <= k - 2:
        return (k * i, digit + 1)
    return (digit + 1,)


def apply_morphism(k: int, w: Word) -> Word:
    out: list[int] = []
    for d in w:
        out.extend(morphism_image(k, d))
    return Word(out)


def shift_add(d: int, w: Word) -> Word:
    """Add d to every digit (the paper's d ⊕ W)."""
    if d < 0:
        raise DomainError(f"shift must be >= 0, got {d}")
    if w.digits and max(w.digits) + d > MAX_DIGIT:
        raise DigitOverflowError("shifted digit exceeds machine width")
    return Word(x + d for x in w.digits)


def reduce_mod_k(k: int, w: Word) -> Word:
    _require_k(k)
    return Word(x % k for x in w.digits)


def _check_guard(k: int, n: int, max_len: int | None) -> None:
    guard = DEFAULT_MAX_LEN if max_len is None else max_len
    if kbonacci_number(k, n + k) > guard:
        raise LengthGuardError(
            f"|W_{n}| = f_{n + k} exceeds the length guard {guard} (k={k})"
        )


@functools.lru_cache(maxsize=None)
def _word_digits(k: int, n: int) -> tuple[int, ...]:
    # Block recurrence: W_0 = 0; W_n = W_{n-1}...W_0 n for n < k;
    # W_n = W_{n-1}...W_{n-k+1} (k ⊕ W_{n-k}) for n >= k.
    if n == 0:
        return (0,)
    if n <= k - 1:
        out: list[int] = []
        for i in range(n - 1, -1, -1):
            out.extend(_word_digits(k, i))
        out.append(n)
        return tuple(out)
    out = []
    for i in range(n - 1, n - k, -1):
        out.extend(_word_digits(k, i))
    out.extend(x + k for x in _word_digits(k, n - k))
    return tuple(out)


def word(
    k: int,
    n: int,
    method: GenMethod = GenMethod.RECURRENCE,
    max_len: int | None = None,
) -> Word:
    """The finite k-bonacci word W_n over the infinite alphabet."""
    _require_k(k)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    _check_guard(k, n, max_len)
    if method is GenMethod.MORPHISM:
        w = Word((0,))
        for _ in range(n):
            w = apply_morphism(k, w)
        return w
    return Word(_word_digits(k, n))


@functools.lru_cache(maxsize=None)
def _classical_digits(k: int, n: int) -> tuple[int, ...]:
    # Iterate the finite-alphabet morphism psi_k: i -> 0(i+1) for
    # i <= k-2, (k-1) -> 0, starting from the single digit 0.
    w = (0,)
    for _ in range(n):
        out: list[int] = []
        for d in w:
            if d <= k - 2:
                out.append(0)
                out.append(d + 1)
            else:
                out.append(0)
        w = tuple(out)
    return w


def classical_word(k: int, n: int, max_len: int | None = None) -> Word:
    """The classical k-bonacci word F_n over the alphabet {0, ..., k-1}."""
    _require_k(k)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    _check_guard(k, n, max_len)
    return Word(_classical_digits(k, n))


def suffix_pair(k: int, n: int) -> tuple[int, int]:
    """The last two digits of W_n in closed form: (n-j, n) when
    n ≡ j (mod k) with 1 <= j <= k-1, and (n-k+1, n) when k divides n."""
    _require_k(k, 3)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    j = n % k
    if j == 0:
        return (n - k + 1, n)
    return (n - j, n)
