"""Alphabets, cyclic strings, rotations, tori and windows.

Symbols are opaque hashable tokens. An :class:`Alphabet` fixes their order,
and every canonical output in the package iterates symbols in that order.

Orientation: a torus is ``rows x cols``. A window of size ``l x w`` covers
``w`` consecutive rows and ``l`` consecutive columns, so each window row is a
length-``l`` piece of one torus row.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import InvalidInput, InvalidLength, InvalidWindow

Symbol = Hashable


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of distinct symbols."""

    symbols: tuple[Symbol, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise InvalidInput("alphabet must be non-empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise InvalidInput(f"alphabet has duplicate symbols: {self.symbols!r}")

    @classmethod
    def from_string(cls, text: str) -> Alphabet:
        """One symbol per character, e.g. ``Alphabet.from_string("01")``."""
        return cls(tuple(text))

    @cached_property
    def _index(self) -> dict[Symbol, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    def index(self, symbol: Symbol) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise InvalidInput(f"symbol {symbol!r} not in alphabet") from None

    def __contains__(self, symbol: object) -> bool:
        try:
            return symbol in self._index
        except TypeError:
            return False

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def words(self, length: int) -> Iterator[tuple[Symbol, ...]]:
        """All words of ``length`` in lexicographic order."""
        return product(self.symbols, repeat=length)

    def key(self, word: Iterable[Symbol]) -> tuple[int, ...]:
        """Sort key ordering words lexicographically by declared symbol order."""
        return tuple(self._index[s] for s in word)

    def __str__(self) -> str:
        return "".join(map(str, self.symbols))


@dataclass(frozen=True)
class CyclicString:
    """A finite string read cyclically: ``s[i]`` means ``s[i mod len(s)]``."""

    symbols: tuple[Symbol, ...]
    alphabet: Alphabet

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise InvalidLength("cyclic string must be non-empty")
        bad = [s for s in self.symbols if s not in self.alphabet]
        if bad:
            raise InvalidInput(f"symbols {bad!r} not in alphabet {self.alphabet}")

    @classmethod
    def from_string(cls, text: str, alphabet: Alphabet | str | None = None) -> CyclicString:
        if alphabet is None:
            alphabet = Alphabet(tuple(sorted(set(text))))
        elif isinstance(alphabet, str):
            alphabet = Alphabet.from_string(alphabet)
        return cls(tuple(text), alphabet)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i: int) -> Symbol:
        return self.symbols[i % len(self.symbols)]

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __str__(self) -> str:
        return "".join(map(str, self.symbols))

    def substrings(self, length: int) -> list[tuple[Symbol, ...]]:
        """The ``len(self)`` cyclic substrings of ``length``, by start offset."""
        return [cyclic_substring(self, k, length) for k in range(len(self))]


@dataclass(frozen=True, order=True)
class Rotation:
    """Forward rotation ``pi_x`` acting on cyclic strings of a fixed length.

    ``Rotation(x, r)(s)[i] == s[i + x]``.
    """

    amount: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise InvalidLength("rotation length must be >= 1")
        if not 0 <= self.amount < self.length:
            raise InvalidInput(f"rotation amount {self.amount} outside [0, {self.length})")

    @classmethod
    def of(cls, amount: int, length: int) -> Rotation:
        return cls(amount % length, length)

    def __call__(self, s: CyclicString) -> CyclicString:
        if len(s) != self.length:
            raise InvalidLength(f"rotation acts on length {self.length}, got {len(s)}")
        return rotate(s, self.amount)

    def __int__(self) -> int:
        return self.amount

    def __str__(self) -> str:
        return str(self.amount)


def rotate(s: CyclicString, x: int) -> CyclicString:
    """Return ``s_x s_{x+1} ... s_{x+r-1}`` (indices mod ``r``)."""
    r = len(s)
    x %= r
    return CyclicString(s.symbols[x:] + s.symbols[:x], s.alphabet)


def cyclic_substring(s: CyclicString | Sequence[Symbol], start: int, length: int) -> tuple[Symbol, ...]:
    if length < 1:
        raise InvalidLength(f"substring length must be >= 1, got {length}")
    seq = s.symbols if isinstance(s, CyclicString) else tuple(s)
    n = len(seq)
    start %= n
    if start + length <= n:
        return seq[start : start + length]
    return tuple(seq[(start + k) % n] for k in range(length))


def least_rotation(s: CyclicString) -> CyclicString:
    """The rotation of ``s`` that is least in the alphabet's order."""
    key = s.alphabet.key
    best = min(range(len(s)), key=lambda k: key(s.symbols[k:] + s.symbols[:k]))
    return rotate(s, best)


def is_debruijn_sequence(s: CyclicString, n: int, alphabet: Alphabet | None = None) -> bool:
    """True iff every length-``n`` word appears exactly once in ``s``."""
    alphabet = alphabet or s.alphabet
    if n < 1 or len(s) != len(alphabet) ** n:
        return False
    if any(sym not in alphabet for sym in s):
        return False
    return len(set(s.substrings(n))) == len(s)


def is_alternating_word(s: Sequence[Symbol], a: Alphabet, b: Alphabet) -> bool:
    """Odd length, ``a`` symbols at even positions and ``b`` symbols at odd ones."""
    if len(s) % 2 != 1:
        return False
    return all((x in a) if i % 2 == 0 else (x in b) for i, x in enumerate(s))


@dataclass(frozen=True)
class Window:
    """A ``w x l`` block: ``cells[i]`` is the length-``l`` window row ``W_{i+1}``."""

    cells: tuple[tuple[Symbol, ...], ...]

    def __post_init__(self) -> None:
        cells = tuple(tuple(row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        if not cells or not cells[0]:
            raise InvalidWindow("window dimensions must be >= 1")
        if any(len(row) != len(cells[0]) for row in cells):
            raise InvalidWindow("window rows have unequal lengths")

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.cells[0])

    @property
    def w(self) -> int:
        return len(self.cells)

    def transpose(self) -> Window:
        return Window(tuple(zip(*self.cells)))

    def __str__(self) -> str:
        return "\n".join("".join(map(str, row)) for row in self.cells)


@dataclass(frozen=True)
class Torus:
    """A ``rows x cols`` array over an alphabet, indexed cyclically both ways."""

    cells: tuple[tuple[Symbol, ...], ...]
    alphabet: Alphabet

    def __post_init__(self) -> None:
        cells = tuple(tuple(row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        if not cells or not cells[0]:
            raise InvalidInput("torus dimensions must be >= 1")
        width = len(cells[0])
        for i, row in enumerate(cells):
            if len(row) != width:
                raise InvalidInput(f"row {i} has length {len(row)}, expected {width}")
            for x in row:
                if x not in self.alphabet:
                    raise InvalidInput(f"symbol {x!r} in row {i} not in alphabet {self.alphabet}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Symbol]], alphabet: Alphabet | str) -> Torus:
        if isinstance(alphabet, str):
            alphabet = Alphabet.from_string(alphabet)
        return cls(tuple(tuple(r) for r in rows), alphabet)

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])

    def __getitem__(self, ij: tuple[int, int]) -> Symbol:
        i, j = ij
        return self.cells[i % self.rows][j % self.cols]

    def row_string(self, i: int) -> CyclicString:
        return CyclicString(self.cells[i % self.rows], self.alphabet)

    def transpose(self) -> Torus:
        return Torus(tuple(zip(*self.cells)), self.alphabet)

    def window(self, row: int, col: int, l: int, w: int) -> Window:  # noqa: E741
        """The ``l x w`` window whose top-left cell is ``(row, col)``."""
        _check_window(self, l, w)
        return Window(
            tuple(cyclic_substring(self.cells[(row + i) % self.rows], col, l) for i in range(w))
        )

    def __str__(self) -> str:
        return "\n".join("".join(map(str, row)) for row in self.cells)


def _check_window(t: Torus, l: int, w: int) -> None:  # noqa: E741
    if not (1 <= w <= t.rows and 1 <= l <= t.cols):
        raise InvalidWindow(
            f"window {l}x{w} (l along rows, w stacked) does not fit a {t.rows}x{t.cols} torus"
        )


def windows_of(t: Torus, l: int, w: int) -> list[Window]:  # noqa: E741
    """Every ``l x w`` window of ``t``, one per anchor cell, in row-major order."""
    _check_window(t, l, w)
    return [t.window(i, j, l, w) for i in range(t.rows) for j in range(t.cols)]
