"""Stacking rotated family strings into de Bruijn tori, and reading them back.

An alternating word ``S_1 x_1 S_2 x_2 ... S_v x_v S_{v+1}`` over (family
strings, rotations) is turned into an array whose row i+1 is ``S_{i+1}``
rotated forward by ``x_1 + ... + x_i``. When D is an alternating de Bruijn
sequence of order 2w-1 and the rotations sum to 0 mod r, the array closes
into a v x r torus in which every l x w window occurs once.

Rotations are forward: ``rotate(s, x)[i] == s[i + x]``. With that convention
a window whose rows start at offsets o_1, ..., o_w of their family strings
is spelled by the rotation steps ``o_{i+1} - o_i``.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from .errors import InvalidInput, InvalidWindow, SizeCondition, WrapFailure
from .families import DeBruijnFamily, family_size_condition, generate_family
from .graphs import (
    AlternatingSequence,
    build_alternating_graph,
    eulerian_cycle,
    generate_debruijn_sequence,
    glue_cycle,
    verify_alternating,
)
from .words import (
    Alphabet,
    CyclicString,
    Rotation,
    Symbol,
    Torus,
    Window,
    is_debruijn_sequence,
    rotate,
    windows_of,
)


def _amount(x) -> int:
    if isinstance(x, Rotation):
        return x.amount
    if isinstance(x, int):
        return x
    raise InvalidInput(f"expected a rotation, got {x!r}")


def _split(word) -> tuple[list[CyclicString], list[int]]:
    """Strings S_1..S_{v+1} and rotation amounts x_1..x_v of an alternating word.

    A cyclic :class:`AlternatingSequence` (even length) is closed by repeating
    its first string at the end.
    """
    symbols = tuple(word.symbols if isinstance(word, AlternatingSequence) else word)
    if not symbols:
        raise InvalidInput("empty alternating word")
    strings = list(symbols[0::2])
    rotations = [_amount(x) for x in symbols[1::2]]
    if len(symbols) % 2 == 0:
        strings.append(strings[0])
    for s in strings:
        if not isinstance(s, CyclicString):
            raise InvalidInput(f"expected a cyclic string, got {s!r}")
    lengths = {len(s) for s in strings}
    if len(lengths) != 1:
        raise InvalidInput(f"strings have mixed lengths {sorted(lengths)}")
    r = lengths.pop()
    for x in symbols[1::2]:
        if isinstance(x, Rotation) and x.length != r:
            raise InvalidInput(f"rotation {x} acts on length {x.length}, strings have length {r}")
    return strings, rotations


def sigma_rows(word) -> list[CyclicString]:
    """All v+1 rows: row 0 is S_1, row i is S_{i+1} rotated by x_1 + ... + x_i."""
    strings, rotations = _split(word)
    rows = [strings[0]]
    total = 0
    for s, x in zip(strings[1:], rotations):
        total += x
        rows.append(rotate(s, total))
    return rows


def sigma(word) -> Torus:
    """Stack the strings of ``word`` with cumulative rotations.

    If the last row repeats the first (see :func:`wrap_check`) it is dropped
    and the result is the v x r torus. Otherwise all v+1 rows are returned
    and the grid is not a torus.
    """
    rows = sigma_rows(word)
    if wrap_check(word).ok:
        rows = rows[:-1]
    return Torus(tuple(r.symbols for r in rows), rows[0].alphabet)


@dataclass(frozen=True)
class WrapReport:
    """Diagnostics for whether the stacked array closes up.

    ``closed_form`` is ``|S|^(n+1) r^n (r-1) / 2``, the rotation sum every
    alternating de Bruijn sequence of order 2n+1 shares (n >= 1); None when
    the input was not a verified sequence.
    """

    ok: bool
    same_ends: bool
    rotation_sum: int
    r: int
    num_strings: int | None = None
    n: int | None = None
    strings_even: bool | None = None
    rotations_odd: bool | None = None
    n_at_least_2: bool | None = None
    closed_form: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    @property
    def sufficient_condition(self) -> bool:
        return bool(self.strings_even or self.rotations_odd or self.n_at_least_2)

    def describe(self) -> str:
        parts = [
            f"rotation sum {self.rotation_sum} = {self.rotation_sum % self.r} (mod {self.r})",
            f"first/last string {'equal' if self.same_ends else 'differ'}",
        ]
        if self.n is not None:
            parts.append(
                f"|S| even: {self.strings_even}, r odd: {self.rotations_odd}, n >= 2: {self.n_at_least_2}"
            )
        if self.closed_form is not None:
            parts.append(f"closed-form sum {self.closed_form}")
        return "; ".join(parts)


def rotation_sum_closed_form(num_strings: int, r: int, n: int) -> int:
    if n < 1:
        raise InvalidInput("closed form holds for n >= 1")
    return num_strings ** (n + 1) * r ** (n - 1) * (r * (r - 1) // 2)


def wrap_check(word) -> WrapReport:
    strings, rotations = _split(word)
    r = len(strings[0])
    total = sum(rotations)
    same = strings[0] == strings[-1]
    ok = same and total % r == 0
    if isinstance(word, AlternatingSequence) and word.order is not None:
        n = word.order // 2
        k = len(word.a)
        closed = rotation_sum_closed_form(k, r, n) if n >= 1 and verify_alternating(word) else None
        return WrapReport(ok, same, total, r, k, n, k % 2 == 0, r % 2 == 1, n >= 2, closed)
    return WrapReport(ok, same, total, r)


def interlace(s: CyclicString, a: Symbol) -> AlternatingSequence:
    """``a s_1 a s_2 ... a s_L`` as an alternating sequence over ({a}, alphabet of s).

    The order is set to 2n+1 when ``s`` is a de Bruijn sequence of order n.
    """
    symbols = []
    for x in s:
        symbols.extend((a, x))
    order = None
    k = len(s.alphabet)
    n, size = (1, 1) if k == 1 else (0, 1)
    while k > 1 and size < len(s):
        n += 1
        size *= k
    if size == len(s) and is_debruijn_sequence(s, n):
        order = 2 * n + 1
    return AlternatingSequence(tuple(symbols), Alphabet((a,)), s.alphabet, order)


class Parameters(NamedTuple):
    r: int
    m: int
    v: int


def solve_parameters(alphabet_size: int, l: int, w: int) -> list[Parameters]:  # noqa: E741
    """All (r, m, v) with m r = |O|^l, v = r^(w-1) m^w, r > l and v > w; sorted by r.

    ``r v = |O|^(l w)`` follows from the first two.
    """
    if min(alphabet_size, l, w) < 1:
        raise InvalidInput("alphabet size, l and w must be positive")
    words = alphabet_size**l
    out = []
    for r in range(1, words + 1):
        if words % r:
            continue
        m = words // r
        v = r ** (w - 1) * m**w
        assert r * v == alphabet_size ** (l * w)
        if r > l and v > w:
            out.append(Parameters(r, m, v))
    return out


@dataclass(frozen=True)
class ConstructionRecord:
    """Everything needed to rebuild a torus and locate windows in it."""

    alphabet: Alphabet
    family: DeBruijnFamily
    sequence: AlternatingSequence
    l: int
    w: int

    def __post_init__(self) -> None:
        if tuple(self.sequence.a) != self.family.strings:
            raise InvalidInput("sequence A-alphabet must be the family's strings")
        r = self.family.r
        if tuple(self.sequence.b) != tuple(Rotation(x, r) for x in range(r)):
            raise InvalidInput(f"sequence B-alphabet must be the rotations mod {r}")
        if self.family.order != self.l:
            raise InvalidInput(f"family order {self.family.order} != window l {self.l}")
        if self.sequence.order != 2 * self.w - 1:
            raise InvalidInput(f"sequence order {self.sequence.order} != 2w-1 = {2 * self.w - 1}")

    @property
    def r(self) -> int:
        return self.family.r

    @property
    def m(self) -> int:
        return self.family.m

    @property
    def v(self) -> int:
        return len(self.sequence) // 2

    @property
    def string_indices(self) -> list[int]:
        index = {s: i for i, s in enumerate(self.family.strings)}
        return [index[s] for s in self.sequence.a_letters]

    @property
    def rotations(self) -> list[int]:
        return [x.amount for x in self.sequence.b_letters]

    @cached_property
    def torus(self) -> Torus:
        return sigma(self.sequence)

    @cached_property
    def _row_offsets(self) -> list[int]:
        # cumulative rotation applied to each torus row
        out, total = [], 0
        for x in self.rotations:
            out.append(total % self.r)
            total += x
        return out

    @cached_property
    def _word_positions(self) -> dict[tuple, int]:
        order = 2 * self.w - 1
        return {wd: i for i, wd in enumerate(self.sequence.words_at_even_offsets(order))}

    def to_json(self) -> str:
        return json.dumps(record_to_dict(self), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ConstructionRecord:
        return record_from_dict(json.loads(text))


def _symbol_text(alphabet: Alphabet) -> list[str]:
    if not all(isinstance(s, str) for s in alphabet.symbols):
        raise InvalidInput("only string symbols can be serialized")
    return list(alphabet.symbols)


def record_to_dict(rec: ConstructionRecord) -> dict:
    return {
        "alphabet": _symbol_text(rec.alphabet),
        "l": rec.l,
        "w": rec.w,
        "r": rec.r,
        "m": rec.m,
        "v": rec.v,
        "family": [list(s.symbols) for s in rec.family.strings],
        "string_indices": rec.string_indices,
        "rotations": rec.rotations,
    }


def record_from_dict(data: dict) -> ConstructionRecord:
    try:
        alphabet = Alphabet(tuple(data["alphabet"]))
        l, w = int(data["l"]), int(data["w"])  # noqa: E741
        family = DeBruijnFamily(
            tuple(CyclicString(tuple(s), alphabet) for s in data["family"]), alphabet, l
        )
        indices, rotations = data["string_indices"], data["rotations"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed construction record: {exc}") from None
    if len(indices) != len(rotations):
        raise InvalidInput("string_indices and rotations differ in length")
    r = family.r
    symbols: list = []
    for i, x in zip(indices, rotations):
        symbols.extend((family.strings[i], Rotation(x, r)))
    seq = AlternatingSequence(
        tuple(symbols),
        Alphabet(family.strings),
        Alphabet(tuple(Rotation(x, r) for x in range(r))),
        order=2 * w - 1,
    )
    rec = ConstructionRecord(alphabet, family, seq, l, w)
    for key in ("r", "m", "v"):
        if key in data and int(data[key]) != getattr(rec, key):
            raise InvalidInput(f"record field {key}={data[key]} disagrees with its contents")
    return rec


def alternating_sequence_for(
    family: DeBruijnFamily, w: int, method: str = "auto"
) -> AlternatingSequence:
    """Alternating de Bruijn sequence of order 2w-1 over (family strings, rotations).

    ``method`` is ``"interlace"`` (one-member families only), ``"eulerian"``,
    or ``"auto"`` to pick interlacing whenever it applies.
    """
    r = family.r
    a = Alphabet(family.strings)
    b = Alphabet(tuple(Rotation(x, r) for x in range(r)))
    n = w - 1
    if n == 0:
        # order 1: each string once, rotation steps free; all zero closes the torus
        symbols = []
        for s in family.strings:
            symbols.extend((s, b.symbols[0]))
        return AlternatingSequence(tuple(symbols), a, b, order=1)
    if method == "auto":
        method = "interlace" if family.m == 1 else "eulerian"
    if method == "interlace":
        if family.m != 1:
            raise InvalidInput("interlacing needs a one-member family")
        steps = generate_debruijn_sequence(b, n)
        d = interlace(steps, family.strings[0])
        return AlternatingSequence(d.symbols, a, b, order=2 * n + 1)
    if method == "eulerian":
        g = build_alternating_graph(a, b, 2 * n - 1)
        return glue_cycle(eulerian_cycle(g), g)
    raise InvalidInput(f"unknown method {method!r}")


def build_torus(
    alphabet: Alphabet,
    l: int,  # noqa: E741
    w: int,
    r: int,
    m: int,
    *,
    budget: int | None = None,
    method: str = "auto",
) -> tuple[Torus, ConstructionRecord]:
    """Build a v x r de Bruijn torus with l x w windows.

    A family of m strings of length r and order l is searched for, an
    alternating de Bruijn sequence of order 2w-1 over (family, rotations mod
    r) is produced (interlacing when m == 1, an Eulerian cycle otherwise)
    and stacked with :func:`sigma`.

    Raises:
        SizeCondition: m r != |O|^l.
        NotFound, BudgetExceeded: from the family search.
        WrapFailure: the rotation sum is not 0 mod r, which for an order-3
            sequence happens exactly when m is odd and r is even.
    """
    if min(l, w, r, m) < 1:
        raise InvalidInput("l, w, r and m must be positive")
    k = len(alphabet)
    if not family_size_condition(m, r, k, l):
        raise SizeCondition(f"m * r = {m * r} but |O|^l = {k**l}")
    v = r ** (w - 1) * m**w
    family = generate_family(alphabet, l, m, r, budget=budget)
    seq = alternating_sequence_for(family, w, method)
    if not verify_alternating(seq, 2 * w - 1):
        raise AssertionError("alternating sequence failed its own check")
    if len(seq) // 2 != v:
        raise AssertionError(f"sequence gives {len(seq) // 2} rows, expected {v}")
    report = wrap_check(seq)
    if not report:
        raise WrapFailure(f"array does not close into a torus: {report.describe()}", report)
    rec = ConstructionRecord(alphabet, family, seq, l, w)
    return rec.torus, rec


@dataclass(frozen=True)
class TorusReport:
    ok: bool
    reason: str | None = None
    duplicate: Window | None = None
    positions: tuple[tuple[int, int], ...] = field(default=())
    missing: Window | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        parts = [self.reason or "failed"]
        if self.duplicate is not None:
            where = ", ".join(f"({i},{j})" for i, j in self.positions)
            parts.append("repeated window at " + where + ":\n" + str(self.duplicate))
        if self.missing is not None:
            parts.append("missing window:\n" + str(self.missing))
        return "\n".join(parts)


def verify_torus(t: Torus, l: int, w: int, alphabet: Alphabet | None = None) -> TorusReport:  # noqa: E741
    """True iff every l x w window over the alphabet occurs exactly once in ``t``."""
    alphabet = alphabet or t.alphabet
    expected = len(alphabet) ** (l * w)
    if t.rows * t.cols != expected:
        return TorusReport(False, f"CountMismatch: {t.rows}x{t.cols} cells for {expected} windows")
    if w > t.rows or l > t.cols:
        return TorusReport(False, f"window {l}x{w} does not fit a {t.rows}x{t.cols} torus")
    if any(x not in alphabet for row in t.cells for x in row):
        return TorusReport(False, "symbol outside alphabet")
    first: dict[Window, tuple[int, int]] = {}
    duplicate = None
    positions: tuple = ()
    for idx, win in enumerate(windows_of(t, l, w)):
        at = divmod(idx, t.cols)
        if win in first:
            if duplicate is None:
                duplicate, positions = win, (first[win], at)
            continue
        first[win] = at
    if duplicate is None:
        return TorusReport(True)
    missing = None
    for cells in _all_windows(alphabet, l, w):
        if cells not in first:
            missing = cells
            break
    return TorusReport(False, "Duplicate", duplicate, positions, missing)


def _all_windows(alphabet: Alphabet, l: int, w: int):  # noqa: E741
    from itertools import product

    for flat in product(alphabet.symbols, repeat=l * w):
        yield Window(tuple(flat[i * l : (i + 1) * l] for i in range(w)))


def locate_window(rec: ConstructionRecord, window: Window | Sequence[Sequence[Symbol]]) -> tuple[int, int]:
    """Row and column of the top-left cell of ``window`` in ``rec.torus``.

    Works from the construction rather than scanning the torus: each window
    row W_i is found in the family as (string S(W_i), offset o_i), the word
    ``S(W_1) pi_{o_2-o_1} ... S(W_w)`` is found in the alternating sequence
    at string position k, and the column is ``o_1`` minus the cumulative
    rotation of row k.
    """
    if not isinstance(window, Window):
        window = Window(tuple(tuple(row) for row in window))
    if window.l != rec.l or window.w != rec.w:
        raise InvalidWindow(f"window is {window.l}x{window.w}, record expects {rec.l}x{rec.w}")
    for row in window.cells:
        for x in row:
            if x not in rec.alphabet:
                raise InvalidWindow(f"symbol {x!r} not in alphabet {rec.alphabet}")
    r = rec.r
    hits = [rec.family.locate(row) for row in window.cells]
    word: list = [rec.family.strings[hits[0][0]]]
    for (_, prev), (idx, off) in zip(hits, hits[1:]):
        word.append(Rotation.of(off - prev, r))
        word.append(rec.family.strings[idx])
    k = rec._word_positions[tuple(word)]
    return k, (hits[0][1] - rec._row_offsets[k]) % r


__all__ = [
    "ConstructionRecord",
    "Parameters",
    "TorusReport",
    "WrapReport",
    "alternating_sequence_for",
    "build_torus",
    "interlace",
    "locate_window",
    "record_from_dict",
    "record_to_dict",
    "rotation_sum_closed_form",
    "sigma",
    "sigma_rows",
    "solve_parameters",
    "verify_torus",
    "wrap_check",
]
