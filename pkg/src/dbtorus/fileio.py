"""Text file formats and netpbm rendering.

Torus file::

    v r ALPHABET
    <v lines of r symbols>

Family file::

    m r l ALPHABET
    <m lines of r symbols>

Window file: ``w`` lines of ``l`` symbols, top row first.

Every symbol is a single visible character; writers are byte-deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import InvalidInput, ParseError, RenderError
from .families import DeBruijnFamily
from .words import Alphabet, CyclicString, Symbol, Torus, Window


def _alphabet_text(alphabet: Alphabet) -> str:
    for s in alphabet.symbols:
        if not (isinstance(s, str) and len(s) == 1 and s.isprintable() and not s.isspace()):
            raise InvalidInput(f"symbol {s!r} is not a single visible character")
    return "".join(alphabet.symbols)


def _content_lines(text: str) -> list[tuple[int, str]]:
    return [(i, line.strip()) for i, line in enumerate(text.splitlines(), 1) if line.strip()]


def _parse_rows(lines, count: int, width: int, alphabet: Alphabet, what: str) -> list[str]:
    if len(lines) != count:
        last = lines[-1][0] if lines else 1
        raise ParseError(f"expected {count} {what} rows, found {len(lines)}", last)
    rows = []
    for n, line in lines:
        if len(line) != width:
            raise ParseError(f"row has length {len(line)}, expected {width}", n)
        bad = sorted(set(line) - set(alphabet.symbols))
        if bad:
            raise ParseError(f"symbols {''.join(bad)!r} not in alphabet {alphabet}", n)
        rows.append(line)
    return rows


def _header(lines, fields: int, what: str) -> tuple[list[int], Alphabet]:
    if not lines:
        raise ParseError(f"empty {what} file", 1)
    n, header = lines[0]
    parts = header.split()
    if len(parts) != fields:
        raise ParseError(f"{what} header needs {fields} fields, got {len(parts)}", n)
    try:
        nums = [int(x) for x in parts[:-1]]
    except ValueError:
        raise ParseError(f"non-integer field in {what} header", n) from None
    if any(x < 1 for x in nums):
        raise ParseError(f"{what} header sizes must be positive", n)
    try:
        alphabet = Alphabet.from_string(parts[-1])
    except InvalidInput as exc:
        raise ParseError(str(exc), n) from None
    return nums, alphabet


def write_torus(t: Torus) -> str:
    alpha = _alphabet_text(t.alphabet)
    body = "".join("".join(row) + "\n" for row in t.cells)
    return f"{t.rows} {t.cols} {alpha}\n{body}"


def read_torus(text: str) -> Torus:
    lines = _content_lines(text)
    (v, r), alphabet = _header(lines, 3, "torus")
    rows = _parse_rows(lines[1:], v, r, alphabet, "torus")
    return Torus.from_rows(rows, alphabet)


def write_family(f: DeBruijnFamily) -> str:
    alpha = _alphabet_text(f.alphabet)
    body = "".join(str(s) + "\n" for s in f.strings)
    return f"{f.m} {f.r} {f.order} {alpha}\n{body}"


def read_family_strings(text: str) -> tuple[list[CyclicString], int, Alphabet]:
    """Members, order and alphabet of a family file, without checking the family."""
    lines = _content_lines(text)
    (m, r, l), alphabet = _header(lines, 4, "family")  # noqa: E741
    rows = _parse_rows(lines[1:], m, r, alphabet, "family")
    return [CyclicString(tuple(row), alphabet) for row in rows], l, alphabet


def read_family(text: str) -> DeBruijnFamily:
    strings, l, alphabet = read_family_strings(text)  # noqa: E741
    try:
        return DeBruijnFamily(tuple(strings), alphabet, l)
    except InvalidInput as exc:
        raise ParseError(str(exc)) from None


def read_window(text: str) -> Window:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty window file", 1)
    width = len(lines[0][1])
    for n, line in lines:
        if len(line) != width:
            raise ParseError(f"window row has length {len(line)}, expected {width}", n)
    return Window(tuple(tuple(line) for _, line in lines))


def write_window(w: Window) -> str:
    return "".join("".join(row) + "\n" for row in w.cells)


def default_levels(alphabet: Alphabet) -> dict[Symbol, int]:
    """Evenly spaced grays, first symbol white, last symbol black.

    For a binary alphabet this is the usual picture: 0 white, 1 black.
    """
    n = len(alphabet)
    if n == 1:
        return {alphabet.symbols[0]: 255}
    return {s: (255 * (n - 1 - k)) // (n - 1) for k, s in enumerate(alphabet.symbols)}


@dataclass(frozen=True)
class RenderSpec:
    format: str = "pbm"
    levels: dict = field(default_factory=dict)
    transpose: bool = False

    def __post_init__(self) -> None:
        if self.format not in ("text", "pgm", "pbm"):
            raise RenderError(f"unknown render format {self.format!r}")
        if len(set(self.levels.values())) != len(self.levels):
            raise RenderError("gray levels must be distinct")
        if any(not 0 <= g <= 255 for g in self.levels.values()):
            raise RenderError("gray levels must lie in 0..255")


def render_grid(t: Torus, spec: RenderSpec | None = None, out: str | Path | None = None) -> bytes:
    """Render one pixel per cell; write to ``out`` if given and return the bytes."""
    spec = spec or RenderSpec()
    if spec.transpose:
        t = t.transpose()
    if spec.format == "text":
        data = (str(t) + "\n").encode()
    else:
        levels = spec.levels or default_levels(t.alphabet)
        missing = [s for s in t.alphabet.symbols if s not in levels]
        if missing:
            raise RenderError(f"no gray level for symbols {missing!r}")
        data = _pbm(t, levels) if spec.format == "pbm" else _pgm(t, levels)
    if out is not None:
        Path(out).write_bytes(data)
    return data


def _pgm(t: Torus, levels: dict) -> bytes:
    header = f"P5\n{t.cols} {t.rows}\n255\n".encode()
    return header + bytes(levels[x] for row in t.cells for x in row)


def _pbm(t: Torus, levels: dict) -> bytes:
    # PBM bit 1 = black; anything darker than mid-gray is drawn black
    distinct = sorted({levels[s] for s in t.alphabet.symbols})
    if len(t.alphabet) > 2 or len(distinct) > 2:
        raise RenderError("PBM output needs a binary alphabet; use pgm")
    header = f"P4\n{t.cols} {t.rows}\n".encode()
    out = bytearray(header)
    for row in t.cells:
        bits = [1 if levels[x] < 128 else 0 for x in row]
        for i in range(0, len(bits), 8):
            chunk = bits[i : i + 8]
            byte = 0
            for b in chunk:
                byte = (byte << 1) | b
            out.append(byte << (8 - len(chunk)))
    return bytes(out)
