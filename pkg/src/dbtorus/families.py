"""De Bruijn families: m cyclic strings of length r covering every l-word once.

A family is the same thing as a partition of the edges of the order l-1
de Bruijn graph into m edge-disjoint closed walks of length r, which is the
view :func:`generate_family` searches in.
"""

from __future__ import annotations

import os
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import BudgetExceeded, InvalidInput, NotDeBruijn, NotFound, SizeCondition
from .graphs import generate_debruijn_sequence
from .words import Alphabet, CyclicString, Symbol, is_debruijn_sequence, least_rotation

Word = tuple[Symbol, ...]

DEFAULT_BUDGET = 2_000_000
BUDGET_ENV = "TORUS_SEARCH_BUDGET"


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInput(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InvalidInput(f"{BUDGET_ENV} must be positive")
    return value


def family_size_condition(m: int, r: int, alphabet_size: int, l: int) -> bool:  # noqa: E741
    return m * r == alphabet_size**l


@dataclass(frozen=True)
class FamilyReport:
    ok: bool
    duplicated: tuple[Word, ...] = ()
    missing: tuple[Word, ...] = ()
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _as_strings(strings: Iterable[CyclicString | str], alphabet: Alphabet | None) -> list[CyclicString]:
    out = []
    for s in strings:
        if isinstance(s, str):
            if alphabet is None:
                raise InvalidInput("plain strings need an explicit alphabet")
            s = CyclicString(tuple(s), alphabet)
        out.append(s)
    return out


def verify_family(
    strings: Iterable[CyclicString | str], l: int, alphabet: Alphabet | None = None  # noqa: E741
) -> FamilyReport:
    """Check that the cyclic l-substrings of ``strings`` are every l-word exactly once."""
    members = _as_strings(strings, alphabet)
    if not members:
        return FamilyReport(False, message="empty family")
    alphabet = alphabet or members[0].alphabet
    lengths = {len(s) for s in members}
    if len(lengths) != 1:
        return FamilyReport(False, message=f"members have differing lengths {sorted(lengths)}")
    for s in members:
        if any(x not in alphabet for x in s):
            return FamilyReport(False, message=f"member {s} uses symbols outside {alphabet}")
    counts = Counter(w for s in members for w in s.substrings(l))
    duplicated = tuple(sorted((w for w, c in counts.items() if c > 1), key=alphabet.key))
    total = len(members) * lengths.pop()
    if not duplicated and total == len(alphabet) ** l:
        return FamilyReport(True)
    missing = tuple(w for w in alphabet.words(l) if w not in counts)
    parts = []
    if duplicated:
        parts.append("repeated: " + ", ".join("".join(map(str, w)) for w in duplicated))
    if missing:
        parts.append("missing: " + ", ".join("".join(map(str, w)) for w in missing))
    if not parts:
        parts.append(f"{total} substrings for {len(alphabet) ** l} words")
    return FamilyReport(False, duplicated, missing, "; ".join(parts))


@dataclass(frozen=True)
class DeBruijnFamily:
    """A verified de Bruijn family, stored canonically.

    Each member is rotated to its least form and members are sorted, so two
    families compare equal exactly when they are the same unordered set of
    cyclic strings.
    """

    strings: tuple[CyclicString, ...]
    alphabet: Alphabet
    order: int

    def __post_init__(self) -> None:
        members = [least_rotation(s) for s in self.strings]
        members.sort(key=lambda s: self.alphabet.key(s.symbols))
        object.__setattr__(self, "strings", tuple(members))
        report = verify_family(members, self.order, self.alphabet)
        if not report:
            raise InvalidInput(f"not a de Bruijn family of order {self.order}: {report.message}")

    @property
    def m(self) -> int:
        return len(self.strings)

    @property
    def r(self) -> int:
        return len(self.strings[0])

    @cached_property
    def occurrences(self) -> dict[Word, tuple[int, int]]:
        """Map each l-word to (member index, start offset)."""
        return {
            w: (i, k)
            for i, s in enumerate(self.strings)
            for k, w in enumerate(s.substrings(self.order))
        }

    def locate(self, word: Sequence[Symbol]) -> tuple[int, int]:
        return self.occurrences[tuple(word)]

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.strings)) + "}"


def family_from_sequence(s: CyclicString, l: int) -> DeBruijnFamily:  # noqa: E741
    if not is_debruijn_sequence(s, l):
        raise NotDeBruijn(f"{s} is not a de Bruijn sequence of order {l}")
    return DeBruijnFamily((s,), s.alphabet, l)


def generate_family(
    alphabet: Alphabet, l: int, m: int, r: int, *, budget: int | None = None  # noqa: E741
) -> DeBruijnFamily:
    """Find a de Bruijn family with ``m`` members of length ``r`` and order ``l``.

    ``m == 1`` is a de Bruijn sequence and is generated directly. Otherwise a
    depth-first search partitions the order l-1 de Bruijn graph into closed
    walks. Walks are built one at a time, each starting on the smallest
    unused edge, so every partition is reached at most once. Two prunes keep
    it small: the last l-1 steps of a walk are forced by its start vertex,
    and after each finished walk every connected component of unused edges
    must hold a multiple of ``r`` edges.

    Raises:
        SizeCondition: ``m * r != |alphabet| ** l``.
        NotFound: the search space holds no family.
        BudgetExceeded: more than ``budget`` edge placements were tried.
    """
    if min(l, m, r) < 1:
        raise InvalidInput("l, m and r must be positive")
    k = len(alphabet)
    if not family_size_condition(m, r, k, l):
        raise SizeCondition(f"m * r = {m * r} but |A|^l = {k**l}")
    if r <= l:
        raise InvalidInput(f"string length r = {r} must exceed the order l = {l}")
    if m == 1:
        return DeBruijnFamily((generate_debruijn_sequence(alphabet, l),), alphabet, l)

    path = _partition_search(k, l, m, r, budget or DEFAULT_BUDGET)
    lead = k ** (l - 1)
    members = []
    for i in range(m):
        walk = path[i * r : (i + 1) * r]
        members.append(CyclicString(tuple(alphabet.symbols[e // lead] for e in walk), alphabet))
    return DeBruijnFamily(tuple(members), alphabet, l)


def _partition_search(k: int, l: int, m: int, r: int, budget: int) -> list[int]:  # noqa: E741
    # Edge e encodes an l-word in base k; tail = first l-1 symbols, head = last l-1.
    n_edges = k**l
    n_vertices = k ** (l - 1)
    powers = [k**i for i in range(l + 1)]
    used = bytearray(n_edges)
    path: list[int] = []

    def candidates(p: int) -> list[int]:
        step = p % r
        if step == 0:
            return [used.index(0)]
        u = path[-1] % n_vertices
        target = path[p - step] // k
        rem = r - 1 - step
        out = []
        for x in range(k):
            e = u * k + x
            if used[e]:
                continue
            if rem <= l - 1:
                h = e % n_vertices
                if h % powers[l - 1 - rem] != target // powers[rem]:
                    continue
            out.append(e)
        return out

    def components_ok() -> bool:
        parent = list(range(n_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        free = [e for e in range(n_edges) if not used[e]]
        for e in free:
            a, b = find(e // k), find(e % n_vertices)
            if a != b:
                parent[a] = b
        sizes = Counter(find(e // k) for e in free)
        return all(c % r == 0 for c in sizes.values())

    expansions = 0
    stack: list[list] = [[candidates(0), 0]]
    while True:
        frame = stack[-1]
        options, i = frame
        if i >= len(options):
            stack.pop()
            if not stack:
                raise NotFound(f"no de Bruijn family with m={m}, r={r}, l={l} over {k} symbols")
            used[path.pop()] = 0
            continue
        frame[1] += 1
        expansions += 1
        if expansions > budget:
            raise BudgetExceeded(f"family search exceeded {budget} expansions", expansions)
        e = options[i]
        used[e] = 1
        path.append(e)
        p = len(path)
        if p == n_edges:
            return path
        if p % r == 0 and not components_ok():
            used[path.pop()] = 0
            continue
        stack.append([candidates(p), 0])
