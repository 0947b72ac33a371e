"""Published fixtures, transcribed verbatim."""

from dbtorus import Alphabet, CyclicString, Rotation, Torus

BINARY = Alphabet.from_string("01")
TERNARY = Alphabet.from_string("012")

SEQ_ORDER3 = "00010111"

TORUS_4x4 = ["1011", "1000", "0001", "1101"]

FAMILY_2_4_3 = ["0001", "1110"]
FAMILY_4_8_5 = ["10100000", "01011111", "11100100", "11011000"]

ALT_ORDER3 = "a0a0b0b0a1a1b1b1"
ALT_ORDER5 = "a0a0a1a1a0a1b1a0b1a1b0a0b0a1b0b0b0a1a1b1b1b0a0a0b1b1a1a0b0b1b0b1"

# vertex walk of the Eulerian cycle on AdeBG({a,b},{0,1},3), 33 vertices
ECYCLE_ORDER3 = (
    "a0a a0a a1a a1a a0a a1b b1a a0b b1a a1b b0a a0b b0a "
    "a1b b0b b0b b0a a1a a1b b1b b1b b0a a0a a0b b1b b1a "
    "a1a a0b b0b b1b b0b b1a a0a"
).split()

# Eulerian cycle of AdeBG({x,y},{a,b},1), edges in the figure's numbering
FIG2_CYCLE = [("x", "a", "x"), ("x", "a", "y"), ("y", "a", "y"), ("y", "a", "x"),
              ("x", "b", "x"), ("x", "b", "y"), ("y", "b", "y"), ("y", "b", "x")]

# 16x4 torus, printed transposed (4 rows of 16)
TORUS_16x4_T = [
    "0000011110111010",
    "0001100100101011",
    "1111100001000101",
    "1110011011010100",
]
FAMILY_16x4 = "0011"
ROTATIONS_16x4 = [0, 0, 1, 0, 2, 0, 3, 1, 1, 2, 1, 3, 2, 2, 3, 3]
CUMULATIVE_16x4 = [0, 0, 0, 1, 1, 3, 3, 2, 3, 0, 2, 3, 2, 0, 2, 1]

# 128x4 torus, window 3x3: family {a=0001, b=1110}, D over rotations mod 4
FAMILY_128x4 = {"a": "0001", "b": "1110"}
ALT_128x4 = (
    "b0b0b0a0a0a0b0a0b1b1b1a1a1a1b1a1b2b2b2a2a2a2b2a2b3b3b3a3a3a3b3a3b0b1b0a1a0a1b0"
    "a1b1b0b1a0a1a0b1a0b2b3b2a3a2a3b2a3b3b2b3a2a3a2b3a2b0b2b0a2a0a2b0a2b1b3b1a3a1a3b1a3"
    "b2b0b2a0a2a0b2a0b3b1b3a1a3a1b3a1b0b3b0a3a0a3b0a3b1b2b1a2a1a2b1a2b2b1b2a1a2a1b2a1b3"
    "b0b3a0a3a0b3a0"
)

# 64x8 torus, window 3x3
FAMILY_64x8 = "00011101"
ALT_64x8 = (
    "a0a0a1a0a2a0a3a0a4a0a5a0a6a0a7a1a1a2a1a3a1a4a1a5a1a6a1a7a2a2a3a2a4a2a5a2a6a2a7"
    "a3a3a4a3a5a3a6a3a7a4a4a5a4a6a4a7a5a5a6a5a7a6a6a7a7"
)

SEQ_TERNARY_ORDER2 = "001021122"
TORUS_9x9 = [
    "001021122",
    "001021122",
    "010211220",
    "021122001",
    "122001021",
    "010211220",
    "122001021",
    "021122001",
    "010211220",
]


def binary(s: str) -> CyclicString:
    return CyclicString(tuple(s), BINARY)


def torus(rows, alphabet=BINARY) -> Torus:
    return Torus.from_rows(rows, alphabet)


def transpose_rows(rows):
    return ["".join(col) for col in zip(*rows)]


def alternating_word(text: str, strings: dict, r: int) -> list:
    """Decode ``a0b3...``: letters name family strings, digits are rotations."""
    out = []
    for i, ch in enumerate(text):
        out.append(strings[ch] if i % 2 == 0 else Rotation(int(ch), r))
    return out
