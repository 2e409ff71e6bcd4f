"""
Braid words and MOY diagram words.

A diagram word is a stack of slices read bottom to top. Each slice lists, left to right,
the generators it applies; together they cover every strand of the level below it.
"""

import enum
import logging
import re
from typing import List, Tuple

from pydantic import validator

from ..exceptions import ParseError, UsageError
from ..models.base import FrozenModel


logger = logging.getLogger(__name__)


class Direction(str, enum.Enum):
    """Orientation of a label-1 strand."""
    UP = "up"
    DOWN = "down"

    def flipped(self) -> "Direction":
        return Direction.DOWN if self is Direction.UP else Direction.UP


class Sign(str, enum.Enum):
    """Crossing sign; positive is the overcrossing."""
    PLUS = "+"
    MINUS = "-"

    @classmethod
    def of_letter(cls, letter: int) -> "Sign":
        return cls.PLUS if letter > 0 else cls.MINUS


class GeneratorKind(str, enum.Enum):
    """Elementary pieces of a diagram word."""
    ID = "id"
    CUP = "coev"
    CAP = "ev"
    WIDE = "S"
    CROSS_POS = "cross+"
    CROSS_NEG = "cross-"
    T = "T"


# Pieces spanning upward strands only; T is printable but never evaluated.
_UPWARD_KINDS = {GeneratorKind.WIDE, GeneratorKind.CROSS_POS, GeneratorKind.CROSS_NEG,
                 GeneratorKind.T}

_TOKENS = {
    GeneratorKind.CUP: "(u)",
    GeneratorKind.CAP: "(n)",
    GeneratorKind.WIDE: "[S]",
    GeneratorKind.CROSS_POS: "[X+]",
    GeneratorKind.CROSS_NEG: "[X-]",
    GeneratorKind.T: "[T]",
}


class Generator(FrozenModel):
    """One elementary piece. For cups and caps ``direction`` is that of the left strand."""

    kind: GeneratorKind
    direction: Direction = Direction.UP

    @validator("direction")
    def upward_pieces_point_up(cls, v, values):
        if values.get("kind") in _UPWARD_KINDS and v is not Direction.UP:
            raise ValueError(f"{values['kind'].value} joins upward strands only")
        return v

    def inputs(self) -> Tuple[Direction, ...]:
        if self.kind is GeneratorKind.ID:
            return (self.direction,)
        if self.kind is GeneratorKind.CUP:
            return ()
        if self.kind is GeneratorKind.CAP:
            return (self.direction, self.direction.flipped())
        if self.kind is GeneratorKind.T:
            return (Direction.UP,) * 3
        return (Direction.UP, Direction.UP)

    def outputs(self) -> Tuple[Direction, ...]:
        if self.kind is GeneratorKind.CUP:
            return (self.direction, self.direction.flipped())
        if self.kind is GeneratorKind.CAP:
            return ()
        return self.inputs()

    def token(self) -> str:
        if self.kind is GeneratorKind.ID:
            return "^" if self.direction is Direction.UP else "v"
        return _TOKENS[self.kind]


def identity_piece(direction: Direction) -> Generator:
    return Generator(kind=GeneratorKind.ID, direction=direction)


class Slice(FrozenModel):
    """One horizontal layer of a diagram word."""

    pieces: Tuple[Generator, ...] = ()

    def bottom(self) -> Tuple[Direction, ...]:
        return tuple(d for piece in self.pieces for d in piece.inputs())

    def top(self) -> Tuple[Direction, ...]:
        return tuple(d for piece in self.pieces for d in piece.outputs())

    def placements(self) -> List[Tuple[int, Generator]]:
        """Pieces with the index of their first strand in the level below."""
        placed, position = [], 0
        for piece in self.pieces:
            placed.append((position, piece))
            position += len(piece.inputs())
        return placed

    def is_identity(self) -> bool:
        return all(piece.kind is GeneratorKind.ID for piece in self.pieces)


class DiagramWord(FrozenModel):
    """A morphism of the diagram category as a bottom-to-top stack of slices."""

    source: Tuple[Direction, ...] = ()
    slices: Tuple[Slice, ...] = ()

    @validator("slices")
    def boundaries_match(cls, v, values):
        level = values.get("source", ())
        for height, layer in enumerate(v):
            if layer.bottom() != level:
                raise ValueError(f"Slice {height} does not start on the level below it")
            level = layer.top()
        return v

    @property
    def target(self) -> Tuple[Direction, ...]:
        return self.slices[-1].top() if self.slices else self.source

    @property
    def width(self) -> int:
        """Largest number of strands crossing any level."""
        levels = [len(self.source)] + [len(layer.top()) for layer in self.slices]
        return max(levels)

    def is_closed(self) -> bool:
        return not self.source and not self.target


class BraidWord(FrozenModel):
    """Signed generator indices: ``+i`` is the positive crossing of strands i and i+1."""

    width: int
    letters: Tuple[int, ...] = ()

    @validator("width")
    def positive_width(cls, v):
        if v < 1:
            raise ValueError("Braid width must be at least 1")
        return v

    @validator("letters")
    def indices_in_range(cls, v, values):
        width = values.get("width", 0)
        for letter in v:
            if letter == 0 or abs(letter) >= width:
                raise ValueError(f"Generator index {letter} out of range for width {width}")
        return v

    def is_positive(self) -> bool:
        return all(letter > 0 for letter in self.letters)

    def writhe(self) -> int:
        return sum(1 if letter > 0 else -1 for letter in self.letters)


# Construction

def identity_word(boundary: Tuple[Direction, ...]) -> DiagramWord:
    """One identity slice on ``boundary``."""
    layer = Slice(pieces=tuple(identity_piece(d) for d in boundary))
    return DiagramWord(source=tuple(boundary), slices=(layer,))


def wide_word() -> DiagramWord:
    """The S graph on two upward strands."""
    layer = Slice(pieces=(Generator(kind=GeneratorKind.WIDE),))
    return DiagramWord(source=(Direction.UP, Direction.UP), slices=(layer,))


def compose(a: DiagramWord, b: DiagramWord) -> DiagramWord:
    """Vertical composition a ∘ b: ``b`` below, ``a`` on top.

    Raises:
        UsageError: If the top boundary of ``b`` differs from the bottom boundary of ``a``.
    """
    if b.target != a.source:
        raise UsageError(
            f"Boundary mismatch: top of lower word {_render_level(b.target)} vs "
            f"bottom of upper word {_render_level(a.source)}"
        )
    return DiagramWord(source=b.source, slices=b.slices + a.slices)


def tensor(a: DiagramWord, b: DiagramWord) -> DiagramWord:
    """Horizontal juxtaposition, ``a`` on the left. The shorter word is padded at the top."""
    height = max(len(a.slices), len(b.slices))
    left, right = _padded(a, height), _padded(b, height)
    slices = tuple(Slice(pieces=l.pieces + r.pieces) for l, r in zip(left, right))
    return DiagramWord(source=a.source + b.source, slices=slices)


def _padded(word: DiagramWord, height: int) -> Tuple[Slice, ...]:
    pad = Slice(pieces=tuple(identity_piece(d) for d in word.target))
    return word.slices + (pad,) * (height - len(word.slices))


def normalize(word: DiagramWord) -> DiagramWord:
    """Drop identity slices."""
    return DiagramWord(source=word.source,
                       slices=tuple(layer for layer in word.slices if not layer.is_identity()))


def _crossing_slice(letter: int, width: int, spectators: Tuple[Direction, ...] = ()) -> Slice:
    kind = GeneratorKind.CROSS_POS if letter > 0 else GeneratorKind.CROSS_NEG
    index = abs(letter)
    pieces = ([identity_piece(Direction.UP)] * (index - 1)
              + [Generator(kind=kind)]
              + [identity_piece(Direction.UP)] * (width - index - 1)
              + [identity_piece(d) for d in spectators])
    return Slice(pieces=tuple(pieces))


def braid_slices(b: BraidWord) -> DiagramWord:
    """The open braid on ``b.width`` upward strands."""
    source = (Direction.UP,) * b.width
    if not b.letters:
        return identity_word(source)
    slices = tuple(_crossing_slice(letter, b.width) for letter in b.letters)
    return DiagramWord(source=source, slices=slices)


def close(b: BraidWord) -> DiagramWord:
    """Braid closure: nested coevaluations below, the braid, nested evaluations above."""
    w = b.width
    downs = (Direction.DOWN,) * w
    slices: List[Slice] = []
    for i in range(w):
        slices.append(Slice(pieces=(
            tuple(identity_piece(Direction.UP) for _ in range(i))
            + (Generator(kind=GeneratorKind.CUP),)
            + tuple(identity_piece(Direction.DOWN) for _ in range(i))
        )))
    for letter in b.letters:
        slices.append(_crossing_slice(letter, w, downs))
    for i in reversed(range(w)):
        slices.append(Slice(pieces=(
            tuple(identity_piece(Direction.UP) for _ in range(i))
            + (Generator(kind=GeneratorKind.CAP),)
            + tuple(identity_piece(Direction.DOWN) for _ in range(i))
        )))
    word = DiagramWord(source=(), slices=tuple(slices))
    logger.debug("Closed braid of width %d with %d crossings", w, len(b.letters))
    return word


# Text

_WIDTH_PATTERN = re.compile(r"^\s*w\s*=\s*(\d+)\s*$")
_LETTER_PATTERN = re.compile(r"^[+-]?\d+$")


def parse_braid(text: str) -> BraidWord:
    """Parse ``"w=<width>: <signed indices>"``.

    Raises:
        ParseError: With the character position of the offending token.
    """
    header, separator, body = text.partition(":")
    if not separator:
        raise ParseError("Missing ':' after the width declaration", position=len(text))
    match = _WIDTH_PATTERN.match(header)
    if not match:
        raise ParseError("Expected a width declaration 'w=<int>'", position=0)
    width = int(match.group(1))
    if width < 1:
        raise ParseError("Braid width must be at least 1", position=header.index("=") + 1)

    letters = []
    offset = len(header) + 1
    for token in re.finditer(r"\S+", body):
        position = offset + token.start()
        if not _LETTER_PATTERN.match(token.group()):
            raise ParseError(f"Malformed token {token.group()!r}", position=position)
        letter = int(token.group())
        if letter == 0 or abs(letter) >= width:
            raise ParseError(
                f"Generator index {letter} out of range for width {width}", position=position
            )
        letters.append(letter)
    return BraidWord(width=width, letters=tuple(letters))


def render_braid(b: BraidWord) -> str:
    return f"w={b.width}:" + "".join(f" {letter}" for letter in b.letters)


def _render_level(level: Tuple[Direction, ...]) -> str:
    return "".join("^" if d is Direction.UP else "v" for d in level) or "(empty)"


def render_word(word: DiagramWord) -> str:
    """ASCII slice stack, top slice first."""
    lines = [" ".join(piece.token() for piece in layer.pieces) or "." for layer in word.slices]
    return "\n".join(reversed(lines)) if lines else _render_level(word.source)
