"""
Formal complexes of width-2 atoms and the torus-link pipeline.

A complex stores, per homological degree, an ordered tuple of summands and a sparse matrix
of morphisms ``d[i][(row, col)]`` from summand ``col`` in degree i to summand ``row`` in
degree i + 1. Composing two complexes goes through a paired complex whose summands keep
both tensor factors; splitting resolves every S∘S summand and yields a plain complex.
"""

import enum
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..config import PivotOrder
from ..exceptions import ComplexInvariantError, UnsplittableEntryError, UsageError
from ..utils.validation import ValidationUtils
from .diagram import Sign
from .morphisms import AtomKind, BasisMor, Mor, TensorMor


logger = logging.getLogger(__name__)

Entry = Union[Mor, TensorMor]


class SplitChoice(str, enum.Enum):
    """The two isomorphisms S∘S ≅ S{-1} ⊕ S{1}."""
    PHI = "phi"
    PSI = "psi"

    def other(self) -> "SplitChoice":
        return SplitChoice.PSI if self is SplitChoice.PHI else SplitChoice.PHI


@dataclass(frozen=True, order=True)
class ShiftedAtom:
    atom: AtomKind
    shift: int

    def shifted(self, m: int) -> "ShiftedAtom":
        return ShiftedAtom(self.atom, self.shift + m)

    def __str__(self) -> str:
        return f"{self.atom.value}{{{self.shift}}}"


@dataclass(frozen=True)
class PairedAtom:
    """upper ∘ lower, kept as a pair until splitting."""

    upper: ShiftedAtom
    lower: ShiftedAtom

    @property
    def atom(self) -> AtomKind:
        if self.upper.atom is AtomKind.ID2:
            return self.lower.atom
        if self.lower.atom is AtomKind.ID2:
            return self.upper.atom
        if self.upper.atom is AtomKind.S and self.lower.atom is AtomKind.S:
            return AtomKind.SS
        raise UsageError(f"Cannot compose atoms {self.upper} and {self.lower}")

    @property
    def shift(self) -> int:
        return self.upper.shift + self.lower.shift

    def collapsed(self) -> ShiftedAtom:
        return ShiftedAtom(self.atom, self.shift)

    def __str__(self) -> str:
        return f"({self.upper}o{self.lower})"


class FormalComplex:
    """Bounded complex with sparse matrix differentials. Empty degrees and zero entries
    are dropped on construction."""

    def __init__(self, objects: Mapping[int, Sequence], differentials: Mapping[int, Mapping]):
        self._objects: Dict[int, Tuple] = {i: tuple(s) for i, s in objects.items() if s}
        self._differentials: Dict[int, Dict[Tuple[int, int], Entry]] = {}
        for i, entries in differentials.items():
            kept = {key: e for key, e in entries.items() if not e.is_zero()}
            for row, col in kept:
                if col >= len(self.summands(i)) or row >= len(self.summands(i + 1)):
                    raise UsageError(f"Entry ({row}, {col}) of d{i} has no summand")
            if kept:
                self._differentials[i] = kept

    def degrees(self) -> List[int]:
        return sorted(self._objects)

    def summands(self, i: int) -> Tuple:
        return self._objects.get(i, ())

    def differential(self, i: int) -> Dict[Tuple[int, int], Entry]:
        return dict(self._differentials.get(i, {}))

    def differential_degrees(self) -> List[int]:
        return sorted(self._differentials)

    def entry(self, i: int, row: int, col: int) -> Optional[Entry]:
        return self._differentials.get(i, {}).get((row, col))

    def summand_count(self) -> int:
        return sum(len(s) for s in self._objects.values())

    def is_empty(self) -> bool:
        return not self._objects

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return (self._objects == other._objects
                and self._differentials == other._differentials)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.summand_count()} summands)"

    def __str__(self) -> str:
        return render(self)


class KRComplex(FormalComplex):
    """Complex of ShiftedAtom summands with Mor entries."""


class PairedComplex(FormalComplex):
    """Totalized composite of two complexes; PairedAtom summands, TensorMor entries."""


# Constructors

def identity_complex() -> KRComplex:
    """Id2{0} in degree 0."""
    return KRComplex({0: [ShiftedAtom(AtomKind.ID2, 0)]}, {})


def sigma_complex(sign: Sign, n: int) -> KRComplex:
    """σ⁺ = [Id2{n-1} →χ0 S{n}] and σ⁻ = [S{-n} →χ1 Id2{1-n}], Id2 in degree 0."""
    ValidationUtils.validate_level(n)
    if Sign(sign) is Sign.PLUS:
        return KRComplex(
            {0: [ShiftedAtom(AtomKind.ID2, n - 1)], 1: [ShiftedAtom(AtomKind.S, n)]},
            {0: {(0, 0): Mor.basis(BasisMor.CHI0)}},
        )
    return KRComplex(
        {-1: [ShiftedAtom(AtomKind.S, -n)], 0: [ShiftedAtom(AtomKind.ID2, 1 - n)]},
        {-1: {(0, 0): Mor.basis(BasisMor.CHI1)}},
    )


def zigzag_complex(k: int, n: int) -> KRComplex:
    """Id2 →χ0 S{1} →α S{3} →γ S{5} →α ⋯ with k arrows, shifted by (n-1)k."""
    ValidationUtils.validate_crossings(k)
    ValidationUtils.validate_level(n)
    base = (n - 1) * k
    objects = {0: [ShiftedAtom(AtomKind.ID2, base)]}
    differentials = {0: {(0, 0): Mor.basis(BasisMor.CHI0)}}
    for j in range(1, k + 1):
        objects[j] = [ShiftedAtom(AtomKind.S, base + 2 * j - 1)]
        if j < k:
            arrow = BasisMor.ALPHA if j % 2 == 1 else BasisMor.GAMMA
            differentials[j] = {(0, 0): Mor.basis(arrow)}
    return KRComplex(objects, differentials)


def shift(c: KRComplex, m: int) -> KRComplex:
    """Apply the grading shift {m} to every summand."""
    objects = {i: [s.shifted(m) for s in c.summands(i)] for i in c.degrees()}
    return KRComplex(objects, {i: c.differential(i) for i in c.differential_degrees()})


# Invariants

def check_d_squared(c: FormalComplex) -> None:
    """Raise unless d_{i+1} ∘ d_i = 0 entrywise for every i."""
    for i in c.differential_degrees():
        first, second = c.differential(i), c.differential(i + 1)
        if not second:
            continue
        composites: Dict[Tuple[int, int], Entry] = {}
        for (middle, col), inner in first.items():
            for (row, source), outer in second.items():
                if source != middle:
                    continue
                product = outer.after(inner)
                previous = composites.get((row, col))
                composites[(row, col)] = product if previous is None else previous + product
        for (row, col), value in composites.items():
            if not value.is_zero():
                raise ComplexInvariantError(
                    f"d{i + 1} o d{i} is {value} from summand {col} to summand {row}",
                    degree=i,
                )


def _homogeneous(entry: Entry, source, target) -> bool:
    if isinstance(entry, TensorMor):
        return all(
            upper.connects(source.upper.atom, target.upper.atom)
            and lower.connects(source.lower.atom, target.lower.atom)
            and upper.degree + lower.degree == target.shift - source.shift
            for (upper, lower), _ in entry.items()
        )
    return all(
        key.connects(source.atom, target.atom) and key.degree == target.shift - source.shift
        for key, _ in entry.items()
    )


def check_homogeneity(c: FormalComplex) -> None:
    """Raise unless every entry matches its atoms and preserves the total grading."""
    for i in c.differential_degrees():
        for (row, col), entry in c.differential(i).items():
            source, target = c.summands(i)[col], c.summands(i + 1)[row]
            if not _homogeneous(entry, source, target):
                raise ComplexInvariantError(
                    f"Entry {entry} from {source} to {target} is not homogeneous", degree=i
                )


def check_invariants(c: FormalComplex) -> None:
    check_homogeneity(c)
    check_d_squared(c)


# Composition

def _lift(mor: Mor, upper: bool, sign: int = 1) -> TensorMor:
    terms = {((key, BasisMor.ONE) if upper else (BasisMor.ONE, key)): sign * coeff
             for key, coeff in mor.items()}
    return TensorMor(terms)


def totalize(c: KRComplex, d: KRComplex) -> PairedComplex:
    """Total complex of c ∘ d with c on top.

    Summands of total degree t are the pairs (i, p; j, r) with i + j = t, ordered by
    (i, p, r). The lower differential carries the sign (-1)^i.
    """
    cells = sorted(
        ((i + j, i, p, r, j) for i in c.degrees() for j in d.degrees()
         for p in range(len(c.summands(i))) for r in range(len(d.summands(j)))),
    )
    position: Dict[Tuple[int, int, int, int], Tuple[int, int]] = {}
    objects: Dict[int, List[PairedAtom]] = defaultdict(list)
    for t, i, p, r, j in cells:
        position[(i, p, j, r)] = (t, len(objects[t]))
        objects[t].append(PairedAtom(c.summands(i)[p], d.summands(j)[r]))

    differentials: Dict[int, Dict[Tuple[int, int], TensorMor]] = defaultdict(dict)

    def add(t: int, target: Tuple[int, int], source: Tuple[int, int], value: TensorMor):
        key = (target[1], source[1])
        previous = differentials[t].get(key)
        differentials[t][key] = value if previous is None else previous + value

    for (i, p, j, r), source in position.items():
        t = source[0]
        for (row, col), mor in c.differential(i).items():
            if col == p:
                add(t, position[(i + 1, row, j, r)], source, _lift(mor, upper=True))
        for (row, col), mor in d.differential(j).items():
            if col == r:
                sign = -1 if i % 2 else 1
                add(t, position[(i, p, j + 1, row)], source, _lift(mor, upper=False, sign=sign))

    return PairedComplex(objects, differentials)


def _collapse(term: Tuple[BasisMor, BasisMor], source: PairedAtom, target: PairedAtom,
              coeff: Fraction) -> Mor:
    upper, lower = term
    if source.upper.atom is AtomKind.ID2 and target.upper.atom is AtomKind.ID2:
        return Mor.basis(lower, coeff)
    if source.lower.atom is AtomKind.ID2 and target.lower.atom is AtomKind.ID2:
        return Mor.basis(upper, coeff)
    raise UnsplittableEntryError(entry=f"{upper.value}o{lower.value} from {source} to {target}")


# (upper, lower, choice) -> entries (target part, coefficient basis) into a split summand
_INTO_SPLIT = {
    (BasisMor.ONE, BasisMor.CHI0, SplitChoice.PHI): ((0, BasisMor.ONE),),
    (BasisMor.CHI0, BasisMor.ONE, SplitChoice.PHI): ((0, BasisMor.ONE), (1, BasisMor.ALPHA)),
    (BasisMor.CHI0, BasisMor.ONE, SplitChoice.PSI): ((0, BasisMor.ONE), (1, BasisMor.GAMMA)),
}

# (upper, lower, choice) -> entries (source part, basis) out of a split summand
_OUT_OF_SPLIT = {
    (BasisMor.ONE, BasisMor.CHI1, SplitChoice.PHI): ((1, BasisMor.ONE),),
    (BasisMor.CHI1, BasisMor.ONE, SplitChoice.PHI): ((1, BasisMor.ONE), (0, BasisMor.ALPHA)),
}

# (upper, lower, source choice, target choice) -> entries (target part, source part)
_BETWEEN_SPLITS = {
    (BasisMor.ONE, BasisMor.ALPHA, SplitChoice.PHI, SplitChoice.PSI): ((0, 1),),
    (BasisMor.ONE, BasisMor.GAMMA, SplitChoice.PSI, SplitChoice.PHI): ((0, 1),),
    (BasisMor.ONE, BasisMor.ONE, SplitChoice.PHI, SplitChoice.PHI): ((0, 0), (1, 1)),
    (BasisMor.ONE, BasisMor.ONE, SplitChoice.PSI, SplitChoice.PSI): ((0, 0), (1, 1)),
}


def split_ss(c: PairedComplex) -> KRComplex:
    """Replace every SS{m} by S{m-1} ⊕ S{m+1} and rewrite adjacent entries.

    SS summands take the splittings φ, ψ, φ, ... in order of increasing degree.

    Raises:
        UnsplittableEntryError: If an entry next to an SS summand has no rewrite.
    """
    choices: Dict[Tuple[int, int], SplitChoice] = {}
    placement: Dict[Tuple[int, int], List[int]] = {}
    objects: Dict[int, List[ShiftedAtom]] = defaultdict(list)
    choice = SplitChoice.PHI
    for i in c.degrees():
        for p, summand in enumerate(c.summands(i)):
            if summand.atom is AtomKind.SS:
                choices[(i, p)] = choice
                logger.debug("Splitting %s in degree %d with %s", summand, i, choice.value)
                choice = choice.other()
                placement[(i, p)] = [len(objects[i]), len(objects[i]) + 1]
                objects[i].append(ShiftedAtom(AtomKind.S, summand.shift - 1))
                objects[i].append(ShiftedAtom(AtomKind.S, summand.shift + 1))
            else:
                placement[(i, p)] = [len(objects[i])]
                objects[i].append(summand.collapsed())

    differentials: Dict[int, Dict[Tuple[int, int], Mor]] = defaultdict(dict)

    def add(i: int, row: int, col: int, value: Mor):
        previous = differentials[i].get((row, col))
        differentials[i][(row, col)] = value if previous is None else previous + value

    for i in c.differential_degrees():
        for (row, col), entry in c.differential(i).items():
            source, target = c.summands(i)[col], c.summands(i + 1)[row]
            source_choice, target_choice = choices.get((i, col)), choices.get((i + 1, row))
            rows, cols = placement[(i + 1, row)], placement[(i, col)]
            for (upper, lower), coeff in entry.items():
                described = f"{upper.value}o{lower.value} from {source} to {target}"
                if source_choice is None and target_choice is None:
                    add(i, rows[0], cols[0], _collapse((upper, lower), source, target, coeff))
                elif source_choice is None:
                    rule = _INTO_SPLIT.get((upper, lower, target_choice))
                    if rule is None:
                        raise UnsplittableEntryError(entry=described)
                    for part, basis in rule:
                        add(i, rows[part], cols[0], Mor.basis(basis, coeff))
                elif target_choice is None:
                    rule = _OUT_OF_SPLIT.get((upper, lower, source_choice))
                    if rule is None:
                        raise UnsplittableEntryError(entry=described)
                    for part, basis in rule:
                        add(i, rows[0], cols[part], Mor.basis(basis, coeff))
                else:
                    rule = _BETWEEN_SPLITS.get((upper, lower, source_choice, target_choice))
                    if rule is None:
                        raise UnsplittableEntryError(entry=described)
                    for target_part, source_part in rule:
                        add(i, rows[target_part], cols[source_part], Mor.one(coeff))

    return KRComplex(objects, differentials)


def compose(c: KRComplex, d: KRComplex, check: bool = False) -> KRComplex:
    """c ∘ d: totalize, then split the S∘S summands."""
    paired = totalize(c, d)
    if check:
        check_invariants(paired)
    result = split_ss(paired)
    if check:
        check_invariants(result)
    return result


# Elimination

def _find_pivot(objects: Dict[int, List[int]], atoms: Dict[int, ShiftedAtom],
                differentials: Dict[int, Dict[Tuple[int, int], Mor]],
                order: PivotOrder) -> Optional[Tuple[int, int, int, Fraction]]:
    candidates = []
    for i, entries in differentials.items():
        for (target, source), mor in entries.items():
            coeff = mor.unit_coefficient()
            if coeff is not None and atoms[target] == atoms[source]:
                key = (i, objects[i + 1].index(target), objects[i].index(source))
                candidates.append((key, (i, target, source, coeff)))
    if not candidates:
        return None
    pick = min if PivotOrder(order) is PivotOrder.LEFTMOST else max
    return pick(candidates, key=lambda candidate: candidate[0])[1]


def gaussian_eliminate(c: KRComplex, order: PivotOrder = PivotOrder.LEFTMOST,
                       check: bool = False) -> KRComplex:
    """Cancel invertible entries between equal shifted atoms until none is left.

    For a pivot p: x → y in degree i, every entry w: s → t with s ≠ x, t ≠ y becomes
    w - v∘p⁻¹∘u, where u: s → y and v: x → t; then x and y are removed.
    """
    ids = count()
    atoms: Dict[int, ShiftedAtom] = {}
    objects: Dict[int, List[int]] = {}
    for i in c.degrees():
        objects[i] = []
        for summand in c.summands(i):
            key = next(ids)
            atoms[key] = summand
            objects[i].append(key)
    differentials: Dict[int, Dict[Tuple[int, int], Mor]] = defaultdict(dict)
    for i in c.differential_degrees():
        for (row, col), mor in c.differential(i).items():
            differentials[i][(objects[i + 1][row], objects[i][col])] = mor

    before = c.summand_count()
    while True:
        pivot = _find_pivot(objects, atoms, differentials, order)
        if pivot is None:
            break
        i, y, x, coeff = pivot
        entries = differentials[i]
        incoming = {s: e for (t, s), e in entries.items() if t == y and s != x}
        outgoing = {t: e for (t, s), e in entries.items() if s == x and t != y}
        for s, u in incoming.items():
            for t, v in outgoing.items():
                correction = v.after(u).scale(1 / coeff)
                entries[(t, s)] = entries.get((t, s), Mor()) - correction
        differentials[i] = {(t, s): e for (t, s), e in entries.items()
                            if t != y and s != x and not e.is_zero()}
        differentials[i - 1] = {(t, s): e for (t, s), e in differentials[i - 1].items()
                                if t != x}
        differentials[i + 1] = {(t, s): e for (t, s), e in differentials[i + 1].items()
                                if s != y}
        objects[i].remove(x)
        objects[i + 1].remove(y)

    result = KRComplex(
        {i: [atoms[key] for key in keys] for i, keys in objects.items()},
        {
            i: {(objects[i + 1].index(t), objects[i].index(s)): e for (t, s), e in entries.items()}
            for i, entries in differentials.items() if entries
        },
    )
    logger.debug("Elimination (%s): %d -> %d summands", PivotOrder(order).value, before,
                 result.summand_count())
    if check:
        check_invariants(result)
    return result


def normalize_signs(c: KRComplex) -> KRComplex:
    """Flip summand signs so that entries have positive leading coefficients."""
    signs: Dict[Tuple[int, int], int] = {}
    for i in c.degrees():
        for (row, col), mor in sorted(c.differential(i).items()):
            source_sign = signs.setdefault((i, col), 1)
            if (i + 1, row) not in signs:
                signs[(i + 1, row)] = 1 if source_sign * mor.leading_coefficient() > 0 else -1
    differentials = {
        i: {(row, col): mor.scale(signs.get((i + 1, row), 1) * signs.get((i, col), 1))
            for (row, col), mor in c.differential(i).items()}
        for i in c.differential_degrees()
    }
    return KRComplex({i: c.summands(i) for i in c.degrees()}, differentials)


def torus2_complex(k: int, n: int, order: PivotOrder = PivotOrder.LEFTMOST,
                   check: bool = True) -> KRComplex:
    """Reduced complex of (σ⁺)^k: fold compose and elimination over k copies of σ⁺."""
    ValidationUtils.validate_crossings(k)
    crossing = sigma_complex(Sign.PLUS, n)
    result = crossing
    for step in range(2, k + 1):
        result = gaussian_eliminate(compose(crossing, result, check=check), order, check=check)
        logger.debug("Torus complex after %d crossings: %d summands", step,
                     result.summand_count())
    return normalize_signs(result)


# Inspection

def graded_summands(c: FormalComplex) -> Dict[int, Tuple]:
    """Summands per degree as sorted tuples, ignoring order and differentials."""
    return {i: tuple(sorted(c.summands(i), key=str)) for i in c.degrees()}


def render(c: FormalComplex) -> str:
    """Text form: one line per degree, followed by the nonzero entries of its differential."""
    if c.is_empty():
        return "0"
    lines = []
    for i in c.degrees():
        lines.append(f"deg {i}: " + " + ".join(str(s) for s in c.summands(i)))
        for (row, col), entry in sorted(c.differential(i).items()):
            lines.append(f"  d{i}[{row},{col}] = {entry}")
    return "\n".join(lines)


def same_graded_summands(complexes: Iterable[FormalComplex]) -> bool:
    signatures = [graded_summands(c) for c in complexes]
    return all(s == signatures[0] for s in signatures[1:])
