import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from crosscap.errors import ParityMismatchError, PermutationError

ELEMENT_SEP_RE = r" *[, ] *"
CYCLE_RE = rf"\(( *\d+({ELEMENT_SEP_RE}\d+)* *)?\) *"


class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is the image of i.

    Products compose as functions: ``(p * q)(i) == p(q(i))``.
    """

    __slots__ = ("_images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise PermutationError(f"not a permutation of 1..{len(images)}: {images}")
        self._images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self._images)

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    def __call__(self, point: int) -> int:
        return self._images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise PermutationError(f"cannot compose permutations on {self.n} and {other.n} points")
        return Permutation(self._images[j - 1] for j in other._images)

    def inverse(self) -> "Permutation":
        inverse = [0] * self.n
        for point, image in enumerate(self._images, start=1):
            inverse[image - 1] = point
        return Permutation(inverse)

    def is_identity(self) -> bool:
        return all(image == point for point, image in enumerate(self._images, start=1))

    def first_moved(self) -> Optional[int]:
        for point, image in enumerate(self._images, start=1):
            if image != point:
                return point
        return None

    def cycles(self) -> List[Tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen: Set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                seen.add(point)
                cycle.append(point)
                point = self(point)
            out.append(tuple(cycle))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, n={self.n})"


def from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Permutation:
    """Builds the permutation with exactly the given disjoint cycles.

    Parameters
    ----------
    cycles : Iterable[Sequence[int]]
        Cycles of points in 1..n; unlisted points are fixed.
    n : int
        Number of points.

    Returns
    -------
    Permutation
        The permutation.

    Raises
    ------
    PermutationError
        If a point repeats or lies outside 1..n.
    """
    images = list(range(1, n + 1))
    used: Set[int] = set()
    for cycle in cycles:
        for point in cycle:
            if not 1 <= point <= n:
                raise PermutationError(f"point {point} outside 1..{n}")
            if point in used:
                raise PermutationError(f"repeated point {point}")
            used.add(point)
        for position, point in enumerate(cycle):
            images[point - 1] = cycle[(position + 1) % len(cycle)]
    return Permutation(images)


def format_cycles(p: Permutation) -> str:
    """Cycle notation such as ``(1 5)(2 4)``; the identity prints as ``()``."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, cycle)) + ")" for cycle in cycles)


def parse_cycles(text: str, n: int) -> Permutation:
    """Parses cycle notation; elements may be separated by spaces or commas."""
    cycles = []
    stripped = re.sub(r"\s", " ", text).strip()
    for match in re.finditer(CYCLE_RE + r"|.", stripped):
        token = match.group().strip()
        if len(token) < 2:
            raise PermutationError(f"could not parse permutation {text!r}")
        body = token[1:-1].strip()
        if body:
            cycles.append([int(point) for point in re.split(ELEMENT_SEP_RE, body)])
    return from_cycles(cycles, n)


@dataclass(frozen=True)
class BSGS:
    """A base and strong generating set with one transversal per base point.

    ``transversals[i]`` maps each point of the i-th basic orbit to an element
    carrying ``base[i]`` to it.
    """

    n: int
    base: Tuple[int, ...]
    strong_generators: Tuple[Permutation, ...]
    transversals: Tuple[Dict[int, Permutation], ...]

    @property
    def orbit_lengths(self) -> Tuple[int, ...]:
        return tuple(len(transversal) for transversal in self.transversals)


def _transversal(point: int, generators: Sequence[Permutation], n: int) -> Dict[int, Permutation]:
    transversal = {point: Permutation.identity(n)}
    queue = deque([point])
    while queue:
        current = queue.popleft()
        for generator in generators:
            image = generator(current)
            if image not in transversal:
                transversal[image] = generator * transversal[current]
                queue.append(image)
    return transversal


def _sift(
    element: Permutation,
    base: Sequence[int],
    transversals: Sequence[Dict[int, Permutation]],
    start: int = 0,
) -> Tuple[Permutation, int]:
    for level in range(start, len(base)):
        image = element(base[level])
        if image not in transversals[level]:
            return element, level
        element = transversals[level][image].inverse() * element
    return element, len(base)


def schreier_sims(generators: Sequence[Permutation], n: Optional[int] = None) -> BSGS:
    """Computes a BSGS for the group generated by ``generators``.

    Deterministic: the base is extended with the first point moved by each new
    strong generator and Schreier generators are visited in orbit order.

    Parameters
    ----------
    generators : Sequence[Permutation]
        Generators, all on the same number of points.
    n : int, optional
        Number of points; required when ``generators`` is empty.

    Returns
    -------
    BSGS
        The base and strong generating set.
    """
    sizes = {g.n for g in generators}
    if n is not None:
        sizes.add(n)
    if len(sizes) > 1:
        raise PermutationError(f"generators act on different point sets: {sorted(sizes)}")
    n = sizes.pop() if sizes else 0

    gens = [g for g in generators if not g.is_identity()]
    base: List[int] = []
    for g in gens:
        if all(g(b) == b for b in base):
            base.append(g.first_moved())
    strong = [[g for g in gens if all(g(b) == b for b in base[:level])] for level in range(len(base))]
    transversals = [_transversal(base[level], strong[level], n) for level in range(len(base))]

    level = len(base) - 1
    while level >= 0:
        residue = _unsifted_schreier_generator(level, base, strong, transversals)
        if residue is None:
            level -= 1
            continue
        element, depth = residue
        if depth == len(base):
            base.append(element.first_moved())
            strong.append([])
            transversals.append({})
        for lower in range(level + 1, depth + 1):
            strong[lower].append(element)
            transversals[lower] = _transversal(base[lower], strong[lower], n)
        level = depth

    generators_out: List[Permutation] = []
    for level_gens in strong:
        for g in level_gens:
            if g not in generators_out:
                generators_out.append(g)
    return BSGS(
        n=n,
        base=tuple(base),
        strong_generators=tuple(generators_out),
        transversals=tuple(transversals),
    )


def _unsifted_schreier_generator(level, base, strong, transversals):
    transversal = transversals[level]
    for point, coset_rep in list(transversal.items()):
        for generator in strong[level]:
            schreier = transversal[generator(point)].inverse() * generator * coset_rep
            if schreier.is_identity():
                continue
            residue, depth = _sift(schreier, base, transversals, start=level + 1)
            if depth < len(base) or not residue.is_identity():
                return residue, depth
    return None


def group_order(bsgs: BSGS) -> int:
    return math.prod(bsgs.orbit_lengths)


def contains(bsgs: BSGS, p: Permutation) -> bool:
    """Exact membership by sifting through the stabilizer chain."""
    if p.n != bsgs.n:
        return False
    residue, depth = _sift(p, bsgs.base, bsgs.transversals)
    return depth == len(bsgs.base) and residue.is_identity()


def closure(generators: Sequence[Permutation], n: int) -> Set[Permutation]:
    """All elements of the generated group by breadth-first search; small n only."""
    identity = Permutation.identity(n)
    seen = {identity}
    queue = deque([identity])
    while queue:
        element = queue.popleft()
        for generator in generators:
            product = generator * element
            if product not in seen:
                seen.add(product)
                queue.append(product)
    return seen


def lemma_generators(n: int, parity: str) -> Tuple[Permutation, Permutation, Permutation]:
    """The three reflections r1, r2, r3 of the terminal Sym_n lemma.

    Odd n = 2l+1::

        r1 = (1,n)(2,n-1)...(l,l+2)
        r2 = (2,n)(3,n-1)...(l+1,l+2)
        r3 = (2,n-1)...(l,l+2)

    Even n = 2l::

        r1 = (1,n)(2,n-1)...(l,l+1)
        r2 = (2,n)...(l,l+2)
        r3 = (2,n-1)...(l,l+1)

    Empty ranges give identity factors.

    Raises
    ------
    ParityMismatchError
        If n does not have the requested parity.
    """
    if n < 1:
        raise ParityMismatchError("the Sym_n lemma needs n >= 1")
    if parity not in ("odd", "even"):
        raise ParityMismatchError(f"unknown parity {parity!r}")
    if (n % 2 == 1) != (parity == "odd"):
        raise ParityMismatchError(f"n={n} does not have {parity} parity")
    half = n // 2
    r1 = [(i, n + 1 - i) for i in range(1, half + 1)]
    upper = half + 1 if parity == "odd" else half
    r2 = [(i, n + 2 - i) for i in range(2, upper + 1)]
    r3 = [(i, n + 1 - i) for i in range(2, half + 1)]
    return from_cycles(r1, n), from_cycles(r2, n), from_cycles(r3, n)


def symn_generated(n: int, parity: str) -> bool:
    """True iff r1, r2, r3 generate the full symmetric group on n points."""
    return group_order(schreier_sims(lemma_generators(n, parity), n)) == math.factorial(n)
