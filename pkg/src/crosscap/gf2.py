"""Dense vectors and matrices over GF(2), the mod-2 intersection form and transvections.

Homology classes live in the basis mu_1..mu_g (crosscaps) followed by
delta_1..delta_{n-1} (punctures). Vectors and matrices are immutable numpy
``uint8`` arrays; bit-packed bytes serve as hash keys.
"""

from typing import Iterable, List, Sequence, Tuple

import numpy as np

from crosscap.errors import DimensionMismatchError, OneSidedCurveError, SingularMatrixError


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.ascontiguousarray(array, dtype=np.uint8) & 1
    array.setflags(write=False)
    return array


class Gf2Vector:
    """A vector over GF(2)."""

    __slots__ = ("_bits",)

    def __init__(self, bits: Iterable[int]):
        array = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits)
        if array.ndim != 1 or array.size == 0:
            raise DimensionMismatchError("a vector needs a positive dimension")
        self._bits = _frozen(array.astype(np.int64) % 2)

    @classmethod
    def zeros(cls, dim: int) -> "Gf2Vector":
        return cls(np.zeros(dim, dtype=np.uint8))

    @classmethod
    def from_support(cls, dim: int, support: Iterable[int]) -> "Gf2Vector":
        """Builds the vector whose 0-based coordinates in ``support`` are 1.

        Repeated coordinates cancel, so the result is the mod-2 sum of unit vectors.
        """
        array = np.zeros(dim, dtype=np.int64)
        for index in support:
            if not 0 <= index < dim:
                raise DimensionMismatchError(f"coordinate {index} outside dimension {dim}")
            array[index] += 1
        return cls(array)

    @classmethod
    def from_string(cls, text: str) -> "Gf2Vector":
        """Parses a bit-string, leftmost character is the first coordinate."""
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bit-string: {text!r}")
        return cls(np.frombuffer(text.encode(), dtype=np.uint8) - ord("0"))

    @property
    def dim(self) -> int:
        return int(self._bits.size)

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    def support(self) -> Tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self._bits))

    def is_zero(self) -> bool:
        return not self._bits.any()

    def to_string(self) -> str:
        return "".join("1" if bit else "0" for bit in self._bits)

    def __add__(self, other: "Gf2Vector") -> "Gf2Vector":
        _check_dims(self.dim, other.dim)
        return Gf2Vector(self._bits ^ other._bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Vector):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self._bits, other._bits))

    def __hash__(self) -> int:
        return hash((self.dim, np.packbits(self._bits).tobytes()))

    def __iter__(self):
        return (int(bit) for bit in self._bits)

    def __repr__(self) -> str:
        return f"Gf2Vector('{self.to_string()}')"


class Gf2Matrix:
    """A square matrix over GF(2); column j is the image of basis vector j."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        array = np.asarray(rows)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
            raise DimensionMismatchError(f"expected a non-empty square matrix, got shape {array.shape}")
        self._rows = _frozen(array.astype(np.int64) % 2)

    @classmethod
    def identity(cls, dim: int) -> "Gf2Matrix":
        return cls(np.eye(dim, dtype=np.uint8))

    @classmethod
    def from_columns(cls, columns: Sequence[Gf2Vector]) -> "Gf2Matrix":
        dims = {column.dim for column in columns}
        if len(dims) != 1 or len(columns) not in dims:
            raise DimensionMismatchError("columns must form a square matrix")
        return cls(np.stack([column.bits for column in columns], axis=1))

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "Gf2Matrix":
        return cls(np.stack([Gf2Vector.from_string(row).bits for row in rows]))

    @property
    def dim(self) -> int:
        return int(self._rows.shape[0])

    @property
    def rows(self) -> np.ndarray:
        return self._rows

    def column(self, j: int) -> Gf2Vector:
        return Gf2Vector(self._rows[:, j])

    def apply(self, v: Gf2Vector) -> Gf2Vector:
        _check_dims(self.dim, v.dim)
        return Gf2Vector(self._rows.astype(np.int64) @ v.bits.astype(np.int64))

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._rows, np.eye(self.dim, dtype=np.uint8)))

    def to_strings(self) -> List[str]:
        return ["".join("1" if bit else "0" for bit in row) for row in self._rows]

    def __matmul__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        return mat_compose(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return bool(np.array_equal(self._rows, other._rows))

    def __hash__(self) -> int:
        return hash((self.dim, np.packbits(self._rows).tobytes()))

    def __repr__(self) -> str:
        return f"Gf2Matrix({self.to_strings()})"


class IntersectionForm:
    """The symmetric mod-2 intersection pairing on homology."""

    __slots__ = ("_gram",)

    def __init__(self, gram: Gf2Matrix):
        if not np.array_equal(gram.rows, gram.rows.T):
            raise ValueError("intersection form must be symmetric")
        self._gram = gram

    @classmethod
    def standard(cls, genus: int, punctures: int) -> "IntersectionForm":
        """Identity on the crosscap block, zero on the puncture block."""
        dim = genus + max(punctures - 1, 0)
        gram = np.zeros((dim, dim), dtype=np.uint8)
        gram[np.arange(genus), np.arange(genus)] = 1
        return cls(Gf2Matrix(gram))

    @property
    def gram(self) -> Gf2Matrix:
        return self._gram

    @property
    def dim(self) -> int:
        return self._gram.dim

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntersectionForm):
            return NotImplemented
        return self._gram == other._gram

    def __hash__(self) -> int:
        return hash(self._gram)


def _check_dims(*dims: int):
    if len(set(dims)) != 1:
        raise DimensionMismatchError(f"dimension mismatch: {sorted(set(dims))}")


def pairing(form: IntersectionForm, u: Gf2Vector, v: Gf2Vector) -> int:
    """Returns u^T G v over GF(2).

    Parameters
    ----------
    form : IntersectionForm
        The intersection form G.
    u, v : Gf2Vector
        Classes of matching dimension.

    Returns
    -------
    int
        0 or 1.

    Raises
    ------
    DimensionMismatchError
        If the dimensions of u, v and the form differ.
    """
    _check_dims(form.dim, u.dim, v.dim)
    gram = form.gram.rows.astype(np.int64)
    return int(u.bits.astype(np.int64) @ gram @ v.bits.astype(np.int64)) % 2


def transvection(form: IntersectionForm, c: Gf2Vector) -> Gf2Matrix:
    """The homology action of the Dehn twist along a two-sided class c.

    x -> x + <x, c> c, i.e. I + c (G c)^T.

    Raises
    ------
    OneSidedCurveError
        If c pairs to 1 with itself.
    """
    if pairing(form, c, c):
        raise OneSidedCurveError("cannot twist along one-sided curve")
    return _rank_one_update(form, target=c, functional=c)


def slide_matrix(form: IntersectionForm, loop: Gf2Vector, target: Gf2Vector) -> Gf2Matrix:
    """x -> x + <x, loop> target, the homology action of pushing a puncture around ``loop``.

    A zero ``target`` gives the identity.
    """
    return _rank_one_update(form, target=target, functional=loop)


def _rank_one_update(form: IntersectionForm, target: Gf2Vector, functional: Gf2Vector) -> Gf2Matrix:
    _check_dims(form.dim, target.dim, functional.dim)
    covector = form.gram.rows.astype(np.int64) @ functional.bits.astype(np.int64)
    update = np.outer(target.bits.astype(np.int64), covector)
    return Gf2Matrix(np.eye(form.dim, dtype=np.int64) + update)


def preserves_form(matrix: Gf2Matrix, form: IntersectionForm) -> bool:
    """True iff M^T G M = G, i.e. pairings of all basis pairs are preserved."""
    _check_dims(matrix.dim, form.dim)
    rows = matrix.rows.astype(np.int64)
    gram = form.gram.rows.astype(np.int64)
    return bool(np.array_equal((rows.T @ gram @ rows) % 2, gram))


def mat_compose(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    """The product A B (B acts first)."""
    _check_dims(a.dim, b.dim)
    return Gf2Matrix(a.rows.astype(np.int64) @ b.rows.astype(np.int64))


def mat_inverse(a: Gf2Matrix) -> Gf2Matrix:
    """Gauss-Jordan inverse over GF(2).

    Raises
    ------
    SingularMatrixError
        If A is not invertible.
    """
    n = a.dim
    work = np.concatenate([a.rows.copy(), np.eye(n, dtype=np.uint8)], axis=1)
    for col in range(n):
        pivots = np.flatnonzero(work[col:, col])
        if pivots.size == 0:
            raise SingularMatrixError("matrix is singular over GF(2)")
        pivot = col + int(pivots[0])
        if pivot != col:
            work[[col, pivot]] = work[[pivot, col]]
        rows = np.flatnonzero(work[:, col])
        rows = rows[rows != col]
        work[rows] ^= work[col]
    return Gf2Matrix(work[:, n:])
