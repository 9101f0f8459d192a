import re
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from crosscap.errors import UnsupportedParamsError

MIN_GENUS = 13

# families whose members carry an index
INDEXED_FAMILIES = ("a", "b", "c", "d", "e", "alpha", "beta")
SINGLE_FAMILIES = ("xi", "m", "x", "n1")

CURVE_NAME_RE = re.compile(r"^(alpha|beta|a|b|c|d|e)(\d+)$")


class Parity(str, Enum):
    ODD = "odd"
    EVEN = "even"


class Side(str, Enum):
    ONE_SIDED = "one-sided"
    TWO_SIDED = "two-sided"


@dataclass(frozen=True)
class SurfaceParams:
    """Genus g, puncture count n and the derived integers r, k, l.

    Odd mode: g = 2r+1 and k = floor(r/2). Even mode: g = 2r+2 with r = 2k+1.
    l is None when there are no punctures.
    """

    g: int
    n: int
    parity: Parity
    r: int
    k: int
    l: Optional[int]

    @property
    def dim(self) -> int:
        """Dimension of mod-2 homology, g + max(n - 1, 0)."""
        return self.g + max(self.n - 1, 0)

    @property
    def is_even(self) -> bool:
        return self.parity is Parity.EVEN

    @property
    def alpha_crosscap(self) -> int:
        """The crosscap carrying the one-sided curves alpha_i and m."""
        return 2 * self.r + 1 if self.is_even else self.g

    def as_dict(self) -> dict:
        return {"g": self.g, "n": self.n, "parity": self.parity.value, "r": self.r, "k": self.k, "l": self.l}


def build_params(g: int, n: int) -> SurfaceParams:
    """Validates (g, n) and derives r, k, l.

    Parameters
    ----------
    g : int
        Genus, at least 13; even genera must be divisible by 4.
    n : int
        Puncture count; odd in odd mode and even in even mode, 0 always allowed.

    Returns
    -------
    SurfaceParams
        The derived parameters.

    Raises
    ------
    UnsupportedParamsError
        Naming the violated constraint.
    """
    if g < MIN_GENUS:
        raise UnsupportedParamsError(f"genus must be at least {MIN_GENUS}, got {g}")
    if n < 0:
        raise UnsupportedParamsError(f"puncture count must be non-negative, got {n}")
    if g % 2 == 1:
        r = (g - 1) // 2
        if n > 0 and n % 2 == 0:
            raise UnsupportedParamsError("odd mode requires an odd puncture count")
        params = SurfaceParams(g=g, n=n, parity=Parity.ODD, r=r, k=r // 2, l=(n - 1) // 2 if n else None)
    else:
        r = (g - 2) // 2
        if r % 2 == 0:
            raise UnsupportedParamsError(f"even mode requires r odd (g={g} gives r={r})")
        if n % 2 == 1:
            raise UnsupportedParamsError("even mode requires an even puncture count")
        params = SurfaceParams(g=g, n=n, parity=Parity.EVEN, r=r, k=(r - 1) // 2, l=n // 2 if n else None)
    if params.k + 3 > params.r:
        raise UnsupportedParamsError(f"constructions need k+3 <= r, got k={params.k}, r={params.r}")
    return params


@dataclass(frozen=True, order=True)
class CurveId:
    """A named curve such as a3, alpha2, xi or n1."""

    family: str
    index: Optional[int] = None

    @property
    def name(self) -> str:
        return self.family if self.index is None else f"{self.family}{self.index}"

    @classmethod
    def parse(cls, name: str) -> "CurveId":
        if name in SINGLE_FAMILIES:
            return cls(name)
        match = CURVE_NAME_RE.match(name)
        if not match:
            raise ValueError(f"unknown curve name {name!r}")
        return cls(match.group(1), int(match.group(2)))

    def __str__(self) -> str:
        return self.name


def lambda_curves(p: SurfaceParams) -> List[str]:
    """The two-sided curves whose twists, with the slides and y, generate the pure group."""
    names = [f"a{i}" for i in range(1, p.r + 1)]
    names += [f"b{i}" for i in range(1, p.r + (2 if p.is_even else 1))]
    names += [f"c{i}" for i in range(1, p.r + (1 if p.is_even else 0))]
    names += [f"d{i}" for i in range(1, p.r + 1)]
    names += [f"e{i}" for i in range(1, p.n)]
    return names


def lambda_prime(p: SurfaceParams) -> List[str]:
    """The reduced twist set: all a, b1, b2, all c, d1, d2, all e (plus b_{r+1} in even mode)."""
    names = [f"a{i}" for i in range(1, p.r + 1)]
    names += ["b1", "b2"] + ([f"b{p.r + 1}"] if p.is_even else [])
    names += [f"c{i}" for i in range(1, p.r + (1 if p.is_even else 0))]
    names += ["d1", "d2"]
    names += [f"e{i}" for i in range(1, p.n)]
    return names


def auxiliary_curves(p: SurfaceParams) -> List[str]:
    names = [f"alpha{i}" for i in range(1, p.n + 1)]
    if p.is_even:
        names += [f"beta{i}" for i in range(1, p.n + 1)]
    return names + ["xi", "m", "x", "n1"]


def one_sided_curves(p: SurfaceParams) -> List[str]:
    return [name for name in auxiliary_curves(p) if name.startswith(("alpha", "beta")) or name == "m"]


def expected_alphabet_size(p: SurfaceParams) -> int:
    return 11 if p.is_even else 8
