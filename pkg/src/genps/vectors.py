"""Integer vectors, dominance orders, signatures, and skew shapes.

Vectors are tuples of nonnegative integers, semantically 1-indexed: entry i
of the math lives at index i-1.  Everything here is a pure function of
immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate

Vector = tuple[int, ...]


class InputError(ValueError):
    """Raised when an argument violates a documented precondition."""


def as_vector(entries) -> Vector:
    """Validate and normalize a sequence of nonnegative integers."""
    v = tuple(int(e) for e in entries)
    if len(v) == 0:
        raise InputError("vector must have length >= 1")
    if any(e < 0 for e in v):
        raise InputError(f"vector entries must be nonnegative, got {v}")
    return v


def prefix_sums(v: Vector) -> Vector:
    return tuple(accumulate(v))


def dominates(v, w) -> bool:
    """Dominance order: every prefix sum of v is >= the one of w."""
    v, w = as_vector(v), as_vector(w)
    if len(v) != len(w):
        raise InputError(f"length mismatch: {len(v)} vs {len(w)}")
    return all(p >= q for p, q in zip(prefix_sums(v), prefix_sums(w)))


def chi(a) -> Vector:
    """The 0/1 vector with the same support as a."""
    return tuple(1 if e > 0 else 0 for e in as_vector(a))


def reverse(a) -> Vector:
    return tuple(as_vector(a)[::-1])


@dataclass(frozen=True)
class Signature:
    """Run lengths (c_1, ..., c_k): c_i = 1 + number of zeros following
    the i-th positive entry."""

    runs: Vector

    def __iter__(self):
        return iter(self.runs)

    def __len__(self):
        return len(self.runs)


def signature(a) -> Signature:
    a = as_vector(a)
    if a[0] <= 0:
        raise InputError("signature requires a_1 > 0")
    runs: list[int] = []
    for e in a:
        if e > 0:
            runs.append(1)
        else:
            runs[-1] += 1
    return Signature(tuple(runs))


@dataclass(frozen=True)
class ZMatching:
    """Greedy noncrossing matching of the zeros of a into the zeros of b,
    in construction order (largest index of a first); z is the largest
    offset i - j over matched pairs, at least 1."""

    pairs: tuple[tuple[int, int], ...]
    z: int


def z_dominate(a, b) -> ZMatching | None:
    """z-domination a ⊵_z b.

    None when a does not dominate b or chi(a) does not dominate chi(b);
    otherwise the unique greedy matching (match the largest unmatched zero
    of a to the largest free zero of b at an index <= it) together with z.
    """
    a, b = as_vector(a), as_vector(b)
    if len(a) != len(b):
        raise InputError(f"length mismatch: {len(a)} vs {len(b)}")
    if not dominates(a, b) or not dominates(chi(a), chi(b)):
        return None
    zeros_b = [j for j in range(1, len(b) + 1) if b[j - 1] == 0]
    free = set(zeros_b)
    pairs = []
    for i in range(len(a), 0, -1):
        if a[i - 1] != 0:
            continue
        j = max((t for t in free if t <= i), default=None)
        # chi-dominance guarantees a partner exists
        assert j is not None
        free.discard(j)
        pairs.append((i, j))
    z = max((i - j for i, j in pairs), default=1)
    return ZMatching(tuple(pairs), max(z, 1))


def one_dominates(a, b) -> bool:
    """a ⊵_1 b: the arcs of the transfer digraph."""
    m = z_dominate(a, b)
    return m is not None and m.z == 1


def conjugate(partition) -> Vector:
    """Transpose of a weakly decreasing sequence (trailing zeros dropped)."""
    parts = [p for p in partition if p > 0]
    if not parts:
        return ()
    out = [0] * parts[0]
    for p in parts:
        for j in range(p):
            out[j] += 1
    return tuple(out)


@dataclass(frozen=True)
class SkewShape:
    """A skew shape outer/inner; both stored with the same number of rows
    (inner padded with zeros).  Row i occupies columns inner[i-1]+1 ..
    outer[i-1]."""

    outer: Vector
    inner: Vector

    def __post_init__(self):
        if len(self.outer) != len(self.inner):
            raise InputError("outer and inner must have the same number of rows")
        for name, part in (("outer", self.outer), ("inner", self.inner)):
            if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
                raise InputError(f"{name} is not weakly decreasing: {part}")
        if any(m > l for l, m in zip(self.outer, self.inner)):
            raise InputError(f"inner not contained in outer: {self.inner} vs {self.outer}")

    @classmethod
    def of(cls, outer, inner=()) -> "SkewShape":
        outer = tuple(int(x) for x in outer)
        inner = tuple(int(x) for x in inner)
        inner = inner + (0,) * (len(outer) - len(inner))
        return cls(outer, inner)

    @property
    def n_rows(self) -> int:
        return len(self.outer)

    @property
    def width(self) -> int:
        return self.outer[0] if self.outer else 0

    @cached_property
    def outer_conjugate(self) -> Vector:
        return conjugate(self.outer)

    @cached_property
    def inner_conjugate(self) -> Vector:
        return conjugate(self.inner)

    def outer_col(self, j: int) -> int:
        """λ'_j, zero past the last column."""
        lam = self.outer_conjugate
        return lam[j - 1] if 1 <= j <= len(lam) else 0

    def inner_col(self, j: int) -> int:
        """μ'_j, zero past the last column."""
        mu = self.inner_conjugate
        return mu[j - 1] if 1 <= j <= len(mu) else 0

    def column_rows(self, j: int) -> range:
        """Rows of the cells in column j (may be empty)."""
        return range(self.inner_col(j) + 1, self.outer_col(j) + 1)

    def row_cols(self, i: int) -> range:
        """Columns of the cells in row i."""
        return range(self.inner[i - 1] + 1, self.outer[i - 1] + 1)

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.n_rows + 1) for j in self.row_cols(i)]

    def __contains__(self, cell: tuple[int, int]) -> bool:
        i, j = cell
        return 1 <= i <= self.n_rows and j in self.row_cols(i)

    @property
    def size(self) -> int:
        return sum(l - m for l, m in zip(self.outer, self.inner))

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, data: dict) -> "SkewShape":
        return cls.of(data["outer"], data["inner"])


def theta(a, b) -> SkewShape:
    """The skew shape θ(a,b) of reversed prefix sums; requires a ⊵ b."""
    a, b = as_vector(a), as_vector(b)
    if not dominates(a, b):
        raise InputError(f"a does not dominate b: {a} vs {b}")
    outer = prefix_sums(a)[::-1]
    inner = prefix_sums(b)[::-1]
    return SkewShape(tuple(outer), tuple(inner))


@dataclass(frozen=True)
class BlockStructure:
    """j broken into consecutive blocks sized by the signature runs of a."""

    blocks: tuple[Vector, ...]

    def __iter__(self):
        return iter(self.blocks)


def block_structure(j, a) -> BlockStructure:
    j, a = as_vector(j), as_vector(a)
    if len(j) != len(a):
        raise InputError(f"length mismatch: {len(j)} vs {len(a)}")
    blocks = []
    pos = 0
    for size in signature(a):
        blocks.append(j[pos:pos + size])
        pos += size
    return BlockStructure(tuple(blocks))
