"""Exact dense linear algebra over the rationals and prime fields.

Everything here is deterministic: elimination always pivots on the leftmost
column using the topmost nonzero row, so echelon forms, nullspace bases, and
basis extensions are reproducible across runs.  Rational entries use
fractions.Fraction; prime-field entries are canonical residues in [0, p).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The rationals (modulus None) or a prime field GF(p)."""

    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.modulus is not None and not _is_prime(self.modulus):
            raise ValueError(f"modulus must be prime: {self.modulus}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @property
    def label(self) -> str:
        return "q" if self.modulus is None else f"p:{self.modulus}"

    @classmethod
    def from_label(cls, label: str) -> "FieldSpec":
        if label == "q":
            return cls(None)
        if label.startswith("p:"):
            return cls(int(label[2:]))
        raise ValueError(f"unknown field label {label!r} (expected 'q' or 'p:<prime>')")

    def convert(self, value) -> object:
        if self.modulus is None:
            return value if isinstance(value, Fraction) else Fraction(value)
        return int(value) % self.modulus

    @property
    def zero(self):
        return Fraction(0) if self.modulus is None else 0

    @property
    def one(self):
        return Fraction(1) if self.modulus is None else 1

    def add(self, a, b):
        return a + b if self.modulus is None else (a + b) % self.modulus

    def sub(self, a, b):
        return a - b if self.modulus is None else (a - b) % self.modulus

    def mul(self, a, b):
        return a * b if self.modulus is None else (a * b) % self.modulus

    def neg(self, a):
        return -a if self.modulus is None else (-a) % self.modulus

    def inv(self, a):
        if self.modulus is None:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return Fraction(1) / a
        if a % self.modulus == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.modulus - 2, self.modulus)

    def parse(self, text: str):
        """Inverse of str() on field elements, for replaying serialized data."""
        if self.modulus is None:
            return Fraction(text)
        return int(text) % self.modulus


QQ = FieldSpec(None)


@dataclass(frozen=True)
class ExactMatrix:
    """An immutable rows x cols matrix with entries in a fixed field."""

    field: FieldSpec
    nrows: int
    ncols: int
    entries: tuple[tuple, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.nrows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.ncols:
                raise ValueError("column count mismatch")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows) -> "ExactMatrix":
        conv = field.convert
        data = tuple(tuple(conv(x) for x in row) for row in rows)
        nrows = len(data)
        ncols = len(data[0]) if data else 0
        return cls(field, nrows, ncols, data)

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "ExactMatrix":
        z = field.zero
        return cls(field, nrows, ncols, tuple(tuple(z for _ in range(ncols)) for _ in range(nrows)))

    @classmethod
    def from_columns(cls, field: FieldSpec, columns, nrows: int) -> "ExactMatrix":
        cols = [tuple(field.convert(x) for x in c) for c in columns]
        for c in cols:
            if len(c) != nrows:
                raise ValueError("column length mismatch")
        data = tuple(tuple(c[r] for c in cols) for r in range(nrows))
        return cls(field, nrows, len(cols), data)

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def mul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        f = self.field
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = f.zero
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    if a != f.zero:
                        acc = f.add(acc, f.mul(a, other.entries[k][j]))
                row.append(acc)
            out.append(tuple(row))
        return ExactMatrix(f, self.nrows, other.ncols, tuple(out))

    def mul_vector(self, vector) -> tuple:
        if len(vector) != self.ncols:
            raise ValueError("dimension mismatch in matrix-vector product")
        f = self.field
        out = []
        for row in self.entries:
            acc = f.zero
            for a, x in zip(row, vector):
                if a != f.zero and x != f.zero:
                    acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return tuple(out)

    def augment_columns(self, vectors) -> "ExactMatrix":
        vecs = [tuple(self.field.convert(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != self.nrows:
                raise ValueError("augmented column length mismatch")
        data = tuple(
            tuple(row) + tuple(v[i] for v in vecs) for i, row in enumerate(self.entries)
        )
        return ExactMatrix(self.field, self.nrows, self.ncols + len(vecs), data)

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for row in self.entries for x in row)


def _rref(field: FieldSpec, rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column indices)."""
    zero = field.zero
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field.inv(rows[r][c])
        if inv != field.one:
            row = rows[r]
            for k in range(c, ncols):
                if row[k] != zero:
                    row[k] = field.mul(row[k], inv)
        prow = rows[r]
        for i in range(len(rows)):
            if i != r:
                factor = rows[i][c]
                if factor != zero:
                    row = rows[i]
                    for k in range(c, ncols):
                        if prow[k] != zero:
                            row[k] = field.sub(row[k], field.mul(factor, prow[k]))
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref(matrix: ExactMatrix) -> tuple[ExactMatrix, tuple[int, ...]]:
    rows = [list(row) for row in matrix.entries]
    rows, pivots = _rref(matrix.field, rows, matrix.ncols)
    return (
        ExactMatrix(matrix.field, matrix.nrows, matrix.ncols, tuple(tuple(r) for r in rows)),
        tuple(pivots),
    )


def rank(matrix: ExactMatrix) -> int:
    rows = [list(row) for row in matrix.entries]
    _, pivots = _rref(matrix.field, rows, matrix.ncols)
    return len(pivots)


def nullspace(matrix: ExactMatrix) -> list[tuple]:
    """Kernel basis from the reduced echelon form, one vector per free column.

    For free column f the basis vector has a 1 in position f and, for each
    pivot (row r, column c), entry -RREF[r][f] in position c.  Vectors are
    returned in increasing free-column order.
    """
    field = matrix.field
    rows = [list(row) for row in matrix.entries]
    rows, pivots = _rref(field, rows, matrix.ncols)
    pivot_set = set(pivots)
    zero, one = field.zero, field.one
    basis = []
    for f in range(matrix.ncols):
        if f in pivot_set:
            continue
        vec = [zero] * matrix.ncols
        vec[f] = one
        for r, c in enumerate(pivots):
            val = rows[r][f]
            if val != zero:
                vec[c] = field.neg(val)
        basis.append(tuple(vec))
    return basis


def solve_in_span(matrix: ExactMatrix, vector) -> tuple | None:
    """A solution x of M x = v with free variables set to zero, or None."""
    field = matrix.field
    v = [field.convert(x) for x in vector]
    if len(v) != matrix.nrows:
        raise ValueError("vector length does not match row count")
    rows = [list(row) + [v[i]] for i, row in enumerate(matrix.entries)]
    rows, pivots = _rref(field, rows, matrix.ncols + 1)
    if matrix.ncols in pivots:
        return None
    zero = field.zero
    x = [zero] * matrix.ncols
    for r, c in enumerate(pivots):
        x[c] = rows[r][matrix.ncols]
    return tuple(x)


def column_space_contains(matrix: ExactMatrix, vectors) -> bool:
    vecs = list(vectors)
    if not vecs:
        return True
    return rank(matrix.augment_columns(vecs)) == rank(matrix)


def echelon_extension(field: FieldSpec, base_columns, candidate_columns, length: int) -> list[int]:
    """Indices of candidates that extend span(base) to span(base + chosen).

    Runs one elimination over the matrix whose columns are the base vectors
    followed by the candidates; a candidate is chosen exactly when its column
    is pivotal, which makes the selection deterministic and order-dependent
    on the candidate list only.  Entries must already be field elements.
    """
    base = list(base_columns)
    nbase = len(base)
    cols = base + list(candidate_columns)
    rows = [[c[r] for c in cols] for r in range(length)]
    _, pivots = _rref(field, rows, len(cols))
    return [c - nbase for c in pivots if c >= nbase]


def rref_gf2(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """RREF over GF(2) on bitmask rows (bit c = entry in column c).

    Same pivot rule as _rref (leftmost column, topmost nonzero row), so the
    pivot column sets agree with the generic routine at modulus 2.
    """
    rows = list(rows)
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        bit = 1 << c
        pivot_row = None
        for i in range(r, nrows):
            if rows[i] & bit:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i] & bit:
                rows[i] ^= prow
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def nullspace_gf2(rows: list[int], ncols: int) -> list[int]:
    """Kernel basis as bitmasks; same canonical vectors as nullspace()."""
    reduced, pivots = rref_gf2(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        fbit = 1 << f
        v = fbit
        for r, c in enumerate(pivots):
            if reduced[r] & fbit:
                v |= 1 << c
        basis.append(v)
    return basis


def echelon_extension_gf2(base_masks, candidate_masks) -> list[int]:
    """echelon_extension on GF(2) column bitmasks.

    Works by incremental reduction against accumulated pivots; a column is
    pivotal exactly when it falls outside the span of everything before it,
    which matches the generic routine's selection.
    """
    pivots: dict[int, int] = {}

    def insert(v: int) -> bool:
        while v:
            b = v.bit_length() - 1
            p = pivots.get(b)
            if p is None:
                pivots[b] = v
                return True
            v ^= p
        return False

    for m in base_masks:
        insert(m)
    return [i for i, m in enumerate(candidate_masks) if insert(m)]
