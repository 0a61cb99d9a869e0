"""Dense square max-plus matrices with exact entries.

Multiplication, powers by repeated squaring, the Kleene star via an
all-pairs closure, diagonal scalings, the strict entrywise domination
order, and a bit-exact text format.  Matrices are immutable values;
every operation returns a fresh matrix.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .semiring import MaxPlusScalar, as_scalar, negate

# Internal representation: rows of Fraction-or-None, None encoding -inf.
RawRow = list  # list[Fraction | None]


class MaxPlusMatrix:
    """An n-by-n matrix of max-plus scalars, n >= 1."""

    __slots__ = ("n", "_rows")

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        if n == 0:
            raise ValueError("dimension must be >= 1")
        raw = []
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            raw.append([as_scalar(x).value for x in row])
        self.n = n
        self._rows = raw

    @classmethod
    def _from_raw(cls, raw: list[RawRow]) -> "MaxPlusMatrix":
        m = object.__new__(cls)
        m.n = len(raw)
        m._rows = raw
        return m

    def raw(self) -> list[RawRow]:
        """Internal Fraction-or-None rows; callers must not mutate."""
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> MaxPlusScalar:
        i, j = ij
        return MaxPlusScalar(self._rows[i][j])

    def entries(self) -> Iterable[tuple[int, int, MaxPlusScalar]]:
        for i in range(self.n):
            for j in range(self.n):
                yield i, j, MaxPlusScalar(self._rows[i][j])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MaxPlusMatrix):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self._rows))

    def __repr__(self) -> str:
        return f"MaxPlusMatrix.parse({render_matrix(self)!r})"


def identity(n: int) -> MaxPlusMatrix:
    """Max-plus identity: 0 on the diagonal, -inf elsewhere."""
    return MaxPlusMatrix._from_raw(
        [[Fraction(0) if i == j else None for j in range(n)] for i in range(n)]
    )


def zeros(n: int) -> MaxPlusMatrix:
    """The all-(-inf) matrix, the additive zero."""
    return MaxPlusMatrix._from_raw([[None] * n for _ in range(n)])


def _check_dims(a: MaxPlusMatrix, b: MaxPlusMatrix) -> None:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")


def mat_mul(a: MaxPlusMatrix, b: MaxPlusMatrix) -> MaxPlusMatrix:
    """Exact max-plus product: (ab)_ij = max_k (a_ik + b_kj)."""
    _check_dims(a, b)
    n = a.n
    arows = a._rows
    bcols = [[b._rows[k][j] for k in range(n)] for j in range(n)]
    out = []
    for i in range(n):
        arow = arows[i]
        orow: RawRow = []
        for j in range(n):
            bcol = bcols[j]
            best = None
            for k in range(n):
                x = arow[k]
                if x is None:
                    continue
                y = bcol[k]
                if y is None:
                    continue
                s = x + y
                if best is None or s > best:
                    best = s
            orow.append(best)
        out.append(orow)
    return MaxPlusMatrix._from_raw(out)


def mat_power(a: MaxPlusMatrix, t: int) -> MaxPlusMatrix:
    """a to the t-th power, t >= 1, by repeated squaring."""
    if t < 1:
        raise ValueError(f"mat_power needs t >= 1, got {t}")
    result = None
    base = a
    while t:
        if t & 1:
            result = base if result is None else mat_mul(result, base)
        t >>= 1
        if t:
            base = mat_mul(base, base)
    return result


def mat_oplus(a: MaxPlusMatrix, b: MaxPlusMatrix) -> MaxPlusMatrix:
    """Entrywise max of two matrices."""
    _check_dims(a, b)
    out = []
    for ra, rb in zip(a._rows, b._rows):
        row: RawRow = []
        for x, y in zip(ra, rb):
            if x is None:
                row.append(y)
            elif y is None or x >= y:
                row.append(x)
            else:
                row.append(y)
        out.append(row)
    return MaxPlusMatrix._from_raw(out)


def mat_equal(a: MaxPlusMatrix, b: MaxPlusMatrix) -> bool:
    _check_dims(a, b)
    return a._rows == b._rows


def transpose(a: MaxPlusMatrix) -> MaxPlusMatrix:
    n = a.n
    return MaxPlusMatrix._from_raw(
        [[a._rows[j][i] for j in range(n)] for i in range(n)]
    )


def scalar_times(alpha: MaxPlusScalar, a: MaxPlusMatrix) -> MaxPlusMatrix:
    """alpha tensor a: add alpha to every entry."""
    v = alpha.value
    if v is None:
        return zeros(a.n)
    return MaxPlusMatrix._from_raw(
        [[None if x is None else x + v for x in row] for row in a._rows]
    )


def kleene_star(a: MaxPlusMatrix) -> MaxPlusMatrix:
    """I + a + a^2 + ... + a^(n-1), via O(n^3) all-pairs closure.

    Defined only when the maximum cycle mean is <= 0; a positive cycle
    makes the star diverge and is rejected.
    """
    n = a.n
    d = [row[:] for row in a._rows]
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik is None:
                continue
            di = d[i]
            for j in range(n):
                dkj = dk[j]
                if dkj is None:
                    continue
                s = dik + dkj
                if di[j] is None or s > di[j]:
                    di[j] = s
    for i in range(n):
        dii = d[i][i]
        if dii is not None and dii > 0:
            raise ValueError("kleene_star diverges: digraph has a positive-weight cycle")
        d[i][i] = Fraction(0) if dii is None or dii < 0 else dii
    return MaxPlusMatrix._from_raw(d)


class DiagonalScaling:
    """An invertible diagonal scaling, i.e. a finite potential per node."""

    __slots__ = ("d",)

    def __init__(self, d: Sequence):
        ds = tuple(as_scalar(x) for x in d)
        if any(x.is_bottom for x in ds):
            raise ValueError("diagonal scaling entries must be finite")
        self.d = ds

    def __len__(self) -> int:
        return len(self.d)

    def inverse(self) -> "DiagonalScaling":
        return DiagonalScaling([negate(x) for x in self.d])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiagonalScaling):
            return NotImplemented
        return self.d == other.d

    def __repr__(self) -> str:
        return f"DiagonalScaling([{', '.join(map(str, self.d))}])"


def scale(a: MaxPlusMatrix, d: DiagonalScaling) -> MaxPlusMatrix:
    """Conjugate by the diagonal: entry (i,j) becomes -d_i + a_ij + d_j."""
    if len(d) != a.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {len(d)}")
    vals = [x.value for x in d.d]
    out = []
    for i, row in enumerate(a._rows):
        di = vals[i]
        out.append(
            [None if x is None else x - di + vals[j] for j, x in enumerate(row)]
        )
    return MaxPlusMatrix._from_raw(out)


def strictly_dominated_by(a: MaxPlusMatrix, b: MaxPlusMatrix) -> bool:
    """Entrywise a <= b with equality allowed only at -inf entries."""
    _check_dims(a, b)
    for ra, rb in zip(a._rows, b._rows):
        for x, y in zip(ra, rb):
            if x is None:
                continue
            if y is None or x >= y:
                return False
    return True


def render_matrix(a: MaxPlusMatrix) -> str:
    """Bit-exact text form: the dimension, then one line per row."""
    lines = [str(a.n)]
    for row in a._rows:
        lines.append(" ".join("-inf" if x is None else str(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> MaxPlusMatrix:
    """Parse the text form produced by render_matrix.

    Trailing content after the n matrix rows (e.g. a provenance record)
    is ignored, so generator output can be fed back directly.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    try:
        n = int(lines[0].strip())
    except ValueError as exc:
        raise ValueError(f"bad dimension line {lines[0]!r}") from exc
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if len(lines) < n + 1:
        raise ValueError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1 : n + 1]:
        tokens = ln.split()
        if len(tokens) != n:
            raise ValueError(f"row {ln!r} has {len(tokens)} entries, expected {n}")
        rows.append(tokens)
    return MaxPlusMatrix(rows)


def from_entries(n: int, entries: dict[tuple[int, int], object]) -> MaxPlusMatrix:
    """Build a matrix from a sparse {(i, j): weight} map; the rest is -inf."""
    raw = [[None] * n for _ in range(n)]
    for (i, j), w in entries.items():
        raw[i][j] = as_scalar(w).value
    return MaxPlusMatrix._from_raw(raw)
