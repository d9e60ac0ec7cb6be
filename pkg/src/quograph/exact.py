"""Dense exact linear algebra over arbitrary-precision integers and rationals.

Matrices are plain nested lists; integer matrices hold Python ints (unbounded,
walk counts grow like k^l), rational ones hold Fractions in lowest terms.
Every classification decision in the package runs through this module so that
it is a yes/no fact, never a tolerance call.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import GraphInputError

IntMatrix = list  # list[list[int]]
RatMatrix = list  # list[list[Fraction]]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def all_ones(n: int) -> IntMatrix:
    return [[1] * n for _ in range(n)]


def transpose(m):
    return [list(row) for row in zip(*m)]


def mat_mul(a, b):
    """Exact matrix product; entries may be ints or Fractions."""
    if len(a[0]) != len(b):
        raise GraphInputError(
            f"dimension mismatch: {len(a)}x{len(a[0])} times {len(b)}x{len(b[0])}")
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def trace(m) -> int | Fraction:
    return sum(m[i][i] for i in range(len(m)))


class RowBasis:
    """Incremental row-echelon basis over Q for integer rows.

    Rows are kept integral (cross-multiplication elimination, gcd-reduced),
    so membership tests are exact regardless of entry growth.
    """

    def __init__(self):
        self._rows: dict[int, list[int]] = {}  # pivot column -> reduced row

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, row) -> bool:
        """Reduce `row` against the basis; add it if independent.

        Returns True when the row was linearly independent of the basis.
        """
        row = list(row)
        for p in sorted(self._rows):
            if row[p]:
                r = self._rows[p]
                a, b = r[p], row[p]
                row = [a * x - b * y for x, y in zip(row, r)]
        for j, x in enumerate(row):
            if x:
                g = 0
                for y in row[j:]:
                    g = gcd(g, y)
                if x < 0:
                    g = -g
                self._rows[j] = [y // g for y in row]
                return True
        return False

    def contains(self, row) -> bool:
        """True iff `row` already lies in the span (does not modify the basis)."""
        row = list(row)
        for p in sorted(self._rows):
            if row[p]:
                r = self._rows[p]
                a, b = r[p], row[p]
                row = [a * x - b * y for x, y in zip(row, r)]
        return not any(row)


def _int_rows(m) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank is unaffected)."""
    out = []
    for row in m:
        if any(isinstance(x, Fraction) for x in row):
            scale = 1
            for x in row:
                d = x.denominator if isinstance(x, Fraction) else 1
                scale = scale * d // gcd(scale, d)
            out.append([int(x * scale) for x in row])
        else:
            out.append(list(row))
    return out


def rank(m) -> int:
    """Exact rank over Q of an integer or rational matrix."""
    basis = RowBasis()
    for row in _int_rows(m):
        basis.add(row)
    return basis.rank


def solve(a, b):
    """Exact solve of a X = b over Q; None when the system is inconsistent.

    Underdetermined systems get the canonical solution with free variables
    set to zero. `a` is rows x cols, `b` is rows x k; result is cols x k.
    """
    rows, cols = len(a), len(a[0])
    if len(b) != rows:
        raise GraphInputError("solve: right-hand side row count mismatch")
    k = len(b[0])
    aug = [[Fraction(x) for x in a[i]] + [Fraction(x) for x in b[i]]
           for i in range(rows)]
    pivots: list[tuple[int, int]] = []  # (row, col)
    pr = 0
    for pc in range(cols):
        # pivot by largest |numerator| among candidates to limit growth
        best, best_key = -1, None
        for i in range(pr, rows):
            x = aug[i][pc]
            if x:
                key = abs(x.numerator)
                if best_key is None or key > best_key:
                    best, best_key = i, key
        if best < 0:
            continue
        aug[pr], aug[best] = aug[best], aug[pr]
        piv = aug[pr][pc]
        for i in range(rows):
            if i != pr and aug[i][pc]:
                f = aug[i][pc] / piv
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[pr])]
        pivots.append((pr, pc))
        pr += 1
        if pr == rows:
            break
    # consistency: zero coefficient rows must have zero rhs
    for i in range(pr, rows):
        if any(aug[i][cols:]):
            return None
    x = [[Fraction(0)] * k for _ in range(cols)]
    for r, c in pivots:
        piv = aug[r][c]
        for j in range(k):
            x[c][j] = aug[r][cols + j] / piv
    return x


def is_nonneg_int_matrix(m) -> bool:
    return all(
        (isinstance(x, int) or x.denominator == 1) and x >= 0
        for row in m for x in row)


def to_int_matrix(m) -> IntMatrix:
    return [[int(x) for x in row] for row in m]


# --- polynomials ----------------------------------------------------------

@dataclass(frozen=True)
class Polynomial:
    """Exact rational polynomial, coefficients ascending, trailing zeros trimmed."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(seq) -> "Polynomial":
        c = [Fraction(x) for x in seq]
        while c and c[-1] == 0:
            c.pop()
        return Polynomial(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial.of(
            [(self.coeffs[i] if i < len(self.coeffs) else 0)
             + (other.coeffs[i] if i < len(other.coeffs) else 0)
             for i in range(n)])

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coeffs or not other.coeffs:
            return Polynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial.of(out)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


POLY_ONE = Polynomial.of([1])
POLY_X = Polynomial.of([0, 1])


def eval_poly(p: Polynomial, a: IntMatrix) -> RatMatrix:
    """p(A) by Horner's scheme on matrices; exact."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise GraphInputError("eval_poly needs a square matrix")
    acc = [[Fraction(0)] * n for _ in range(n)]
    for c in reversed(p.coeffs):
        acc = mat_mul(acc, a)
        for i in range(n):
            acc[i][i] += c
    return acc


def combine_powers(coeffs, powers) -> RatMatrix:
    """Sum c_l * A^l given the precomputed power ladder; cheaper than Horner."""
    n = len(powers[0])
    out = [[Fraction(0)] * n for _ in range(n)]
    for c, p in zip(coeffs, powers):
        if c:
            for i in range(n):
                row, prow = out[i], p[i]
                for j in range(n):
                    row[j] += c * prow[j]
    return out


def frac_str(q) -> str:
    """Serialize a rational as "num/den", den omitted when 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


def poly_to_text(p: Polynomial, var: str = "x") -> str:
    """Render like "1/26 (3x^4 - 10x^3 - 10x^2 + 75x - 36)"."""
    if not p.coeffs:
        return "0"
    scale = 1
    for c in p.coeffs:
        scale = scale * c.denominator // gcd(scale, c.denominator)
    ints = [int(c * scale) for c in p.coeffs]
    terms = []
    for deg in range(len(ints) - 1, -1, -1):
        c = ints[deg]
        if c == 0:
            continue
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            xpow = var if deg == 1 else f"{var}^{deg}"
            body = xpow if mag == 1 else f"{mag}{xpow}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"{'+' if c > 0 else '-'} {body}")
    body = " ".join(terms)
    if scale == 1:
        return body
    return f"1/{scale} ({body})"
