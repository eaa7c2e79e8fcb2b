"""Small exact matrices over the rationals.

Just enough dense linear algebra for the unipotent-group and conjugation
identities: products, commutators, exponentials of nilpotents, and Gaussian
inversion, all over Fraction.
"""

from fractions import Fraction


class Matrix:
    """Immutable square matrix with exact entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(e) for e in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "Matrix":
        return cls([[Fraction(0)] * n for _ in range(n)])

    @classmethod
    def unit(cls, i: int, j: int, n: int) -> "Matrix":
        """E_{i,j}: single 1 at row i, column j (1-indexed)."""
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"unit indices ({i}, {j}) out of range for n={n}")
        return cls([[Fraction(int(r == i - 1 and c == j - 1)) for c in range(n)]
                    for r in range(n)])

    @classmethod
    def diagonal(cls, entries) -> "Matrix":
        entries = [Fraction(e) for e in entries]
        n = len(entries)
        return cls([[entries[i] if i == j else Fraction(0) for j in range(n)]
                    for i in range(n)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows, other.rows)])

    def __mul__(self, other: "Matrix") -> "Matrix":
        n = self.size
        bt = list(zip(*other.rows))
        return Matrix([[sum(a * b for a, b in zip(row, col)) for col in bt]
                       for row in self.rows])

    def scale(self, factor) -> "Matrix":
        factor = Fraction(factor)
        return Matrix([[factor * e for e in row] for row in self.rows])

    def apply(self, vector) -> list[Fraction]:
        vector = [Fraction(v) for v in vector]
        return [sum(a * v for a, v in zip(row, vector)) for row in self.rows]

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def commutator(self, other: "Matrix") -> "Matrix":
        return self * other - other * self

    def is_zero(self) -> bool:
        return all(e == 0 for row in self.rows for e in row)

    def exp_nilpotent(self) -> "Matrix":
        """exp of a nilpotent matrix as the finite sum of powers."""
        n = self.size
        result = Matrix.identity(n)
        power = Matrix.identity(n)
        factorial = 1
        for k in range(1, n + 1):
            power = power * self
            if power.is_zero():
                break
            factorial *= k
            result = result + power.scale(Fraction(1, factorial))
        else:
            raise ValueError("matrix is not nilpotent")
        return result

    def inverse(self) -> "Matrix":
        n = self.size
        work = [list(row) + [Fraction(int(i == j)) for j in range(n)]
                for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            work[col], work[pivot] = work[pivot], work[col]
            inv = Fraction(1) / work[col][col]
            work[col] = [e * inv for e in work[col]]
            for r in range(n):
                if r != col and work[r][col] != 0:
                    f = work[r][col]
                    work[r] = [a - f * b for a, b in zip(work[r], work[col])]
        return Matrix([row[n:] for row in work])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({[list(map(str, row)) for row in self.rows]})"
