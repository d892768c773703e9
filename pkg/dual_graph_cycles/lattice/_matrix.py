from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Optional

from dual_graph_cycles.lattice import Cycle
from dual_graph_cycles.exceptions import InputError, DomainError


class DefinitenessCertificate:
    """
    The outcome of symmetric elimination. When the matrix is negative definite, pivots holds every (negative) pivot.
    Otherwise pivots stops at the first non-negative pivot and witness is an integer vector v with v^T M v >= 0.
    """

    __slots__ = 'is_negative_definite', 'pivots', 'witness'

    def __init__(self, is_negative_definite: bool, pivots: List[Fraction], witness: Optional[Cycle] = None):
        self.is_negative_definite = is_negative_definite
        self.pivots = pivots
        self.witness = witness

    def __repr__(self):
        if self.is_negative_definite:
            return f"DefinitenessCertificate(negative definite, pivots={[str(p) for p in self.pivots]})"

        return f"DefinitenessCertificate(not negative definite, witness={self.witness!r})"

    def __bool__(self):
        return self.is_negative_definite


class IntersectionMatrix:
    """The IntersectionMatrix class is the symmetric integer matrix (E_i . E_j) of a weighted dual graph."""

    __slots__ = 'size', 'matrix_list'

    def __init__(self, matrix_list):
        """
        :param matrix_list: the matrix represented as a list of rows.
        :type matrix_list: list[list[int]]
        """
        self.size = len(matrix_list)

        if self.size == 0:
            raise InputError("Not an intersection matrix. matrix_list is empty.")

        if not all([len(row) == self.size for row in matrix_list]):
            raise InputError("Not an intersection matrix. matrix_list must be square.")

        if not all([all([isinstance(value, int) and not isinstance(value, bool) for value in row])
                    for row in matrix_list]):
            raise InputError("Not an intersection matrix. matrix_list contains non integer values.")

        if any(matrix_list[i][j] != matrix_list[j][i] for i in range(self.size) for j in range(i)):
            raise InputError("Not an intersection matrix. matrix_list isn't symmetric.")

        self.matrix_list = [list(row) for row in matrix_list]

    def __repr__(self):
        matrix_str = "\n                   ".join([str(row) for row in self])
        return f"IntersectionMatrix({matrix_str})"

    def __iter__(self):
        yield from self.matrix_list

    def __getitem__(self, index: int):
        return self.matrix_list[index]

    def __mul__(self, other):
        if isinstance(other, Cycle):
            return self.multiply_cycle(other)

        raise TypeError(f"can't multiply an intersection matrix by type '{type(other)}'")

    def multiply_cycle(self, cycle: Cycle) -> Cycle:
        """Return the cycle of intersection numbers (E_i . cycle) for every i."""
        if len(cycle) != self.size:
            raise InputError(f"can't intersect a cycle with {len(cycle)} coefficients on a graph with {self.size} "
                             f"vertices")

        return Cycle(sum(row[k] * cycle[k] for k in range(self.size)) for row in self)

    def bilinear(self, a: Cycle, b: Cycle) -> int:
        products = self.multiply_cycle(b)
        if len(a) != self.size:
            raise InputError(f"can't intersect a cycle with {len(a)} coefficients on a graph with {self.size} vertices")

        return sum(x * y for x, y in zip(a, products))

    def principal(self, indices) -> "IntersectionMatrix":
        """The principal sub-matrix on the given (sorted) indices."""
        indices = sorted(indices)
        return IntersectionMatrix([[self[i][j] for j in indices] for i in indices])

    def definiteness_certificate(self) -> DefinitenessCertificate:
        """
        Symmetric Gaussian elimination without row exchanges over exact rationals. By Sylvester's criterion the matrix is
        negative definite iff every pivot is negative.
        """
        work = [[Fraction(value) for value in row] for row in self]
        pivots = []

        for k in range(self.size):
            pivot = work[k][k]
            pivots.append(pivot)

            if pivot >= 0:
                return DefinitenessCertificate(False, pivots, self._witness(k))

            for i in range(k + 1, self.size):
                factor = work[i][k] / pivot
                if factor == 0:
                    continue
                for j in range(k, self.size):
                    work[i][j] -= factor * work[k][j]

        return DefinitenessCertificate(True, pivots)

    def _witness(self, k: int) -> Cycle:
        # v with v_k = 1, zero after k, and (Mv)_i = 0 for i < k; then v^T M v is the k-th pivot.
        values = [Fraction(0)] * self.size
        values[k] = Fraction(1)

        if k > 0:
            leading = IntersectionMatrix([row[:k] for row in self.matrix_list[:k]])
            values[:k] = leading.solve([-self[i][k] for i in range(k)])

        scale = reduce(lambda a, b: a * b // gcd(a, b), (value.denominator for value in values), 1)
        return Cycle(int(value * scale) for value in values)

    def solve(self, rhs) -> List[Fraction]:
        """
        Solve M x = rhs exactly. Forward elimination is fraction-free (Bareiss), so every intermediate entry stays an
        integer; only back-substitution produces fractions.

        :param rhs: integer right hand side.
        :return: the unique solution as a list of Fractions.
        """
        if len(rhs) != self.size:
            raise InputError(f"right hand side has {len(rhs)} entries, expected {self.size}")

        n = self.size
        augmented = [list(row) + [int(value)] for row, value in zip(self, rhs)]
        previous = 1

        for k in range(n - 1):
            if augmented[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if augmented[i][k] != 0), None)
                if swap is None:
                    raise DomainError("The intersection matrix is singular.")
                augmented[k], augmented[swap] = augmented[swap], augmented[k]

            for i in range(k + 1, n):
                for j in range(k + 1, n + 1):
                    augmented[i][j] = (augmented[i][j] * augmented[k][k] - augmented[i][k] * augmented[k][j]) // previous
                augmented[i][k] = 0

            previous = augmented[k][k]

        if augmented[n - 1][n - 1] == 0:
            raise DomainError("The intersection matrix is singular.")

        solution = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            remainder = augmented[i][n] - sum(augmented[i][j] * solution[j] for j in range(i + 1, n))
            solution[i] = Fraction(remainder) / augmented[i][i]

        return solution
