from fractions import Fraction
from functools import reduce
from math import gcd

from dual_graph_cycles.exceptions import InputError


def _is_integer(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


class Cycle:
    """
    The Cycle class is an integer combination D = sum d_i E_i of exceptional curves, stored as a coefficient tuple indexed
    by vertex id. Cycles are compared componentwise, so <= is a partial order and sorted() is meaningless on them.
    """

    __slots__ = 'coefficients'

    def __init__(self, coefficients):
        coefficients = tuple(coefficients)

        if not all(_is_integer(value) for value in coefficients):
            raise InputError(f"Not a cycle. Coefficients must be integers, not {coefficients}")

        self.coefficients = coefficients

    def __repr__(self):
        return f"Cycle{self.coefficients}"

    def __str__(self):
        return " ".join(str(value) for value in self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        yield from self.coefficients

    def __getitem__(self, index: int):
        return self.coefficients[index]

    def __hash__(self):
        return hash(self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, Cycle):
            return NotImplemented

        return self.coefficients == other.coefficients

    def __add__(self, other):
        self._check_dimension(other)
        return Cycle(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._check_dimension(other)
        return Cycle(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Cycle(-a for a in self)

    def __mul__(self, other):
        if not _is_integer(other):
            raise TypeError(f"unsupported operand type(s) for *: 'Cycle' and {type(other)}")

        return Cycle(a * other for a in self)

    __rmul__ = __mul__

    def __le__(self, other):
        self._check_dimension(other)
        return all(a <= b for a, b in zip(self, other))

    def __lt__(self, other):
        return self <= other and self != other

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def _check_dimension(self, other):
        if not isinstance(other, Cycle):
            raise TypeError(f"expected a Cycle, not {type(other)}")

        if len(self) != len(other):
            raise InputError(f"Cycles live on different graphs. {len(self)} != {len(other)} coefficients")

    def support(self) -> frozenset:
        return frozenset(i for i, value in enumerate(self) if value != 0)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def is_effective(self) -> bool:
        """Effective cycles are non-zero with no negative coefficient."""
        return not self.is_zero() and all(value >= 0 for value in self)

    def total(self) -> int:
        return sum(self.coefficients)

    def restrict(self, vertices) -> "Cycle":
        """Return the cycle with every coefficient outside of vertices set to zero."""
        vertices = set(vertices)
        return Cycle(value if i in vertices else 0 for i, value in enumerate(self))

    @staticmethod
    def zero(size: int) -> "Cycle":
        return Cycle((0,) * size)

    @staticmethod
    def basis(size: int, index: int) -> "Cycle":
        """The reduced cycle E_index."""
        return Cycle(int(i == index) for i in range(size))

    @staticmethod
    def indicator(size: int, vertices) -> "Cycle":
        """The reduced cycle sum of E_i over vertices."""
        vertices = set(vertices)
        return Cycle(int(i in vertices) for i in range(size))

    @staticmethod
    def minimum(c1: "Cycle", c2: "Cycle") -> "Cycle":
        c1._check_dimension(c2)
        return Cycle(min(a, b) for a, b in zip(c1, c2))

    @staticmethod
    def maximum(c1: "Cycle", c2: "Cycle") -> "Cycle":
        c1._check_dimension(c2)
        return Cycle(max(a, b) for a, b in zip(c1, c2))


class RationalCycle:
    """
    The RationalCycle class holds an exact rational combination of exceptional curves. It exists for the canonical
    cycle, which need not be integral. Only fractions.Fraction is ever stored, never floats.
    """

    __slots__ = 'coefficients'

    def __init__(self, coefficients):
        values = []
        for value in coefficients:
            if isinstance(value, float) or isinstance(value, bool):
                raise InputError(f"Not a rational cycle. {value!r} is not an exact rational")
            values.append(Fraction(value))

        self.coefficients = tuple(values)

    def __repr__(self):
        return f"RationalCycle({', '.join(str(value) for value in self.coefficients)})"

    def __str__(self):
        return " ".join(str(value) for value in self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        yield from self.coefficients

    def __getitem__(self, index: int):
        return self.coefficients[index]

    def __hash__(self):
        return hash(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, Cycle):
            other = RationalCycle(other)

        if not isinstance(other, RationalCycle):
            return NotImplemented

        return self.coefficients == other.coefficients

    def __mul__(self, other):
        if isinstance(other, float):
            raise TypeError("floats can't scale an exact rational cycle")

        return RationalCycle(value * Fraction(other) for value in self)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(value.denominator == 1 for value in self)

    def to_cycle(self) -> Cycle:
        if not self.is_integral():
            raise InputError(f"{self!r} has non-integral coefficients")

        return Cycle(value.numerator for value in self)

    def common_denominator(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), (value.denominator for value in self), 1)
