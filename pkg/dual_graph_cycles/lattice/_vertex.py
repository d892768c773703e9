from dual_graph_cycles.exceptions import InputError


class VertexData:
    """
    The VertexData class describes one exceptional curve E_i: its self-intersection (weight), its genus g_i and the
    conductor degree delta_i of its singularities.
    """

    __slots__ = 'name', 'weight', 'genus', 'conductor'

    def __init__(self, weight: int, genus: int = 0, conductor: int = 0, name: str = None):
        for label, value in (("weight", weight), ("genus", genus), ("conductor", conductor)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise InputError(f"Not a vertex. {label} must be an integer, not {value!r}")

        if weight > -1:
            raise InputError(f"Not an exceptional curve. weight must be <= -1, not {weight}")

        if genus < 0 or conductor < 0:
            raise InputError(f"Not a vertex. genus and conductor must be non-negative, not {genus} and {conductor}")

        self.name = name
        self.weight = weight
        self.genus = genus
        self.conductor = conductor

    def __repr__(self):
        return f"VertexData({self.name!r}, weight={self.weight}, genus={self.genus}, conductor={self.conductor})"

    def __eq__(self, other):
        if not isinstance(other, VertexData):
            return NotImplemented

        return (self.name, self.weight, self.genus, self.conductor) == \
               (other.name, other.weight, other.genus, other.conductor)

    def __hash__(self):
        return hash((self.name, self.weight, self.genus, self.conductor))

    def is_rational(self) -> bool:
        """A smooth rational curve: genus and conductor are both zero."""
        return self.genus == 0 and self.conductor == 0

    def is_minus_two_curve(self) -> bool:
        return self.is_rational() and self.weight == -2

    def is_minus_one_curve(self) -> bool:
        """Rational -1 curves are the ones a minimal resolution can't contain."""
        return self.is_rational() and self.weight == -1
