from fractions import Fraction
from typing import Callable, List, Tuple

from dual_graph_cycles.lattice import Cycle, RationalCycle
from dual_graph_cycles import VERDICTS


def plain(value):
    """Turn cycles, fractions, containers and anything with a to_dict() into JSON friendly values."""
    if hasattr(value, "to_dict"):
        return plain(value.to_dict())
    if isinstance(value, (Cycle, RationalCycle)):
        return [plain(v) for v in value]
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, dict):
        return {str(key): plain(v) for key, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [plain(v) for v in (sorted(value) if isinstance(value, (set, frozenset)) else value)]

    return value


class TheoremReport:
    """
    The TheoremReport class records one check on one graph: the hypotheses that were evaluated (in order, stopping at
    the first one that fails), the predicted and computed values, and a verdict in VERDICTS.

    Advisory checks are reported like the others but never count as a failure of a verification run.
    """

    __slots__ = 'check', 'hypotheses', 'predicted', 'computed', 'verdict', 'advisory', 'notes'

    def __init__(self, check: str, hypotheses: List[Tuple[str, bool]], predicted=None, computed=None,
                 verdict="not-applicable", advisory=False, notes=None):
        if verdict not in VERDICTS:
            raise ValueError(f"Unknown verdict {verdict}. Please specify one of the following: {VERDICTS}")

        self.check = check
        self.hypotheses = hypotheses
        self.predicted = predicted
        self.computed = computed
        self.verdict = verdict
        self.advisory = advisory
        self.notes = {} if notes is None else notes

    def __repr__(self):
        return f"TheoremReport({self.check}: {self.verdict}, predicted={self.predicted}, computed={self.computed})"

    @property
    def blocking(self) -> bool:
        return self.verdict == "fail" and not self.advisory

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "hypotheses": [{"name": name, "holds": holds} for name, holds in self.hypotheses],
            "predicted": plain(self.predicted),
            "computed": plain(self.computed),
            "verdict": self.verdict,
            "advisory": self.advisory,
            "notes": plain(self.notes),
        }

    @staticmethod
    def evaluate(check: str, hypotheses: List[Tuple[str, Callable[[], bool]]], predict: Callable, compute: Callable,
                 compare: Callable = lambda predicted, computed: predicted == computed, advisory=False,
                 notes: Callable = None) -> "TheoremReport":
        """
        Evaluate hypotheses lazily and in order. A check whose hypotheses fail is not-applicable and never computes
        anything else, so expensive values (the p_a maximum) are only produced when they matter.
        """
        evaluated = []
        for name, hypothesis in hypotheses:
            holds = bool(hypothesis())
            evaluated.append((name, holds))

            if not holds:
                return TheoremReport(check, evaluated, advisory=advisory)

        predicted, computed = predict(), compute()
        verdict = "pass" if compare(predicted, computed) else "fail"

        return TheoremReport(check, evaluated, predicted, computed, verdict, advisory,
                             notes() if notes is not None else None)
