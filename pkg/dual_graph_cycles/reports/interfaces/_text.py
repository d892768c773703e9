from fractions import Fraction

from dual_graph_cycles.reports.interfaces import ReportInterface
from dual_graph_cycles.lattice import Cycle, RationalCycle

INDENT = "  "


def _is_word(value) -> bool:
    return value is None or isinstance(value, (int, Fraction)) or (isinstance(value, str) and " " not in value)


class TextReport(ReportInterface):
    """
    Human readable lines. Cycles are space separated coefficients in vertex order, rationals are a/b, booleans are
    yes/no and a missing value is "-".
    """

    def format_value(self, value):
        if value is None:
            return "-"
        if isinstance(value, bool):
            return "yes" if value else "no"
        if isinstance(value, (Cycle, RationalCycle, Fraction)):
            return str(value)
        if isinstance(value, dict):
            return {str(key): self.format_value(item) for key, item in value.items()}
        if isinstance(value, (set, frozenset)):
            return " ".join(self.format_value(item) for item in sorted(value))
        if isinstance(value, (list, tuple)):
            if not value:
                return "-"
            if all(_is_word(item) for item in value):
                return " ".join(self.format_value(item) for item in value)
            return [self.format_value(item) for item in value]

        return str(value)

    def format_check(self, report: dict):
        hypotheses = ", ".join(f"{item['name']} {'yes' if item['holds'] else 'no'}" for item in report["hypotheses"])
        verdict = report["verdict"] + (" (advisory)" if report["advisory"] and report["verdict"] == "fail" else "")
        fields = {"hypotheses": hypotheses or "-"}

        if report["verdict"] != "not-applicable":
            fields["predicted"] = self.format_value(report["predicted"])
            fields["computed"] = self.format_value(report["computed"])

        for key, value in report["notes"].items():
            fields[key] = self.format_value(value)

        return f"check {report['check']}: {verdict}", fields

    def _lines(self, name: str, value, depth: int) -> list:
        prefix = INDENT * depth

        if isinstance(value, dict):
            lines = [f"{prefix}{name}:"]
            for key, item in value.items():
                lines.extend(self._lines(key, item, depth + 1))
            return lines

        if isinstance(value, list):
            lines = [f"{prefix}{name}:"]
            for item in value:
                lines.append(f"{prefix}{INDENT}{item}")
            return lines

        return [f"{prefix}{name}: {value}"]

    def render(self, header: dict, body: list, checks: list) -> str:
        lines = [f"{key}: {value}" for key, value in header.items()]

        for name, value in body:
            lines.extend(self._lines(name, value, 0))

        for title, fields in checks:
            lines.append(title)
            for key, value in fields.items():
                lines.extend(self._lines(key, value, 1))

        return "\n".join(lines) + "\n"
