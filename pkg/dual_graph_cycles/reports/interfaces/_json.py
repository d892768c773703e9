import json

from dual_graph_cycles.reports.interfaces import ReportInterface
from dual_graph_cycles.oracle import plain


class JsonReport(ReportInterface):
    """One JSON object per run, keys sorted so the output is byte-stable."""

    def format_value(self, value):
        return plain(value)

    def format_check(self, report: dict):
        return report

    def render(self, header: dict, body: list, checks: list) -> str:
        document = dict(header)
        document.update(body)

        if checks:
            document["checks"] = checks

        return json.dumps(document, indent=2, sort_keys=True) + "\n"
