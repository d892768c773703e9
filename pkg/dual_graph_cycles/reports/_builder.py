import typing
import warnings

from dual_graph_cycles.reports.interfaces import ReportInterface


class ReportBuilder:
    """
    The ReportBuilder class collects the fields and check reports of one command and assembles them through a report
    interface.
    """

    def __init__(self, interface_class: typing.Type[ReportInterface], command: str, source: str = "-"):
        """
        :param interface_class: Specify which interface to use, TextReport or JsonReport.
        :param command: the command being reported.
        :param source: where the graph came from, usually the file's base name.
        """
        self.interface = interface_class()
        self.header = self.interface.header(command, source)
        self.body = []
        self.checks = []
        self.verdicts = []

    def add(self, name: str, value):
        """Append one field. Fields keep their insertion order in text output."""
        self.body.append((name, self.interface.format_value(value)))

    def add_check(self, report: dict):
        """Append one TheoremReport.to_dict() result."""
        self.checks.append(self.interface.format_check(report))
        self.verdicts.append((report["verdict"], report["advisory"]))

    @property
    def failed(self) -> bool:
        """Whether a non-advisory check failed"""
        return any(verdict == "fail" and not advisory for verdict, advisory in self.verdicts)

    def compile(self) -> str:
        if not self.body and not self.checks:
            warnings.warn("Compile with an empty report (no fields and no checks). Is this intentional?")

        return self.interface.render(self.header, self.body, self.checks)
