class ReportInterface:

    """
    Classes which inherit from the abstract ReportInterface class render the sections collected by a ReportBuilder.

    Every command produces the same fields whatever the interface, so a text report and a JSON report of one run carry
    identical numbers.
    """

    def header(self, command: str, source: str) -> dict:
        """
        The fields identifying the run.

        :return: an ordered mapping of field name to value.
        """
        return {"command": command, "graph": source}

    def format_value(self, value):
        """
        Convert a cycle, fraction, boolean or container to the interface's representation.

        :return: Appropriate value.
        """
        raise NotImplementedError("ReportInterface class must implement the format_value command")

    def format_check(self, report: dict):
        """
        Convert one TheoremReport.to_dict() result.

        :return: Appropriate value.
        """
        raise NotImplementedError("ReportInterface class must implement the format_check command")

    def render(self, header: dict, body: list, checks: list) -> str:
        """
        Assemble the header fields, the (name, formatted value) body pairs and the formatted checks.

        :return: the finished report, ending in a newline.
        """
        raise NotImplementedError("ReportInterface class must implement the render command")
