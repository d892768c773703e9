"""
The reports sub-module turns command results into text or JSON.

specific maintenance notes:
    - Text and JSON reports are built from the same fields. Never add a field to only one of them.
    - Output must be deterministic: golden files compare it byte by byte.
    - A new JSON field needs an entry in report.schema.json too.
"""

from dual_graph_cycles.reports.interfaces import ReportInterface, TextReport, JsonReport
from dual_graph_cycles.reports._builder import ReportBuilder
from dual_graph_cycles.reports._schema import SCHEMA_PATH, report_schema
