from dual_graph_cycles.reports.interfaces._abstract_interface import ReportInterface
from dual_graph_cycles.reports.interfaces._text import TextReport
from dual_graph_cycles.reports.interfaces._json import JsonReport
