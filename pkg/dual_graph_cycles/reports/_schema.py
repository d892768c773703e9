import json
import os

SCHEMA_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "report.schema.json")


def report_schema() -> dict:
    """The JSON schema every --json report conforms to. It ships with the package next to this module."""
    with open(SCHEMA_PATH, "r", encoding="utf-8") as file:
        return json.load(file)
