"""Runs the comparison and other tests under pytest, one case per test directory."""

import pytest

from testing import comparison_tests, other_tests
from testing.automated_testing import graph_names, comparison_names, other_names


@pytest.mark.parametrize("test_name", comparison_names())
def test_comparison(test_name):
    conflicts, missing_results = comparison_tests.run_tests(test_name, graph_names())

    assert conflicts == []
    assert missing_results == []


@pytest.mark.parametrize("test_name", other_names())
def test_other(test_name):
    assert other_tests.run_tests(test_name, graph_names()) == []
