from testing.comparison_tests._run_tests import run_tests, compare_files
