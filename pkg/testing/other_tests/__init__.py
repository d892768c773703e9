from testing.other_tests._run_tests import run_tests
