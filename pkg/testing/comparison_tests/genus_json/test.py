from testing.comparison_tests._cli import run_cli


def run_test(graph_file_name):
    return run_cli(["genus", "--json", graph_file_name])
