import io
from contextlib import redirect_stdout, redirect_stderr

from dual_graph_cycles.cli import main


def run_cli(argv) -> str:
    """Run the command line tool and return its stdout followed by an exit line. stderr is dropped."""
    stdout = io.StringIO()

    with redirect_stdout(stdout), redirect_stderr(io.StringIO()):
        code = main(argv)

    return stdout.getvalue() + f"exit: {code}\n"
