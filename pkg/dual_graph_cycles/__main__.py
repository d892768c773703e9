import sys

from dual_graph_cycles.cli import main

if __name__ == "__main__":
    sys.exit(main())
