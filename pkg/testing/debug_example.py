"""
Do you want to run a test on a specific fixture graph? If so, this is the script for you.
Modify as you please, just remember not to commit your changes.
"""

import os
import importlib

from testing.comparison_tests import compare_files

TESTING_DIR = os.path.dirname(os.path.abspath(__file__))


if __name__ == "__main__":
    example = "b1ab2.graph"
    test_name = "fundamental_text"
    test_type = ["comparison", "other"][0]

    input_path = os.path.join(TESTING_DIR, "graphs", example)
    graph_name = os.path.splitext(example)[0]

    if test_type == "comparison":
        run_test = importlib.import_module(f"testing.comparison_tests.{test_name}.test").run_test

        correct_path = os.path.join(TESTING_DIR, "comparison_tests", test_name, f"{graph_name}.txt")
        output_path = os.path.join(TESTING_DIR, "comparison_tests", test_name, f"{graph_name}-unverified.txt")

        with open(output_path, 'w') as output_file:
            output_file.write(run_test(input_path))

        print(f"Saved output to {output_path}")

        if os.path.isfile(correct_path):
            if compare_files(correct_path, output_path):
                print("Success, the outputs are identical")
            else:
                print("Oops, the outputs are different")

    if test_type == "other":
        run_test = importlib.import_module(f"testing.other_tests.{test_name}.test").run_test
        print(run_test(input_path))
