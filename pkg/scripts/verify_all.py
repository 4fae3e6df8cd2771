"""Run every verification suite at its default size and print the reports.

Exits 2 if any check fails.
"""
import sys
import time

from scomprop.checks import SUITES, run_suite


def main():
    failed = False
    for name in SUITES:
        start = time.perf_counter()
        report = run_suite(name)
        print(f"== {name} ({time.perf_counter() - start:.1f} s)")
        for line in report.lines():
            print(line)
        failed |= not report.passed
    sys.exit(2 if failed else 0)


if __name__ == "__main__":
    main()
