"""Run the numeric check suite and print a table (or JSON lines with --jsonl)."""

import argparse
import json
import sys

from hklattice import checks


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jsonl", action="store_true")
    args = parser.parse_args()
    results = checks.run_all()
    if args.jsonl:
        for r in results:
            print(json.dumps(r.to_json()))
    else:
        print(checks.format_table(results))
    return 0 if checks.all_passed(results) else 1


if __name__ == "__main__":
    sys.exit(main())
