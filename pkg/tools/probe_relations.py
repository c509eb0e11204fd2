from __future__ import annotations

import os
import sys
import time

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from coulomb.abelianized import abelian_suite
from coulomb.config import try_load_or_default
from coulomb.gklo import verify_relations
from coulomb.klr import verify_klr
from coulomb.nilhecke import verify_dual_bases, verify_idempotent


def main() -> None:
    config = try_load_or_default(sys.argv[1] if len(sys.argv) > 1 else "assets/configs/a1.ini")
    theory = config.theory()
    suites = [
        lambda: verify_relations(theory),
        lambda: abelian_suite(theory, 1),
        lambda: verify_dual_bases(theory),
        lambda: verify_idempotent(theory),
        lambda: verify_klr(theory, pairs=10),
    ]
    os.makedirs("artifacts/probe", exist_ok=True)
    output_path = os.path.join("artifacts", "probe", "relations.tsv")
    with open(output_path, "w", encoding="utf-8") as fh:
        fh.write("suite\tcheck\tstatus\tms\n")
        for run in suites:
            start = time.perf_counter()
            report = run()
            ms = int((time.perf_counter() - start) * 1000)
            for check in report.checks:
                fh.write(f"{report.suite}\t{check.name}\t{'PASS' if check.passed else 'FAIL'}\t{ms}\n")
    print(f"Wrote {output_path} ({config.describe()})")


if __name__ == "__main__":
    main()
