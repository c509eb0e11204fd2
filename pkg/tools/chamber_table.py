from __future__ import annotations

import os
import sys

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from coulomb.config import try_load_or_default
from coulomb.quiver import chambers, verify_chamber


def main() -> None:
    config = try_load_or_default(sys.argv[1] if len(sys.argv) > 1 else "assets/configs/a2.ini")
    gauge = config.gauge
    os.makedirs("artifacts/chambers", exist_ok=True)
    output_path = os.path.join("artifacts", "chambers", "generators.tsv")
    failed = 0
    with open(output_path, "w", encoding="utf-8") as fh:
        fh.write("order\tsplit\tgenerators\tpoints\tstatus\n")
        for order, split in chambers(gauge):
            result = verify_chamber(gauge, order, split, bound=2)
            failed += not result.passed
            order_text = ",".join(f"{i}.{r}" for i, r in order)
            gens = " ".join(",".join(map(str, g)) for g in result.generators)
            status = "PASS" if result.passed else "FAIL"
            fh.write(f"{order_text}\t{split}\t{gens}\t{result.points_checked}\t{status}\n")
    print(f"Wrote {output_path} ({failed} failing chambers)")


if __name__ == "__main__":
    main()
