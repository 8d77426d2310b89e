"Run every conformance suite at its declared tolerance and write the reports."

from pathlib import Path

from loguru import logger

from util.hash_util import write_digest
from verify.sweeps import Suite, run_sweep

out_root = Path("reports")
tolerances = {
    Suite.ml_identity: 1e-12,
    Suite.composition: 1e-6,
    Suite.forms: 1e-8,
    Suite.iteration: 1e-6,
    Suite.reductions: 1e-10,
    Suite.taylor: 1e-8,
    Suite.closedforms: 1e-6,
}


def do(workers: int = 4):
    out_root.mkdir(parents=True, exist_ok=True)
    failed = []
    for suite, tol in tolerances.items():
        report = run_sweep(suite, tol, workers=workers)
        path = out_root / f"{suite.value}.tsv"
        with open(path, "w", newline="\n") as fp:
            fp.write(report.to_text())
        write_digest(path)
        if not report.passed:
            failed.append(suite.value)
    if failed:
        logger.error("Failed suites: {}", ", ".join(failed))
    else:
        logger.info("All suites passed.")


if __name__ == '__main__':
    do()
