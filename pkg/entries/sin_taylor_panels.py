"Taylor approximants of sin t for alpha=0.1, beta=1.5 and four powers p, as CSV + SVG pairs."

import math
from pathlib import Path

from loguru import logger

from closedforms.examples import max_errors
from closedforms.registered import FunctionKind, RegisteredFunction
from cli.pfcalc import main
from operators.power_params import PowerParams

out_root = Path("sin_taylor")
powers = {"0.5": 0.5, "2": 2.0, "e": math.e, "10": 10.0}


def do():
    out_root.mkdir(parents=True, exist_ok=True)
    sin = RegisteredFunction(FunctionKind.sin, 1.0)
    for label, p in powers.items():
        code = main(["taylor", "--example", "sin", "--delta", "1", "--alpha", "0.1", "--beta", "1.5",
                     "--p", label, "--orders", "1,2,3", "--grid", "0:1:201",
                     "--csv", str(out_root / f"sin_p{label}.csv"), "--svg", str(out_root / f"sin_p{label}.svg"),
                     "--digest"])
        if code != 0:
            logger.error("p={}: exit {}", label, code)
            continue
        errors = max_errors(sin, [1, 2, 3], PowerParams(0.1, 1.5, p))
        log_fn = logger.info if errors[1] >= errors[2] >= errors[3] else logger.warning
        log_fn("p={}: max |A_n - sin| on [0, 0.5] = {}", label,
               ", ".join(f"{errors[n]:.4g}" for n in (1, 2, 3)))
    logger.info("All done.")


if __name__ == '__main__':
    do()
