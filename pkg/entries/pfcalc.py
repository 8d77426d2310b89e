"Fixed pfcalc runs: the power-ML identity value and the form agreement on sin."

import sys

from cli.pfcalc import main

if __name__ == '__main__':
    main(["ml", "--k", "1", "--l", "1", "--p", "2", "--tau", "3"])
    sys.exit(main(["deriv", "--function", "sin", "--alpha", "0.3", "--beta", "1.2", "--p", "2",
                   "--grid", "0:0.8:9", "--form", "series"]))
