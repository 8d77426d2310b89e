import sys

from .pfcalc import main

if __name__ == '__main__':
    sys.exit(main())
