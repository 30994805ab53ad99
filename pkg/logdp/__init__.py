from logdp import cli
import sys


def main():
    try:
        sys.exit(cli._main())
    except KeyboardInterrupt:
        print("Program interrupted. Exiting...", file=sys.stderr)
        sys.exit(1)
