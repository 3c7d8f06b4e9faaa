"""Module entry point: `python -m bh_lab` runs the command-line front end."""

import sys

from bh_lab.app import LabApp


def main(argv: list[str] | None = None) -> int:
    app = LabApp()
    return app.run(argv)

if __name__ == "__main__":
    sys.exit(main())
