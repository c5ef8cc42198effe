from collections.abc import Sequence

from condcompat.app import Application


def main(argv: Sequence[str] | None = None) -> int:
    """Run the condcompat command line and return its exit code."""
    app = Application()
    return app.run(argv)
