import csv
import io
import sys
from pathlib import Path
from typing import Iterable, Optional, Sequence

from loguru import logger

from util.hash_util import write_digest


def _cell(value) -> str:
    if isinstance(value, (int, str)) and not isinstance(value, bool):
        return str(value)
    # shortest text that reads back to the same double
    return repr(float(value))


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()


def emit(text: str, path: Optional[Path], digest: bool = False):
    """Write to `path`, or stdout when no path is given."""
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", newline="\n", encoding="utf-8") as fp:
        fp.write(text)
    logger.info("Wrote {}", path)
    if digest:
        logger.info("Digest {}", write_digest(path))
