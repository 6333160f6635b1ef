"""Reading and writing the plain-text code file format.

::

    q=<int> n=<int> kind=<linear|explicit>
    <row>
    ...

Linear files list generator rows, explicit files list codewords.  Each row
is ``n`` base-q digits with no separators (lowercase base-36 above 9).
``#`` starts a comment.  Output always uses LF line endings.
"""
import re
from pathlib import Path

import numpy as np

from .codes import Code, LinearCode
from .exceptions import CodeFormatError

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
_HEADER = re.compile(r"^q=(\d+)\s+n=(\d+)\s+kind=(linear|explicit)$")


def format_row(row):
    return "".join(_DIGITS[int(x)] for x in row)


def parse_row(text, q, n):
    if len(text) != n:
        raise CodeFormatError(f"row {text!r} has length {len(text)}, expected {n}")
    try:
        row = [_DIGITS.index(ch) for ch in text]
    except ValueError:
        raise CodeFormatError(f"row {text!r} contains a non-digit") from None
    if max(row, default=0) >= q:
        raise CodeFormatError(f"row {text!r} has a digit >= q={q}")
    return row


def dumps(code):
    """Serialise a :class:`Code` or :class:`LinearCode`."""
    if isinstance(code, LinearCode):
        kind, rows = "linear", code.generator
    else:
        kind, rows = "explicit", code.words
    lines = [f"q={code.q} n={code.n} kind={kind}"]
    lines.extend(format_row(r) for r in rows)
    return "\n".join(lines) + "\n"


def loads(text):
    """Parse the code file format; duplicates in explicit files are rejected."""
    lines = []
    for raw in text.split("\n"):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise CodeFormatError("empty code file")
    m = _HEADER.match(lines[0])
    if not m:
        raise CodeFormatError(f"bad header line {lines[0]!r}")
    q, n, kind = int(m.group(1)), int(m.group(2)), m.group(3)
    rows = [parse_row(line, q, n) for line in lines[1:]]
    arr = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    if kind == "linear":
        return LinearCode(q, arr, n=n)
    if len({tuple(r) for r in rows}) != len(rows):
        raise CodeFormatError("duplicate codewords in explicit code file")
    return Code(q, arr)


def read_code(path):
    return loads(Path(path).read_text(encoding="utf-8"))


def write_code(code, path):
    Path(path).write_bytes(dumps(code).encode("utf-8"))
