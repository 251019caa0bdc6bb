"""Plain-text matrix files.

Example::

    # Mal'tsev
    params n=2 m=3 m'=1 l=2 k=2
    x1 x2 x2 | x1
    x1 x1 x2 | x2

The ``params`` line is optional on input and always written on output.
"""

from __future__ import annotations

import re
from pathlib import Path

from .matrix import ExtendedMatrix, MatrixError, validate

_VAR = re.compile(r"x([1-9][0-9]*)")
_PARAM = re.compile(r"(n|m|m'|l|k)=([0-9]+)")


class ParseError(MatrixError):
    def __init__(self, message: str, line: int, col: int | None = None, source: str = "<string>"):
        self.line, self.col, self.source = line, col, source
        where = f"{source}:{line}" + (f":{col}" if col is not None else "")
        super().__init__(f"{where}: {message}")


def _tokens(text: str):
    for m in re.finditer(r"\S+", text):
        yield m.start() + 1, m.group()


def parse_matrix_text(text: str, source: str = "<string>") -> ExtendedMatrix:
    params: dict[str, int] = {}
    left: list[list[int]] = []
    right: list[list[int]] = []
    widths = None
    first_row_line = params_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        toks = list(_tokens(line))
        if toks[0][1] == "params":
            if left or params:
                raise ParseError("params line must come first and only once", lineno, toks[0][0], source)
            for col, tok in toks[1:]:
                pm = _PARAM.fullmatch(tok)
                if not pm:
                    raise ParseError(f"bad parameter token {tok!r}", lineno, col, source)
                if pm.group(1) in params:
                    raise ParseError(f"parameter {pm.group(1)} given twice", lineno, col, source)
                params[pm.group(1)] = int(pm.group(2))
            if not params:
                raise ParseError("empty params line", lineno, toks[0][0], source)
            params_line = lineno
            continue
        bars = [col for col, tok in toks if tok == "|"]
        if not bars:
            raise ParseError("missing '|' between left and right part", lineno, None, source)
        if len(bars) > 1:
            raise ParseError("more than one '|' in row", lineno, bars[1], source)
        row_l, row_r, cols = [], [], []
        side = row_l
        for col, tok in toks:
            if tok == "|":
                side = row_r
                continue
            vm = _VAR.fullmatch(tok)
            if not vm:
                raise ParseError(f"bad token {tok!r}, expected x<int> or '|'", lineno, col, source)
            side.append(int(vm.group(1)))
            cols.append(col)
        if widths is None:
            widths, first_row_line = (len(row_l), len(row_r)), lineno
        elif (len(row_l), len(row_r)) != widths:
            raise ParseError(
                f"ragged row: {len(row_l)}+{len(row_r)} entries, line {first_row_line} has "
                f"{widths[0]}+{widths[1]}",
                lineno, None, source,
            )
        if "l" in params and "k" in params:
            bounds = [params["l"]] * len(row_l) + [params["k"]] * len(row_r)
            for v, bound, col in zip(row_l + row_r, bounds, cols):
                if v > bound:
                    raise ParseError(f"x{v} exceeds its bound x{bound}", lineno, col, source)
        left.append(row_l)
        right.append(row_r)
    if not left:
        raise ParseError("no rows (n must be >= 1)", max(1, len(text.splitlines())), None, source)
    got = {"n": len(left), "m": widths[0], "m'": widths[1]}
    for key, val in got.items():
        if key in params and params[key] != val:
            raise ParseError(
                f"params declare {key}={params[key]} but the rows give {val}", params_line, None, source
            )
    try:
        return validate(left, right, params.get("l"), params.get("k"))
    except ParseError:
        raise
    except MatrixError as exc:
        raise ParseError(str(exc), first_row_line, None, source) from None


def parse_matrix(path) -> ExtendedMatrix:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise MatrixError(f"cannot read {path}: {exc.strerror}") from None
    return parse_matrix_text(text, str(path))


def format_matrix(M: ExtendedMatrix) -> str:
    lines = [f"params n={M.n} m={M.m} m'={M.m_prime} l={M.l} k={M.k}"]
    for lrow, rrow in zip(M.left, M.right):
        parts = [f"x{v}" for v in lrow] + ["|"] + [f"x{v}" for v in rrow]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
