"""Console rendering helpers shared by Frab and Disord displays.

Numbers in one display share a format: all integers, all fixed-point with
a common number of decimals, or all scientific with a common mantissa
length, at 7 significant digits, padded to a common width.
"""

import math

SIG_DIGITS = 7
LINE_WIDTH = 80


def _sig_and_exponent(v):
    mantissa, exp = f"{v:.{SIG_DIGITS - 1}e}".split("e")
    digits = mantissa.replace("-", "").replace(".", "").rstrip("0")
    return max(len(digits), 1), int(exp)


def format_numbers(values):
    values = [float(v) for v in values]
    if not values:
        return []
    if all(v.is_integer() and abs(v) < 1e15 for v in values):
        out = [str(int(v)) for v in values]
    else:
        fixed_decimals = 0
        sci_decimals = 0
        for v in values:
            if v == 0 or not math.isfinite(v):
                continue
            sig, exp = _sig_and_exponent(v)
            fixed_decimals = max(fixed_decimals, sig - 1 - exp)
            sci_decimals = max(sci_decimals, sig - 1)
        fixed = [f"{v:.{min(fixed_decimals, 15)}f}" for v in values]
        sci = [f"{v:.{sci_decimals}e}" for v in values]
        too_small = fixed_decimals > 15
        if too_small or max(map(len, fixed)) > max(map(len, sci)):
            out = sci
        else:
            out = fixed
    width = max(map(len, out))
    return [s.rjust(width) for s in out]


def format_items(items):
    """Format a homogeneous-ish sequence for a vector-style display."""
    items = list(items)
    if not items:
        return []
    if all(isinstance(x, bool) for x in items):
        out = ["TRUE" if x else "FALSE" for x in items]
        width = max(map(len, out))
        return [s.rjust(width) for s in out]
    if all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in items):
        return format_numbers(items)
    if all(isinstance(x, str) for x in items):
        out = ['"' + x.replace("\\", "\\\\").replace('"', '\\"') + '"' for x in items]
        width = max(map(len, out))
        return [s.ljust(width) for s in out]
    out = [str(x) for x in items]
    width = max(map(len, out))
    return [s.rjust(width) for s in out]


def render_vector(items, width=LINE_WIDTH):
    """Lines like ``[1] 2 1 3``, wrapped with running index prefixes."""
    cells = format_items(items)
    if not cells:
        return ["<empty>"]
    prefix_width = len(f"[{len(cells)}]")
    per_line = max(1, (width - prefix_width) // (len(cells[0]) + 1))
    lines = []
    for start in range(0, len(cells), per_line):
        prefix = f"[{start + 1}]".rjust(prefix_width)
        lines.append(prefix + " " + " ".join(cells[start:start + per_line]))
    return lines


def render_named(names, values, width=LINE_WIDTH):
    """Two-row name/value blocks, columns right-aligned, wrapped at width."""
    cells = format_numbers(values)
    cols = []
    for name, cell in zip(names, cells):
        w = max(len(name), len(cell))
        cols.append((name.rjust(w), cell.rjust(w)))
    lines = []
    row_names, row_values, used = [], [], 0
    for n, v in cols:
        if row_names and used + len(n) + 1 > width:
            lines += [" ".join(row_names) + " ", " ".join(row_values) + " "]
            row_names, row_values, used = [], [], 0
        row_names.append(n)
        row_values.append(v)
        used += len(n) + 1
    if row_names:
        lines += [" ".join(row_names) + " ", " ".join(row_values) + " "]
    return lines


def shortest(v):
    """Shortest string that parses back to exactly ``v``.

    Integral values below 1e17 are written without a decimal point.
    """
    if v.is_integer() and abs(v) < 1e17:
        return str(int(v))
    return repr(v)
