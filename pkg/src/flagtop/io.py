"""Facet file formats: plain text and JSON.

Text format: optional '#' comment lines, then a header "n d" (vertex count
and dimension), then one facet per line as space-separated ascending vertex
ids. JSON alternative: {"n": ..., "facets": [[...], ...]}. Both reject
non-antichain input.
"""

from __future__ import annotations

import json

from .core import ComplexError, SimplicialComplex, mask_of


class FormatError(ValueError):
    """Malformed facet file; carries the 1-based offending line when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def loads_text(text: str) -> SimplicialComplex:
    header: tuple[int, int] | None = None
    header_line = 0
    facets: list[tuple[int, ...]] = []
    seen_masks: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise FormatError(f"non-integer token in {line!r}", lineno)
        if header is None:
            if len(nums) != 2:
                raise FormatError("header must be 'n d' (vertex count, dimension)", lineno)
            header = (nums[0], nums[1])
            header_line = lineno
            if header[0] < 0:
                raise FormatError("negative vertex count", lineno)
            continue
        if any(b <= a for a, b in zip(nums, nums[1:])):
            raise FormatError("facet vertices must be strictly ascending", lineno)
        if any(v < 0 or v >= header[0] for v in nums):
            raise FormatError(f"vertex id out of range 0..{header[0] - 1}", lineno)
        m = mask_of(nums)
        for prev_m, prev_line in seen_masks:
            if prev_m & m in (prev_m, m):
                raise FormatError(
                    f"not an antichain: facet nests with line {prev_line}", lineno)
        seen_masks.append((m, lineno))
        facets.append(tuple(nums))
    if header is None:
        raise FormatError("missing 'n d' header")
    n, d = header
    if not facets:
        if n == 0 and d == -1:
            return SimplicialComplex(0, [()])
        raise FormatError("no facets", header_line)
    try:
        k = SimplicialComplex(n, facets)
    except ComplexError as exc:
        raise FormatError(str(exc), header_line)
    if k.dim != d:
        raise FormatError(f"header dimension {d} but facets have dimension {k.dim}",
                          header_line)
    return k


def dumps_text(k: SimplicialComplex, comments: tuple[str, ...] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{k.n} {k.dim}")
    lines.extend(" ".join(str(v) for v in f) for f in k.facets if f)
    return "\n".join(lines) + "\n"


def loads_json(text: str) -> SimplicialComplex:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.lineno)
    if not isinstance(obj, dict) or "n" not in obj or "facets" not in obj:
        raise FormatError('JSON needs keys "n" and "facets"')
    n, facets = obj["n"], obj["facets"]
    if not isinstance(n, int) or not isinstance(facets, list):
        raise FormatError('"n" must be an int and "facets" a list of lists')
    for f in facets:
        if not isinstance(f, list) or any(not isinstance(v, int) for v in f):
            raise FormatError(f"facet {f!r} is not a list of ints")
        if any(b <= a for a, b in zip(f, f[1:])):
            raise FormatError(f"facet {f!r} is not strictly ascending")
    try:
        if not facets and n == 0:
            return SimplicialComplex(0, [()])
        return SimplicialComplex(n, facets)
    except ComplexError as exc:
        raise FormatError(str(exc))


def dumps_json(k: SimplicialComplex) -> str:
    return json.dumps({"n": k.n, "facets": [list(f) for f in k.facets]}) + "\n"


def loads(text: str) -> SimplicialComplex:
    """Sniff the format: JSON if the first non-blank character is '{'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return loads_json(text)
    return loads_text(text)


def load_path(path: str) -> SimplicialComplex:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())
