"""Reading and writing vector families.

Two formats are supported and detected automatically on read:

* text: an optional header line ``V n k l``, then one vector per line
  over the alphabet ``+ - 0``.  Blank lines and ``#`` comments are
  ignored.  Without a header the parameters are inferred from the first
  vector.
* JSON: an object ``{"n": ..., "k": ..., "l": ..., "vectors": [...]}``
  with vectors in the same text encoding.

Both writers emit members in family order, so output is deterministic
and diff-friendly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import EmptyInput, InvalidParams
from .vectors import Params, SignedVector, VectorFamily, format_vector, parse_vector

__all__ = [
    "load_family",
    "save_family",
    "family_to_text",
    "family_from_text",
    "family_to_json",
    "family_from_json",
]


def family_to_text(fam: VectorFamily) -> str:
    p = fam.params
    lines = [f"V {p.n} {p.k} {p.l}"]
    lines.extend(format_vector(v) for v in fam)
    return "\n".join(lines) + "\n"


def family_from_text(text: str) -> VectorFamily:
    params: Params | None = None
    vectors: list[SignedVector] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("V ") or line == "V":
            fields = line.split()
            if params is not None:
                raise InvalidParams(f"line {lineno}: duplicate header")
            if len(fields) != 4:
                raise InvalidParams(f"line {lineno}: header must read 'V n k l'")
            try:
                n, k, l = (int(f) for f in fields[1:])
            except ValueError as exc:
                raise InvalidParams(f"line {lineno}: non-integer header field") from exc
            params = Params(n, k, l)
            continue
        vectors.append(parse_vector(line))
    if params is None:
        if not vectors:
            raise EmptyInput("no header and no vectors in family text")
        first = vectors[0]
        params = Params(first.n, len(first.plus), len(first.minus))
    return VectorFamily(params, vectors)


def family_to_json(fam: VectorFamily) -> str:
    p = fam.params
    payload = {"n": p.n, "k": p.k, "l": p.l, "vectors": list(fam.strings())}
    return json.dumps(payload, indent=2) + "\n"


def family_from_json(text: str) -> VectorFamily:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParams(f"invalid JSON family: {exc}") from exc
    try:
        params = Params(int(payload["n"]), int(payload["k"]), int(payload["l"]))
        raw = payload["vectors"]
    except (KeyError, TypeError) as exc:
        raise InvalidParams("JSON family needs fields n, k, l, vectors") from exc
    return VectorFamily(params, (parse_vector(s) for s in raw))


def load_family(path: str | Path) -> VectorFamily:
    """Read a family file, sniffing JSON vs text by the first character."""
    text = Path(path).read_text()
    if not text.strip():
        raise EmptyInput(f"family file {path} is empty")
    if text.lstrip().startswith("{"):
        return family_from_json(text)
    return family_from_text(text)


def save_family(fam: VectorFamily, path: str | Path, fmt: str = "text") -> None:
    if fmt == "text":
        Path(path).write_text(family_to_text(fam))
    elif fmt == "json":
        Path(path).write_text(family_to_json(fam))
    else:
        raise ValueError(f"unknown family format {fmt!r} (want 'text' or 'json')")
