"""Graph files: JSON (with optional vertex labels), DOT and edge lists."""

from __future__ import annotations

import json

from .complex import ComplexGraph, InteractionVertex

FORMATS = ("json", "dot", "edgelist")


class GraphFormatError(ValueError):
    pass


def export_graph(g: ComplexGraph, fmt: str = "json") -> bytes:
    if fmt == "json":
        verts = []
        for v in range(g.n):
            item = {"id": v}
            if g.labels is not None:
                lab = g.labels[v]
                item.update(core=lab.x, k=lab.k, p=list(lab.p), q=list(lab.q))
            verts.append(item)
        doc = {"vertices": verts, "edges": [list(e) for e in g.edges]}
        return (json.dumps(doc) + "\n").encode()
    if fmt == "dot":
        lines = ["graph K4T {"]
        for v in range(g.n):
            if g.labels is not None:
                lines.append(f'  {v} [label="{g.labels[v]}"];')
            else:
                lines.append(f"  {v};")
        lines.extend(f"  {a} -- {b};" for a, b in g.edges)
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    if fmt == "edgelist":
        return "".join(f"{a} {b}\n" for a, b in g.edges).encode()
    raise GraphFormatError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def _int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphFormatError(f"{what} must be an integer, got {value!r}")
    return value


def _vector(value, what):
    if not isinstance(value, list):
        raise GraphFormatError(f"{what} must be a list")
    return tuple(_int(x, what) for x in value)


def import_graph(data: bytes | str, fmt: str = "json") -> ComplexGraph:
    text = data.decode() if isinstance(data, bytes) else data
    if fmt == "json":
        return _import_json(text)
    if fmt == "edgelist":
        return _import_edgelist(text)
    raise GraphFormatError(f"cannot import format {fmt!r}")


def _import_json(text: str) -> ComplexGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != {"vertices", "edges"}:
        raise GraphFormatError('expected an object with keys "vertices" and "edges"')
    verts, edges = doc["vertices"], doc["edges"]
    if not isinstance(verts, list) or not isinstance(edges, list):
        raise GraphFormatError('"vertices" and "edges" must be lists')
    labels = []
    for pos, item in enumerate(verts):
        if not isinstance(item, dict) or "id" not in item:
            raise GraphFormatError(f"vertex #{pos} lacks an id")
        if _int(item["id"], "vertex id") != pos:
            raise GraphFormatError(f"vertex ids must be dense and ordered; #{pos} has id {item['id']}")
        keys = set(item) - {"id"}
        if keys == {"core", "k", "p", "q"}:
            labels.append(InteractionVertex(_int(item["k"], "k"), _int(item["core"], "core"),
                                            _vector(item["p"], "p"), _vector(item["q"], "q")))
        elif keys:
            raise GraphFormatError(f"vertex {pos}: labels need exactly core, k, p, q")
        else:
            labels.append(None)
    if any(lab is None for lab in labels) and any(lab is not None for lab in labels):
        raise GraphFormatError("either every vertex carries a label or none does")
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise GraphFormatError(f"edge {e!r} is not a pair")
        a, b = _int(e[0], "edge endpoint"), _int(e[1], "edge endpoint")
        if a == b:
            raise GraphFormatError(f"loop at vertex {a}")
        if not (0 <= a < len(verts) and 0 <= b < len(verts)):
            raise GraphFormatError(f"edge ({a}, {b}) references an unknown vertex")
        pairs.append((min(a, b), max(a, b)))
    if len(set(pairs)) != len(pairs):
        raise GraphFormatError("duplicate edge")
    has_labels = bool(labels) and labels[0] is not None
    try:
        return ComplexGraph(len(verts), pairs, labels if has_labels else None)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def _import_edgelist(text: str) -> ComplexGraph:
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex ids")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id") from None
        if a < 0 or b < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        if a == b:
            raise GraphFormatError(f"line {lineno}: loop at vertex {a}")
        pairs.append((min(a, b), max(a, b)))
    if len(set(pairs)) != len(pairs):
        raise GraphFormatError("duplicate edge")
    n = max((max(e) for e in pairs), default=-1) + 1
    return ComplexGraph(n, pairs)
