"""Line-oriented workspace files: parsing and printing.

Grammar, one declaration per line, whitespace-separated decimal
integers, "#" starts a comment:

    object <name>
    universe abelian
    rank <n>
    rel <n integers>        zero or more relation rows
    cone <n integers>       zero or more cone generators

    object <name>
    universe finite
    order <n>
    table                   followed by n rows of n indices
    cone <indices>          zero or more lines of generator indices

    morphism <name> : <dom> -> <cod>
    matrix                  abelian: followed by one row per domain rank
    map <indices>           finite: image of every element in order

Every printed block re-loads to a structurally equal entity.
"""

from dataclasses import dataclass, field

from . import fgabelian as ab
from . import finitegroup as fg
from . import preord as po
from .errors import ParseError


@dataclass
class Workspace:
    """Named objects and morphisms loaded from one file."""

    objects: dict = field(default_factory=dict)
    morphisms: dict = field(default_factory=dict)
    endpoints: dict = field(default_factory=dict)  # morphism -> (dom, cod) names


def _significant_lines(text: str):
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = body.split()
        if tokens:
            out.append((lineno, tokens))
    return out


def _ints(tokens, lineno, expected=None):
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno)
    if expected is not None and len(values) != expected:
        raise ParseError(f"expected {expected} integers, got {len(values)}", lineno)
    return values


class _Cursor:
    def __init__(self, lines):
        self.lines = lines
        self.pos = 0

    def done(self) -> bool:
        return self.pos >= len(self.lines)

    def peek(self):
        return self.lines[self.pos]

    def take(self):
        line = self.lines[self.pos]
        self.pos += 1
        return line


def _parse_abelian_object(cur: _Cursor, header_line: int):
    if cur.done():
        raise ParseError("expected 'rank <n>'", header_line)
    lineno, tokens = cur.take()
    if tokens[0] != "rank" or len(tokens) != 2:
        raise ParseError("expected 'rank <n>'", lineno)
    (rank,) = _ints(tokens[1:], lineno, 1)
    if rank < 0:
        raise ParseError("rank must be nonnegative", lineno)
    rels, cone = [], []
    while not cur.done() and cur.peek()[1][0] in ("rel", "cone"):
        lineno, tokens = cur.take()
        row = _ints(tokens[1:], lineno, rank)
        (rels if tokens[0] == "rel" else cone).append(row)
    return po.make_object(ab.make_group(rank, rels), cone)


def _parse_finite_object(cur: _Cursor, header_line: int, cap):
    if cur.done():
        raise ParseError("expected 'order <n>'", header_line)
    lineno, tokens = cur.take()
    if tokens[0] != "order" or len(tokens) != 2:
        raise ParseError("expected 'order <n>'", lineno)
    (order,) = _ints(tokens[1:], lineno, 1)
    if order < 1:
        raise ParseError("order must be positive", lineno)
    if cur.done() or cur.peek()[1] != ["table"]:
        raise ParseError("expected 'table'", lineno)
    cur.take()
    rows = []
    for _ in range(order):
        if cur.done():
            raise ParseError(f"table needs {order} rows", lineno)
        row_lineno, row_tokens = cur.take()
        rows.append(_ints(row_tokens, row_lineno, order))
    cone = []
    while not cur.done() and cur.peek()[1][0] == "cone":
        lineno, tokens = cur.take()
        cone.extend(_ints(tokens[1:], lineno))
    group = (
        fg.make_finite_group(rows)
        if cap is None
        else fg.make_finite_group(rows, cap=cap)
    )
    return po.make_object(group, cone)


def _parse_object(cur: _Cursor, header_line: int, cap):
    if cur.done():
        raise ParseError("expected 'universe abelian|finite'", header_line)
    lineno, tokens = cur.take()
    if tokens[0] != "universe" or len(tokens) != 2:
        raise ParseError("expected 'universe abelian|finite'", lineno)
    if tokens[1] == "abelian":
        return _parse_abelian_object(cur, lineno)
    if tokens[1] == "finite":
        return _parse_finite_object(cur, lineno, cap)
    raise ParseError(f"unknown universe {tokens[1]!r}", lineno)


def _parse_morphism(cur: _Cursor, header, header_line: int, ws: Workspace):
    if len(header) != 6 or header[2] != ":" or header[4] != "->":
        raise ParseError("expected 'morphism <name> : <dom> -> <cod>'", header_line)
    name, dom_name, cod_name = header[1], header[3], header[5]
    for ref in (dom_name, cod_name):
        if ref not in ws.objects:
            raise ParseError(f"unknown object {ref!r}", header_line)
    dom, cod = ws.objects[dom_name], ws.objects[cod_name]
    if cur.done():
        raise ParseError("expected 'matrix' or 'map ...'", header_line)
    lineno, tokens = cur.take()
    if tokens == ["matrix"]:
        if dom.universe != po.ABELIAN:
            raise ParseError("'matrix' needs abelian endpoints", lineno)
        rows = []
        for _ in range(dom.group.rank):
            if cur.done():
                raise ParseError(f"matrix needs {dom.group.rank} rows", lineno)
            row_lineno, row_tokens = cur.take()
            rows.append(_ints(row_tokens, row_lineno, cod.group.rank))
        mapping = rows
    elif tokens[0] == "map":
        if dom.universe != po.FINITE:
            raise ParseError("'map' needs finite endpoints", lineno)
        mapping = tuple(_ints(tokens[1:], lineno, dom.group.order))
    else:
        raise ParseError("expected 'matrix' or 'map ...'", lineno)
    return name, dom_name, cod_name, po.make_morphism(dom, cod, mapping)


def parse_workspace(text: str, universe_cap: int | None = None) -> Workspace:
    """Parse a workspace file; raises ParseError or ValidationError."""
    ws = Workspace()
    cur = _Cursor(_significant_lines(text))
    while not cur.done():
        lineno, tokens = cur.take()
        if tokens[0] == "object":
            if len(tokens) != 2:
                raise ParseError("expected 'object <name>'", lineno)
            name = tokens[1]
            if name in ws.objects:
                raise ParseError(f"duplicate object {name!r}", lineno)
            ws.objects[name] = _parse_object(cur, lineno, universe_cap)
        elif tokens[0] == "morphism":
            name, dom_name, cod_name, mor = _parse_morphism(cur, tokens, lineno, ws)
            if name in ws.morphisms:
                raise ParseError(f"duplicate morphism {name!r}", lineno)
            ws.morphisms[name] = mor
            ws.endpoints[name] = (dom_name, cod_name)
        else:
            raise ParseError(f"expected 'object' or 'morphism', got {tokens[0]!r}", lineno)
    return ws


# --- printing ----------------------------------------------------------------


def _int_line(keyword: str, values) -> str:
    if not values:
        return keyword
    return keyword + " " + " ".join(str(v) for v in values)


def format_object(name: str, obj: po.PreOrdObj) -> str:
    lines = [f"object {name}"]
    if obj.universe == po.ABELIAN:
        lines.append("universe abelian")
        lines.append(f"rank {obj.group.rank}")
        for i in range(obj.group.relations.rows):
            lines.append(_int_line("rel", obj.group.relations.row(i)))
        for i in range(obj.cone.rows):
            lines.append(_int_line("cone", obj.cone.row(i)))
    else:
        lines.append("universe finite")
        lines.append(f"order {obj.group.order}")
        lines.append("table")
        n = obj.group.order
        for i in range(n):
            lines.append(" ".join(str(v) for v in obj.group.table[i * n : (i + 1) * n]))
        lines.append(_int_line("cone", sorted(obj.cone)))
    return "\n".join(lines)


def format_morphism(name: str, mor: po.PreOrdMor, dom_name: str, cod_name: str) -> str:
    lines = [f"morphism {name} : {dom_name} -> {cod_name}"]
    if mor.dom.universe == po.ABELIAN:
        lines.append("matrix")
        for i in range(mor.map.matrix.rows):
            lines.append(" ".join(str(v) for v in mor.map.matrix.row(i)))
    else:
        lines.append(_int_line("map", mor.map.mapping))
    return "\n".join(lines)


def format_workspace(ws: Workspace) -> str:
    blocks = [format_object(name, obj) for name, obj in ws.objects.items()]
    blocks += [
        format_morphism(name, mor, *ws.endpoints[name])
        for name, mor in ws.morphisms.items()
    ]
    return "\n\n".join(blocks) + "\n"
