"""Edge-list instance files.

::

    # comment
    p <n> <m>
    <u> <v>          (m lines, 0-based ids)
    s <id> <id> ...  (optional solution lines)
    u <id> <id> ...  (optional subset lines, for subset FVS)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .graph import Graph, build_graph


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass
class Instance:
    graph: Graph
    solutions: list = field(default_factory=list)
    U: Optional[frozenset] = None


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_text(text: str, require_header: bool = True) -> Instance:
    n = m = None
    edges = []
    solutions = []
    U = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        head = tok[0]
        if head == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate 'p' line")
            if len(tok) != 3:
                raise ParseError(lineno, "expected 'p <n> <m>'")
            n, m = _ints(tok[1:], lineno)
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative counts")
        elif head in ("s", "u"):
            ids = _ints(tok[1:], lineno)
            if n is not None:
                bad = [i for i in ids if not 0 <= i < n]
                if bad:
                    raise ParseError(lineno, f"vertex id {bad[0]} out of range [0, {n})")
            if head == "s":
                solutions.append(frozenset(ids))
            else:
                U = (U or frozenset()) | frozenset(ids)
        else:
            if n is None:
                raise ParseError(lineno, "edge before 'p' line")
            if len(tok) != 2:
                raise ParseError(lineno, "expected '<u> <v>'")
            u, v = _ints(tok, lineno)
            for x in (u, v):
                if not 0 <= x < n:
                    raise ParseError(lineno, f"vertex id {x} out of range [0, {n})")
            edges.append((u, v))
    if n is None:
        if require_header:
            raise ParseError(0, "missing 'p <n> <m>' line")
        return Instance(Graph(), solutions, U)
    if len(edges) != m:
        raise ParseError(0, f"header announces {m} edges but {len(edges)} were given")
    return Instance(build_graph(n, edges), solutions, U)


def parse_instance(path) -> Instance:
    return parse_text(Path(path).read_text())


def read_solution(path) -> frozenset:
    """Union of all 's' lines of a file (a header is optional)."""
    inst = parse_text(Path(path).read_text(), require_header=False)
    out = frozenset()
    for s in inst.solutions:
        out |= s
    return out


def format_instance(g: Graph, solutions=(), U=None, comment: str = "") -> str:
    if set(g.vertices) != set(range(g.n)):
        raise ValueError("vertex ids must be 0..n-1 to be written")
    lines = []
    for c in comment.splitlines():
        lines.append(f"# {c}")
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    for s in solutions:
        lines.append(" ".join(["s", *map(str, sorted(s))]))
    if U is not None:
        lines.append(" ".join(["u", *map(str, sorted(U))]))
    return "\n".join(lines) + "\n"


def format_solution(S, comment: str = "") -> str:
    head = f"# {comment}\n" if comment else ""
    return head + " ".join(["s", *map(str, sorted(S))]) + "\n"


def write_instance(path, g: Graph, solutions=(), U=None, comment: str = "") -> None:
    Path(path).write_text(format_instance(g, solutions, U, comment))
