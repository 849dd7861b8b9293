"""Text and JSON formats for matrices, words, generating sets and moves.

``.cox`` files::

    rank 3
    1 3 inf
    3 1 3
    inf 3 1

Generating-set files name an ambient and a claimed ``.cox`` file (paths
relative to the generating-set file) followed by one word per line::

    ambient p5.cox
    claimed p5.cox
    [0]
    [2,4,2]

Blank lines and ``#`` comments are ignored everywhere.
"""

from __future__ import annotations

import json
import os
import re

from .coxeter import INF, CoxeterMatrix
from .errors import InvalidMatrix, ParseError
from .genset import DEFAULT_CUTOFF, GeneratingSet
from .twists import TwistMove
from .words import canonical, format_word

_TOKEN = re.compile(r"\S+")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield lineno, line


def _order(token: str, line: int, col: int):
    if token == "inf":
        return INF
    if not token.isdigit():
        raise ParseError(f"expected a positive integer or 'inf', got {token!r}", line, col)
    return int(token)


def parse_cox(text: str) -> CoxeterMatrix:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty matrix file", 1, 1)
    lineno, header = lines[0]
    m = re.match(r"\s*rank\s+(\d+)\s*$", header)
    if not m or int(m.group(1)) < 1:
        raise ParseError("first line must be 'rank n' with n >= 1", lineno, 1)
    n = int(m.group(1))
    rows, where = [], []
    for lineno, line in lines[1:]:
        if len(rows) == n:
            raise ParseError("more rows than the declared rank", lineno, 1)
        tokens = list(_TOKEN.finditer(line))
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries, found {len(tokens)}", lineno, 1)
        rows.append([_order(t.group(), lineno, t.start() + 1) for t in tokens])
        where.append([(lineno, t.start() + 1) for t in tokens])
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, found {len(rows)}", lines[-1][0] + 1, 1)
    for i in range(n):
        for j in range(n):
            line, col = where[i][j]
            if i == j and rows[i][j] != 1:
                raise ParseError("diagonal entries must be 1", line, col)
            if i != j and rows[i][j] is not INF and rows[i][j] < 2:
                raise ParseError("off-diagonal entries must be >= 2", line, col)
            if rows[i][j] != rows[j][i]:
                raise ParseError(f"matrix is not symmetric at ({i},{j})", line, col)
    try:
        return CoxeterMatrix(tuple(map(tuple, rows)))
    except InvalidMatrix as exc:
        raise ParseError(str(exc), lines[0][0], 1) from None


def format_cox(M: CoxeterMatrix) -> str:
    width = max(len(str(m)) for row in M.entries for m in row)
    body = "\n".join(" ".join(str(m).rjust(width) for m in row) for row in M.entries)
    return f"rank {M.rank}\n{body}\n"


def read_cox(path: str) -> CoxeterMatrix:
    with open(path) as fh:
        return parse_cox(fh.read())


_WORD = re.compile(r"\s*\[\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\]\s*$")


def parse_word(text: str, line: int = 1) -> tuple:
    m = _WORD.match(text)
    if not m:
        col = next((i + 1 for i, ch in enumerate(text) if ch not in " [],0123456789"), 1)
        raise ParseError(f"not a word: {text.strip()!r} (expected e.g. [0,1,0])", line, col)
    body = m.group(1).strip()
    return tuple(int(x) for x in body.split(",")) if body else ()


def parse_subset(text: str) -> frozenset:
    return frozenset(parse_word(text))


def parse_genset(text: str, base_dir: str = ".", cutoff: int = DEFAULT_CUTOFF) -> GeneratingSet:
    ambient = claimed = None
    words = []
    for lineno, line in _content_lines(text):
        stripped = line.strip()
        head, _, rest = stripped.partition(" ")
        if head in ("ambient", "claimed"):
            if words:
                raise ParseError(f"'{head}' must precede the generator words", lineno, 1)
            if not rest.strip():
                raise ParseError(f"'{head}' needs a file name", lineno, len(head) + 1)
            path = os.path.join(base_dir, rest.strip())
            try:
                M = read_cox(path)
            except OSError as exc:
                raise ParseError(f"cannot read {path}: {exc.strerror}", lineno, len(head) + 2) from None
            if head == "ambient":
                ambient = M
            else:
                claimed = M
            continue
        words.append((lineno, parse_word(line, lineno)))
    if ambient is None:
        raise ParseError("missing 'ambient <file.cox>' header", 1, 1)
    gens = []
    for lineno, w in words:
        if any(s >= ambient.rank for s in w):
            raise ParseError(f"word {format_word(w)} uses letters outside the ambient rank", lineno, 1)
        gens.append(canonical(ambient, w))
    if claimed is not None and len(gens) != claimed.rank:
        raise ParseError(f"{len(gens)} generators for claimed rank {claimed.rank}", 1, 1)
    return GeneratingSet.build(ambient, gens, claimed, cutoff)


def read_genset(path: str, cutoff: int = DEFAULT_CUTOFF) -> GeneratingSet:
    """A generating-set file, or the standard generators of a ``.cox`` file."""
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".cox"):
        return GeneratingSet.standard(parse_cox(text))
    return parse_genset(text, os.path.dirname(os.path.abspath(path)), cutoff)


def format_genset(gens: GeneratingSet, ambient_path: str, claimed_path: str) -> str:
    lines = [f"ambient {ambient_path}", f"claimed {claimed_path}"]
    lines += [format_word(g.word) for g in gens.generators]
    return "\n".join(lines) + "\n"


# -- JSON ---------------------------------------------------------------------------

def matrix_to_json(M: CoxeterMatrix):
    return [["inf" if m is INF else m for m in row] for row in M.entries]


def matrix_from_json(data) -> CoxeterMatrix:
    return CoxeterMatrix(tuple(tuple(INF if m == "inf" else m for m in row) for row in data))


def genset_to_json(gens: GeneratingSet):
    return {"ambient": matrix_to_json(gens.ambient), "claimed": matrix_to_json(gens.claimed),
            "generators": [list(g.word) for g in gens.generators]}


def genset_from_json(data) -> GeneratingSet:
    ambient = matrix_from_json(data["ambient"])
    return GeneratingSet(ambient, tuple(canonical(ambient, w) for w in data["generators"]),
                         matrix_from_json(data["claimed"]))


def move_to_json(move: TwistMove):
    return move.to_dict()


def move_from_json(data) -> TwistMove:
    return TwistMove(frozenset(data["J"]), frozenset(data["A"]), frozenset(data["B"]))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)
