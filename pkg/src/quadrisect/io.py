"""
Text formats for diagrams (``.q4d``) and permutation representations
(``.rho``).

A ``.q4d`` file is line oriented; ``#`` starts a comment::

    mode: plat            # or: relators
    bridges: 2
    name: two-bridge unlink   # optional metadata, any "key: value"
    tangle1: s2 s1'
    tangle2:
    tangle3: s2 s2
    tangle4:

In plat mode a tangle line is a braid word in s1..s_{2b-1}, a trailing
``'`` or ``^-1`` inverting a letter.  In relator mode it lists ``b``
relators in x0..x_{2b-1} separated by ``;``, e.g. ``x4 x11 ; x5 x6``.

A ``.rho`` file gives the number of sheets and then one permutation per
puncture, in cycle notation, optionally labeled::

    sheets: 3
    x0: (1 2)
    x1: (1 2)
    x2: (1 3)
    ...
"""

import re

from .covers import CoverError, PermutationRep
from .groups import parse_word
from .perms import Permutation
from .presentations import RelatorTangle, puncture_names
from .tangles import BraidWord, FourPlaneDiagram, TrivialTangle


class FormatError(ValueError):
    """A malformed input file; carries 1-based line and column numbers."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


_KEY = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*:(.*)$")
_LETTER = re.compile(r"s(\d+)(\^-1|\^\{-1\}|')?$")


def _strip_comment(raw):
    return raw.split("#", 1)[0].rstrip()


def _parse_braid(text, strands, line, offset):
    letters = []
    for m in re.finditer(r"\S+", text):
        tok = m.group(0)
        col = offset + m.start() + 1
        lm = _LETTER.match(tok)
        if not lm:
            raise FormatError(f"bad braid letter {tok!r}", line, col)
        i = int(lm.group(1))
        if not 1 <= i < strands:
            raise FormatError(
                f"braid generator s{i} out of range (need 1..{strands - 1})", line, col
            )
        letters.append((i, -1 if lm.group(2) else 1))
    return BraidWord(strands, tuple(letters))


def _parse_relators(text, bridges, line, offset):
    names = puncture_names(bridges)
    words = []
    pos = 0
    for chunk in text.split(";"):
        start = offset + pos + 1 + (len(chunk) - len(chunk.lstrip()))
        pos += len(chunk) + 1
        if not chunk.strip():
            continue
        try:
            words.append(parse_word(chunk, names))
        except ValueError as exc:
            col = start
            m = re.search(r"column (\d+)", str(exc))
            if m:
                col = start + int(m.group(1)) - 1
            raise FormatError(re.sub(r" at column \d+", "", str(exc)), line, col) from None
    try:
        return RelatorTangle(bridges, tuple(words))
    except ValueError as exc:
        raise FormatError(str(exc), line) from None


def parse_diagram(text):
    """Parse ``.q4d`` text into a FourPlaneDiagram."""
    header, tangles, metadata = {}, {}, {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        m = _KEY.match(line)
        if not m:
            raise FormatError("expected 'key: value'", lineno, len(line) - len(line.lstrip()) + 1)
        key, value = m.group(1), m.group(2)
        offset = m.start(2)
        if key in ("mode", "bridges"):
            if key in header:
                raise FormatError(f"duplicate {key!r}", lineno, 1)
            header[key] = (value.strip(), lineno, offset)
        elif re.fullmatch(r"tangle[1-4]", key):
            k = int(key[-1])
            if k in tangles:
                raise FormatError(f"duplicate {key!r}", lineno, 1)
            tangles[k] = (value, lineno, offset)
        elif key.startswith("tangle"):
            raise FormatError(f"unknown tangle {key!r}; use tangle1..tangle4", lineno, 1)
        else:
            metadata[key] = value.strip()

    if "bridges" not in header:
        raise FormatError("missing 'bridges:' line")
    value, lineno, offset = header["bridges"]
    if not value.isdigit() or int(value) < 1:
        raise FormatError(f"bridges must be a positive integer, got {value!r}", lineno, offset + 1)
    b = int(value)
    mode = header.get("mode", ("plat", None, 0))[0]
    if mode not in ("plat", "relators"):
        raise FormatError(f"mode must be 'plat' or 'relators', got {mode!r}", header["mode"][1])
    missing = [k for k in range(1, 5) if k not in tangles]
    if missing:
        raise FormatError(f"missing tangle{missing[0]} line")

    out = []
    for k in range(1, 5):
        value, lineno, offset = tangles[k]
        if mode == "plat":
            out.append(TrivialTangle(b, _parse_braid(value, 2 * b, lineno, offset)))
        else:
            out.append(_parse_relators(value, b, lineno, offset))
    return FourPlaneDiagram(b, tuple(out), metadata)


def serialize_diagram(D):
    """Canonical ``.q4d`` text; ``parse_diagram`` inverts it."""
    mode = "plat" if D.is_plat() else "relators"
    lines = [f"mode: {mode}", f"bridges: {D.bridges}"]
    for key in sorted(D.metadata):
        value = str(D.metadata[key])
        if key in ("mode", "bridges") or key.startswith("tangle") or "\n" in value:
            continue
        lines.append(f"{key}: {value}")
    names = puncture_names(D.bridges)
    for k, T in enumerate(D.tangles, start=1):
        if mode == "plat":
            body = str(T.braid)
        elif isinstance(T, RelatorTangle):
            body = " ; ".join(r.format(names) for r in T.relators)
        else:
            from .presentations import tangle_relators

            body = " ; ".join(r.format(names) for r in tangle_relators(T))
        lines.append(f"tangle{k}: {body}".rstrip())
    return "\n".join(lines) + "\n"


def read_diagram(path):
    with open(path) as fh:
        return parse_diagram(fh.read())


def write_diagram(D, path):
    with open(path, "w") as fh:
        fh.write(serialize_diagram(D))


def parse_rho(text, punctures=None):
    """Parse ``.rho`` text into a PermutationRep."""
    sheets, perms = None, []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        m = _KEY.match(line)
        if m and m.group(1) == "sheets":
            value = m.group(2).strip()
            if not value.isdigit() or int(value) < 1:
                raise FormatError(f"sheets must be a positive integer, got {value!r}", lineno)
            sheets = int(value)
            continue
        if sheets is None:
            raise FormatError("'sheets:' must come first", lineno, 1)
        body, offset = line, 0
        if m:
            label = m.group(1)
            if label != f"x{len(perms)}":
                raise FormatError(f"expected label x{len(perms)}, got {label!r}", lineno, 1)
            body, offset = m.group(2), m.start(2)
        try:
            perms.append(Permutation.parse(body.strip(), sheets))
        except ValueError as exc:
            raise FormatError(str(exc), lineno, offset + len(body) - len(body.lstrip()) + 1) from None
    if sheets is None:
        raise FormatError("missing 'sheets:' line")
    if punctures is not None and len(perms) != punctures:
        raise FormatError(f"expected {punctures} permutations, got {len(perms)}")
    try:
        rho = PermutationRep(sheets, tuple(perms))
    except CoverError as exc:
        raise FormatError(str(exc)) from None
    if not rho.kills_sphere():
        raise FormatError("the product of all images is not the identity")
    return rho


def serialize_rho(rho):
    lines = [f"sheets: {rho.sheets}"]
    for i, p in enumerate(rho.images):
        lines.append(f"x{i}: {p}")
    return "\n".join(lines) + "\n"


def read_rho(path, punctures=None):
    with open(path) as fh:
        return parse_rho(fh.read(), punctures)
