"""
Free-group words and finite presentations, with abelianization and Tietze moves.

A word is a tuple of ``(generator, exponent)`` letters with exponent +1 or
-1.  Generators are indices into the presentation's list of names.
"""

import re
from dataclasses import dataclass, field

from .linalg import AbelianGroup, IntegerMatrix, smith_normal_form


class Word(tuple):
    """An immutable word in a free group; letters are ``(gen, +-1)`` pairs."""

    def __new__(cls, letters=()):
        out = []
        for g, e in letters:
            if e not in (1, -1):
                raise ValueError(f"exponent must be +-1, got {e}")
            out.append((int(g), int(e)))
        return super().__new__(cls, out)

    @classmethod
    def from_powers(cls, powers):
        """Build from ``(gen, k)`` pairs with arbitrary integer ``k``."""
        letters = []
        for g, k in powers:
            e = 1 if k > 0 else -1
            letters.extend([(g, e)] * abs(k))
        return cls(letters)

    def __mul__(self, other):
        return Word(tuple(self) + tuple(other)).reduced()

    def inverse(self):
        return Word((g, -e) for g, e in reversed(self))

    def __invert__(self):
        return self.inverse()

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        return Word(tuple(base) * abs(k)).reduced()

    def reduced(self):
        out = []
        for g, e in self:
            if out and out[-1] == (g, -e):
                out.pop()
            else:
                out.append((g, e))
        return Word(out)

    def cyclically_reduced(self):
        w = list(self.reduced())
        i, j = 0, len(w) - 1
        while i < j and w[i] == (w[j][0], -w[j][1]):
            i += 1
            j -= 1
        return Word(w[i:j + 1])

    def generators(self):
        return {g for g, _ in self}

    def exponent_sums(self, ngens):
        v = [0] * ngens
        for g, e in self:
            v[g] += e
        return v

    def substitute(self, images):
        """Apply the endomorphism sending generator g to ``images[g]``."""
        out = []
        for g, e in self:
            img = images[g]
            out.extend(img if e == 1 else Word(img).inverse())
        return Word(out).reduced()

    def rename(self, mapping):
        return Word((mapping[g], e) for g, e in self)

    def format(self, names):
        if not self:
            return "1"
        return " ".join(names[g] if e == 1 else f"{names[g]}^-1" for g, e in self)

    def __repr__(self):
        return "Word(" + " ".join(f"x{g}" + ("" if e == 1 else "'") for g, e in self) + ")"


def cyclic_normal_form(word):
    """
    Canonical representative of the class of ``word`` under cyclic
    rotation, inversion and conjugation: the lexicographically least
    rotation of the cyclically reduced word or of its inverse.
    """
    w = Word(word).cyclically_reduced()
    if not w:
        return Word()
    candidates = []
    for v in (w, w.inverse()):
        t = tuple(v)
        candidates.extend(t[k:] + t[:k] for k in range(len(t)))
    return Word(min(candidates))


def same_relator(u, v):
    return cyclic_normal_form(u) == cyclic_normal_form(v)


_POWER = re.compile(r"\^\{?(-?\d+)\}?|'")


def parse_word(text, names):
    """
    Parse a word such as ``"x1 x2^-1 x11"``, ``"x1x2^-1x11"`` or
    ``"x3_1 x4_2'"`` over the given generator names.  Letters may be
    juxtaposed; at each position the longest matching name is taken.
    """
    index = {n: i for i, n in enumerate(names)}
    by_length = sorted(names, key=len, reverse=True)
    text = text.strip()
    if text in ("", "1"):
        return Word()
    letters = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace() or text[pos] == "*":
            pos += 1
            continue
        name = next((n for n in by_length if text.startswith(n, pos)), None)
        if name is None:
            raise ValueError(f"unknown generator at column {pos + 1}: {text[pos:]!r}")
        end = pos + len(name)
        # Reject a longer identifier that merely starts with a known name.
        if end < len(text) and (text[end].isalnum() or text[end] == "_"):
            tail = re.match(r"[A-Za-z0-9_]*", text[end:]).group(0)
            if not any(text.startswith(n, end) for n in by_length):
                raise ValueError(f"unknown generator {name + tail!r} at column {pos + 1}")
        k = 1
        power = _POWER.match(text, end)
        if power:
            k = -1 if power.group(0) == "'" else int(power.group(1))
            end = power.end()
        letters.extend([(index[name], 1 if k > 0 else -1)] * abs(k))
        pos = end
    return Word(letters)


@dataclass(frozen=True)
class FPGroup:
    """A finite presentation <generators | relators>."""

    generators: tuple
    relators: tuple = field(default=())

    def __post_init__(self):
        gens = tuple(self.generators)
        rels = tuple(Word(r) for r in self.relators)
        n = len(gens)
        for r in rels:
            if any(not 0 <= g < n for g, _ in r):
                raise ValueError(f"relator {r!r} uses an undeclared generator")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)

    @property
    def ngens(self):
        return len(self.generators)

    def relation_matrix(self):
        """Exponent-sum matrix: one row per generator, one column per relator."""
        cols = [r.exponent_sums(self.ngens) for r in self.relators]
        return IntegerMatrix.from_columns(cols, self.ngens)

    def abelianization(self):
        return abelianization(self)

    def to_text(self):
        """Plain-text export: a generators line, then one relator per line."""
        lines = ["generators: " + " ".join(self.generators), "relators:"]
        lines.extend(r.format(self.generators) for r in self.relators)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        gens, rels, in_rels = None, [], False
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("generators:"):
                gens = tuple(line.split(":", 1)[1].split())
            elif line.startswith("relators:"):
                in_rels = True
            elif in_rels and gens is not None:
                rels.append(parse_word(line, gens))
            else:
                raise ValueError(f"unexpected line {raw!r}")
        if gens is None:
            raise ValueError("missing generators line")
        return cls(gens, tuple(rels))


@dataclass(frozen=True)
class AbelianizationMap:
    """
    Coordinates on the abelianization of a presentation.

    ``free`` is a free_rank x ngens integer matrix; row k gives the k-th
    free coordinate of an exponent-sum vector.  ``torsion`` holds
    ``(row, modulus)`` pairs for the torsion summands.
    """

    group: AbelianGroup
    free: IntegerMatrix
    torsion: tuple
    ngens: int

    def __call__(self, vector):
        if isinstance(vector, Word):
            vector = vector.exponent_sums(self.ngens)
        return self.free @ tuple(vector)

    def torsion_coordinates(self, vector):
        if isinstance(vector, Word):
            vector = vector.exponent_sums(self.ngens)
        return tuple(
            sum(a * b for a, b in zip(row, vector)) % d for row, d in self.torsion
        )

    def generator_images(self):
        """Free coordinates of each generator, as a list of vectors."""
        return [self.free.column(g) for g in range(self.ngens)]


def abelianization(G):
    """
    Abelian invariants of ``G`` and a coordinate map onto them.

    With ``U R V = D`` the Smith form of the relation matrix, row i of
    ``U`` is a coordinate functional: rows past the rank give the free
    part, rows with ``d_i > 1`` the torsion.
    """
    n = G.ngens
    if not G.relators:
        ident = IntegerMatrix.identity(n)
        return AbelianGroup(n), AbelianizationMap(AbelianGroup(n), ident, (), n)
    R = G.relation_matrix()
    snf = smith_normal_form(R)
    inv = snf.invariants
    group = AbelianGroup(n - len(inv), tuple(d for d in inv if d > 1))
    free = IntegerMatrix([snf.U.row(i) for i in range(len(inv), n)], n - len(inv), n)
    torsion = tuple((snf.U.row(i), d) for i, d in enumerate(inv) if d > 1)
    return group, AbelianizationMap(group, free, torsion, n)


def _tidy(rels):
    seen, out = set(), []
    for r in rels:
        r = Word(r).cyclically_reduced()
        if not r:
            continue
        key = cyclic_normal_form(r)
        if key in seen:
            continue
        seen.add(key)
        out.append(r)
    return sorted(out, key=len)


def _single_occurrence(rels):
    """(relator index, generator) for a generator occurring once in some relator."""
    for idx, r in enumerate(rels):
        counts = {}
        for g, _ in r:
            counts[g] = counts.get(g, 0) + 1
        singles = [g for g, c in counts.items() if c == 1]
        if singles:
            return idx, max(singles)
    return None


def _nielsen_candidates(alive):
    for a in alive:
        for b in alive:
            if a == b:
                continue
            for e in (1, -1):
                yield a, Word([(a, 1), (b, e)])
                yield a, Word([(b, e), (a, 1)])


def tietze_simplify(G, budget=10_000):
    """
    Best-effort simplification of a presentation.

    Applies free and cyclic reduction, drops trivial and duplicate
    relators, and eliminates any generator occurring exactly once in some
    relator (substituting its solution everywhere), shortest relators
    first.  When no such generator exists, a Nielsen substitution
    a -> a b^{+-1} or b^{+-1} a that shortens the relators is applied
    instead.  Each step costs roughly the total relator length; work stops
    once ``budget`` is spent or no step applies.

    Returns ``(H, images)`` where ``H`` presents the same group on a subset
    of the original generators and ``images[g]`` is a word in H's
    generators representing original generator g.
    """
    names = list(G.generators)
    alive = list(range(len(names)))
    images = {g: Word([(g, 1)]) for g in alive}
    rels = _tidy(G.relators)
    spent = 0

    def apply(sub):
        nonlocal rels
        rels = _tidy(Word(x).substitute(sub) for x in rels)
        for h in images:
            images[h] = images[h].substitute(sub)

    while spent < budget and rels:
        choice = _single_occurrence(rels)
        sub = {h: Word([(h, 1)]) for h in alive}
        if choice is not None:
            idx, g = choice
            r = list(rels.pop(idx))
            k = next(i for i, (h, _) in enumerate(r) if h == g)
            rot = r[k:] + r[:k]
            rest = Word(rot[1:])
            # g^e * rest = 1, so g = rest^-1 when e = 1 and rest otherwise.
            sub[g] = rest.inverse() if rot[0][1] == 1 else rest
            apply(sub)
            alive.remove(g)
            spent += 1 + sum(len(x) for x in rels)
            continue
        total = sum(len(x) for x in rels)
        best = None
        for a, img in _nielsen_candidates(alive):
            trial = dict(sub)
            trial[a] = img
            new_total = sum(len(Word(x).substitute(trial).cyclically_reduced()) for x in rels)
            spent += total
            if new_total < total and (best is None or new_total < best[0]):
                best = (new_total, trial)
            if spent >= budget:
                break
        if best is None:
            break
        apply(best[1])

    rename = {g: i for i, g in enumerate(alive)}
    H = FPGroup(tuple(names[g] for g in alive), tuple(r.rename(rename) for r in rels))
    return H, [images[g].rename(rename) for g in range(len(names))]


def is_free_presentation(G):
    return not G.relators
