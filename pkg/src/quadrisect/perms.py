"""Permutations of {1..n} and a small union-find for orbit counting."""

import re


class Permutation:
    """
    A bijection of {1, ..., n}.

    Products compose left to right: ``(p * q)(k) == q(p(k))``.  This is
    the order in which sheets are followed when a word is read letter by
    letter, so ``rho(w)`` is the product of ``rho`` of its letters in order.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles, n):
        img = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            cyc = [int(x) for x in cyc]
            for x in cyc:
                if not 1 <= x <= n:
                    raise ValueError(f"point {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"point {x} repeated in cycle notation")
                seen.add(x)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(img)

    @classmethod
    def parse(cls, text, n):
        """Parse cycle notation like ``"(1 2)(3 4 5)"``, ``"(1,2)"`` or ``"()"``."""
        text = text.strip()
        if text in ("", "()", "id", "1"):
            return cls.identity(n)
        if not re.fullmatch(r"(\s*\([\d\s,]*\)\s*)+", text):
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = [
            [int(x) for x in re.split(r"[\s,]+", body.strip()) if x]
            for body in re.findall(r"\(([^)]*)\)", text)
        ]
        return cls.from_cycles([c for c in cycles if c], n)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, k):
        return self.images[k - 1]

    def __mul__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(other.images[x - 1] for x in self.images)

    def inverse(self):
        inv = [0] * self.degree
        for k, x in enumerate(self.images, start=1):
            inv[x - 1] = k
        return Permutation(inv)

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self):
        return all(x == k for k, x in enumerate(self.images, start=1))

    def cycles(self, include_fixed=True):
        """Disjoint cycles, each starting at its least point, ordered by that point."""
        seen, out = set(), []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc, k = [], start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self})"

    def __str__(self):
        cyc = self.cycles(include_fixed=False)
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


def cycle_count(p):
    """Number of disjoint cycles of ``p``, fixed points included."""
    return len(p.cycles())


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.count = n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)
            self.count -= 1

    def groups(self):
        out = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


def orbits(n, involutions):
    """Orbits on {0..n-1} of the group generated by index maps (tuples)."""
    uf = UnionFind(n)
    for inv in involutions:
        for a, b in enumerate(inv):
            uf.union(a, b)
    return uf.groups()


def is_transitive(perms, n):
    uf = UnionFind(n)
    for p in perms:
        for k in range(1, n + 1):
            uf.union(k - 1, p(k) - 1)
    return uf.count == 1
