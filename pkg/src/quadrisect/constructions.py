"""
Generators of 4-plane diagrams and moves between them.

Every tangle produced here is a plat.  Crossingless tangles come from
``noncrossing_braid``; other matchings from ``matching_braid``.
"""

from .covers import PermutationRep
from .presentations import RelatorTangle, artin_automorphism
from .tangles import BraidWord, FourPlaneDiagram, TrivialTangle


def _arcs(m):
    return sorted({(min(p, q), max(p, q)) for p, q in enumerate(m)}, key=lambda a: a[1])


def noncrossing_braid(m):
    """
    Positive braid whose plat has the non-crossing matching ``m``.

    Arcs are placed in order of right endpoint; the new cap, born at the
    right end, slides its left foot leftwards until it sits just after the
    arcs already placed to its left.
    """
    if not is_noncrossing(m):
        raise ValueError(f"matching {m} is not non-crossing")
    n = len(m)
    letters, placed = [], []
    for k, (a, c) in enumerate(_arcs(m)):
        left = sum(1 for arc in placed for e in arc if e < a)
        for i in range(2 * k, left, -1):
            letters.append((i, 1))
        placed.append((a, c))
    return BraidWord(n, tuple(letters))


def is_noncrossing(m):
    arcs = _arcs(m)
    return not any(a < c < b < d for a, b in arcs for c, d in arcs)


def matching_braid(m):
    """
    A positive braid whose plat has matching ``m`` and whose last strand is
    never crossed.  Non-crossing matchings use ``noncrossing_braid``;
    otherwise the arc ending at the last puncture is realized as a cap born
    at the right end whose left foot slides over to its partner, after the
    remaining arcs have been built recursively on the punctures to its left.
    """
    if is_noncrossing(m):
        return noncrossing_braid(m)
    return BraidWord(len(m), tuple(_slide_letters(m)))


def _slide_letters(m):
    n = len(m)
    if n == 0:
        return []
    p = m[n - 1]
    rest = [q for q in range(n - 1) if q != p]
    index = {q: k for k, q in enumerate(rest)}
    inner = tuple(index[m[q]] for q in rest)
    return _slide_letters(inner) + [(j, 1) for j in range(n - 2, p, -1)]


def matching_from_pairs(n, pairs):
    m = [None] * n
    for p, q in pairs:
        m[p], m[q] = q, p
    if None in m:
        raise ValueError("pairs do not cover every puncture")
    return tuple(m)


def tangle_from_pairs(n, pairs, tail=None):
    w = matching_braid(matching_from_pairs(n, pairs))
    if tail is not None:
        w = w * tail
    return TrivialTangle(n // 2, w)


def one_bridge_diagram():
    T = TrivialTangle(1)
    return FourPlaneDiagram(1, (T, T, T, T), {"name": "1-bridge"})


def spread_braid(beta, positions, n):
    """
    Re-embed ``beta`` (on len(positions) strands) into an n-strand braid
    whose k-th strand sits at ``positions[k]``.  A crossing of non-adjacent
    strands at p < q first carries the strand at q next to p by the
    positive word s_q ... s_{p+2}, crosses, and carries it back.
    """
    letters = []
    for i, e in beta.letters:
        p, q = positions[i - 1], positions[i]
        carry = [(j, 1) for j in range(q, p + 1, -1)]
        letters += carry + [(p + 1, e)] + [(j, -1) for j, _ in reversed(carry)]
    return BraidWord(n, tuple(letters))


def _spun_layout(b):
    """
    Puncture positions of the knot strands and the extra arcs, per tangle.

    Cap k of the knot (k >= 1) owns a block of ten punctures: its two feet
    and an eight-point gadget E1..E8 whose arcs differ from tangle to
    tangle; the first cap sits alone at punctures 0, 1.
    """
    n = 10 * b - 8
    layouts = []
    for t in range(4):
        pos = [0, 1]
        pairs = [(0, 1)]
        for j in range(1, b):
            base = 10 * j - 8
            if t == 0:
                foot = (base, base + 1)
                E = list(range(base + 2, base + 10))
                arcs = [(0, 7), (1, 2), (3, 4), (5, 6)]
            elif t == 2:
                foot = (base + 4, base + 9)
                E = [base, base + 1, base + 2, base + 3, base + 5, base + 6, base + 7, base + 8]
                arcs = [(0, 3), (1, 2), (4, 5), (6, 7)]
            else:
                foot = (base, base + 9)
                E = list(range(base + 1, base + 9))
                arcs = [(0, 1), (2, 3), (4, 7), (5, 6)] if t == 1 else [(0, 7), (1, 6), (2, 5), (3, 4)]
            pos += list(foot)
            pairs.append(foot)
            pairs += [(E[x], E[y]) for x, y in arcs]
        layouts.append((pos, pairs))
    return n, layouts


def spun_diagram(beta):
    """
    4-plane diagram of the S^2-spin of the knot given as the plat closure of
    ``beta`` (a braid on 2b strands); it has 5b - 4 bridges.
    """
    if beta.strands % 2:
        raise ValueError("a plat braid needs an even number of strands")
    b = beta.strands // 2
    n, layouts = _spun_layout(b)
    tangles = tuple(
        tangle_from_pairs(n, pairs, spread_braid(beta, pos, n).free_reduced())
        for pos, pairs in layouts
    )
    return FourPlaneDiagram(n // 2, tangles, {"name": "spun", "knot": str(beta), "knot_bridges": b})


def lens_diagram(p):
    """
    4-plane diagram of L(p, 1) with 2p bridges on a torus central surface.

    Punctures are A_0..A_{2p-1} followed by B_{2p-1}..B_0.  T1 is the
    rainbow joining A_m to B_m; T2 and T4 join consecutive A's and B's
    starting from even and odd m respectively, so T2 u T4 is a pair of
    meridians.  T3 is T1 with the A block turned two clicks by positive
    crossings, so it joins B_m to A_{m-2} and T1 u T3 is a pair of curves
    of slope p.  The B strands are never crossed, which leaves the last
    strand free for connected sums.
    """
    if p < 1:
        raise ValueError("p must be positive")
    r = 2 * p
    n = 2 * r
    A = lambda m: m % r  # noqa: E731
    B = lambda m: 2 * r - 1 - (m % r)  # noqa: E731
    T1 = tangle_from_pairs(n, [(A(m), B(m)) for m in range(r)])
    T2 = [pair for m in range(0, r, 2) for pair in ((A(m), A(m + 1)), (B(m), B(m + 1)))]
    T4 = [pair for m in range(1, r, 2) for pair in ((A(m), A(m + 1)), (B(m), B(m + 1)))]
    turn = [(i, 1) for i in range(1, r)] * 2
    T3 = T1.append(BraidWord(n, tuple(turn)))
    tangles = (T1, tangle_from_pairs(n, T2), T3, tangle_from_pairs(n, T4))
    return FourPlaneDiagram(r, tangles, {"name": f"lens({p},1)"})


def rp3_diagram():
    """The four-bridge diagram of RP^3 = L(2, 1)."""
    D = lens_diagram(2)
    return FourPlaneDiagram(D.bridges, D.tangles, {"name": "RP3"})


def _shift(w, offset, strands):
    return BraidWord(strands, tuple((i + offset, e) for i, e in w.letters))


def rotate_diagram(D):
    """
    Turn every plat half a revolution about the vertical axis: puncture p
    goes to 2b-1-p and s_i to s_{2b-i}.  This is an orientation-preserving
    symmetry of the whole picture, so the embedding is unchanged.
    """
    n = D.punctures
    tangles = tuple(
        TrivialTangle(D.bridges, BraidWord(n, tuple((n - i, e) for i, e in T.braid.letters)))
        for T in D.tangles
    )
    return FourPlaneDiagram(D.bridges, tangles, dict(D.metadata))


def _last_strand_free(D):
    n = D.punctures
    return all(i != n - 1 for T in D.tangles for i, _ in T.braid.letters)


def _first_strand_free(D):
    return all(i != 1 for T in D.tangles for i, _ in T.braid.letters)


def can_connect_sum(D1, D2):
    """True when both diagrams are plats with an uncrossed end strand."""
    return all(
        D.is_plat() and (_first_strand_free(D) or _last_strand_free(D)) for D in (D1, D2)
    )


def sum_diagrams(D1, D2, mode="distant"):
    """
    Distant sum: the two spines side by side on disjoint puncture blocks.

    Connected sum: the last puncture of D1 is fused with the first puncture
    of D2, joining the two strands that end there in every tangle, so one
    bridge is lost.  This needs the fused strands to run straight to their
    caps; D1 must leave its last strand uncrossed and D2 one of its end
    strands (D2 is rotated if necessary).
    """
    if not (D1.is_plat() and D2.is_plat()):
        raise ValueError("sums are built from plat diagrams")
    b1, b2 = D1.bridges, D2.bridges
    if mode == "distant":
        n = 2 * (b1 + b2)
        tangles = tuple(
            TrivialTangle(b1 + b2, BraidWord(n, T1.braid.letters) * _shift(T2.braid, 2 * b1, n))
            for T1, T2 in zip(D1.tangles, D2.tangles)
        )
        return FourPlaneDiagram(b1 + b2, tangles, {"name": "distant sum"})
    if mode != "connected":
        raise ValueError(f"unknown sum mode {mode!r}")
    if not _last_strand_free(D1):
        if _last_strand_free(rotate_diagram(D1)):
            D1 = rotate_diagram(D1)
        else:
            raise ValueError("connected sum needs an uncrossed end strand in the first diagram")
    if not _first_strand_free(D2):
        if _last_strand_free(D2):
            D2 = rotate_diagram(D2)
        else:
            raise ValueError("connected sum needs an uncrossed end strand in the second diagram")
    n = 2 * (b1 + b2 - 1)
    tangles = tuple(
        TrivialTangle(
            b1 + b2 - 1,
            BraidWord(n, T1.braid.letters) * _shift(T2.braid, 2 * b1 - 2, n),
        )
        for T1, T2 in zip(D1.tangles, D2.tangles)
    )
    return FourPlaneDiagram(b1 + b2 - 1, tangles, {"name": "connected sum"})


def mutual_braid_move(D, w, rho=None):
    """
    Append ``w`` to every tangle at the sphere end.  A relator tangle has
    its relators pushed through the braid automorphism instead.  A
    representation ``rho`` of the old puncture group is carried along as
    rho o phi_{w^-1}, which extends over the new tangles whenever it
    extended over the old.
    """
    if w.strands != D.punctures:
        raise ValueError(f"braid has {w.strands} strands, diagram has {D.punctures} punctures")
    auto = artin_automorphism(w)

    def move(T):
        if isinstance(T, RelatorTangle):
            return RelatorTangle(T.bridges, tuple(r.substitute(auto).reduced() for r in T.relators))
        return T.append(w)

    new = FourPlaneDiagram(D.bridges, tuple(move(T) for T in D.tangles), dict(D.metadata))
    if rho is None:
        return new, None
    images = artin_automorphism(w.inverse())
    perms = tuple(rho.of_word(img) for img in images)
    return new, PermutationRep(rho.sheets, perms)
