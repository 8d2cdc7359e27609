"""Independent reference implementations for cross-checking.

Everything here works at the level of explicit cell sets and explicit
fillings, with none of the edge-sequence machinery the library uses, so an
agreement test actually compares two different computations.
"""

from collections import deque
from itertools import count

from ribbonops.partitions import cells, contains, partitions_of


def is_ribbon(cellset):
    """Connected, no 2x2 block."""
    cellset = set(cellset)
    start = next(iter(cellset))
    seen = {start}
    dq = deque([start])
    while dq:
        r, c = dq.popleft()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cellset and nb not in seen:
                seen.add(nb)
                dq.append(nb)
    if len(seen) != len(cellset):
        return False
    return not any({(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cellset
                   for r, c in cellset)


def ribbon_additions(la, n):
    """{head diagonal: (mu, spin)} by brute force over bigger partitions."""
    la = tuple(la)
    out = {}
    for mu in partitions_of(sum(la) + n):
        if not contains(mu, la):
            continue
        diff = sorted(set(cells(mu)) - set(cells(la)))
        if len(diff) != n or not is_ribbon(diff):
            continue
        head = max(c - r for r, c in diff)
        rows = len({r for r, _ in diff})
        assert head not in out, "two ribbons with one head diagonal"
        out[head] = (mu, rows - 1)
    return out


def _skew_cells(outer, inner):
    return [(r, c) for r, c in cells(outer) if c > (inner[r - 1] if r <= len(inner) else 0)]


def skew_fillings(outer, inner, content):
    """All semistandard fillings with the exact content vector, as dicts."""
    order = sorted(_skew_cells(outer, inner))
    budget = list(content)
    filling = {}
    found = []

    def rec(idx):
        if idx == len(order):
            found.append(dict(filling))
            return
        r, c = order[idx]
        lo = 1
        if (r, c - 1) in filling:
            lo = filling[(r, c - 1)]
        hi = len(budget)
        above = filling.get((r - 1, c))
        for val in range(lo, hi + 1):
            if budget[val - 1] == 0:
                continue
            if above is not None and val <= above:
                continue
            budget[val - 1] -= 1
            filling[(r, c)] = val
            rec(idx + 1)
            del filling[(r, c)]
            budget[val - 1] += 1

    rec(0)
    return found


def ssyt_count(outer, inner, content):
    return len(skew_fillings(outer, inner, content))


def kostka_count(nu, content):
    return ssyt_count(nu, (), content)


def _is_lattice(word):
    tally = {}
    for x in word:
        tally[x] = tally.get(x, 0) + 1
        if x > 1 and tally[x] > tally.get(x - 1, 0):
            return False
    return True


def lr_coefficient(nu, outer, inner):
    """Littlewood-Richardson by counting lattice skew tableaux of content nu."""
    hits = 0
    for filling in skew_fillings(outer, inner, nu):
        word = [filling[cell]
                for cell in sorted(filling, key=lambda rc: (rc[0], -rc[1]))]
        if _is_lattice(word):
            hits += 1
    return hits


def schur_monomial_counts(outer, inner, size):
    """{mu: #SSYT of content mu} over partitions mu of the skew size."""
    return {mu: ssyt_count(outer, inner, mu) for mu in partitions_of(size)}
