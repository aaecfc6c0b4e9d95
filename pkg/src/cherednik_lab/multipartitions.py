"""Multipartitions, symbolic node residues and the Kleshchev classifier.

Residues are symbolic, not numeric.  A node in component k = s*p + t
(1 <= t <= p) of a multipartition has residue  eta^(t-1) * y_(s+1) * q^(col-row),
stored as the triple (block s+1, power of q, power of eta mod p).  Generic
parameters make two residues equal exactly when their canonical triples
coincide; imposing the "main" parameter relation identifies the block-2
symbol with q^(n-1) times a block-1 symbol, which is the only folding.
"""

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "partitions",
    "multipartitions",
    "Node",
    "ResidueSym",
    "residue",
    "varpi_apply",
    "orbit_size",
    "orbit_representatives",
    "addable_nodes",
    "removable_nodes",
    "is_good_node",
    "KleshchevClassifier",
    "non_kleshchev_list",
    "hecke_simple_count",
    "rho_multipartition",
]

RELATIONS = ("none", "unit", "main")

MULTIPARTITION_CAP = 10**6


@lru_cache(maxsize=None)
def partitions(k):
    """All partitions of k as weakly decreasing tuples, lex-descending order."""
    if k == 0:
        return ((),)
    out = []

    def extend(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, maxpart), 0, -1):
            extend(remaining - part, part, prefix + [part])

    extend(k, k, [])
    return tuple(out)


def multipartitions(m, n, cap=MULTIPARTITION_CAP):
    """All m-tuples of partitions with total size n, lexicographically sorted."""
    count = _multipartition_count(m, n)
    if count > cap:
        raise ValueError(f"{count} multipartitions exceeds cap {cap}")
    out = []

    def extend(comp, remaining, prefix):
        if comp == m - 1:
            for lam in partitions(remaining):
                out.append(tuple(prefix + [lam]))
            return
        for size in range(remaining + 1):
            for lam in partitions(size):
                extend(comp + 1, remaining - size, prefix + [lam])

    extend(0, n, [])
    return sorted(out)


@lru_cache(maxsize=None)
def _multipartition_count(m, n):
    if m == 1:
        return len(partitions(n))
    total = 0
    for size in range(n + 1):
        total += len(partitions(size)) * _multipartition_count(m - 1, n - size)
    return total


@dataclass(frozen=True, order=True)
class Node:
    """A box: component k (1-based), row i, column j (both 1-based)."""

    comp: int
    row: int
    col: int


@dataclass(frozen=True)
class ResidueSym:
    """Canonical symbolic residue: block index, q-exponent, eta-exponent."""

    block: int
    qexp: int
    etaexp: int


def residue(node, params, relation="main"):
    """Symbolic residue of a node, canonicalized under the given relation.

    Under the main relation the block-2 symbol equals q^(n-1), so block 2
    folds into block 1 with the q-exponent raised by n-1.
    """
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}")
    s, t = divmod(node.comp - 1, params.p)
    block = s + 1
    qexp = node.col - node.row
    etaexp = t % params.p
    if relation == "main" and block == 2:
        block, qexp = 1, qexp + params.n - 1
    return ResidueSym(block, qexp, etaexp)


def varpi_apply(mp, params):
    """Rotate each block of p consecutive components by one step."""
    p, d = params.p, params.d
    out = []
    for i in range(params.m):
        s, t = divmod(i, p)
        # component i+1 receives component varpi^(-1)(i+1); the cycle on
        # block s is (sp+1, ..., sp+p), so the preimage of t is t-1 mod p
        out.append(mp[s * p + (t - 1) % p])
    return tuple(out)


def orbit_size(mp, params):
    """Least k >= 1 with varpi^k fixing the multipartition; divides p."""
    cur = varpi_apply(mp, params)
    k = 1
    while cur != mp:
        cur = varpi_apply(cur, params)
        k += 1
    return k


def orbit_representatives(params, cap=MULTIPARTITION_CAP):
    """Lexicographically least element of each varpi-orbit."""
    reps = []
    seen = set()
    for mp in multipartitions(params.m, params.n, cap):
        if mp in seen:
            continue
        orbit = {mp}
        cur = varpi_apply(mp, params)
        while cur != mp:
            orbit.add(cur)
            cur = varpi_apply(cur, params)
        seen |= orbit
        reps.append(min(orbit))
    return reps


def _all_addable(mp):
    out = []
    for k, lam in enumerate(mp, start=1):
        for i in range(1, len(lam) + 2):
            cols = lam[i - 1] if i <= len(lam) else 0
            above = lam[i - 2] if i >= 2 else None
            if above is None or cols < above:
                out.append(Node(k, i, cols + 1))
    return out


def _all_removable(mp):
    out = []
    for k, lam in enumerate(mp, start=1):
        for i, cols in enumerate(lam, start=1):
            below = lam[i] if i < len(lam) else 0
            if cols > below:
                out.append(Node(k, i, cols))
    return out


def addable_nodes(mp, params, relation="main", res=None):
    """Addable nodes, top to bottom, optionally filtered by residue."""
    nodes = sorted(_all_addable(mp), key=lambda x: (x.comp, x.row))
    if res is None:
        return nodes
    return [x for x in nodes if residue(x, params, relation) == res]


def removable_nodes(mp, params, relation="main", res=None):
    """Removable nodes, top to bottom, optionally filtered by residue."""
    nodes = sorted(_all_removable(mp), key=lambda x: (x.comp, x.row))
    if res is None:
        return nodes
    return [x for x in nodes if residue(x, params, relation) == res]


def _is_normal(mp, node, params, relation):
    """A removable node x is normal when every addable node of the same
    residue below x is outweighed: strictly between x and that addable node
    there are more removable nodes of the residue than addable ones."""
    res = residue(node, params, relation)
    key = (node.comp, node.row)
    add = [(x.comp, x.row) for x in addable_nodes(mp, params, relation, res)]
    rem = [(x.comp, x.row) for x in removable_nodes(mp, params, relation, res)]
    for y in add:
        if y <= key:
            continue
        n_rem = sum(1 for z in rem if key < z < y)
        n_add = sum(1 for z in add if key < z < y)
        if n_rem <= n_add:
            return False
    return True


def is_good_node(mp, node, params, relation="main"):
    """Good = the highest (first in top-to-bottom order) normal node of its residue."""
    if node not in _all_removable(mp):
        return False
    if not _is_normal(mp, node, params, relation):
        return False
    res = residue(node, params, relation)
    for x in removable_nodes(mp, params, relation, res):
        if (x.comp, x.row) < (node.comp, node.row) and _is_normal(mp, x, params, relation):
            return False
    return True


def _remove_node(mp, node):
    lam = list(mp[node.comp - 1])
    lam[node.row - 1] -= 1
    if lam[node.row - 1] == 0:
        lam.pop(node.row - 1)
    out = list(mp)
    out[node.comp - 1] = tuple(lam)
    return tuple(out)


class KleshchevClassifier:
    """Memoized inductive Kleshchev test for fixed (m,p,n) and relation."""

    def __init__(self, params, relation="main"):
        if relation not in RELATIONS:
            raise ValueError(f"unknown relation {relation!r}")
        self.params = params
        self.relation = relation
        self._memo = {(((),) * params.m): True}

    def good_nodes(self, mp):
        """The good node of each residue that admits one."""
        out = []
        seen_residues = set()
        for node in removable_nodes(mp, self.params, self.relation):
            res = residue(node, self.params, self.relation)
            if res in seen_residues:
                continue
            if _is_normal(mp, node, self.params, self.relation):
                # first normal node in top-to-bottom order is the good one
                seen_residues.add(res)
                out.append(node)
        return out

    def is_kleshchev(self, mp):
        known = self._memo.get(mp)
        if known is not None:
            return known
        result = any(self.is_kleshchev(_remove_node(mp, y)) for y in self.good_nodes(mp))
        self._memo[mp] = result
        return result


def rho_multipartition(i, params):
    """The multipartition with a single row of size n in component i."""
    out = [()] * params.m
    out[i - 1] = (params.n,)
    return tuple(out)


def non_kleshchev_list(params, relation="main", cap=MULTIPARTITION_CAP):
    """All non-Kleshchev multipartitions, sorted."""
    classifier = KleshchevClassifier(params, relation)
    return [mp for mp in multipartitions(params.m, params.n, cap) if not classifier.is_kleshchev(mp)]


def hecke_simple_count(params, relation="main", cap=MULTIPARTITION_CAP):
    """Number of simple modules of the associated Hecke algebra at generic
    parameters on the main hyperplane: sum of p / o_lambda over Kleshchev
    orbit representatives."""
    classifier = KleshchevClassifier(params, relation)
    total = 0
    for mp in orbit_representatives(params, cap):
        if classifier.is_kleshchev(mp):
            total += params.p // orbit_size(mp, params)
    return total
