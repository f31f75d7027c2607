"""Root systems with exact integer arithmetic.

Roots are tuples of integer coefficients over the simple roots of the
ambient (possibly decomposable) system.  The simple-root numbering per
component is fixed once and for all:

* A_n: a path 1 -- 2 -- ... -- n.
* B_n: path with alpha_n short (double edge n-1 => n).
* C_n: path with alpha_n long (double edge n-1 <= n).
* D_n: path 1 -- ... -- (n-2) with both alpha_{n-1} and alpha_n
  attached to alpha_{n-2} (so alpha_2 is the central node of D_4).
* E_n: path 1 -- 3 -- 4 -- 5 -- ... -- n with alpha_2 attached to
  alpha_4.
* F_4: path with alpha_1, alpha_2 short and the double edge between
  alpha_2 and alpha_3 (so 2a1 + 2a2 + a3 + a4 is a root).
* G_2: alpha_1 short (so 2a1 + a2 and 3a1 + a2 are roots).

The inner product is normalized so short roots have squared length 2.
The choice for B/C/F/G is pinned by the requirement that the catalog of
decorated roots used throughout the package consists of actual roots;
``_verify_conventions`` asserts this at first use.
"""

from fractions import Fraction
from functools import lru_cache
import re

_VALID = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

MAX_TOTAL_RANK = 8


def parse_label(label):
    """Parse a system label like "A2" or "A1xB2" into [(letter, rank)]."""
    parts = label.split("x")
    spec = []
    for part in parts:
        m = re.fullmatch(r"([A-G])([0-9]+)", part.strip())
        if not m:
            raise ValueError("bad system label component: %r" % part)
        spec.append((m.group(1), int(m.group(2))))
    return spec


def _component_cartan(letter, n):
    """Cartan matrix c[i][j] = <alpha_i, alpha_j^vee> and the half
    squared lengths d (1 for short, 2 or 3 for long)."""
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def join(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    d = [1] * n
    if letter == "A":
        for i in range(n - 1):
            join(i, i + 1)
    elif letter == "B":
        for i in range(n - 2):
            join(i, i + 1)
        join(n - 2, n - 1, -2, -1)  # alpha_n short
        d = [2] * (n - 1) + [1]
    elif letter == "C":
        for i in range(n - 2):
            join(i, i + 1)
        join(n - 2, n - 1, -1, -2)  # alpha_n long
        d = [1] * (n - 1) + [2]
    elif letter == "D":
        for i in range(n - 3):
            join(i, i + 1)
        join(n - 3, n - 2)
        join(n - 3, n - 1)
    elif letter == "E":
        join(0, 2)
        for i in range(2, n - 1):
            join(i, i + 1)
        join(1, 3)
    elif letter == "F":
        join(0, 1)
        join(1, 2, -1, -2)  # alpha_2 short, alpha_3 long
        join(2, 3)
        d = [1, 1, 2, 2]
    elif letter == "G":
        join(0, 1, -1, -3)  # alpha_1 short
        d = [1, 3]
    return c, d


def height(root):
    return sum(root)


def support(root):
    return frozenset(i for i, k in enumerate(root) if k != 0)


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def neg(a):
    return tuple(-x for x in a)


def canonical_key(root):
    return (height(root), root)


class RootSystem:
    """Immutable root-system data for a fixed spec of components."""

    def __init__(self, spec):
        spec = tuple(spec)
        for letter, n in spec:
            if letter not in _VALID or not _VALID[letter](n):
                raise ValueError("invalid Dynkin type %s%d" % (letter, n))
        total = sum(n for _, n in spec)
        if total > MAX_TOTAL_RANK:
            raise ValueError("total rank %d exceeds %d" % (total, MAX_TOTAL_RANK))
        self.spec = spec
        self.n = total
        self.label = "x".join("%s%d" % (l, n) for l, n in spec)
        self.cartan = [[0] * total for _ in range(total)]
        self.d = [1] * total
        self.components = []  # (letter, rank, tuple of global indices)
        off = 0
        for letter, n in spec:
            c, d = _component_cartan(letter, n)
            for i in range(n):
                self.d[off + i] = d[i]
                for j in range(n):
                    self.cartan[off + i][off + j] = c[i][j]
            self.components.append((letter, n, tuple(range(off, off + n))))
            off += n
        self.gram = [[self.d[j] * self.cartan[i][j] for j in range(total)]
                     for i in range(total)]
        for i in range(total):
            for j in range(total):
                assert self.gram[i][j] == self.gram[j][i]
        self.positive_roots = self._generate()
        self._pos_set = frozenset(self.positive_roots)
        self.index = {r: i for i, r in enumerate(self.positive_roots)}
        self._sc = None

    def _generate(self):
        n = self.n
        roots = set()
        level = []
        for i in range(n):
            r = tuple(1 if j == i else 0 for j in range(n))
            roots.add(r)
            level.append(r)
        while level:
            nxt = []
            for beta in level:
                for i in range(n):
                    pairing = sum(beta[j] * self.cartan[j][i] for j in range(n))
                    p = 0
                    cur = beta
                    while True:
                        cur = tuple(c - (1 if j == i else 0)
                                    for j, c in enumerate(cur))
                        if cur in roots:
                            p += 1
                        else:
                            break
                    if p - pairing > 0:
                        new = tuple(c + (1 if j == i else 0)
                                    for j, c in enumerate(beta))
                        if new not in roots:
                            roots.add(new)
                            nxt.append(new)
            level = nxt
        return sorted(roots, key=canonical_key)

    # -- basic predicates and arithmetic ---------------------------------

    def is_positive_root(self, r):
        return r in self._pos_set

    def is_root(self, r):
        return r in self._pos_set or neg(r) in self._pos_set

    def pairing(self, alpha, j):
        """<alpha, alpha_j^vee>."""
        return sum(alpha[i] * self.cartan[i][j] for i in range(self.n))

    def inner(self, a, b):
        return sum(a[i] * b[j] * self.gram[i][j]
                   for i in range(self.n) for j in range(self.n)
                   if a[i] and b[j])

    def reflect(self, alpha, delta):
        """r_delta(alpha) for a simple-root index delta."""
        if not self.is_root(alpha):
            raise ValueError("not a root: %r" % (alpha,))
        k = self.pairing(alpha, delta)
        return tuple(c - (k if i == delta else 0)
                     for i, c in enumerate(alpha))

    def simple(self, i):
        return tuple(1 if j == i else 0 for j in range(self.n))

    def count_decompositions(self, alpha):
        """Number of unordered pairs of positive roots summing to alpha."""
        if alpha not in self._pos_set:
            raise ValueError("not a positive root: %r" % (alpha,))
        s = 0
        for beta in self.positive_roots:
            other = sub(alpha, beta)
            if other in self._pos_set and canonical_key(beta) < canonical_key(other):
                s += 1
        return s

    # -- Dynkin diagram helpers ------------------------------------------

    def edge_mult(self, i, j):
        return self.cartan[i][j] * self.cartan[j][i]

    def adjacent(self, i, j):
        return i != j and self.cartan[i][j] != 0

    def neighbors(self, i, within=None):
        nodes = range(self.n) if within is None else within
        return [j for j in nodes if self.adjacent(i, j)]

    def arrow_toward(self, short, other):
        """True if the (multiple) edge short--other points at `short`,
        i.e. `short` is the shorter of the two simple roots."""
        return self.adjacent(short, other) and self.d[short] < self.d[other]

    def degree(self, i, within):
        return len(self.neighbors(i, within))

    def is_connected(self, nodes):
        nodes = set(nodes)
        if not nodes:
            return True
        seen = {min(nodes)}
        stack = [min(nodes)]
        while stack:
            v = stack.pop()
            for w in self.neighbors(v, nodes):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == nodes

    def component_nodes(self, nodes):
        """Connected components of the induced diagram, each sorted."""
        nodes = set(nodes)
        out = []
        while nodes:
            v = min(nodes)
            comp = {v}
            stack = [v]
            while stack:
                u = stack.pop()
                for w in self.neighbors(u, nodes):
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            nodes -= comp
            out.append(sorted(comp))
        return sorted(out, key=lambda c: c[0])

    def classify_component(self, nodes):
        """Type of the induced diagram on a connected node set.

        Returns (letter, rank, mapping) where mapping[k] is the global
        index playing the role of alpha_{k+1} in the conventions above.
        """
        nodes = sorted(nodes)
        n = len(nodes)
        if n == 1:
            return ("A", 1, nodes)
        mult3 = [(i, j) for i in nodes for j in nodes
                 if i < j and self.edge_mult(i, j) == 3]
        if mult3:
            i, j = mult3[0]
            short, lng = (i, j) if self.d[i] < self.d[j] else (j, i)
            return ("G", 2, [short, lng])
        mult2 = [(i, j) for i in nodes for j in nodes
                 if i < j and self.edge_mult(i, j) == 2]
        degs = {v: self.degree(v, nodes) for v in nodes}
        if mult2:
            u, v = mult2[0]
            short, lng = (u, v) if self.d[u] < self.d[v] else (v, u)
            if n == 2:
                return ("B", 2, [lng, short])
            ends = [w for w in nodes if degs[w] == 1]
            if degs[short] == 1:
                path = self._path_order(nodes, start=self._other_end(nodes, short))
                return ("B", n, path)
            if degs[lng] == 1:
                path = self._path_order(nodes, start=self._other_end(nodes, lng))
                return ("C", n, path)
            # interior double edge: F4
            start = [e for e in ends if self.d[e] == 1]
            path = self._path_order(nodes, start=start[0])
            return ("F", 4, path)
        branch = [v for v in nodes if degs[v] == 3]
        if not branch:
            path = self._path_order(nodes, start=min(w for w in nodes
                                                     if degs[w] <= 1))
            return ("A", n, path)
        b = branch[0]
        arms = []
        for w in self.neighbors(b, nodes):
            arm = [w]
            prev = b
            while True:
                nxt = [x for x in self.neighbors(arm[-1], nodes) if x != prev]
                if not nxt:
                    break
                prev = arm[-1]
                arm.append(nxt[0])
            arms.append(arm)
        arms.sort(key=lambda a: (len(a), a[0]))
        lengths = sorted(len(a) for a in arms)
        if lengths[:2] == [1, 1]:
            # D_n: the two one-node arms are alpha_{n-1}, alpha_n
            long_arm = arms[2] if len(arms[2]) > 1 else max(arms, key=lambda a: a[0])
            short_arms = [a for a in arms if a is not long_arm]
            mapping = list(reversed(long_arm)) + [b] + sorted(x[0] for x in short_arms)
            return ("D", n, mapping)
        if lengths[0] == 1 and lengths[1] == 2:
            two = arms[1]
            rest = arms[2]
            mapping = [two[1], arms[0][0], two[0], b] + rest
            letter = {6: "E", 7: "E", 8: "E"}[n]
            return (letter, n, mapping)
        raise ValueError("unrecognized diagram on %r" % (nodes,))

    def _other_end(self, nodes, end):
        ends = [w for w in nodes if self.degree(w, nodes) == 1]
        others = [w for w in ends if w != end]
        return others[0] if others else end

    def _path_order(self, nodes, start):
        order = [start]
        prev = None
        while len(order) < len(nodes):
            nxt = [x for x in self.neighbors(order[-1], nodes) if x != prev]
            prev = order[-1]
            order.append(nxt[0])
        return order

    def subsystem(self, subset):
        """Root system induced on a subset of simple roots.

        Returns (sub, embedding) where embedding[i] is the global simple
        index realizing simple root i of `sub`.  The roots of `sub` are
        exactly the roots of `self` supported inside `subset`.
        """
        subset = sorted(set(subset))
        comps = self.component_nodes(subset)
        spec = []
        embedding = []
        for comp in comps:
            letter, rank_, mapping = self.classify_component(comp)
            spec.append((letter, rank_))
            embedding.extend(mapping)
        sub = RootSystem(spec) if spec else RootSystem([])
        for i in range(sub.n):
            for j in range(sub.n):
                assert sub.cartan[i][j] == self.cartan[embedding[i]][embedding[j]]
        expected = {r for r in self.positive_roots
                    if support(r) <= set(subset)}
        got = {self.embed_root(r, embedding) for r in sub.positive_roots}
        assert got == expected
        return sub, embedding

    def embed_root(self, root, embedding):
        out = [0] * self.n
        for i, k in enumerate(root):
            out[embedding[i]] = k
        return tuple(out)

    def restrict_root(self, root, embedding):
        out = [0] * len(embedding)
        pos = {g: i for i, g in enumerate(embedding)}
        for g, k in enumerate(root):
            if k:
                out[pos[g]] = k
        return tuple(out)

    def structure_constants(self):
        if self._sc is None:
            self._sc = StructureConstantTable(self)
        return self._sc

    def __repr__(self):
        return "RootSystem(%s)" % self.label


class StructureConstantTable:
    """Chevalley structure constants N(alpha, beta) with [e_a, e_b] =
    N(a,b) e_{a+b}, built with the extraspecial-pair sign convention
    over the canonical root order."""

    def __init__(self, rs):
        self.rs = rs
        self._pos = {}   # (alpha, beta) with idx a < idx b, both positive
        self._memo = {}
        self._build()

    def _p(self, alpha, beta):
        """max k with beta - k*alpha a root."""
        p = 0
        cur = beta
        while True:
            cur = sub(cur, alpha)
            if self.rs.is_root(cur):
                p += 1
            else:
                break
        return p

    def _build(self):
        rs = self.rs
        for eps in rs.positive_roots:
            if height(eps) < 2:
                continue
            pairs = []
            for a in rs.positive_roots:
                if rs.index[a] >= rs.index[eps]:
                    break
                b = sub(eps, a)
                if b in rs._pos_set and rs.index[a] < rs.index[b]:
                    pairs.append((a, b))
            if not pairs:
                continue
            a0, b0 = pairs[0]  # extraspecial: minimal first member
            self._pos[(a0, b0)] = self._p(a0, b0) + 1
            ee = rs.inner(eps, eps)
            for (g, d) in pairs[1:]:
                total = Fraction(0)
                bg = sub(b0, g)
                if rs.is_root(bg):
                    t = self.n(b0, neg(g)) * self.n(a0, neg(d))
                    total += Fraction(t, rs.inner(bg, bg))
                ag = sub(a0, g)
                if rs.is_root(ag):
                    t = self.n(neg(g), a0) * self.n(b0, neg(d))
                    total += Fraction(t, rs.inner(ag, ag))
                val = Fraction(ee) * total / self._pos[(a0, b0)]
                assert val.denominator == 1 and val != 0
                self._pos[(g, d)] = int(val)

    def n(self, x, y):
        """N(x, y) for roots of any sign; 0 if x + y is not a root."""
        key = (x, y)
        if key in self._memo:
            return self._memo[key]
        rs = self.rs
        z = add(x, y)
        if not (rs.is_root(x) and rs.is_root(y) and rs.is_root(z)):
            val = 0
        elif x in rs._pos_set and y in rs._pos_set:
            if rs.index[x] < rs.index[y]:
                val = self._pos[(x, y)]
            else:
                val = -self._pos[(y, x)]
        elif x not in rs._pos_set and y not in rs._pos_set:
            val = -self.n(neg(x), neg(y))
        elif x not in rs._pos_set:
            val = -self.n(y, x)
        else:
            # x positive, y negative
            if z in rs._pos_set:
                ratio = Fraction(rs.inner(z, z), rs.inner(x, x))
                v = -ratio * self.n(neg(y), z)
                assert v.denominator == 1
                val = int(v)
            else:
                val = -self.n(neg(x), neg(y))
        self._memo[key] = val
        return val

    def positive_pairs(self):
        return dict(self._pos)

    def self_check(self):
        """Assert antisymmetry and the |N| = p + 1 law on all signed
        pairs.  (The Jacobi identity is exercised in the test suite.)"""
        rs = self.rs
        signed = list(rs.positive_roots) + [neg(r) for r in rs.positive_roots]
        for x in signed:
            for y in signed:
                if not rs.is_root(add(x, y)):
                    continue
                nxy = self.n(x, y)
                assert nxy == -self.n(y, x)
                assert abs(nxy) == self._p(x, y) + 1
        return True


_conventions_checked = False


def _verify_conventions():
    """The length/arrow conventions are pinned by requiring that the
    decorated-root catalog rows are actual roots in each type."""
    global _conventions_checked
    if _conventions_checked:
        return
    _conventions_checked = True
    for n in (2, 3, 4):
        b = RootSystem([("B", n)])
        assert tuple([1] * (n - 1) + [2]) in b._pos_set
        c = RootSystem([("C", n)])
        assert tuple([2] * (n - 1) + [1]) in c._pos_set
    f = RootSystem([("F", 4)])
    assert (2, 2, 1, 1) in f._pos_set
    g = RootSystem([("G", 2)])
    assert (2, 1) in g._pos_set and (3, 1) in g._pos_set


@lru_cache(maxsize=None)
def _cached_system(spec):
    return RootSystem(spec)


def build_root_system(spec):
    """Build (with caching) a root system from a spec list or label."""
    if isinstance(spec, str):
        spec = parse_label(spec)
    rs = _cached_system(tuple(spec))
    _verify_conventions()
    return rs
