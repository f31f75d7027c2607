"""Elementary transformations of triples, the orbits they generate
(conjugacy classes), and the procedure that drives an arbitrary valid
triple to a reduced one in the same orbit."""

from dataclasses import dataclass

from .rootsys import sub, support, height
from .active import is_terminal
from .combdata import make_triple, validate, is_reduced

UNCHANGED = "UNCHANGED"
REDUCED_NEW = "REDUCED_NEW"
NOT_REDUCED = "NOT_REDUCED"


def regular_active_simple_roots(triple):
    """Simple-root indices at which an elementary transformation is
    defined.  Either the simple root itself is a maximal root with no
    equivalent partner, or it is a terminal non-pi node of the support
    of some maximal root whose remaining support is private."""
    rs = triple.rs
    rep = validate(triple)
    if not rep.ok:
        raise ValueError("invalid triple: %s" % rep)
    out = set()
    m_index = {r: i for i, r in enumerate(triple.M)}
    for i in range(rs.n):
        sroot = rs.simple(i)
        if sroot in m_index:
            if len(triple.class_of(m_index[sroot])) == 1:
                out.add(i)
            continue
        for j, alpha in enumerate(triple.M):
            supp = support(alpha)
            if i not in supp or not is_terminal(rs, i, supp):
                continue
            if i == triple.pi[j]:
                continue
            rest = supp - {i}
            if all(not rest <= support(beta)
                   for k, beta in enumerate(triple.M) if k != j):
                out.add(i)
                break
    return out


def elementary_transform(triple, delta):
    """Transform the triple at a regular active simple root.  M loses
    delta (if present), the rest reflects; delta is re-added as its own
    singleton class when it ends up outside every new support."""
    if delta not in regular_active_simple_roots(triple):
        raise ValueError("simple root %d is not regular active" % delta)
    rs = triple.rs
    droot = rs.simple(delta)
    keep = [i for i, r in enumerate(triple.M) if r != droot]
    decorated = [(rs.reflect(triple.M[i], delta), triple.pi[i])
                 for i in keep]
    pos_of = {old: new for new, old in enumerate(keep)}
    classes = []
    for block in triple.classes:
        kept = [pos_of[i] for i in block if i in pos_of]
        if kept:
            classes.append(kept)
    if not any(delta in support(r) for r, _ in decorated):
        decorated.append((droot, delta))
        classes.append([len(decorated) - 1])
    return make_triple(rs, decorated, classes)


@dataclass(frozen=True)
class DeltaProfile:
    m0: int
    m11: int
    m12: int
    m13: int
    m21: int
    m22: int
    m23: int

    @property
    def m1(self):
        return self.m11 + self.m12 + self.m13

    @property
    def m2(self):
        return self.m21 + self.m22 + self.m23


def delta_profile(triple, delta):
    """Sort the roots of M (other than delta itself) by how their
    supports meet delta: disjoint and non-adjacent (m0), adjacent from
    outside (m1*), or containing delta (m2*); the second index records
    the multiplicity of the incident edge when its arrow points at
    delta."""
    rs = triple.rs
    droot = rs.simple(delta)
    counts = dict(m0=0, m11=0, m12=0, m13=0, m21=0, m22=0, m23=0)
    for alpha in triple.M:
        if alpha == droot:
            continue
        supp = support(alpha)
        if delta in supp:
            nbrs = rs.neighbors(delta, supp)
            mults = [rs.edge_mult(delta, g) for g in nbrs
                     if rs.arrow_toward(delta, g)]
            if 3 in mults:
                counts["m21"] += 1
            elif 2 in mults:
                counts["m22"] += 1
            else:
                counts["m23"] += 1
        else:
            nbrs = rs.neighbors(delta, supp)
            if not nbrs:
                counts["m0"] += 1
                continue
            assert len(nbrs) == 1
            g = nbrs[0]
            m = rs.edge_mult(delta, g)
            if m == 3 and rs.arrow_toward(delta, g):
                counts["m11"] += 1
            elif m == 2 and rs.arrow_toward(delta, g):
                counts["m12"] += 1
            else:
                counts["m13"] += 1
    return DeltaProfile(**counts)


def preserves_reduced(triple, delta):
    """Effect of the transformation at delta on reducedness."""
    p = delta_profile(triple, delta)
    if p.m1 + p.m21 + p.m23 == 0:
        return UNCHANGED
    if p.m13 + p.m23 >= 1 and p.m11 + p.m12 + p.m21 == 0 \
            and p.m13 + p.m22 <= 1:
        return REDUCED_NEW
    return NOT_REDUCED


@dataclass(frozen=True)
class OrbitGraph:
    nodes: tuple    # canonical triples
    edges: tuple    # (from_index, to_index, center) with from <= all seen
    orbits: tuple   # partition of node indices (a single block here)

    def to_json(self):
        import json
        return json.dumps({
            "nodes": [json.loads(t.to_json()) for t in self.nodes],
            "edges": [{"from": i, "to": j, "center": k}
                      for i, j, k in self.edges],
            "orbits": [list(b) for b in self.orbits],
        })


def orbit(triple, reduced_only=False):
    """Breadth-first closure of a triple under elementary
    transformations.  With reduced_only, steps that would leave the
    reduced stratum are skipped (the closure stays complete on it)."""
    if reduced_only and not is_reduced(triple):
        raise ValueError("reduced_only orbit needs a reduced seed")
    index = {triple: 0}
    nodes = [triple]
    edges = []
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            t = nodes[i]
            for delta in sorted(regular_active_simple_roots(t)):
                if reduced_only and \
                        preserves_reduced(t, delta) == NOT_REDUCED:
                    continue
                t2 = elementary_transform(t, delta)
                if t2 not in index:
                    index[t2] = len(nodes)
                    nodes.append(t2)
                    nxt.append(index[t2])
                edges.append((i, index[t2], delta))
        frontier = nxt
    return OrbitGraph(tuple(nodes), tuple(edges),
                      (tuple(range(len(nodes))),))


def _star_node(rs, alpha):
    """For a non-typical maximal root: the unique terminal node of its
    support diagram carrying a coefficient of at least 2."""
    supp = support(alpha)
    stars = [i for i in supp
             if alpha[i] >= 2 and is_terminal(rs, i, supp)]
    assert len(stars) == 1, (alpha, stars)
    return stars[0]


def reduce_to_reduced(triple):
    """Drive a valid triple to a reduced one by elementary
    transformations; returns the reduced triple and the list of centers
    used.  First every non-typical maximal root is flattened by
    transforming at its starred node, then shared support nodes are
    peeled off."""
    rep = validate(triple)
    if not rep.ok:
        raise ValueError("invalid triple: %s" % rep)
    path = []
    for _ in range(10000):
        nontyp = [alpha for alpha in triple.M
                  if any(alpha[i] != 1 for i in support(alpha))]
        if not nontyp:
            break
        delta = _star_node(triple.rs, nontyp[0])
        m_before = sum(height(a) for a in nontyp)
        triple = elementary_transform(triple, delta)
        path.append(delta)
        m_after = sum(height(a) for a in triple.M
                      if any(a[i] != 1 for i in support(a)))
        assert m_after < m_before
    else:
        raise AssertionError("non-typical flattening did not terminate")
    for _ in range(10000):
        if is_reduced(triple):
            break
        active = regular_active_simple_roots(triple)
        shared = None
        for delta in sorted(active):
            owners = [a for a in triple.M if delta in support(a)]
            if len(owners) >= 2:
                shared = delta
                break
        assert shared is not None, triple
        triple = elementary_transform(triple, shared)
        path.append(shared)
    else:
        raise AssertionError("reduction did not terminate")
    assert is_reduced(triple)
    return triple, path
