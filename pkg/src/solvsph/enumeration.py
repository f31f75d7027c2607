"""Exhaustive enumeration of reduced (and, at small rank, of all
valid) triples, orbit counting, the invariants d0 and d, and the
classification tables."""

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .rootsys import build_root_system, support
from .active import table1_options
from .combdata import make_triple, validate, is_reduced, codims
from . import transform


@dataclass(frozen=True)
class Catalog:
    label: str
    support: tuple
    triples: tuple      # canonical triples, deterministic order
    stats: tuple        # (c_s, c_n) per triple
    orbits: tuple       # partition of triple indices
    transitions: tuple  # per triple: ((target, center or None), ...)

    def index_of(self, triple):
        return self.triples.index(triple)

    def json_lines(self):
        import json
        for t, (cs, cn) in zip(self.triples, self.stats):
            data = json.loads(t.to_json())
            data["c_s"], data["c_n"] = cs, cn
            yield json.dumps(data)


def _connected_subsets(rs, nodes):
    nodes = sorted(nodes)
    out = []
    for r in range(1, len(nodes) + 1):
        for combo in itertools.combinations(nodes, r):
            if rs.is_connected(combo):
                out.append(frozenset(combo))
    return out


def _covering_families(rs, supp):
    """Collections of connected subsets covering supp in which every
    member keeps a private node (condition (C) at the support level)."""
    subsets = _connected_subsets(rs, supp)
    supp = frozenset(supp)
    out = []
    for r in range(len(supp) + 1):
        for fam in itertools.combinations(subsets, r):
            union = frozenset().union(*fam)
            if union != supp:
                continue
            if all(any(all(x not in other for other in fam if other is not s)
                       for x in s) for s in fam):
                out.append(fam)
    return out


def _partitions(n):
    """All set partitions of range(n) as restricted-growth strings."""
    def rec(prefix, blocks):
        if len(prefix) == n:
            yield [list(b) for b in blocks]
            return
        i = len(prefix)
        for k in range(len(blocks) + 1):
            if k == len(blocks):
                yield from rec(prefix + [k], blocks + [[i]])
            else:
                yield from rec(prefix + [k], [b + [i] if j == k else b
                                              for j, b in enumerate(blocks)])
    yield from rec([], [])


def _sort_key(triple):
    return (triple.M, triple.pi, triple.classes)


def _catalog(rs, supp, triples):
    triples = sorted(set(triples), key=_sort_key)
    index = {t: i for i, t in enumerate(triples)}
    stats = tuple(codims(t) for t in triples)
    transitions = []
    for t in triples:
        steps = []
        for delta in sorted(transform.regular_active_simple_roots(t)):
            verdict = transform.preserves_reduced(t, delta)
            if verdict != transform.REDUCED_NEW:
                continue
            t2 = transform.elementary_transform(t, delta)
            assert t2 in index, (t, delta, t2)
            steps.append((index[t2], delta))
        transitions.append(tuple(steps))
    seen = set()
    orbits = []
    for i, t in enumerate(triples):
        if i in seen:
            continue
        graph = transform.orbit(t, reduced_only=True)
        block = sorted(index[u] for u in graph.nodes)
        seen.update(block)
        orbits.append(tuple(block))
    return Catalog(rs.label, tuple(sorted(supp)), tuple(triples),
                   stats, tuple(sorted(orbits)), tuple(transitions))


def enumerate_reduced(rs, supp=None):
    """All reduced triples whose supports cover exactly the given
    simple roots (default: all of them)."""
    if supp is None:
        supp = range(rs.n)
    supp = sorted(supp)
    found = []
    for fam in _covering_families(rs, supp):
        roots = sorted(tuple(1 if i in s else 0 for i in range(rs.n))
                       for s in fam)
        pi_choices = [sorted(support(r)) for r in roots]
        for pis in itertools.product(*pi_choices):
            for classes in _partitions(len(roots)):
                t = make_triple(rs, list(zip(roots, pis)), classes)
                if is_reduced(t):
                    found.append(t)
    return _catalog(rs, supp, found)


MAX_VALID_RANK = 3


def enumerate_valid(rs, supp=None):
    """All triples passing the validity conditions, including ones
    built on non-typical roots.  Exponential in the number of positive
    roots, hence gated to small rank."""
    if rs.n > MAX_VALID_RANK:
        raise ValueError("full validity enumeration is limited to rank %d"
                         % MAX_VALID_RANK)
    if supp is None:
        supp = range(rs.n)
    supp = sorted(supp)
    supp_set = set(supp)
    decorated = []
    for root in rs.positive_roots:
        if support(root) <= supp_set:
            for p in sorted(table1_options(rs, root)):
                decorated.append((root, p))
    roots = sorted({r for r, _ in decorated})
    found = []
    for r in range(len(supp) + 1):
        for combo in itertools.combinations(roots, r):
            if set().union(*(support(x) for x in combo)) != supp_set:
                continue
            opts = [sorted(p for rr, p in decorated if rr == x)
                    for x in combo]
            for pis in itertools.product(*opts):
                for classes in _partitions(len(combo)):
                    t = make_triple(rs, list(zip(combo, pis)), classes)
                    if validate(t).ok:
                        found.append(t)
    triples = sorted(set(found), key=_sort_key)
    index = {t: i for i, t in enumerate(triples)}
    stats = tuple(codims(t) for t in triples)
    transitions = []
    for t in triples:
        steps = []
        for delta in sorted(transform.regular_active_simple_roots(t)):
            t2 = transform.elementary_transform(t, delta)
            if t2 != t:
                assert t2 in index
                steps.append((index[t2], delta))
        transitions.append(tuple(steps))
    seen = set()
    orbits = []
    for i, t in enumerate(triples):
        if i in seen:
            continue
        graph = transform.orbit(t, reduced_only=False)
        block = sorted(index[u] for u in graph.nodes)
        seen.update(block)
        orbits.append(tuple(block))
    return Catalog(rs.label, tuple(supp), tuple(triples), stats,
                   tuple(sorted(orbits)), tuple(transitions))


def d0(rs):
    """Number of conjugacy classes with full support."""
    return len(enumerate_reduced(rs).orbits)


@lru_cache(maxsize=None)
def _d0_by_shape(shape):
    if not shape:
        return 1
    label = "x".join("%s%d" % (letter, rank) for letter, rank in shape)
    return d0(build_root_system(label))


def _shape_of(rs, nodes):
    comps = rs.component_nodes(set(nodes))
    return tuple(sorted(rs.classify_component(c)[:2] for c in comps))


def d(rs):
    """Total number of conjugacy classes: the sum of d0 over all
    subsets of simple roots, memoized by the shape of the induced
    diagram."""
    total = 0
    for r in range(rs.n + 1):
        for combo in itertools.combinations(range(rs.n), r):
            total += _d0_by_shape(_shape_of(rs, combo))
    return total


def _row_label(triple):
    parts = []
    for block in triple.classes:
        parts.append("~".join(
            "(%s,%d)" % ("".join(str(i + 1) for i in sorted(support(triple.M[k]))),
                         triple.pi[k] + 1)
            for k in block))
    return "; ".join(parts)


def emit_table(systems, fmt="text"):
    """The classification table for a family of systems sharing one
    underlying graph: rows are the reduced triples, columns give the
    codimensions and, per system, the other rows reachable by
    elementary transformations (one-step centers annotated)."""
    cats = [enumerate_reduced(rs) for rs in systems]
    rows = [tuple(zip(t.M, t.pi)) + (t.classes,) for t in cats[0].triples]
    for cat in cats[1:]:
        other = [tuple(zip(t.M, t.pi)) + (t.classes,) for t in cat.triples]
        assert other == rows, "systems do not share an underlying graph"
    n_rows = len(rows)
    cells = []
    for cat in cats:
        orbit_of = {}
        for block in cat.orbits:
            for i in block:
                orbit_of[i] = block
        col = []
        for i in range(n_rows):
            one_step = {j: delta for j, delta in cat.transitions[i]}
            entries = []
            for j in orbit_of[i]:
                if j == i:
                    continue
                if j in one_step:
                    entries.append("%d(%d)" % (j + 1, one_step[j] + 1))
                else:
                    entries.append("%d" % (j + 1))
            col.append(",".join(entries))
        cells.append(col)
    header = (["row", "(M,pi)", "~", "c(S)", "c(N)"]
              + [rs.label for rs in systems])
    lines = [header]
    for i in range(n_rows):
        t = cats[0].triples[i]
        cs, cn = cats[0].stats[i]
        sim = ",".join("~".join(str(k + 1) for k in block)
                       for block in t.classes if len(block) > 1)
        lines.append([str(i + 1), _row_label(t), sim, str(cs), str(cn)]
                     + [col[i] for col in cells])
    lines.append(["d0", "", "", "", ""]
                 + [str(len(cat.orbits)) for cat in cats])
    if fmt == "csv":
        import csv
        import io
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerows(lines)
        return buf.getvalue()
    widths = [max(len(row[k]) for row in lines) for k in range(len(header))]
    out = []
    for row in lines:
        out.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths))
                   .rstrip())
    return "\n".join(out) + "\n"
