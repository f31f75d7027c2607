"""Combinatorial triples (M, pi, ~), their validity conditions, torus
specifications, reduced-form checks, and codimension statistics.

A triple is stored in canonical form: the roots of M sorted by (height,
coefficient vector), pi aligned with M, and the equivalence partition
as sorted blocks of M-indices sorted by first element.  The canonical
form is the identity used for orbit search and deduplication.
"""

import json
from dataclasses import dataclass, field

from . import linalg
from .rootsys import build_root_system, canonical_key, sub, support
from . import active


@dataclass(frozen=True)
class CombTriple:
    label: str      # root-system label
    M: tuple        # roots (tuples), canonical order
    pi: tuple       # simple indices aligned with M
    classes: tuple  # partition of range(len(M)) into sorted tuples

    @property
    def rs(self):
        return build_root_system(self.label)

    def class_of(self, i):
        for block in self.classes:
            if i in block:
                return block
        raise IndexError(i)

    def equivalent(self, i, j):
        return j in self.class_of(i)

    def support_union(self):
        out = set()
        for root in self.M:
            out |= support(root)
        return out

    def to_json(self):
        return json.dumps({
            "system": self.label,
            "M": [{"root": list(r), "pi": p} for r, p in zip(self.M, self.pi)],
            "classes": [list(b) for b in self.classes],
        })

    def __str__(self):
        blocks = []
        for block in self.classes:
            blocks.append("~".join(
                "(%s,%d)" % ("".join(str(c) for c in self.M[i]), self.pi[i] + 1)
                for i in block))
        return "{%s}" % "; ".join(blocks)


def make_triple(label_or_rs, decorated, classes=None):
    """Canonicalize a triple from a list of (root, pi) pairs and an
    optional partition given as blocks of positions into that list."""
    if isinstance(label_or_rs, str):
        rs = build_root_system(label_or_rs)
    else:
        rs = label_or_rs
    decorated = [(tuple(r), int(p)) for r, p in decorated]
    if len(set(r for r, _ in decorated)) != len(decorated):
        raise ValueError("roots of M must be pairwise distinct")
    order = sorted(range(len(decorated)),
                   key=lambda i: canonical_key(decorated[i][0]))
    rank_of = {old: new for new, old in enumerate(order)}
    m = tuple(decorated[i][0] for i in order)
    pi = tuple(decorated[i][1] for i in order)
    if classes is None:
        classes = [[i] for i in range(len(decorated))]
    seen = sorted(x for b in classes for x in b)
    if seen != list(range(len(decorated))):
        raise ValueError("classes must partition the index range")
    blocks = sorted(tuple(sorted(rank_of[x] for x in b)) for b in classes)
    return CombTriple(rs.label, m, pi, tuple(blocks))


def triple_from_json(text):
    data = json.loads(text)
    decorated = [(tuple(e["root"]), e["pi"]) for e in data["M"]]
    return make_triple(data["system"], decorated, data.get("classes"))


@dataclass(frozen=True)
class TorusSpec:
    """The sublattice K of characters whose vanishing cuts out the
    torus; stored as canonical Hermite-normal-form rows."""
    vanishing: tuple

    @property
    def rank_K(self):
        return len(self.vanishing)

    def rank_S(self, rs):
        return rs.n - self.rank_K

    def to_json(self):
        return json.dumps({"vanishing": [list(r) for r in self.vanishing]})


def torus_from_json(text):
    data = json.loads(text)
    rows = [list(map(int, r)) for r in data["vanishing"]]
    return make_torus(rows, ncols=len(rows[0]) if rows else 0)


def make_torus(rows, ncols):
    return TorusSpec(tuple(tuple(r) for r in linalg.hnf(
        [list(r) for r in rows])) if rows else tuple())


def largest_torus(triple):
    """The largest torus compatible with the triple: K is the integer
    saturation of the lattice spanned by differences of equivalent
    roots."""
    rs = triple.rs
    rows = []
    for block in triple.classes:
        base = triple.M[block[0]]
        for i in block[1:]:
            rows.append(list(sub(triple.M[i], base)))
    sat = linalg.saturate(rows, ncols=rs.n)
    return TorusSpec(tuple(tuple(r) for r in sat))


@dataclass
class ValidationReport:
    conditions: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.conditions.values())

    def fail(self, name, witness):
        self.conditions[name] = False
        self.witnesses.setdefault(name, witness)

    def passed(self, name):
        self.conditions.setdefault(name, True)

    def __str__(self):
        parts = []
        for name in sorted(self.conditions):
            parts.append("%s=%s" % (name, "ok" if self.conditions[name]
                                    else "FAIL"))
        return " ".join(parts)


def _pair_tags(triple):
    """classify every unordered pair of M, with its equivalence flag."""
    rs = triple.rs
    out = {}
    for i in range(len(triple.M)):
        for j in range(i + 1, len(triple.M)):
            eq = triple.equivalent(i, j)
            out[(i, j)] = (eq, active.classify_pair(
                rs, (triple.M[i], triple.pi[i]),
                (triple.M[j], triple.pi[j]), eq))
    return out


def validate(triple, torus=None):
    """Check conditions (A), (D), (E), (C) and, when a torus is given,
    (T).  The report carries a witness for each failed condition."""
    rs = triple.rs
    report = ValidationReport()
    for name in ("A", "D", "E", "C"):
        report.passed(name)
    for root, p in zip(triple.M, triple.pi):
        if p not in active.table1_options(rs, root):
            report.fail("A", (root, p))
    for (i, j), (eq, cls) in _pair_tags(triple).items():
        if not eq and cls.tag not in ("D0", "D1", "D2"):
            report.fail("D", (triple.M[i], triple.M[j], cls.tag))
        if eq and cls.tag not in ("D0", "D1", "E1", "D2", "E2"):
            report.fail("E", (triple.M[i], triple.M[j], cls.tag))
    for i, root in enumerate(triple.M):
        rest = set()
        for j, other in enumerate(triple.M):
            if j != i:
                rest |= support(other)
        if support(root) <= rest:
            report.fail("C", root)
    if torus is not None:
        report.passed("T")
        if not _condition_T(triple, torus):
            report.fail("T", torus)
    return report


def _condition_T(triple, torus):
    """Ker of the restriction map on the span R of the supports of M
    must equal the span of differences of equivalent roots.  Both sides
    are rational subspaces; K is intersected with the coordinate
    subspace R."""
    rs = triple.rs
    supp = sorted(triple.support_union())
    krows = [list(r) for r in torus.vanishing]
    diffs = []
    for block in triple.classes:
        base = triple.M[block[0]]
        for i in block[1:]:
            diffs.append(list(sub(triple.M[i], base)))
    outside = [j for j in range(rs.n) if j not in supp]
    if not krows:
        inter = []
    elif not outside:
        inter = krows
    else:
        # x^T krows must vanish on the outside coordinates
        cond = [[row[j] for row in krows] for j in outside]
        xs = linalg.rational_kernel(cond, ncols=len(krows))
        inter = []
        for x in xs:
            inter.append([sum(x[k] * krows[k][j] for k in range(len(krows)))
                          for j in range(rs.n)])
    return linalg.same_span(inter, diffs)


def check_reduced(triple):
    """Conditions (A'), (D'), (E') for a reduced triple."""
    rs = triple.rs
    report = ValidationReport()
    for name in ("A'", "D'", "E'"):
        report.passed(name)
    for root, p in zip(triple.M, triple.pi):
        if any(root[i] != 1 for i in support(root)) or p not in support(root):
            report.fail("A'", (root, p))
    for (i, j), (eq, cls) in _pair_tags(triple).items():
        sa, sb = support(triple.M[i]), support(triple.M[j])
        if not eq and sa & sb:
            report.fail("D'", (triple.M[i], triple.M[j]))
        if eq and not (cls.tag == "D0" or "E1prime" in cls.refined
                       or "E2prime" in cls.refined):
            report.fail("E'", (triple.M[i], triple.M[j], cls.tag))
    return report


def is_reduced(triple):
    return check_reduced(triple).ok


def codims(triple):
    """(c(S), c(N)): the codimension of the torus inside T and of the
    unipotent part inside the maximal unipotent subgroup."""
    from . import build
    rep = validate(triple)
    if not rep.ok:
        raise ValueError("invalid triple: %s" % rep)
    c_s = len(triple.M) - len(triple.classes)
    aset = build.expand_psi(triple)
    c_n = len(aset.classes)
    assert c_s + c_n == len(triple.support_union())
    return (c_s, c_n)
