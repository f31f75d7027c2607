"""Constructing the subalgebra attached to a triple (M, pi, ~): the
expanded set Psi of all decorated roots, the linear functionals cutting
out the subalgebra inside each equivalence class, closure under the
bracket, torus invariance, and the sphericity criterion."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg
from .rootsys import add, sub, neg, support, canonical_key
from .active import family, _pi_within
from .combdata import validate, largest_torus


@dataclass(frozen=True)
class ActiveSet:
    triple: object
    psi: tuple          # all active roots, canonical order
    pi_ext: dict        # root -> attached simple index
    classes: tuple      # partition of psi into tuples of roots


def expand_psi(triple):
    """Expand M to the full set Psi = union of families, with the
    attached simple roots and the extended equivalence relation."""
    rep = validate(triple)
    if not rep.ok:
        raise ValueError("invalid triple: %s" % rep)
    rs = triple.rs
    psi = set()
    for root, p in zip(triple.M, triple.pi):
        psi |= family(rs, root, p)
    pi_ext = {beta: _pi_within(rs, psi, beta) for beta in psi}
    for root, p in zip(triple.M, triple.pi):
        assert pi_ext[root] == p
    m_set = set(triple.M)

    # union-find over Psi
    parent = {r: r for r in psi}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry, key=canonical_key)] = min(rx, ry,
                                                         key=canonical_key)

    for block in triple.classes:
        base = triple.M[block[0]]
        for i in block[1:]:
            union(base, triple.M[i])
    # two non-maximal roots are equivalent when a common positive shift
    # takes both into M (staying inside the respective families)
    fams = {root: family(rs, root, p)
            for root, p in zip(triple.M, triple.pi)}
    for delta in rs.positive_roots:
        hits = []
        for root in triple.M:
            shifted = sub(root, delta)
            if shifted in psi and shifted not in m_set \
                    and shifted in fams[root]:
                hits.append(shifted)
        for other in hits[1:]:
            union(hits[0], other)

    blocks = {}
    for r in psi:
        blocks.setdefault(find(r), []).append(r)
    classes = sorted((tuple(sorted(b, key=canonical_key))
                      for b in blocks.values()),
                     key=lambda b: canonical_key(b[0]))
    return ActiveSet(triple, tuple(sorted(psi, key=canonical_key)),
                     pi_ext, tuple(classes))


def _normalize_row(row):
    g = 0
    for x in row:
        g = gcd(g, abs(x))
    row = [x // g for x in row]
    if row[0] < 0:
        row = [-x for x in row]
    return row


def build_functionals(aset, sc):
    """One functional per class, as an integer row over the class's
    roots (canonical order).  Classes with no shift into another class
    get the all-ones row; the others inherit through the bracket with
    the shifting root vector.  When several shifts exist the inherited
    rows must be proportional -- asserted, not assumed."""
    rs = aset.triple.rs
    psi_class = {}
    for ci, block in enumerate(aset.classes):
        for r in block:
            psi_class[r] = ci
    shifts = {ci: [] for ci in range(len(aset.classes))}
    for ci, block in enumerate(aset.classes):
        for delta in rs.positive_roots:
            shifted = [add(r, delta) for r in block]
            if not all(s in psi_class for s in shifted):
                continue
            targets = {psi_class[s] for s in shifted}
            if len(targets) == 1 and ci not in targets:
                shifts[ci].append((delta, targets.pop()))
    # shifts strictly raise heights, so the dependency graph is acyclic
    xi = [None] * len(aset.classes)

    def settle(ci):
        if xi[ci] is not None:
            return
        block = aset.classes[ci]
        rows = []
        for delta, cj in shifts[ci]:
            settle(cj)
            target_pos = {r: k for k, r in enumerate(aset.classes[cj])}
            row = [sc.n(r, delta) * xi[cj][target_pos[add(r, delta)]]
                   for r in block]
            assert all(x != 0 for x in row)
            rows.append(_normalize_row(row))
        if not rows:
            xi[ci] = [1] * len(block)
        else:
            for row in rows[1:]:
                assert row == rows[0], "shift functionals disagree"
            xi[ci] = rows[0]

    for ci in range(len(aset.classes)):
        settle(ci)
    return xi


@dataclass(frozen=True)
class SubalgebraModel:
    triple: object
    torus: object
    aset: ActiveSet
    xi: tuple           # per class, tuple of integer coefficients
    basis: tuple        # basis of the nilpotent part: dicts root -> int

    @property
    def K(self):
        return len(self.aset.classes)

    def dim_n(self):
        return len(self.basis)

    def to_json(self):
        import json
        return json.dumps({
            "torus": [list(r) for r in self.torus.vanishing],
            "xi": [list(row) for row in self.xi],
            "classes": [[list(r) for r in b] for b in self.aset.classes],
            "basis": [{" ".join(map(str, r)): v for r, v in vec.items()}
                      for vec in self.basis],
        })


def build_subalgebra(triple, torus=None):
    """The nilpotent algebra of the triple: root vectors outside Psi
    plus, per class, the kernel of its functional."""
    if torus is None:
        torus = largest_torus(triple)
    rep = validate(triple, torus)
    if not rep.ok:
        raise ValueError("invalid triple: %s" % rep)
    rs = triple.rs
    aset = expand_psi(triple)
    sc = rs.structure_constants()
    xi = build_functionals(aset, sc)
    basis = []
    psi_set = set(aset.psi)
    for gamma in rs.positive_roots:
        if gamma not in psi_set:
            basis.append({gamma: 1})
    for block, row in zip(aset.classes, xi):
        # kernel of a single row: adjacent-difference vectors
        for k in range(len(block) - 1):
            vec = {block[k]: row[k + 1], block[k + 1]: -row[k]}
            g = gcd(abs(row[k + 1]), abs(row[k]))
            vec = {r: v // g for r, v in vec.items()}
            if vec[block[k]] < 0:
                vec = {r: -v for r, v in vec.items()}
            basis.append(vec)
    model = SubalgebraModel(triple, torus,
                            aset, tuple(tuple(r) for r in xi), tuple(basis))
    assert model.dim_n() == len(rs.positive_roots) - model.K
    return model


def _in_model(model, vec):
    """Exact membership of a root-space combination in the algebra."""
    aset = model.aset
    psi_pos = {}
    for ci, block in enumerate(aset.classes):
        for k, r in enumerate(block):
            psi_pos[r] = (ci, k)
    per_class = {}
    for root, coeff in vec.items():
        if coeff == 0:
            continue
        if root not in psi_pos:
            continue  # outside Psi: always inside
        ci, k = psi_pos[root]
        per_class.setdefault(ci, {})[k] = coeff
    for ci, coeffs in per_class.items():
        row = model.xi[ci]
        if sum(row[k] * c for k, c in coeffs.items()) != 0:
            return False
    return True


def _bracket(sc, x, y):
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            nv = sc.n(a, b)
            if nv:
                r = add(a, b)
                out[r] = out.get(r, 0) + ca * cb * nv
    return {r: v for r, v in out.items() if v}


def _tau_equal(rs, torus, a, b):
    diff = list(sub(a, b))
    if all(x == 0 for x in diff):
        return True
    if not torus.vanishing:
        return False
    return linalg.in_span(diff, [list(r) for r in torus.vanishing])


def verify_closure(model, sc=None):
    """True iff the basis is closed under the bracket and every basis
    vector is a weight vector for the torus."""
    rs = model.triple.rs
    if sc is None:
        sc = rs.structure_constants()
    for i, x in enumerate(model.basis):
        for y in model.basis[i + 1:]:
            if not _in_model(model, _bracket(sc, x, y)):
                return False
    for vec in model.basis:
        roots = list(vec)
        if any(not _tau_equal(rs, model.torus, roots[0], r)
               for r in roots[1:]):
            return False
    return True


def check_sphericity(model):
    """The weights of the classes, taken modulo the vanishing lattice,
    must be pairwise distinct and linearly independent."""
    rs = model.triple.rs
    krows = [list(r) for r in model.torus.vanishing]
    reps = [list(block[0]) for block in model.aset.classes]
    if not reps:
        return True
    return linalg.rank(krows + reps) == linalg.rank(krows) + len(reps) \
        if krows else linalg.rank(reps) == len(reps)
