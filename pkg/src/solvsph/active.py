"""Decorated positive roots: the catalog of admissible (alpha, pi)
pairs, families of subordinate roots, and the five-way taxonomy for how
two decorated roots may interact.

A decorated root is a pair (alpha, pi) of a positive root and a simple
root index in its support.  The admissible pairs are a short catalog
keyed by the shape of the induced diagram on Supp alpha:

1. alpha typical (sum of the simple roots in its support): any pi.
2. shape B_n, alpha = a_1 + ... + a_{n-1} + 2 a_n: pi among a_1..a_{n-1}.
3. shape C_n, alpha = 2 a_1 + ... + 2 a_{n-1} + a_n: pi = a_n.
4. shape F_4, alpha = 2 a_1 + 2 a_2 + a_3 + a_4: pi in {a_3, a_4}.
5. shape G_2, alpha in {2 a_1 + a_2, 3 a_1 + a_2}: pi = a_2.

Rows 2-5 are matched structurally (coefficient pattern + edge
multiplicities and arrow directions), so they apply uniformly to roots
living inside bigger systems.
"""

from dataclasses import dataclass

from .rootsys import add, sub, support, height


def is_terminal(rs, delta, supp):
    """True iff delta has exactly one neighbor inside supp."""
    return rs.degree(delta, set(supp)) == 1


def _path_in(rs, nodes):
    """Order a connected node set as a path, or None if not a path."""
    nodes = set(nodes)
    if len(nodes) == 1:
        return sorted(nodes)
    degs = {v: rs.degree(v, nodes) for v in nodes}
    ends = sorted(v for v in nodes if degs[v] == 1)
    if len(ends) != 2 or any(d > 2 for d in degs.values()):
        return None
    if not rs.is_connected(nodes):
        return None
    return rs._path_order(sorted(nodes), start=ends[0])


def table1_options(rs, alpha):
    """Admissible pi values (simple indices) for a positive root."""
    if not rs.is_positive_root(alpha):
        raise ValueError("not a positive root: %r" % (alpha,))
    supp = sorted(support(alpha))
    if all(alpha[i] == 1 for i in supp):
        return set(supp)
    opts = set()
    coeff2 = [i for i in supp if alpha[i] == 2]
    coeff1 = [i for i in supp if alpha[i] == 1]
    path = _path_in(rs, supp)
    if len(supp) == 2:
        i, j = supp
        m = rs.edge_mult(i, j)
        if m == 3:
            short, lng = (i, j) if rs.d[i] < rs.d[j] else (j, i)
            if alpha[short] in (2, 3) and alpha[lng] == 1:
                opts.add(lng)  # G_2 rows
            return opts
    if path is not None and len(coeff2) + len(coeff1) == len(supp):
        # B_n shape: unique coefficient-2 node, terminal, short end of
        # a double edge; everything else coefficient 1.
        if len(coeff2) == 1:
            t = coeff2[0]
            if path[-1] == t or path[0] == t:
                u = rs.neighbors(t, set(supp))[0]
                if rs.edge_mult(t, u) == 2 and rs.d[t] < rs.d[u] and \
                        all(rs.edge_mult(path[k], path[k + 1]) == 1
                            for k in range(len(path) - 1)
                            if {path[k], path[k + 1]} != {t, u}):
                    opts.update(i for i in supp if i != t)
        # C_n shape: unique coefficient-1 node, terminal, long end of
        # a double edge; everything else coefficient 2.
        if len(coeff1) == 1:
            u = coeff1[0]
            if path[-1] == u or path[0] == u:
                w = rs.neighbors(u, set(supp))[0]
                if rs.edge_mult(u, w) == 2 and rs.d[u] > rs.d[w] and \
                        all(rs.edge_mult(path[k], path[k + 1]) == 1
                            for k in range(len(path) - 1)
                            if {path[k], path[k + 1]} != {u, w}):
                    opts.add(u)
        # F_4 shape: path of four, interior double edge, coefficient 2
        # on the two short-side nodes, 1 on the long side.
        if len(supp) == 4 and len(coeff2) == 2 and len(coeff1) == 2:
            for order in (path, path[::-1]):
                a, b, c, dd = order
                if [alpha[x] for x in order] == [2, 2, 1, 1] and \
                        rs.edge_mult(a, b) == 1 and rs.edge_mult(c, dd) == 1 and \
                        rs.edge_mult(b, c) == 2 and rs.d[b] < rs.d[c]:
                    opts.update((c, dd))
    return opts


def family(rs, alpha, pi):
    """All subordinates of a decorated root, including the root itself:
    F(alpha) = {alpha} u {a' in Delta_+ : alpha - a' in Delta_+,
    pi not in Supp a'}."""
    if pi not in table1_options(rs, alpha):
        raise ValueError("inadmissible decorated root (%r, %d)" % (alpha, pi))
    fam = {alpha}
    for ap in rs.positive_roots:
        if ap != alpha and rs.is_positive_root(sub(alpha, ap)) \
                and pi not in support(ap):
            fam.add(ap)
    return fam


def member_pi(rs, alpha, pi, beta):
    """The simple root attached to a member of F(alpha): the unique
    delta in Supp beta such that for every split beta = b1 + b2 into
    positive roots, b1 lies in F(alpha) exactly when delta is outside
    Supp b1."""
    fam = family(rs, alpha, pi)
    if beta not in fam:
        raise ValueError("%r is not in the family of (%r, %d)"
                         % (beta, alpha, pi))
    return _pi_within(rs, fam, beta)


def _pi_within(rs, psi, beta):
    splits = []
    for b1 in rs.positive_roots:
        b2 = sub(beta, b1)
        if b2 in rs._pos_set:
            splits.append((b1, b2))
    found = None
    for delta in sorted(support(beta)):
        ok = True
        for b1, b2 in splits:
            if (b1 in psi) != (delta not in support(b1)):
                ok = False
                break
        if ok:
            assert found is None, \
                "attached simple root not unique for %r" % (beta,)
            found = delta
    assert found is not None, \
        "no attached simple root for %r" % (beta,)
    return found


def family_pi(rs, alpha, pi):
    """Map each member of F(alpha) to its attached simple root."""
    fam = family(rs, alpha, pi)
    return {beta: _pi_within(rs, fam, beta) for beta in fam}


@dataclass(frozen=True)
class PairClass:
    tag: str                # D0, D1, E1, D2, E2 or INVALID
    witness: object         # shared node for D1/E1, gamma chain for D2/E2
    refined: frozenset      # subset of {"E1prime", "E2prime"}


def _figure_shape(rs, alpha, beta):
    """Match the branching shape: the union diagram is a tree with a
    single degree-3 node g0 lying in both supports; removing g0 leaves
    three paths -- the rest of the shared chain g1..gr (r >= 1) and one
    private arm per root.  Both roots must be typical.  Returns the
    chain [g0, g1, ..., gr], or None."""
    sa, sb = support(alpha), support(beta)
    inter = sa & sb
    if len(inter) < 2:
        return None
    if any(alpha[i] != 1 for i in sa) or any(beta[i] != 1 for i in sb):
        return None
    if not (sa - inter) or not (sb - inter):
        return None
    union = sa | sb
    deg3 = [v for v in union if rs.degree(v, union) == 3]
    if len(deg3) != 1 or deg3[0] not in inter:
        return None
    if any(rs.degree(v, union) > 3 for v in union):
        return None
    g0 = deg3[0]
    rest = set(union) - {g0}
    comps = [set(c) for c in rs.component_nodes(rest)]
    if len(comps) != 3:
        return None
    if sorted(map(sorted, comps)) != sorted(map(sorted,
                                                [inter - {g0}, sa - inter, sb - inter])):
        return None
    chain_part = _path_in(rs, inter - {g0})
    if chain_part is None:
        return None
    if not rs.adjacent(g0, chain_part[0]):
        chain_part.reverse()
    if not rs.adjacent(g0, chain_part[0]):
        return None
    if _path_in(rs, sa - inter) is None or _path_in(rs, sb - inter) is None:
        return None
    return [g0] + chain_part


def classify_pair(rs, a, b, equivalent):
    """Classify the interaction of two distinct decorated roots.

    a, b are (root, pi) pairs.  Tags D0/D1/D2 are admissible for any
    pair; E1/E2 only for equivalent ones.  The refined flags E1prime /
    E2prime report the coarser shapes used for reduced data.
    """
    (alpha, pa), (beta, pb) = a, b
    if alpha == beta:
        raise ValueError("pair must consist of two different roots")
    sa, sb = support(alpha), support(beta)
    inter = sa & sb
    if not inter:
        return PairClass("D0", None, frozenset())
    refined = set()
    if len(inter) == 1:
        delta = next(iter(inter))
        term = is_terminal(rs, delta, sa) and is_terminal(rs, delta, sb)
        if term and pa != delta and pb != delta:
            return PairClass("D1", delta, frozenset())
        if term and pa == delta == pb:
            refined.add("E1prime")
            droot = rs.simple(delta)
            if equivalent and rs.is_positive_root(sub(alpha, droot)) \
                    and rs.is_positive_root(sub(beta, droot)):
                return PairClass("E1", delta, frozenset(refined))
        return PairClass("INVALID", None, frozenset(refined))
    chain = _figure_shape(rs, alpha, beta)
    if chain is None:
        return PairClass("INVALID", None, frozenset())
    if pa not in inter and pb not in inter:
        return PairClass("D2", tuple(chain), frozenset())
    if pa == pb and pa in inter:
        if pa == chain[-1]:
            refined.add("E2prime")
        if equivalent:
            return PairClass("E2", tuple(chain), frozenset(refined))
    return PairClass("INVALID", None, frozenset(refined))
