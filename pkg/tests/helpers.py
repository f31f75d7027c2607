"""Parsing utilities for the pipe-delimited reference tables."""

import re

from solvsph.combdata import make_triple


def parse_rows(table, n_systems):
    """Yield (row_no, M, classes, columns, c_s, c_n) from a table blob.

    M comes back as (support-digit-string, 0-based pi) pairs; classes
    as blocks of M indices; columns as the raw per-system strings.
    """
    rows = []
    for line in table.strip().splitlines():
        parts = line.split("|")
        no = int(parts[0])
        items = re.findall(r"\((\d+),(\d+)\)", parts[1])
        m = [(supp, int(p) - 1) for supp, p in items]
        classes = []
        used = set()
        if parts[2]:
            for block in parts[2].split(","):
                idxs = [[s for s, _ in m].index(x) for x in block.split("~")]
                classes.append(idxs)
                used.update(idxs)
        classes.extend([i] for i in range(len(m)) if i not in used)
        cols = parts[3:3 + n_systems]
        c_s, c_n = int(parts[3 + n_systems]), int(parts[4 + n_systems])
        rows.append((no, m, classes, cols, c_s, c_n))
    return rows


def to_triple(rs, m, classes):
    decorated = []
    for supp, p in m:
        root = tuple(1 if str(i + 1) in supp else 0 for i in range(rs.n))
        decorated.append((root, p))
    return make_triple(rs, decorated, classes)


def parse_column(col):
    """Split an orbit cell into one-step targets {row: 0-based center}
    and multi-step targets {row}."""
    one, multi = {}, set()
    if col:
        for entry in col.split(","):
            m = re.fullmatch(r"(\d+)\((\d+)\)", entry)
            if m:
                one[int(m.group(1))] = int(m.group(2)) - 1
            else:
                multi.add(int(entry))
    return one, multi
