"""Regenerate the bundled A4 Cayley table (even permutations of 4 points).

Elements are sorted with the identity first; g*h means "apply h, then g".

    python scripts/make_a4_table.py > src/poeg/data/a4.txt
"""

import itertools

import numpy as np

from poeg.groups import format_cayley_table


def parity(p):
    inv = sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])
    return inv % 2


def main():
    perms = sorted(p for p in itertools.permutations(range(4)) if parity(p) == 0)
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = np.zeros((n, n), dtype=np.int64)
    for g, h in itertools.product(perms, repeat=2):
        gh = tuple(g[h[x]] for x in range(4))
        table[index[g], index[h]] = index[gh]
    print("# alternating group A4 = K4 : Z3, even permutations of {0,1,2,3} in lexicographic order")
    print(format_cayley_table(table), end="")


if __name__ == "__main__":
    main()
