"""Pure-Python congruence-closure kernel, used when the compiled one is unavailable."""
import numpy as np


def closure(action, mul, identity, pairs, gens):
    """Least congruence on an act containing ``pairs``.

    ``action[x][s]`` is the act, ``mul`` the monoid table, ``gens`` the
    monoid elements used to propagate merges. Each queued merge carries the
    index of the generating pair and a multiplier ``t`` such that the two
    elements are ``c*t`` and ``d*t``.

    Returns ``(labels, edges)``: the least class member per element, and
    one row ``(x, y, pair_index, t)`` per union performed (a spanning forest
    of the classes).
    """
    act = [list(map(int, row)) for row in np.asarray(action)]
    mt = [list(map(int, row)) for row in np.asarray(mul)]
    gens = [int(g) for g in np.asarray(gens)]
    n = len(act)
    parent = list(range(n))
    size = [1] * n

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = [(int(c), int(d), k, identity) for k, (c, d) in enumerate(np.asarray(pairs).reshape(-1, 2))]
    edges = []
    head = 0
    while head < len(queue):
        x, y, k, t = queue[head]
        head += 1
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        if size[rx] < size[ry]:
            rx, ry = ry, rx
        parent[ry] = rx
        size[rx] += size[ry]
        edges.append((x, y, k, t))
        ax, ay, mrow = act[x], act[y], mt[t]
        for g in gens:
            queue.append((ax[g], ay[g], k, mrow[g]))
    least = {}
    labels = np.empty(n, dtype=np.int32)
    for x in range(n):
        labels[x] = least.setdefault(find(x), x)
    return labels, np.array(edges, dtype=np.int32).reshape(-1, 4)
