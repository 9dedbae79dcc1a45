"""Independent reference implementations used to cross-check the package.

Everything here is written in plain Python (lists, tuples, Counter, full
sorts) so that agreement with the vectorized implementations is meaningful.
"""

from __future__ import annotations

import math
from collections import Counter


def brute_force_distance(a, b, mask) -> float:
    total = 0.0
    for d in range(len(mask)):
        if mask[d]:
            diff = float(a[d]) - float(b[d])
            total += diff * diff
    return math.sqrt(total)


def brute_force_knn(train_x, train_y, query, mask, k) -> int:
    """Full sort by (distance, row index); ties on votes go to the nearest
    neighbor whose class is among the top vote-getters."""
    ranked = sorted(
        (brute_force_distance(query, train_x[i], mask), i) for i in range(len(train_x))
    )
    neighbor_labels = [int(train_y[i]) for _, i in ranked[:k]]
    counts = Counter(neighbor_labels)
    top = max(counts.values())
    for label in neighbor_labels:
        if counts[label] == top:
            return label
    raise AssertionError("unreachable")


def brute_force_error(train_x, train_y, test_x, test_y, mask, k) -> float:
    wrong = sum(
        1
        for i in range(len(test_x))
        if brute_force_knn(train_x, train_y, test_x[i], mask, k) != int(test_y[i])
    )
    return wrong / len(test_x)


def brute_force_mean_ranks(scores, higher_better) -> list[float]:
    """Tie-averaged within-row ranks, averaged over rows; pure Python."""
    n_rows = len(scores)
    m = len(scores[0])
    totals = [0.0] * m
    for row in scores:
        keyed = [-v for v in row] if higher_better else list(row)
        order = sorted(range(m), key=lambda j: keyed[j])
        ranks = [0.0] * m
        pos = 0
        while pos < m:
            tied = [order[pos]]
            while pos + len(tied) < m and keyed[order[pos + len(tied)]] == keyed[order[pos]]:
                tied.append(order[pos + len(tied)])
            average = sum(range(pos + 1, pos + len(tied) + 1)) / len(tied)
            for j in tied:
                ranks[j] = average
            pos += len(tied)
        for j in range(m):
            totals[j] += ranks[j]
    return [t / n_rows for t in totals]
