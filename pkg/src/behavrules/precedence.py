"""Information-gain ranking of context attributes.

The attribute with the highest gain gets the highest splitting precedence.
Gains are compared in double precision with a 1e-12 tolerance; ties break
by ascending attribute name so rankings (and therefore trees) are
reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Sequence

from .datamodel import Dataset, SchemaViolation

GAIN_TOLERANCE = 1e-12


def entropy(ds: Dataset) -> float:
    """Class impurity -sum p*log2(p) over behavior classes present in ds.

    Absent classes contribute 0 (the 0*log2(0) convention); an empty
    dataset has entropy 0.
    """
    n = len(ds)
    if n == 0:
        return 0.0
    total = 0.0
    for count in ds.class_counts().values():
        p = count / n
        total -= p * math.log2(p)
    return total


def information_gain(ds: Dataset, attr: str) -> float:
    """Expected entropy reduction from partitioning ds by attr's values."""
    if not ds.schema.has_attribute(attr):
        raise SchemaViolation("unknown attribute %r" % attr)
    n = len(ds)
    if n == 0:
        return 0.0
    split_entropy = 0.0
    for val in ds.schema.domain(attr):
        sub = ds.subset(attr, val)
        if len(sub) > 0:
            split_entropy += (len(sub) / n) * entropy(sub)
    gain = entropy(ds) - split_entropy
    # numeric noise can push a zero gain slightly negative
    return max(gain, 0.0)


@dataclass(frozen=True)
class PrecedenceRanking:
    """Attributes ordered by information gain, highest precedence first."""

    entries: tuple[tuple[str, float], ...]
    computed_over: str  # dataset fingerprint

    @property
    def attributes(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.entries)

    @property
    def top(self) -> str:
        return self.entries[0][0]

    def __str__(self) -> str:
        lines = ["rank  attribute            gain"]
        for i, (name, gain) in enumerate(self.entries, start=1):
            lines.append("%-5d %-20s %.6f" % (i, name, gain))
        return "\n".join(lines)


def rank_contexts(ds: Dataset, candidates: Sequence[str]) -> PrecedenceRanking:
    """Rank candidate attributes by gain, descending; ties by name."""
    if len(candidates) != len(set(candidates)):
        raise SchemaViolation("duplicate candidate attributes: %r" % list(candidates))
    gains = [(name, information_gain(ds, name)) for name in candidates]

    def compare(a, b):
        if a[1] > b[1] + GAIN_TOLERANCE:
            return -1
        if b[1] > a[1] + GAIN_TOLERANCE:
            return 1
        return -1 if a[0] < b[0] else (1 if a[0] > b[0] else 0)

    gains.sort(key=cmp_to_key(compare))
    return PrecedenceRanking(tuple(gains), ds.fingerprint())
