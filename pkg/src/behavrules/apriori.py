"""Apriori class-association-rule baseline plus a post-hoc redundancy filter.

Itemsets range over context conditions only; behavior classes appear only
as rule consequents, which keeps the rule space directly comparable with
the tree miner's output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .datamodel import Condition, ConfigError, Dataset, Rule


@dataclass(frozen=True)
class FrequentItemset:
    items: frozenset[Condition]
    support: int  # number of instances matching every condition


def _coverage(ds: Dataset, items: Iterable[Condition]) -> int:
    conditions = list(items)
    return sum(1 for inst in ds.instances if inst.matches(conditions))


def mine_frequent(ds: Dataset, min_support: int = 1) -> list[FrequentItemset]:
    """Level-wise frequent itemset mining over context conditions.

    Candidates joining two conditions on the same attribute are skipped
    outright (single-valued nominal data gives them zero coverage), and
    any candidate with an infrequent subset is pruned before counting.
    """
    if min_support < 1:
        raise ConfigError("min_support must be >= 1, got %d" % min_support)

    singles: list[tuple[Condition, ...]] = []
    for attr, domain in ds.schema.attributes:
        for val in domain:
            singles.append(((attr, val),))

    # itemsets are kept as sorted condition tuples and each level is kept
    # sorted, so the prefix join and subset lookups line up
    singles.sort()
    result: list[FrequentItemset] = []
    level = []
    for itemset in singles:
        cov = _coverage(ds, itemset)
        if cov >= min_support:
            level.append(itemset)
            result.append(FrequentItemset(frozenset(itemset), cov))

    while level:
        level_set = set(level)
        candidates = []
        for i, left in enumerate(level):
            for right in level[i + 1:]:
                if left[:-1] != right[:-1]:
                    break  # sorted level: no further shared prefix
                if left[-1][0] == right[-1][0]:
                    continue  # two values of one attribute never co-occur
                candidate = left + (right[-1],)
                if all(
                    candidate[:j] + candidate[j + 1:] in level_set
                    for j in range(len(candidate))
                ):
                    candidates.append(candidate)
        level = []
        for itemset in sorted(candidates):
            cov = _coverage(ds, itemset)
            if cov >= min_support:
                level.append(itemset)
                result.append(FrequentItemset(frozenset(itemset), cov))
    return result


def generate_cars(
    ds: Dataset,
    frequent: list[FrequentItemset],
    threshold: Fraction,
    min_support: int = 1,
) -> list[Rule]:
    """Emit every class-association rule meeting support and confidence.

    Complete over (frequent itemset) x (behavior class); output order is
    itemset size, then sorted conditions, then class label.
    """
    ordered = sorted(
        frequent, key=lambda fi: (len(fi.items), tuple(sorted(fi.items)))
    )
    rules: list[Rule] = []
    for fi in ordered:
        conditions = sorted(fi.items)
        class_hits: dict[str, int] = {}
        for inst in ds.instances:
            if inst.matches(conditions):
                class_hits[inst.behavior] = class_hits.get(inst.behavior, 0) + 1
        for cls in sorted(ds.schema.behavior_classes):
            support = class_hits.get(cls, 0)
            if support >= min_support and Fraction(support, fi.support) >= threshold:
                rules.append(Rule(fi.items, cls, support, fi.support))
    return rules


def mine(ds: Dataset, threshold: Fraction, min_support: int = 1) -> list[Rule]:
    """Frequent itemsets plus rule generation in one call."""
    return generate_cars(ds, mine_frequent(ds, min_support), threshold, min_support)


def filter_redundant(rules: list[Rule]) -> list[Rule]:
    """Drop every rule that strictly extends another rule with the same consequent.

    Input is assumed threshold-valid already; only minimal-antecedent rules
    survive, in their original order.
    """
    kept = []
    for rule in rules:
        shadowed = any(
            other.consequent == rule.consequent and other.antecedent < rule.antecedent
            for other in rules
        )
        if not shadowed:
            kept.append(rule)
    return kept
