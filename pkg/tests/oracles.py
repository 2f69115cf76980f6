"""Independent reference implementations used to check the miners.

Nothing here shares code with the package's mining paths: rules are found
by exhaustive enumeration with direct counting, with no candidate pruning.
"""

import itertools
import random
from fractions import Fraction

from behavrules.datamodel import ContextSchema, Dataset, Instance, Rule


def brute_force_cars(ds, threshold, min_support=1):
    """Every rule over every condition subset and class, by direct counting."""
    rules = set()
    attrs = ds.schema.attributes
    for k in range(1, len(attrs) + 1):
        for chosen in itertools.combinations(attrs, k):
            for values in itertools.product(*(domain for _, domain in chosen)):
                conditions = tuple(
                    (name, val) for (name, _), val in zip(chosen, values)
                )
                coverage = sum(1 for i in ds.instances if i.matches(conditions))
                if coverage == 0:
                    continue
                per_class = {}
                for inst in ds.instances:
                    if inst.matches(conditions):
                        per_class[inst.behavior] = per_class.get(inst.behavior, 0) + 1
                for cls, support in per_class.items():
                    if support >= min_support and coverage >= min_support:
                        if Fraction(support, coverage) >= threshold:
                            rules.add((frozenset(conditions), cls, support, coverage))
    return rules


def random_dataset(rng: random.Random, max_attrs=4, max_vals=4, max_inst=12):
    """Small random categorical dataset for property checks."""
    n_attrs = rng.randint(1, max_attrs)
    attrs = []
    for i in range(n_attrs):
        n_vals = rng.randint(1, max_vals)
        attrs.append(("a%d" % i, ["v%d" % j for j in range(n_vals)]))
    n_classes = rng.randint(2, 3)
    classes = ["c%d" % j for j in range(n_classes)]
    schema = ContextSchema.create(attrs, classes)
    n = rng.randint(1, max_inst)
    instances = [
        Instance(
            {name: rng.choice(domain) for name, domain in schema.attributes},
            rng.choice(classes),
        )
        for _ in range(n)
    ]
    return Dataset.create(schema, instances)


def example_tree():
    """Hand-built tree mirroring the worked three-context example.

    Root splits on Activity; the Meeting branch splits on Relation (its
    Friend child repeats the parent's class and is REDUNDANT), the Lunch
    branch sits below an 80% threshold and splits on Relation as well.
    Node ids are chosen so rule-producing nodes are 2, 3, 4, 5 and 7.
    """
    from behavrules.agt import AgtNode

    lecture = AgtNode(2, ("Activity", "Lecture"), "Reject", 100, 100)
    meeting = AgtNode(3, ("Activity", "Meeting"), "Reject", 85, 100,
                      split_attribute="Relation")
    lunch_friend = AgtNode(4, ("Relation", "Friend"), "Accept", 92, 100)
    lunch_unknown = AgtNode(5, ("Relation", "Unknown"), "Missed", 95, 100)
    meeting_friend = AgtNode(6, ("Relation", "Friend"), "Reject", 90, 100,
                             redundant=True)
    meeting_boss = AgtNode(7, ("Relation", "Boss"), "Accept", 100, 100)
    lunch = AgtNode(8, ("Activity", "Lunch"), "Accept", 55, 100,
                    split_attribute="Relation")
    meeting.children = [meeting_friend, meeting_boss]
    lunch.children = [lunch_friend, lunch_unknown]
    root = AgtNode(1, None, "Reject", 150, 300, split_attribute="Activity")
    root.children = [lecture, meeting, lunch]
    return root


def rule_keys(rules):
    """Comparable identity tuples for a list of package Rule objects."""
    return {(r.antecedent, r.consequent, r.support, r.coverage) for r in rules}
