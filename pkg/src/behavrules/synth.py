"""Seeded synthetic context logs with planted rules.

Label quotas are allocated exactly (counts, then a seeded shuffle) rather
than sampled independently, so each planted rule's realized confidence
stays within 2 percentage points of its target even at small sizes.

PRNG: python's random.Random (Mersenne Twister, MT19937), seeded per call;
kept stable so identical arguments always reproduce the same dataset.
"""

from __future__ import annotations

import csv
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .datamodel import Condition, ContextSchema, Dataset, Instance
from .ingest import (
    ACCEPT,
    BEHAVIOR_CLASSES,
    DAY_NAMES,
    MISSED,
    OUTGOING,
    REJECT,
    TIME_ATTRIBUTE,
)

CONFIDENCE_SLACK = Fraction(2, 100)


class GenerationError(ValueError):
    """Raised when the requested quotas cannot be realized."""


@dataclass(frozen=True)
class PlantedRuleSpec:
    antecedent: tuple[Condition, ...]
    consequent: str
    target_confidence: Fraction
    weight: float  # fraction of all instances that match the antecedent

    def __post_init__(self):
        if not (0 < self.target_confidence <= 1):
            raise GenerationError(
                "target confidence must be in (0, 1], got %s" % self.target_confidence
            )
        if self.weight <= 0:
            raise GenerationError("weight must be positive, got %s" % self.weight)


def generate(
    schema: ContextSchema,
    specs: Iterable[PlantedRuleSpec],
    n: int,
    seed: int,
) -> Dataset:
    """Deterministic dataset of n instances realizing the planted rules.

    Instances matching a spec's antecedent get the consequent class for an
    exact quota of round(target * quota) of them; remaining instances draw
    uniform context values that match no spec antecedent, with uniform
    classes.
    """
    specs = list(specs)
    if n < 1:
        raise GenerationError("n must be >= 1, got %d" % n)
    for spec in specs:
        for attr, val in spec.antecedent:
            if val not in schema.domain(attr):
                raise GenerationError("spec condition %s=%s not in schema" % (attr, val))
        if spec.consequent not in schema.behavior_classes:
            raise GenerationError("spec consequent %r not in schema" % spec.consequent)

    rng = random.Random(seed)
    classes = sorted(schema.behavior_classes)
    quotas = [round(spec.weight * n) for spec in specs]
    if sum(quotas) > n:
        raise GenerationError(
            "quotas sum to %d but only %d instances requested" % (sum(quotas), n)
        )
    if any(q == 0 for q in quotas):
        raise GenerationError("a planted rule's quota rounded to zero; raise n or weight")

    instances: list[Instance] = []
    for spec, quota in zip(specs, quotas):
        positives = round(float(spec.target_confidence) * quota)
        realized = Fraction(positives, quota)
        if abs(realized - spec.target_confidence) > CONFIDENCE_SLACK:
            raise GenerationError(
                "quota %d too small to realize confidence %s within 2pp"
                % (quota, spec.target_confidence)
            )
        fixed = dict(spec.antecedent)
        others = [c for c in classes if c != spec.consequent]
        foreign = [s.antecedent for s in specs if s is not spec]
        for i in range(quota):
            for _attempt in range(10000):
                values = {}
                for attr, domain in schema.attributes:
                    values[attr] = fixed.get(attr) or rng.choice(domain)
                # overlap with another planted antecedent would skew its
                # realized confidence
                probe = Instance(values, spec.consequent)
                if not any(probe.matches(a) for a in foreign):
                    break
            else:
                raise GenerationError(
                    "could not draw instances for %s avoiding other planted antecedents"
                    % (spec.antecedent,)
                )
            if i < positives:
                behavior = spec.consequent
            else:
                behavior = rng.choice(others) if others else spec.consequent
            instances.append(Instance(values, behavior))

    antecedents = [spec.antecedent for spec in specs]
    for _ in range(n - sum(quotas)):
        for _attempt in range(10000):
            values = {
                attr: rng.choice(domain) for attr, domain in schema.attributes
            }
            probe = Instance(values, classes[0])
            if not any(probe.matches(a) for a in antecedents):
                break
        else:
            raise GenerationError(
                "could not draw background instances avoiding the planted antecedents"
            )
        instances.append(Instance(values, rng.choice(classes)))

    rng.shuffle(instances)
    return Dataset.create(schema, instances)


# --- emitting datasets in the raw call-log format the ingest module reads ---

_BASE_DATES = {  # a fixed week: 2004-09-13 was a Monday
    day: "2004-09-%02d" % (13 + i) for i, day in enumerate(DAY_NAMES)
}
_LABEL_RE = re.compile(r"^(\w+)\[(\d{2}):(\d{2})-\d{2}:\d{2}\]$")

_BEHAVIOR_TO_CALL = {
    ACCEPT: ("incoming", "60"),
    REJECT: ("incoming", "0"),
    MISSED: ("missed", "0"),
    OUTGOING: ("outgoing", "60"),
}


def _timestamp_for(label: str) -> str:
    """Invert a time-segment label to a concrete instant inside it."""
    match = _LABEL_RE.match(label)
    if match:
        day, hh, mm = match.group(1), match.group(2), match.group(3)
        if day in _BASE_DATES:
            return "%s %s:%s:00" % (_BASE_DATES[day], hh, mm)
    if label in _BASE_DATES:
        return "%s 12:00:00" % _BASE_DATES[label]
    raise GenerationError("cannot place a timestamp inside segment %r" % label)


def write_log(ds: Dataset, path: str, delimiter: str = ",") -> None:
    """Write ds as a raw call log (timestamp/type/duration + context columns).

    Behavior classes must be the four call classes so they survive the
    round trip through behavior derivation. A "Time" attribute, when
    present, is inverted to timestamps inside its segment; otherwise rows
    get a fixed placeholder timestamp.
    """
    unknown = set(ds.schema.behavior_classes) - set(BEHAVIOR_CLASSES)
    if unknown:
        raise GenerationError(
            "classes %r cannot be encoded as call records" % sorted(unknown)
        )
    context_cols = [a for a in ds.schema.attribute_names if a != TIME_ATTRIBUTE]
    has_time = TIME_ATTRIBUTE in ds.schema.attribute_names
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, delimiter=delimiter)
        writer.writerow(["timestamp", "call_type", "duration"] + context_cols)
        for inst in ds.instances:
            if has_time:
                ts = _timestamp_for(inst.values[TIME_ATTRIBUTE])
            else:
                ts = "2004-09-13 12:00:00"
            call_type, duration = _BEHAVIOR_TO_CALL[inst.behavior]
            writer.writerow(
                [ts, call_type, duration] + [inst.values[c] for c in context_cols]
            )
