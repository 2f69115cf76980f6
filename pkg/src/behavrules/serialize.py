"""File formats: canonical dataset CSV, rule text, and JSON-lines rules."""

from __future__ import annotations

import csv
import io
import json

from .datamodel import ContextSchema, Dataset, Instance, Rule, SchemaViolation

BEHAVIOR_COLUMN = "behavior"


def dataset_to_csv(ds: Dataset) -> str:
    """Canonical dataset file: context columns plus a trailing behavior column."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    attrs = list(ds.schema.attribute_names)
    writer.writerow(attrs + [BEHAVIOR_COLUMN])
    for inst in ds.instances:
        writer.writerow([inst.values[a] for a in attrs] + [inst.behavior])
    return buf.getvalue()


def dataset_from_csv(text: str) -> Dataset:
    """Rebuild a dataset; domains take first-observation order."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise SchemaViolation("dataset file is empty") from None
    if BEHAVIOR_COLUMN not in header:
        raise SchemaViolation("dataset file lacks a %r column" % BEHAVIOR_COLUMN)
    behavior_idx = header.index(BEHAVIOR_COLUMN)
    attrs = [c for i, c in enumerate(header) if i != behavior_idx]
    rows = []
    domains: dict[str, list[str]] = {a: [] for a in attrs}
    classes: list[str] = []
    for row in reader:
        if not row:
            continue
        if len(row) != len(header):
            raise SchemaViolation("row has %d cells, expected %d" % (len(row), len(header)))
        behavior = row[behavior_idx]
        values = {}
        for i, cell in enumerate(row):
            if i == behavior_idx:
                continue
            attr = attrs[i] if i < behavior_idx else attrs[i - 1]
            values[attr] = cell
            if cell not in domains[attr]:
                domains[attr].append(cell)
        if behavior not in classes:
            classes.append(behavior)
        rows.append((values, behavior))
    if not rows:
        raise SchemaViolation("dataset file has no rows")
    schema = ContextSchema.create([(a, domains[a]) for a in attrs], classes)
    return Dataset.create(schema, (Instance(v, b) for v, b in rows))


def rules_to_text(rules: list[Rule]) -> str:
    return "\n".join(str(r) for r in rules) + ("\n" if rules else "")


def rules_to_jsonl(rules: list[Rule]) -> str:
    lines = []
    for rule in rules:
        lines.append(json.dumps({
            "antecedent": ["%s=%s" % c for c in rule.sort_antecedent],
            "consequent": rule.consequent,
            "support": rule.support,
            "confidence_num": rule.confidence.numerator,
            "confidence_den": rule.confidence.denominator,
        }, sort_keys=True))
    return "\n".join(lines) + ("\n" if lines else "")
