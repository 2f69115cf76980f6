import pytest

from behavrules.datamodel import SchemaViolation
from behavrules.fixtures import demo_dataset
from behavrules.serialize import (
    dataset_from_csv,
    dataset_to_csv,
    rules_to_jsonl,
    rules_to_text,
)


class TestDatasetCsv:
    def test_round_trip(self):
        ds = demo_dataset()
        text = dataset_to_csv(ds)
        back = dataset_from_csv(text)
        assert back == ds
        assert dataset_to_csv(back) == text

    def test_header_layout(self):
        header = dataset_to_csv(demo_dataset()).splitlines()[0]
        assert header == "Activity,Relation,behavior"

    def test_empty_text_rejected(self):
        with pytest.raises(SchemaViolation):
            dataset_from_csv("")

    def test_missing_behavior_column_rejected(self):
        with pytest.raises(SchemaViolation):
            dataset_from_csv("Activity,Relation\nMeeting,Boss\n")

    def test_header_only_rejected(self):
        with pytest.raises(SchemaViolation):
            dataset_from_csv("Activity,behavior\n")

    def test_ragged_row_rejected(self):
        with pytest.raises(SchemaViolation):
            dataset_from_csv("Activity,behavior\nMeeting,Accept,extra\n")


class TestRuleRendering:
    def test_empty_rule_lists_render_empty(self):
        assert rules_to_text([]) == ""
        assert rules_to_jsonl([]) == ""
