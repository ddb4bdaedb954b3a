"""N-free posets, orthosets and the logics of their orthoclosed sets."""

import json

from ._core import *  # noqa: F401,F403
from ._core import analyze_json, census_run_json, revalidate_report_json


def analyze(poset, timing=False):
    """Full predicate report for ``poset`` as a dict (see docs/report.schema.json)."""
    return json.loads(analyze_json(poset, timing))


def census_run(max_n, workers=1):
    """Per-size census summaries as a list of dicts."""
    return json.loads(census_run_json(max_n, workers))


def revalidate_report(report, poset):
    """Empty string if every witness in ``report`` re-checks against ``poset``."""
    return revalidate_report_json(json.dumps(report), poset)
