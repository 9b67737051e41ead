"""Report emission: human-diffable CSV rows plus a machine-readable JSON
summary for CI gating.

Floats are written in shortest round-trip form so identical runs produce
byte-identical files; the wall-clock duration column is the only
nondeterministic field.
"""

import csv
import io
import json
from dataclasses import dataclass


@dataclass(frozen=True)
class ReportRow:
    """One verified case: what was measured, against what, and the verdict."""

    experiment: str
    inputs: str
    measured: float
    reference: float
    abs_error: float
    passed: bool
    duration_s: float


def format_value(v):
    if isinstance(v, bool):
        return "pass" if v else "fail"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_csv(path, header, rows):
    with io.open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v) for v in row])


def write_summary(path, summary):
    with io.open(path, "w", encoding="utf-8") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")


def summarize(experiment, rows, passed_flags, worst_abs_error, extra=None):
    summary = {
        "experiment": experiment,
        "rows": len(rows),
        "passed": int(sum(passed_flags)),
        "failed": int(len(rows) - sum(passed_flags)),
        "worst_abs_error": worst_abs_error,
    }
    if extra:
        summary.update(extra)
    return summary
