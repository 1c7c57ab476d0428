"""Versioned readers for the run-artifact file contract.

Every CSV artifact starts with a comment line `# schema=<name> config=<hash>`;
readers validate the schema tag before touching the payload and raise
SchemaMismatch otherwise.  Inputs are never mutated.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

METRICS_SCHEMA = "metrics-v1"
EPISODES_SCHEMA = "episodes-v1"
RHO_REPORT_SCHEMA = "rho-report-v1"


class SchemaMismatch(Exception):
    """Input file does not carry the expected schema tag."""


def read_csv(path, expected_schema: str) -> dict:
    """Parse a schema-tagged CSV into {column: array-or-list}.

    Numeric columns come back as float arrays; everything else as a list of
    strings.  An empty payload (header only) yields empty columns.
    """
    path = Path(path)
    with open(path) as f:
        first = f.readline().strip()
        if not first.startswith("# schema="):
            raise SchemaMismatch(f"{path}: missing schema header (found {first[:40]!r})")
        tag = first.split()[1].split("=", 1)[1]
        if tag != expected_schema:
            raise SchemaMismatch(f"{path}: expected schema {expected_schema!r}, found {tag!r}")
        reader = csv.reader(f)
        try:
            columns = next(reader)
        except StopIteration:
            raise SchemaMismatch(f"{path}: schema header without a column row")
        rows = [row for row in reader if row]
    out: dict = {}
    for j, name in enumerate(columns):
        values = [row[j] for row in rows]
        try:
            out[name] = np.array([float(v) for v in values])
        except ValueError:
            out[name] = values
    return out


def read_summary(path) -> dict:
    path = Path(path)
    with open(path) as f:
        doc = json.load(f)
    for key in ("run_id", "env", "seeds"):
        if key not in doc:
            raise SchemaMismatch(f"{path}: not a run summary (missing {key!r})")
    return doc


def find_seed_files(run_dir, name: str) -> list:
    """All per-seed artifact files of one kind under a run directory."""
    run_dir = Path(run_dir)
    files = sorted(run_dir.glob(f"seed*/{name}"))
    if not files and (run_dir / name).exists():
        files = [run_dir / name]
    return files
