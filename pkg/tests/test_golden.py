"""Byte-exact comparison of endo-ring JSON envelopes against committed
golden files.  Any change to serialization, check wording, artifact
layout, or the mathematics itself shows up here first."""

import pathlib
import subprocess
import sys

import pytest

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"

CASES = {
    "p1-q2-l3": ["--q", "2", "--ell", "3"],
    "p2-q2-l7": ["--q", "2", "--ell", "7"],
    "p3-q8-l3": ["--q", "8", "--ell", "3"],
    "p4-q4-l5": ["--q", "4", "--ell", "5"],
    "p5-q3-l5": ["--q", "3", "--ell", "5"],
    "u4-q2-l5-d2": ["--q", "2", "--ell", "5", "--n", "4", "--d", "2"],
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_endo_ring(name):
    expected = (GOLDEN_DIR / f"{name}.json").read_bytes()
    proc = subprocess.run(
        [sys.executable, "-m", "cuspcenter", "endo-ring"]
        + CASES[name]
        + ["--out", "json"],
        capture_output=True,
    )
    assert proc.returncode == 0, proc.stderr.decode()[-1000:]
    assert proc.stdout == expected
