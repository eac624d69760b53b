import numpy as np
import pytest

from casimir_iso import cli


@pytest.fixture(autouse=True)
def _seeded_rng():
    np.random.seed(20260810)


def run_cli(argv, capsys):
    """Invoke the CLI in-process, returning (exit_code, stdout, stderr)."""
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def csv_rows(text):
    """Parse CLI CSV output into (header, list-of-field-lists), skipping comments."""
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    if not lines:
        return [], []
    header = lines[0].split(",")
    return header, [ln.split(",") for ln in lines[1:]]
