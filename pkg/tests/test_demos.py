import runpy

import pytest

from conftest import PATTERN_DIR

DEMOS = sorted((PATTERN_DIR.parent / "demos").glob("*.py"))


@pytest.mark.parametrize("script", DEMOS, ids=[d.stem for d in DEMOS])
def test_demo_runs(script, capsys):
    runpy.run_path(str(script), run_name="__main__")
    assert capsys.readouterr().out
