import runpy
from pathlib import Path

import pytest

GALLERY = sorted((Path(__file__).parent.parent / "gallery").glob("*.py"))


@pytest.mark.parametrize("script", GALLERY, ids=[p.stem for p in GALLERY])
def test_gallery_script_runs(script, capsys):
    runpy.run_path(str(script), run_name="__main__")
    out = capsys.readouterr().out
    assert out and "False" not in out
