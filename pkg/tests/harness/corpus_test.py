"""
Tests for the shipped corpus
"""

import json
import shutil

import pytest
import algext
from algext.corpus import CORPUS_DIR, CorpusEntry, list_entries, load_entry


def test_list_entries():
    """Checks that the shipped entries are listed in order
    """
    ids = list_entries()
    assert len(ids) == 10
    assert ids == sorted(ids)
    assert "parabola" in ids
    assert "axes_union" in ids


def test_entries_load():
    """Checks that every shipped entry honors its degree budget
    """
    for entry_id in list_entries():
        entry = load_entry(entry_id)
        assert entry.id == entry_id
        assert entry.source_spec().d == entry.d


def test_unknown_entry():
    """Checks that an unknown id raises ConfigError
    """
    with pytest.raises(algext.errors.ConfigError) as excinfo:
        load_entry("moebius")
    assert excinfo.value.args[1] == 801


def test_corrupted_entry(tmp_path):
    """Checks that a truncated corpus file is reported as corrupted
    """
    (tmp_path / "broken.json").write_text("{\"id\": \"bro", encoding="utf-8")
    with pytest.raises(algext.errors.ConfigError) as excinfo:
        load_entry("broken", str(tmp_path))
    assert "corrupted" in excinfo.value.message


def test_id_must_match_file(tmp_path):
    """Checks that the declared id must equal the file stem
    """
    shutil.copy(f"{CORPUS_DIR}/parabola.json", tmp_path / "renamed.json")
    with pytest.raises(algext.errors.ConfigError):
        load_entry("renamed", str(tmp_path))


def test_missing_corpus(tmp_path):
    """Checks that a missing corpus directory raises ConfigError
    """
    with pytest.raises(algext.errors.ConfigError):
        list_entries(str(tmp_path / "nowhere"))


def test_entry_json(parabola):
    """Checks that an entry survives its JSON form
    """
    data = json.loads(json.dumps(parabola.to_json()))
    again = CorpusEntry.from_json(data)
    assert (again.n, again.k, again.d) == (parabola.n, parabola.k, parabola.d)
    assert again.map.components == parabola.map.components
