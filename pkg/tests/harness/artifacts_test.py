"""
Tests for extractor artifacts and replay
"""

import json

import pytest
import algext
from algext.artifacts import (artifact_kind, combined_hash, content_hash,
                              dump_artifact, load_artifact, replay)
from algext.lowbias_extract import ModMExtractor
from algext.pipeline import build_ext11, build_seeded_extractor


@pytest.fixture
def ext11_artifact(tmp_path, f101):
    """Relaxed Ext11 over F_101 stored as an artifact.
    """
    path = str(tmp_path / "ext11.json")
    dump_artifact(build_ext11(f101, 1, 1, relax=True), path)
    return path


def write_lines(tmp_path, name, lines):
    path = tmp_path / name
    path.write_text("".join(f"{line}\n" for line in lines), encoding="utf-8")
    return str(path)


def test_dump_and_load(ext11_artifact):
    """Checks that a stored extractor reloads with a stable hash
    """
    ext, digest = load_artifact(ext11_artifact)
    assert artifact_kind(ext) == "ext11"
    assert ext.m_out == 3
    _, again = load_artifact(ext11_artifact)
    assert digest == again
    assert len(digest) == 40


def test_replay(tmp_path, ext11_artifact):
    """Checks replayed outputs, skipping blank lines
    """
    inputs = write_lines(tmp_path, "inputs.txt", ["3", "", "13"])
    assert replay(ext11_artifact, inputs) == ["011", "101"]


def test_replay_mod_m(tmp_path):
    """Checks replay of a tuple-valued extractor
    """
    path = str(tmp_path / "modm.json")
    dump_artifact(ModMExtractor(10, 2, 3), path)
    inputs = write_lines(tmp_path, "inputs.txt", ["4 7", "9 9"])
    assert replay(path, inputs) == ["4 1", "9 0"]


def test_replay_seeded(tmp_path):
    """Checks replay of the seeded extractor on bit strings
    """
    path = str(tmp_path / "seeded.json")
    dump_artifact(build_seeded_extractor(10, 2, 0.25), path)
    inputs = write_lines(tmp_path, "inputs.txt", ["0" * 10 + " " + "0" * 20])
    assert replay(path, inputs) == ["0000"]


def test_truncated_artifact(tmp_path, ext11_artifact):
    """Checks that a truncated file raises ArtifactVersionMismatch
    """
    with open(ext11_artifact, "r", encoding="utf-8") as file:
        text = file.read()
    truncated = tmp_path / "truncated.json"
    truncated.write_text(text[:len(text) // 2], encoding="utf-8")
    with pytest.raises(algext.errors.ArtifactVersionMismatch) as excinfo:
        load_artifact(str(truncated))
    assert excinfo.value.args[1] == 802


def test_version_mismatch(tmp_path, ext11_artifact):
    """Checks that another artifact version is refused
    """
    with open(ext11_artifact, "r", encoding="utf-8") as file:
        document = json.load(file)
    document["version"] = 2
    future = tmp_path / "future.json"
    future.write_text(json.dumps(document), encoding="utf-8")
    with pytest.raises(algext.errors.ArtifactVersionMismatch):
        load_artifact(str(future))


def test_foreign_document(tmp_path):
    """Checks that JSON of another format is refused
    """
    other = tmp_path / "other.json"
    other.write_text(json.dumps({"kind": "ext11"}), encoding="utf-8")
    with pytest.raises(algext.errors.ArtifactVersionMismatch):
        load_artifact(str(other))


def test_tampered_payload(tmp_path, ext11_artifact):
    """Checks that a payload which rebuilds differently is refused
    """
    with open(ext11_artifact, "r", encoding="utf-8") as file:
        document = json.load(file)
    document["payload"]["derived"]["m_out"] = 5
    tampered = tmp_path / "tampered.json"
    tampered.write_text(json.dumps(document), encoding="utf-8")
    with pytest.raises(algext.errors.ArtifactVersionMismatch):
        load_artifact(str(tampered))


def test_hashes():
    """Checks that hashes ignore key order and artifact order
    """
    assert content_hash({"a": 1, "b": [2]}) == content_hash({"b": [2], "a": 1})
    assert content_hash({"a": 1}) != content_hash({"a": 2})
    first, second = content_hash([1]), content_hash([2])
    assert combined_hash([first, second]) == combined_hash([second, first])


def test_no_artifact_form():
    """Checks that arbitrary objects have no artifact kind
    """
    with pytest.raises(TypeError):
        artifact_kind(object())
