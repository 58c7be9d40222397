"""
algext.artifacts
~~~~~~~~~~~~~~~~
Versioned JSON artifacts for every serializable extractor, their content
hashes and line-oriented replay.
"""
import hashlib
import json
import logging
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from .constants import ARTIFACT_FORMAT, ARTIFACT_VERSION
from .errors import AlgextError, ArtifactVersionMismatch
from .lowbias_extract import BilinearExtractor, ModMExtractor, StronglyBiasedExtractor
from .pipeline import EXTRACTOR_KINDS, SeededExtractorConfig, seeded_extract
from .rank_extract import DklExtractor, SeededRankFamily

logger = logging.getLogger(__name__)

ARTIFACT_KINDS: Dict[str, Any] = dict(EXTRACTOR_KINDS)
ARTIFACT_KINDS.update({
    "bilinear": BilinearExtractor,
    "strongly-biased": StronglyBiasedExtractor,
    "mod-m": ModMExtractor,
    "dkl": DklExtractor,
    "seeded-family": SeededRankFamily,
})


def artifact_kind(obj: Any) -> str:
    """Registry name of an extractor object.

    :raises TypeError: the object has no artifact form
    """
    kind = getattr(obj, "KIND", "")
    if kind in ARTIFACT_KINDS:
        return kind
    for name, klass in ARTIFACT_KINDS.items():
        if type(obj) is klass:
            return name
    raise TypeError(f"{type(obj).__name__} has no artifact form")


def canonical_json(data: Any) -> bytes:
    return json.dumps(data, sort_keys=True, separators=(",", ":")).encode("utf-8")


def content_hash(data: Any) -> str:
    """Git blob SHA-1 of the canonical JSON encoding of ``data``.
    """
    body = canonical_json(data)
    digest = hashlib.sha1(f"blob {len(body)}\0".encode("utf-8"))
    digest.update(body)
    return digest.hexdigest()


def combined_hash(hashes: Iterable[str]) -> str:
    """One hash over several artifact hashes, independent of their order.
    """
    return content_hash(sorted(hashes))


def to_document(obj: Any) -> Dict[str, Any]:
    return {"format": ARTIFACT_FORMAT, "version": ARTIFACT_VERSION,
            "kind": artifact_kind(obj), "payload": obj.to_json()}


def dump_artifact(obj: Any, path: str) -> str:
    """Writes ``obj`` as an artifact file.

    :param obj: Any extractor listed in ``ARTIFACT_KINDS``
    :param str path: Destination file
    :return: content hash of the artifact document
    :rtype: str
    """
    document = to_document(obj)
    with open(path, "w", encoding="utf-8") as file:
        json.dump(document, file, sort_keys=True, indent=2)
        file.write("\n")
    digest = content_hash(document)
    logger.debug("wrote %s artifact %s to %s", document["kind"], digest, path)
    return digest


def from_document(document: Any, origin: str = "artifact") -> Any:
    """Rebuilds an extractor from an artifact document.

    :raises ArtifactVersionMismatch: wrong format or version, unknown kind,
        or a payload that does not rebuild to the stored data
    """
    if not isinstance(document, dict) or document.get("format") != ARTIFACT_FORMAT:
        raise ArtifactVersionMismatch(f"{origin} is not an {ARTIFACT_FORMAT} document")
    if document.get("version") != ARTIFACT_VERSION:
        raise ArtifactVersionMismatch(
            f"{origin} has version {document.get('version')}, expected {ARTIFACT_VERSION}")
    kind = document.get("kind")
    if kind not in ARTIFACT_KINDS:
        raise ArtifactVersionMismatch(f"{origin} holds unknown kind '{kind}'")
    try:
        return ARTIFACT_KINDS[kind].from_json(document["payload"])
    except (KeyError, TypeError, ValueError, AlgextError) as err:
        raise ArtifactVersionMismatch(f"{origin} does not rebuild: {err}") from err


def load_artifact(path: str) -> Tuple[Any, str]:
    """Reads an artifact file.

    :param str path: Artifact file
    :raises ArtifactVersionMismatch: truncated, foreign or inconsistent file
    :return: the rebuilt extractor and the content hash of the document
    """
    with open(path, "r", encoding="utf-8") as file:
        text = file.read()
    try:
        document = json.loads(text)
    except ValueError as err:
        raise ArtifactVersionMismatch(f"{path} is truncated or not JSON") from err
    return from_document(document, path), content_hash(document)


def _ints(tokens: Sequence[str]) -> List[int]:
    return [int(token) for token in tokens]


def _format(output: Any) -> str:
    if isinstance(output, str):
        return output
    return " ".join(str(int(v)) for v in output)


def replay_line(obj: Any, line: str) -> str:
    """Runs one whitespace-separated input line through ``obj``.

    Field elements and residues are integers; the seeded extractor takes a
    bit string and a seed bit string; a seeded family takes a seed index
    followed by the point.
    """
    tokens = line.split()
    if isinstance(obj, SeededExtractorConfig):
        if len(tokens) != 2:
            raise ValueError(f"expected '<x bits> <seed bits>', got '{line.strip()}'")
        return seeded_extract(obj, tokens[0], tokens[1])
    if isinstance(obj, SeededRankFamily):
        values = _ints(tokens)
        return _format(obj.apply(values[0], values[1:]))
    if isinstance(obj, DklExtractor):
        return _format(obj.evaluate(_ints(tokens)))
    return _format(obj.extract(tuple(_ints(tokens))))


def replay(artifact_path: str, input_path: str) -> List[str]:
    """Outputs of the stored extractor on every non-empty input line.

    :raises ArtifactVersionMismatch: see :func:`load_artifact`
    """
    obj, digest = load_artifact(artifact_path)
    with open(input_path, "r", encoding="utf-8") as file:
        lines = [line for line in file if line.strip()]
    logger.info("replaying %d inputs through artifact %s", len(lines), digest)
    return [replay_line(obj, line) for line in lines]
