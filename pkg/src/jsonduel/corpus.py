"""Seed corpus: historical bug-triggering test scripts that drive generation.

Seeds come either from mining a directory for `.t` files whose names
carry an issue keyword, or from an explicit JSON manifest. Seeds that
fail to parse are reported and excluded, never silently skipped; a
corpus with no usable seeds is an error because the pipeline cannot
run without them.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from pathlib import Path

from .tdsl import DslError, Script, parse_script

SEED_EXTENSION = ".t"


class CorpusError(Exception):
    pass


class EmptyCorpusError(CorpusError):
    pass


class ManifestFormatError(CorpusError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {col})"
        super().__init__(message)
        self.line = line
        self.col = col


@dataclass(frozen=True)
class SeedTest:
    id: str
    source_path: Path
    issue_tag: str | None
    script_text: str
    script: Script


@dataclass(frozen=True)
class SeedLoadError:
    path: Path
    error: str


@dataclass(frozen=True)
class Corpus:
    seeds: tuple[SeedTest, ...]
    manifest_hash: str

    def __len__(self) -> int:
        return len(self.seeds)


def _hash_seeds(seeds: list[SeedTest]) -> str:
    digest = hashlib.sha256()
    for seed in seeds:
        data = seed.script_text.encode("utf-8")
        digest.update(len(data).to_bytes(8, "big"))
        digest.update(data)
    return digest.hexdigest()


def _issue_tag(filename: str, keyword: str) -> str | None:
    match = re.search(re.escape(keyword) + r"[0-9]*", filename, re.IGNORECASE)
    return match.group().lower() if match else None


def _load_seed(seed_id: str, path: Path, keyword: str) -> SeedTest:
    text = path.read_text(encoding="utf-8")
    script = parse_script(text)
    return SeedTest(seed_id, path, _issue_tag(path.name, keyword), text, script)


def _build(entries: list[tuple[str, Path]], keyword: str) -> tuple[Corpus, list[SeedLoadError]]:
    seeds: list[SeedTest] = []
    errors: list[SeedLoadError] = []
    for seed_id, path in entries:
        try:
            seeds.append(_load_seed(seed_id, path, keyword))
        except DslError as exc:
            errors.append(SeedLoadError(path, str(exc)))
    seeds.sort(key=lambda s: s.id)
    return Corpus(tuple(seeds), _hash_seeds(seeds)), errors


def mine_seeds(root: Path | str, keyword: str) -> tuple[Corpus, list[SeedLoadError]]:
    """Collect every `.t` file under `root` whose name contains `keyword`.

    Matching is a case-insensitive substring test on the base filename.
    Returns the corpus (ordered by id) and the list of files that
    matched but failed to parse.
    """
    if not keyword:
        raise CorpusError("mining keyword must be non-empty")
    root = Path(root)
    if not root.is_dir():
        raise CorpusError(f"corpus root is not a readable directory: {root}")
    needle = keyword.lower()
    entries = sorted(
        (path.relative_to(root).with_suffix("").as_posix(), path)
        for path in root.rglob(f"*{SEED_EXTENSION}")
        if needle in path.name.lower() and path.is_file()
    )
    if not entries:
        raise EmptyCorpusError(
            f"no seed files matching '*{keyword}*{SEED_EXTENSION}' under {root}"
        )
    corpus, errors = _build(entries, keyword)
    if not corpus.seeds:
        raise EmptyCorpusError(
            f"all {len(errors)} matching seed files under {root} failed to parse"
        )
    return corpus, errors


def load_corpus(manifest: Path | str) -> tuple[Corpus, list[SeedLoadError]]:
    """Load seeds from a JSON manifest: {"seeds": [{"id", "path"}, ...]}.

    Paths are resolved relative to the manifest's directory. A listed
    file that does not exist is an error; a file that exists but fails
    to parse is reported and excluded.
    """
    manifest = Path(manifest)
    try:
        data = json.loads(manifest.read_text(encoding="utf-8"))
    except OSError as exc:
        raise CorpusError(f"cannot read manifest {manifest}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ManifestFormatError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or not isinstance(data.get("seeds"), list):
        raise ManifestFormatError('manifest must be an object with a "seeds" list')

    entries: list[tuple[str, Path]] = []
    seen: set[str] = set()
    for item in data["seeds"]:
        if not isinstance(item, dict) or "id" not in item or "path" not in item:
            raise ManifestFormatError(f'seed entries need "id" and "path": {item!r}')
        seed_id = str(item["id"])
        if seed_id in seen:
            raise CorpusError(f"duplicate seed id '{seed_id}' in manifest")
        seen.add(seed_id)
        path = manifest.parent / item["path"]
        if not path.is_file():
            raise CorpusError(f"seed file not found: {path}")
        entries.append((seed_id, path))
    if not entries:
        raise EmptyCorpusError(f"manifest {manifest} lists no seeds")
    corpus, errors = _build(entries, "issue")
    if not corpus.seeds:
        raise EmptyCorpusError(f"all seeds in manifest {manifest} failed to parse")
    return corpus, errors


def write_manifest(corpus: Corpus, path: Path | str) -> None:
    """Write a manifest for a mined corpus, with paths relative to it."""
    path = Path(path)
    entries = []
    for seed in corpus.seeds:
        try:
            rel = seed.source_path.resolve().relative_to(path.resolve().parent)
            entry_path = rel.as_posix()
        except ValueError:
            entry_path = str(seed.source_path.resolve())
        entries.append({"id": seed.id, "path": entry_path})
    path.write_text(json.dumps({"seeds": entries}, indent=2) + "\n", encoding="utf-8")
