"""Configuration files: JSON (preferred) and CSV, both round-trip safe.

A file carries n, the points (Pauli letter strings on output; letter or
bit strings on input), the contexts as index lists, and optionally one
sign per context.  Explicit signs are verified against the canonical
observables on load unless the file sets ``trust_signs``, which marks
sign patterns produced under a different operator labeling; such files
are taken at face value as parity systems.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import List, Optional, Sequence, Union

from .contextuality import (InvalidConfigurationError, QuantumConfiguration,
                            build_system)
from .pauli import PauliObservable, parse_pauli

FORMAT_NAME = "quantum-configuration"
FORMAT_VERSION = 1

PathLike = Union[str, Path]


def _computed_signs(config: QuantumConfiguration) -> List[int]:
    e = build_system(config).e
    return [-1 if e[i] else 1 for i in range(len(e))]


def _assemble(n: int, point_texts: Sequence[str], contexts, signs,
              trust_signs: bool, source: str) -> QuantumConfiguration:
    try:
        points = tuple(parse_pauli(t, n).coords for t in point_texts)
    except ValueError as exc:
        raise InvalidConfigurationError(str(exc)) from None
    contexts = tuple(tuple(int(j) for j in ctx) for ctx in contexts)
    if signs is None:
        if trust_signs:
            raise InvalidConfigurationError(
                "trust_signs is set but the file carries no signs")
        return QuantumConfiguration(n=n, points=points, contexts=contexts,
                                    source=source)
    signs = tuple(int(sv) for sv in signs)
    if trust_signs:
        return QuantumConfiguration(n=n, points=points, contexts=contexts,
                                    source=source, signs=signs)
    config = QuantumConfiguration(n=n, points=points, contexts=contexts,
                                  source=source)
    recomputed = tuple(_computed_signs(config))
    if recomputed != signs:
        bad = next(i for i, (x, y) in enumerate(zip(recomputed, signs)) if x != y)
        raise InvalidConfigurationError(
            f"sign of context {bad} is {signs[bad]} in the file but the "
            f"observables give {recomputed[bad]}; set trust_signs for "
            f"non-canonical labelings")
    return config


def _load_json(path: Path) -> QuantumConfiguration:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidConfigurationError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise InvalidConfigurationError(f"{path}: expected a JSON object")
    if data.get("format") != FORMAT_NAME:
        raise InvalidConfigurationError(f"{path}: missing or wrong format marker")
    if data.get("version") != FORMAT_VERSION:
        raise InvalidConfigurationError(f"{path}: unsupported version")
    try:
        n = int(data["n"])
        point_texts = list(data["points"])
        contexts = list(data["contexts"])
    except (KeyError, TypeError) as exc:
        raise InvalidConfigurationError(f"{path}: malformed field ({exc})") from None
    points = []
    for entry in point_texts:
        if isinstance(entry, (list, tuple)):
            entry = "".join(str(int(b)) for b in entry)
        points.append(str(entry))
    return _assemble(n, points, contexts, data.get("signs"),
                     bool(data.get("trust_signs", False)),
                     str(data.get("source", "imported")))


def _load_csv(path: Path) -> QuantumConfiguration:
    n = None
    source = "imported"
    trust = False
    points: List[str] = []
    contexts: List[List[int]] = []
    signs: List[Optional[int]] = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["record", "field1", "field2", "field3"]:
            raise InvalidConfigurationError(f"{path}: missing CSV header")
        saw_format = False
        for row in reader:
            if not row or all(not cell for cell in row):
                continue
            if len(row) != 4:
                raise InvalidConfigurationError(f"{path}: malformed row {row!r}")
            kind, f1, f2, f3 = row
            if kind == "format":
                if f1 != FORMAT_NAME or f2 != str(FORMAT_VERSION):
                    raise InvalidConfigurationError(f"{path}: wrong format marker")
                saw_format = True
            elif kind == "n":
                n = int(f1)
            elif kind == "source":
                source = f1
            elif kind == "trust_signs":
                trust = f1.strip().lower() in ("true", "1", "yes")
            elif kind == "point":
                if int(f1) != len(points):
                    raise InvalidConfigurationError(
                        f"{path}: point rows out of order at index {f1}")
                points.append(f2)
            elif kind == "context":
                if int(f1) != len(contexts):
                    raise InvalidConfigurationError(
                        f"{path}: context rows out of order at index {f1}")
                signs.append(int(f2) if f2.strip() else None)
                contexts.append([int(tok) for tok in f3.split()])
            else:
                raise InvalidConfigurationError(f"{path}: unknown record {kind!r}")
    if not saw_format:
        raise InvalidConfigurationError(f"{path}: missing format record")
    if n is None:
        raise InvalidConfigurationError(f"{path}: missing n record")
    have = [sv for sv in signs if sv is not None]
    if have and len(have) != len(signs):
        raise InvalidConfigurationError(
            f"{path}: signs must be present for all contexts or none")
    return _assemble(n, points, contexts, have if have else None, trust, source)


def load_configuration(path: PathLike) -> QuantumConfiguration:
    """Read a configuration file; the suffix picks the format."""
    path = Path(path)
    try:
        if path.suffix.lower() == ".csv":
            return _load_csv(path)
        return _load_json(path)
    except (ValueError, csv.Error) as exc:
        if isinstance(exc, InvalidConfigurationError):
            raise
        raise InvalidConfigurationError(f"{path}: {exc}") from None


def save_configuration(config: QuantumConfiguration, path: PathLike,
                       fmt: Optional[str] = None) -> None:
    """Write a configuration; signs are always included.

    Canonical configurations store their recomputed signs (so files show
    the negative contexts at a glance); configurations carrying trusted
    signs keep them and are marked ``trust_signs``.
    """
    path = Path(path)
    if fmt is None:
        fmt = "csv" if path.suffix.lower() == ".csv" else "json"
    if fmt not in ("json", "csv"):
        raise ValueError(f"unknown format {fmt!r}")
    trusted = config.signs is not None
    signs = list(config.signs) if trusted else _computed_signs(config)
    letters = [PauliObservable(v).letters() for v in config.points]
    if fmt == "json":
        data = {
            "format": FORMAT_NAME,
            "version": FORMAT_VERSION,
            "n": config.n,
            "source": config.source,
            "points": letters,
            "contexts": [list(ctx) for ctx in config.contexts],
            "signs": signs,
        }
        if trusted:
            data["trust_signs"] = True
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=2)
            fh.write("\n")
        return
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["record", "field1", "field2", "field3"])
        writer.writerow(["format", FORMAT_NAME, str(FORMAT_VERSION), ""])
        writer.writerow(["n", str(config.n), "", ""])
        writer.writerow(["source", config.source, "", ""])
        if trusted:
            writer.writerow(["trust_signs", "true", "", ""])
        for i, text in enumerate(letters):
            writer.writerow(["point", str(i), text, ""])
        for i, ctx in enumerate(config.contexts):
            writer.writerow(["context", str(i), f"{signs[i]:+d}",
                             " ".join(str(j) for j in ctx)])
