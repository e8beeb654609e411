"""Append-only JSONL cache for enumeration runs.

Layout: a header line, then record lines interleaved with
stage-complete markers.  A resumed run replays the records of every
completed stage and re-derives everything after the last marker, so a
file truncated mid-write (final line missing its newline) is still
usable.  Any other malformed line is an error, not a silent skip.
"""

from __future__ import annotations

import json
import os

from .intpoly import MonicIntPoly, poly_discriminant
from .numfield import GaloisLabel

_VERSION = 1


class CacheError(Exception):
    """Cache file disagrees with the request or is corrupt."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


def _parse_galois(text: str) -> GaloisLabel:
    if text.startswith("other(") and text.endswith(")"):
        return GaloisLabel("other", text[len("other(") : -1])
    if text == "undetermined":
        return GaloisLabel("undetermined", "insufficient evidence")
    if text == "Sn_certified":
        raise CacheError("Sn_certified label is stored with its group name")
    if text.startswith("S") and text[1:].isdigit():
        return GaloisLabel("Sn_certified", text)
    raise CacheError(f"unrecognized galois label {text!r}")


def _format_galois(label: GaloisLabel) -> str:
    if label.kind == "Sn_certified":
        return label.description
    return str(label)


def record_to_line(rec) -> str:
    return json.dumps(
        {
            "kind": "record",
            "degree": rec.degree,
            "minpoly": list(rec.min_poly.coeffs),
            "polydisc": rec.poly_disc,
            "fielddisc": rec.field_disc,
            "index": rec.index,
            "signature": list(rec.signature),
            "galois": _format_galois(rec.galois_label),
            "stage": rec.stage,
        },
        separators=(",", ":"),
    )


def _record_from_obj(obj: dict, lineno: int):
    from .fieldenum import FieldRecord

    try:
        f = MonicIntPoly(tuple(int(c) for c in obj["minpoly"]))
        rec = FieldRecord(
            degree=int(obj["degree"]),
            min_poly=f,
            poly_disc=int(obj["polydisc"]),
            field_disc=int(obj["fielddisc"]),
            index=int(obj["index"]),
            signature=tuple(int(s) for s in obj["signature"]),
            galois_label=_parse_galois(obj["galois"]),
            stage=int(obj["stage"]),
            order_basis=None,
        )
    except CacheError as exc:
        raise CacheError(str(exc), lineno) from None
    except (KeyError, ValueError, TypeError, AssertionError) as exc:
        raise CacheError(f"bad record: {exc}", lineno) from None
    if poly_discriminant(f) != rec.poly_disc:
        raise CacheError("stored poly_disc does not match the polynomial", lineno)
    return rec


def open_for_resume(path, header: dict):
    """Return (last complete stage, replayed records).

    Creates the file with a header when absent.  The header must match
    the request exactly; records past the last stage marker are
    discarded so the owning stage is recomputed in full.
    """
    want = {
        "kind": "header",
        "version": _VERSION,
        "degree": header["degree"],
        "disc_bound": header["disc_bound"],
    }
    if not os.path.exists(path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(want, separators=(",", ":")) + "\n")
        return -1, []
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read()
    lines = raw.split("\n")
    # a final line with no terminating newline is a torn write: drop it
    # and let its stage be recomputed
    lines = lines[:-1]
    if not lines:
        raise CacheError("cache file is empty", 1)
    try:
        head = json.loads(lines[0])
    except json.JSONDecodeError:
        raise CacheError("unreadable header", 1) from None
    if head != want:
        raise CacheError(
            f"cache header {head} does not match the request {want}", 1
        )
    records = []
    done = -1
    replay: list = []
    for lineno, line in enumerate(lines[1:], start=2):
        try:
            obj = json.loads(line)
        except json.JSONDecodeError:
            raise CacheError("unreadable line", lineno) from None
        kind = obj.get("kind") if isinstance(obj, dict) else None
        if kind == "stage_complete":
            try:
                stage = int(obj["stage"])
            except (KeyError, ValueError, TypeError):
                raise CacheError("bad stage marker", lineno) from None
            done = stage
            replay.extend(records)
            records = []
        elif kind == "record":
            records.append(_record_from_obj(obj, lineno))
        else:
            raise CacheError(f"unexpected line kind {kind!r}", lineno)
    return done, replay


def append_stage(path, stage: int, records) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for rec in records:
            fh.write(record_to_line(rec) + "\n")
        fh.write(
            json.dumps(
                {"kind": "stage_complete", "stage": stage},
                separators=(",", ":"),
            )
            + "\n"
        )


def load_records(path):
    """All records of completed stages, with the run parameters."""
    if not os.path.exists(path):
        raise CacheError(f"no cache file at {path}")
    with open(path, "r", encoding="utf-8") as fh:
        first = fh.readline()
    try:
        head = json.loads(first)
        degree = int(head["degree"])
        disc_bound = int(head["disc_bound"])
        ok = head.get("kind") == "header" and head.get("version") == _VERSION
    except (json.JSONDecodeError, KeyError, ValueError, TypeError):
        raise CacheError("unreadable header", 1) from None
    if not ok:
        raise CacheError("unreadable header", 1)
    done, records = open_for_resume(
        path, {"degree": degree, "disc_bound": disc_bound}
    )
    return {"degree": degree, "disc_bound": disc_bound, "stages": done}, records
