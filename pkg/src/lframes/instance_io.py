"""Plain-text instance files and run reports.

The instance format is line oriented: whitespace-separated fields, ``#``
starts a comment, blank lines are ignored. A header declares the format
version, the adjacency model, the record kind, and any reference lines;
each following line is one record, ``id corner-x corner-y hspan vspan``
for frames or ``id lo-x lo-y hi-x hi-y`` for rectangles:

    version 1
    model standard
    kind frames
    diagonal 12
    f1 0 12 3 3

``parse_instance(emit_instance(inst))`` reproduces ``inst`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ParseError, ValidationError
from .geometry import Diagonal, GeomInstance, LFrame, Point, Rect

FORMAT_VERSION = 1

_MODELS = ("standard", "edge")
_KINDS = ("frames", "rects")
_HEADER_KEYWORDS = ("model", "kind", "diagonal", "vline", "hline")


def emit_instance(inst: GeomInstance) -> str:
    lines = [
        f"version {FORMAT_VERSION}",
        f"model {inst.model}",
        f"kind {'rects' if inst.rects else 'frames'}",
    ]
    if inst.diagonal is not None:
        lines.append(f"diagonal {inst.diagonal.d}")
    if inst.vline is not None:
        lines.append(f"vline {inst.vline}")
    if inst.hline is not None:
        lines.append(f"hline {inst.hline}")
    for f in inst.frames:
        lines.append(f"{f.id} {f.corner.x} {f.corner.y} {f.hspan} {f.vspan}")
    for r in inst.rects:
        lines.append(f"{r.id} {r.lo.x} {r.lo.y} {r.hi.x} {r.hi.y}")
    return "\n".join(lines) + "\n"


def _ints(tokens: list[str], lineno: int) -> list[int]:
    out = []
    for t in tokens:
        try:
            out.append(int(t))
        except ValueError:
            raise ParseError(lineno, f"expected integer, got {t!r}") from None
    return out


def parse_instance(text: str) -> GeomInstance:
    """Read an instance file back into a GeomInstance.

    Raises ParseError for malformed syntax and ValidationError when the
    file is well formed but describes an invalid instance.
    """
    model = "standard"
    kind = "frames"
    diagonal: Optional[int] = None
    vline: Optional[int] = None
    hline: Optional[int] = None
    seen: set[str] = set()
    frames: list[LFrame] = []
    rects: list[Rect] = []
    version_seen = False
    in_records = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword, rest = tokens[0], tokens[1:]

        if not version_seen:
            if keyword != "version":
                raise ParseError(lineno, "file must start with a version line")
            if len(rest) != 1:
                raise ParseError(lineno, "version takes one field")
            if _ints(rest, lineno)[0] != FORMAT_VERSION:
                raise ParseError(lineno, f"unsupported format version {rest[0]}")
            version_seen = True
            continue

        if not in_records and keyword in _HEADER_KEYWORDS:
            if keyword in seen:
                raise ParseError(lineno, f"duplicate {keyword} declaration")
            if len(rest) != 1:
                raise ParseError(lineno, f"{keyword} takes one field")
            seen.add(keyword)
            if keyword == "model":
                if rest[0] not in _MODELS:
                    raise ValidationError(f"unknown model {rest[0]!r}")
                model = rest[0]
            elif keyword == "kind":
                if rest[0] not in _KINDS:
                    raise ValidationError(f"unknown record kind {rest[0]!r}")
                kind = rest[0]
            elif keyword == "diagonal":
                diagonal = _ints(rest, lineno)[0]
            elif keyword == "vline":
                vline = _ints(rest, lineno)[0]
            else:
                hline = _ints(rest, lineno)[0]
            continue

        in_records = True
        if len(rest) != 4:
            raise ParseError(lineno, "record takes an id and four integers")
        a, b, c, d = _ints(rest, lineno)
        try:
            if kind == "frames":
                frames.append(LFrame(keyword, Point(a, b), c, d))
            else:
                rects.append(Rect(keyword, Point(a, b), Point(c, d)))
        except ValueError as e:
            raise ValidationError(str(e)) from None

    if not version_seen:
        raise ParseError(1, "empty file, expected a version line")
    try:
        return GeomInstance(
            frames=tuple(frames),
            rects=tuple(rects),
            model=model,
            diagonal=None if diagonal is None else Diagonal(diagonal),
            vline=vline,
            hline=hline,
        )
    except ValueError as e:
        raise ValidationError(str(e)) from None


def instance_summary(inst: GeomInstance) -> str:
    """Compact one-token-pair description used in reports."""
    kind = "rects" if inst.rects else "frames"
    parts = [f"{kind}={inst.n}", f"model={inst.model}"]
    if inst.diagonal is not None:
        parts.append(f"diagonal={inst.diagonal.d}")
    if inst.vline is not None:
        parts.append(f"vline={inst.vline}")
    if inst.hline is not None:
        parts.append(f"hline={inst.hline}")
    return " ".join(parts)


@dataclass(frozen=True)
class RunReport:
    """Result of one solver or verifier run.

    ``wall_time_s`` is measured and therefore never part of the stable text
    form; format_report leaves it out unless asked so repeated runs with the
    same seed stay byte-identical.
    """

    algorithm: str
    instance: str
    n: int
    size: Optional[int] = None
    members: tuple[str, ...] = ()
    k: Optional[int] = None
    seed: Optional[int] = None
    oracle_ratio: Optional[float] = None
    ok: Optional[bool] = None
    wall_time_s: Optional[float] = None

    def fields(self) -> dict[str, str]:
        out = {
            "algorithm": self.algorithm,
            "instance": self.instance,
            "n": str(self.n),
        }
        if self.size is not None:
            out["size"] = str(self.size)
            out["members"] = " ".join(self.members) if self.members else "-"
        if self.k is not None:
            out["k"] = str(self.k)
        if self.seed is not None:
            out["seed"] = str(self.seed)
        if self.oracle_ratio is not None:
            out["oracle_ratio"] = f"{self.oracle_ratio:.6f}"
        if self.ok is not None:
            out["ok"] = "true" if self.ok else "false"
        return out


def format_fields(fields: dict[str, str]) -> str:
    """One ``key value`` line per entry, keys sorted."""
    return "\n".join(f"{k} {v}" for k, v in sorted(fields.items())) + "\n"


def format_report(report: RunReport, include_wall_time: bool = False) -> str:
    fields = report.fields()
    if include_wall_time and report.wall_time_s is not None:
        fields["wall_time_s"] = f"{report.wall_time_s:.3f}"
    return format_fields(fields)


def parse_report(text: str) -> dict[str, str]:
    """Inverse of format_report at the key-value level."""
    out: dict[str, str] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        key, _, value = line.partition(" ")
        out[key] = value
    return out
