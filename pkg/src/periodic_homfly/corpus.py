"""Link-census files and batch scans.

Corpus files are CSV with header ``name,components,pd,homfly``.  The
``homfly`` column is optional (empty means no stored value to check
against).  An optional ``variant`` column holds orientation bits
``{b1,b2,...}``: bit ``i`` set means component ``i+1`` of the PD code is
reversed, and component 1 is never reversed.
"""

from __future__ import annotations

import csv
import io
import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .criteria import CriterionReport, check_congruences
from .diagram import DiagramError, LinkDiagram, parse_pd, reverse_component
from .homfly import CrossingLimitError, homfly
from .polyring import PolyParseError, VZPoly, is_prime, parse_poly

__all__ = [
    "CorpusRecord",
    "IngestError",
    "IngestResult",
    "CrossCheckError",
    "ScanEntry",
    "ScanReport",
    "parse_variant",
    "ingest",
    "ingest_text",
    "emit",
    "cross_check",
    "scan",
    "bundled_corpus",
]

FIELDS = ["name", "components", "pd", "homfly"]


def parse_variant(text: str) -> tuple[int, ...]:
    """``{0,1,0}`` or ``010`` -> ``(0, 1, 0)``."""
    s = text.strip()
    if not s:
        return ()
    m = re.fullmatch(r"\{\s*([01](?:\s*,\s*[01])*)\s*\}", s)
    if m:
        return tuple(int(b) for b in m.group(1).split(","))
    if re.fullmatch(r"[01]+", s):
        return tuple(int(b) for b in s)
    raise ValueError(f"bad orientation bits {text!r}")


def _format_variant(bits):
    return "{" + ",".join(map(str, bits)) + "}"


@dataclass(frozen=True)
class CorpusRecord:
    name: str
    components: int
    pd: str
    homfly: str | None = None
    variant: tuple[int, ...] = ()
    line: int | None = field(default=None, compare=False)

    def diagram(self) -> LinkDiagram:
        d = parse_pd(self.pd)
        if len(self.variant) >= d.n_components:
            raise DiagramError(
                f"{len(self.variant)} orientation bits for {d.n_components} components"
            )
        for i, bit in enumerate(self.variant):
            if bit:
                d = reverse_component(d, i + 1)
        return d

    def stored(self) -> VZPoly | None:
        return None if self.homfly is None else parse_poly(self.homfly)


@dataclass(frozen=True)
class IngestError:
    line: int
    name: str | None
    message: str

    def __str__(self):
        who = f" ({self.name})" if self.name else ""
        return f"line {self.line}{who}: {self.message}"


@dataclass
class IngestResult:
    records: list[CorpusRecord]
    errors: list[IngestError]

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)


def _read(fh) -> IngestResult:
    reader = csv.DictReader(fh)
    records, errors = [], []
    missing = {"name", "components", "pd"} - set(reader.fieldnames or ())
    if missing:
        return IngestResult([], [IngestError(1, None, f"header lacks {sorted(missing)}")])
    for row in reader:
        line = reader.line_num
        name = (row.get("name") or "").strip() or None
        try:
            if name is None:
                raise ValueError("empty name")
            ncomp = int(row["components"])
            pd = (row.get("pd") or "").strip()
            stored = (row.get("homfly") or "").strip() or None
            if stored is not None:
                parse_poly(stored)
            rec = CorpusRecord(name, ncomp, pd, stored, parse_variant(row.get("variant") or ""), line)
            d = rec.diagram()
            if d.n_components != ncomp:
                raise ValueError(f"declared {ncomp} components, PD has {d.n_components}")
        except (ValueError, TypeError, DiagramError, PolyParseError) as exc:
            errors.append(IngestError(line, name, str(exc)))
            continue
        records.append(rec)
    return IngestResult(records, errors)


def ingest(path) -> IngestResult:
    """Read a corpus file.  Bad lines are collected in ``errors`` with line numbers."""
    with open(path, newline="") as fh:
        return _read(fh)


def ingest_text(text: str) -> IngestResult:
    return _read(io.StringIO(text))


def emit(records, path=None) -> str:
    """Write records in corpus format; returns the text (and writes it if ``path`` is given)."""
    records = list(records)
    fields = FIELDS + (["variant"] if any(r.variant for r in records) else [])
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in records:
        row = {"name": r.name, "components": r.components, "pd": r.pd, "homfly": r.homfly or ""}
        if "variant" in fields:
            row["variant"] = _format_variant(r.variant) if r.variant else ""
        w.writerow(row)
    text = buf.getvalue()
    if path is not None:
        Path(path).write_text(text)
    return text


def cross_check(record: CorpusRecord, max_crossings: int | None = None) -> bool:
    """Does the engine agree with the stored polynomial?"""
    if record.homfly is None:
        raise ValueError(f"{record.name} has no stored polynomial")
    return homfly(record.diagram(), max_crossings=max_crossings) == parse_poly(record.homfly)


def bundled_corpus(name: str = "census_4comp_le11") -> Path:
    """Path of a corpus shipped with the package (``census_4comp_le11`` or ``small_le8``)."""
    return Path(str(resources.files("periodic_homfly") / "data" / f"{name}.csv"))


class CrossCheckError(RuntimeError):
    def __init__(self, names):
        super().__init__("stored polynomial disagrees with the engine for: " + ", ".join(names))
        self.names = names


@dataclass(frozen=True)
class ScanEntry:
    name: str
    n: int
    report: CriterionReport | None
    cross_check: bool | None = None
    error: str | None = None

    def to_dict(self):
        return {
            "name": self.name,
            "n": self.n,
            "cross_check": self.cross_check,
            "error": self.error,
            "report": None if self.report is None else self.report.to_dict(),
        }


_SELECT = ("condition2", "condition1", "both")


@dataclass
class ScanReport:
    p: int
    filter: dict
    select: str
    entries: list[ScanEntry]

    def _ok(self, rep: CriterionReport) -> bool:
        if self.select == "condition2":
            return rep.condition2_passed
        if self.select == "condition1":
            return rep.condition1.passed
        return rep.passed

    @property
    def passing(self) -> list[ScanEntry]:
        return [e for e in self.entries if e.report is not None and self._ok(e.report)]

    @property
    def errors(self) -> list[ScanEntry]:
        return [e for e in self.entries if e.error is not None]

    def summary(self) -> list[dict]:
        out = []
        for e in self.passing:
            rep = e.report
            coeffs = {str(rep.condition1.exponent): rep.condition1.coefficient.format()}
            coeffs.update({str(c.exponent): c.coefficient.format() for c in rep.condition2})
            out.append({"name": e.name, "n": e.n, "condition1": rep.condition1.passed,
                        "condition2": rep.condition2_passed, "coefficients": coeffs})
        return out

    def to_dict(self):
        return {
            "p": self.p,
            "filter": self.filter,
            "select": self.select,
            "scanned": len(self.entries),
            "passing": len(self.passing),
            "summary": self.summary(),
            "records": [e.to_dict() for e in self.entries],
        }

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def table(self) -> str:
        p = self.p
        lines = [f"scan p={p}: {len(self.entries)} records, "
                 f"{len(self.passing)} pass {self.select.replace('condition', 'condition ')}"]
        if self.passing:
            width = max(len(e.name) for e in self.passing)
            lines.append(f"{'name':<{width}}  c1    c2    coefficients")
            for row in self.summary():
                cs = "; ".join(f"P_{k} = {v}" for k, v in row["coefficients"].items())
                lines.append(f"{row['name']:<{width}}  {'pass' if row['condition1'] else 'FAIL':<4}  "
                             f"{'pass' if row['condition2'] else 'FAIL':<4}  {cs}")
        for e in self.errors:
            lines.append(f"error {e.name}: {e.error}")
        return "\n".join(lines)


def _scan_one(args):
    rec, p, max_crossings = args
    try:
        d = rec.diagram()
        P = homfly(d, max_crossings=max_crossings)
    except CrossingLimitError as exc:
        return ScanEntry(rec.name, rec.components, None, None, str(exc))
    ok = None
    if rec.homfly is not None:
        ok = P == parse_poly(rec.homfly)
    return ScanEntry(rec.name, d.n_components, check_congruences(P, d.n_components, p, 1, rec.name), ok)


def scan(records, p: int = 3, components=None, select: str = "condition2", workers: int = 1,
         allow_mismatch: bool = False, max_crossings: int | None = None) -> ScanReport:
    """Run the ``r = 1`` check on every record with an allowed component count.

    ``components`` is an int or a collection of ints; by default every
    ``n = 1 mod p`` passes the filter.  Results are ordered by name.  If a
    stored polynomial disagrees with the engine, :class:`CrossCheckError` is
    raised unless ``allow_mismatch`` is set.
    """
    if not isinstance(p, int) or p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p!r}")
    if select not in _SELECT:
        raise ValueError(f"select must be one of {_SELECT}")
    if isinstance(records, IngestResult):
        records = records.records
    if components is None:
        keep = lambda n: n % p == 1 % p
        filt = {"components": f"n = 1 mod {p}"}
    else:
        allowed = {components} if isinstance(components, int) else set(components)
        keep = allowed.__contains__
        filt = {"components": sorted(allowed)}
    chosen = sorted((r for r in records if keep(r.components)), key=lambda r: r.name)
    jobs = [(r, p, max_crossings) for r in chosen]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            entries = list(ex.map(_scan_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        entries = [_scan_one(j) for j in jobs]
    bad = [e.name for e in entries if e.cross_check is False]
    if bad and not allow_mismatch:
        raise CrossCheckError(bad)
    return ScanReport(p, filt, select, entries)
