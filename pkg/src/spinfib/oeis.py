"""OEIS b-file handling and the audit of the related-sequences table.

A b-file is plain text, one ``<index> <value>`` pair per line, with ``#``
comments.  Offline mode (the default) reads the fixtures bundled under
``spinfib/fixtures``; online mode downloads from
``$SPINFIB_OEIS_BASE/<Anumber>/b<digits>.txt`` and caches the body in
``$SPINFIB_CACHE_DIR``.
"""

from __future__ import annotations

import enum
import os
import re
import tempfile
import urllib.error
import urllib.request
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from ._bigint import parse_int, to_decimal
from .grid import BoundaryConvention, SpinSeeds
from .sums import Region, sum_sequence

DEFAULT_BASE = "https://oeis.org"
SIZE_CAP = 8 * 1024 * 1024
FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"
SHIFT_RANGE = range(-3, 13)
MIN_OVERLAP = 5

_ANUM = re.compile(r"A\d{6}")


class OeisDataError(Exception):
    """Sequence data could not be obtained or understood."""


class BFileFormatError(OeisDataError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class FixtureMissingError(OeisDataError, FileNotFoundError):
    pass


class FetchError(OeisDataError):
    pass


class InsufficientOverlapError(OeisDataError):
    pass


def check_anumber(anumber: str) -> str:
    if not _ANUM.fullmatch(anumber):
        raise ValueError(f"not an OEIS A-number: {anumber!r}")
    return anumber


@dataclass(frozen=True)
class SequenceRecord:
    anumber: str
    offset: int
    terms: tuple[int, ...]

    def __post_init__(self):
        check_anumber(self.anumber)
        if not self.terms:
            raise ValueError("a sequence record needs at least one term")

    @property
    def last_index(self) -> int:
        return self.offset + len(self.terms) - 1

    def get(self, index: int) -> int | None:
        if self.offset <= index <= self.last_index:
            return self.terms[index - self.offset]
        return None


def parse_bfile(data: bytes | str, anumber: str | None = None) -> SequenceRecord:
    """Parse b-file text into a record.

    Without an explicit ``anumber`` the first A-number mentioned in a
    comment is used, falling back to A000000.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise BFileFormatError(f"not UTF-8: {exc}") from None
    else:
        text = data
    found = anumber
    offset = None
    terms: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if found is None:
                m = _ANUM.search(line)
                if m:
                    found = m.group(0)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileFormatError(f"expected '<index> <value>', got {raw!r}", lineno)
        try:
            index = int(parts[0])
            value = parse_int(parts[1])
        except ValueError:
            raise BFileFormatError(f"non-integer field in {raw!r}", lineno) from None
        if offset is None:
            offset = index
        elif index != offset + len(terms):
            raise BFileFormatError(
                f"non-consecutive index {index}, expected {offset + len(terms)}", lineno
            )
        terms.append(value)
    if offset is None:
        raise BFileFormatError("no terms in b-file")
    return SequenceRecord(found or "A000000", offset, tuple(terms))


def serialize_bfile(record: SequenceRecord) -> str:
    lines = [f"# {record.anumber}"]
    lines += [f"{record.offset + i} {to_decimal(v)}" for i, v in enumerate(record.terms)]
    return "\n".join(lines) + "\n"


def bfile_name(anumber: str) -> str:
    return f"b{check_anumber(anumber)[1:]}.txt"


def default_cache_dir() -> Path:
    env = os.environ.get("SPINFIB_CACHE_DIR")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(Path.home(), ".cache")
    return Path(base) / "spinfib"


def _atomic_write(path: Path, body: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".part")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(body)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _download(url: str, size_cap: int, timeout: float) -> bytes:
    req = urllib.request.Request(url, headers={"User-Agent": "spinfib"})
    try:
        with urllib.request.urlopen(req, timeout=timeout) as resp:
            status = getattr(resp, "status", 200)
            if not 200 <= status < 300:
                raise FetchError(f"GET {url}: HTTP {status}")
            body = resp.read(size_cap + 1)
    except urllib.error.HTTPError as exc:
        raise FetchError(f"GET {url}: HTTP {exc.code}") from None
    except (urllib.error.URLError, OSError) as exc:
        raise FetchError(f"GET {url}: {exc}") from None
    if len(body) > size_cap:
        raise FetchError(f"GET {url}: response exceeds {size_cap} bytes")
    return body


def fetch_bfile(
    anumber: str,
    offline: bool = True,
    *,
    fixture_dir: Path | str | None = None,
    cache_dir: Path | str | None = None,
    base_url: str | None = None,
    size_cap: int = SIZE_CAP,
    timeout: float = 30.0,
) -> bytes:
    name = bfile_name(anumber)
    if offline:
        path = Path(fixture_dir) if fixture_dir is not None else FIXTURE_DIR
        try:
            return (path / name).read_bytes()
        except FileNotFoundError:
            raise FixtureMissingError(f"no bundled fixture for {anumber}") from None
    cache = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    cached = cache / name
    if cached.is_file():
        return cached.read_bytes()
    base = (base_url or os.environ.get("SPINFIB_OEIS_BASE") or DEFAULT_BASE).rstrip("/")
    body = _download(f"{base}/{anumber}/{name}", size_cap, timeout)
    _atomic_write(cached, body)
    return body


def fetch_many(
    anumbers: Iterable[str], offline: bool = True, max_workers: int = 4, **kwargs
) -> dict[str, bytes | OeisDataError]:
    """Fetch several A-numbers with bounded parallelism; errors are returned, not raised."""
    anumbers = list(dict.fromkeys(anumbers))

    def one(anum):
        try:
            return fetch_bfile(anum, offline, **kwargs)
        except OeisDataError as exc:
            return exc

    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return dict(zip(anumbers, pool.map(one, anumbers)))


def load_record(anumber: str, offline: bool = True, **kwargs) -> SequenceRecord:
    return parse_bfile(fetch_bfile(anumber, offline, **kwargs), anumber)


class Verdict(enum.Enum):
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"
    SHIFT_FOUND = "SHIFT_FOUND"
    ERROR = "ERROR"


@dataclass(frozen=True)
class TableCell:
    seeds: SpinSeeds
    region: Region
    anumber: str
    shift: int


def _cell(seeds, region, anumber, shift):
    return TableCell(SpinSeeds(*seeds), region, anumber, shift)


_LS, _UP, _SQ = Region.LOWER_STRICT, Region.UPPER_INCL_DIAG, Region.FULL_SQUARE

# Populated cells of the related-sequences table, row-major as printed.
TABLE1: tuple[TableCell, ...] = (
    _cell((0, 0, 0, 1), _LS, "A006478", 0),
    _cell((0, 0, 0, 1), _UP, "A001629", 1),
    _cell((0, 0, 0, 1), _SQ, "A006478", 1),
    _cell((0, 0, 1, 0), _LS, "A002940", -2),
    _cell((0, 0, 1, 0), _UP, "A006478", 1),
    _cell((0, 0, 1, 1), _UP, "A122491", 2),
    _cell((0, 1, 0, 0), _LS, "A001629", 1),
    _cell((0, 1, 0, 0), _UP, "A006478", 0),
    _cell((0, 1, 0, 0), _SQ, "A006478", 1),
    _cell((0, 1, 0, 1), _LS, "A006478", 1),
    _cell((0, 1, 0, 1), _UP, "A006478", 1),
    _cell((0, 1, 0, 1), _SQ, "A178523", 1),
    _cell((0, 1, 1, 0), _LS, "A014286", 0),
    _cell((0, 1, 1, 0), _UP, "A002940", -1),
    _cell((0, 1, 1, 1), _UP, "A178523", 1),
    _cell((1, 0, 0, 0), _LS, "A001629", 0),
    _cell((1, 0, 0, 0), _UP, "A010049", 1),
    _cell((1, 0, 0, 1), _LS, "A122491", 1),
    _cell((1, 0, 0, 1), _UP, "A001629", 2),
    _cell((1, 0, 1, 0), _LS, "A178523", 0),
    _cell((1, 0, 1, 1), _UP, "A006478", 2),
    _cell((1, 1, 0, 0), _LS, "A006478", 1),
    _cell((1, 1, 0, 0), _UP, "A190062", 1),
    _cell((1, 1, 1, 0), _LS, "A002940", -1),
    _cell((1, 1, 1, 1), _UP, "A014286", 11),
)


@dataclass
class MatchReport:
    row_seeds: SpinSeeds
    region: Region
    anumber: str
    claimed_shift: int
    convention: BoundaryConvention
    compared_count: int
    verdict: Verdict
    found_shift: int | None = None
    first_divergence: tuple[int, int, int] | None = None
    candidate_shifts: list[int] = field(default_factory=list)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.verdict in (Verdict.MATCH, Verdict.SHIFT_FOUND)

    @property
    def effective_shift(self) -> int | None:
        if self.verdict is Verdict.MATCH:
            return self.claimed_shift
        if self.verdict is Verdict.SHIFT_FOUND:
            return self.found_shift
        return None

    def to_dict(self) -> dict:
        div = None
        if self.first_divergence is not None:
            n, expected, actual = self.first_divergence
            div = {"n": n, "expected": to_decimal(expected), "actual": to_decimal(actual)}
        return {
            "seeds": self.row_seeds.as_list(),
            "region": self.region.value,
            "anumber": self.anumber,
            "claimed_shift": self.claimed_shift,
            "convention": self.convention.value,
            "compared_count": self.compared_count,
            "verdict": self.verdict.value,
            "found_shift": self.found_shift,
            "first_divergence": div,
            "candidate_shifts": list(self.candidate_shifts),
            "error": self.error,
        }


def _compare(computed: Sequence[int], record: SequenceRecord, shift: int):
    """Return (compared, first divergence) for 'computed[n] == record[n + shift]'."""
    compared = 0
    for n, actual in enumerate(computed):
        expected = record.get(n + shift)
        if expected is None:
            continue
        compared += 1
        if expected != actual:
            return compared, (n, expected, actual)
    return compared, None


def _overlap(count: int, record: SequenceRecord, shift: int) -> int:
    lo = max(0, record.offset - shift)
    hi = min(count - 1, record.last_index - shift)
    return max(0, hi - lo + 1)


def compare_with_record(
    computed: Sequence[int],
    record: SequenceRecord,
    seeds: SpinSeeds,
    region: Region,
    claimed_shift: int,
    conv: BoundaryConvention,
) -> MatchReport:
    overlap = _overlap(len(computed), record, claimed_shift)
    if overlap < MIN_OVERLAP:
        raise InsufficientOverlapError(
            f"{record.anumber} at shift {claimed_shift} overlaps only {overlap} computed terms"
        )
    _, divergence = _compare(computed, record, claimed_shift)
    report = MatchReport(seeds, region, record.anumber, claimed_shift, conv, overlap, Verdict.MATCH)
    if divergence is None:
        return report
    report.first_divergence = divergence
    for s in SHIFT_RANGE:
        if s == claimed_shift or _overlap(len(computed), record, s) < MIN_OVERLAP:
            continue
        if _compare(computed, record, s)[1] is None:
            report.candidate_shifts.append(s)
    if len(report.candidate_shifts) == 1:
        report.verdict = Verdict.SHIFT_FOUND
        report.found_shift = report.candidate_shifts[0]
        report.compared_count = _overlap(len(computed), record, report.found_shift)
    else:
        report.verdict = Verdict.MISMATCH
    return report


def check_table_row(
    seeds: SpinSeeds | Sequence[int],
    region: Region,
    anumber: str,
    claimed_shift: int,
    count: int = 20,
    conv: BoundaryConvention = BoundaryConvention.B_WINS,
    offline: bool = True,
    **fetch_kwargs,
) -> MatchReport:
    """Compare the region sums of ``seeds`` with ``anumber`` read at ``n + claimed_shift``."""
    if count < MIN_OVERLAP:
        raise ValueError(f"count must be >= {MIN_OVERLAP}, got {count}")
    seeds = SpinSeeds.of(seeds)
    record = load_record(anumber, offline, **fetch_kwargs)
    computed = sum_sequence(seeds, region, count, conv)
    return compare_with_record(computed, record, seeds, region, claimed_shift, conv)


def run_full_table(
    count: int = 20,
    conv: BoundaryConvention = BoundaryConvention.B_WINS,
    offline: bool = True,
    cells: Sequence[TableCell] = TABLE1,
    **fetch_kwargs,
) -> list[MatchReport]:
    """One report per table cell, in table order; per-cell failures become ERROR reports."""
    if count < MIN_OVERLAP:
        raise ValueError(f"count must be >= {MIN_OVERLAP}, got {count}")
    bodies = fetch_many([c.anumber for c in cells], offline, **fetch_kwargs)
    reports = []
    for cell in cells:
        body = bodies[cell.anumber]
        try:
            if isinstance(body, Exception):
                raise body
            record = parse_bfile(body, cell.anumber)
            computed = sum_sequence(cell.seeds, cell.region, count, conv)
            reports.append(
                compare_with_record(computed, record, cell.seeds, cell.region, cell.shift, conv)
            )
        except OeisDataError as exc:
            reports.append(
                MatchReport(cell.seeds, cell.region, cell.anumber, cell.shift, conv, 0,
                            Verdict.ERROR, error=str(exc))
            )
    return reports


@dataclass
class CellResolution:
    """How one table cell fares across both boundary conventions."""

    cell: TableCell
    reports: dict[BoundaryConvention, MatchReport]

    @property
    def matches(self) -> list[tuple[BoundaryConvention, int]]:
        return [(conv, r.effective_shift) for conv, r in self.reports.items() if r.ok]

    @property
    def status(self) -> str:
        if any(r.verdict is Verdict.MATCH for r in self.reports.values()):
            return "confirmed"
        if self.matches:
            return "shift-corrected"
        if all(r.verdict is Verdict.ERROR for r in self.reports.values()):
            return "data-unavailable"
        return "discrepancy"

    def to_dict(self) -> dict:
        return {
            "seeds": self.cell.seeds.as_list(),
            "region": self.cell.region.value,
            "anumber": self.cell.anumber,
            "claimed_shift": self.cell.shift,
            "status": self.status,
            "matches": [{"convention": c.value, "shift": s} for c, s in self.matches],
            "reports": [r.to_dict() for r in self.reports.values()],
        }


def resolve_table(count: int = 20, offline: bool = True, **fetch_kwargs) -> list[CellResolution]:
    per_conv = {
        conv: run_full_table(count, conv, offline, **fetch_kwargs) for conv in BoundaryConvention
    }
    return [
        CellResolution(cell, {conv: per_conv[conv][i] for conv in BoundaryConvention})
        for i, cell in enumerate(TABLE1)
    ]
