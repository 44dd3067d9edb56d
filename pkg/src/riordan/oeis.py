"""OEIS triangle fixtures, b-file parsing, and an optional cached fetcher.

The embedded fixtures are the independent oracle for every sequence-level
check in this package: each stores the leading rows of an OEIS triangle
verbatim, together with its offset (the OEIS index of the first stored row)
and explicit row lengths, since several gamma-triangles are ragged (row n of
A055151 has n//2 + 1 entries, not n + 1).  A001147 is a plain sequence and
is stored with one value per row; its aerated form (zeros interleaved) is
produced by the caller.

Everything in the default test suite runs offline.  :func:`fetch_bfile` can
refresh data from the public OEIS b-file endpoint into a local cache, but is
never consulted implicitly: a cached copy always wins and the endpoint is
only contacted when the cache misses and ``offline`` is not set.
"""

from __future__ import annotations

import enum
import os
import tempfile
import urllib.error
import urllib.request
from dataclasses import dataclass
from pathlib import Path

from .algebra import MultiPoly
from .arrays import LowerTriMatrix

DEFAULT_BASE_URL = "https://oeis.org"
BASE_URL_ENV = "OEIS_BASE_URL"
CACHE_DIR_ENV = "OEIS_CACHE_DIR"


class MalformedLine(ValueError):
    """A b-file line that is neither a comment nor an 'index value' pair."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class SymbolicEntries(ValueError):
    """Triangle comparison needs fully numeric entries."""


class NetworkUnavailable(OSError):
    """The OEIS endpoint could not be reached and no cache exists."""


class CacheMiss(FileNotFoundError):
    """Offline fetch requested but the cache has no copy."""


class Reading(enum.Enum):
    BY_ROWS = "by-rows"
    BY_ROWS_REVERSED = "by-rows-reversed"


@dataclass(frozen=True)
class TriangleFixture:
    """Leading rows of an OEIS triangle, flat values plus reconstruction data."""

    anumber: str
    description: str
    offset: int
    reading: Reading
    row_lengths: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("fixture values must be non-empty")
        if sum(self.row_lengths) != len(self.values):
            raise ValueError(f"{self.anumber}: row lengths do not add up")

    def rows(self) -> list[list[int]]:
        out, pos = [], 0
        for length in self.row_lengths:
            row = list(self.values[pos : pos + length])
            if self.reading is Reading.BY_ROWS_REVERSED:
                row.reverse()
            out.append(row)
            pos += length
        return out


@dataclass(frozen=True)
class BFile:
    """Parsed 'index value' lines of an OEIS b-file."""

    entries: tuple[tuple[int, int], ...]

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.entries)


def parse_bfile(text: str) -> BFile:
    """Parse b-file text: 'index value' per line, '#' comments, blanks skipped."""
    entries: list[tuple[int, int]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLine(f"expected 'index value', got {raw!r}", number)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(f"non-integer field in {raw!r}", number) from None
        if entries and index <= entries[-1][0]:
            raise MalformedLine(f"index {index} not strictly increasing", number)
        entries.append((index, value))
    return BFile(tuple(entries))


def render_bfile(bfile: BFile) -> str:
    return "".join(f"{n} {v}\n" for n, v in bfile.entries)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of comparing generated rows against a fixture."""

    anumber: str
    rows_compared: int
    entries_matched: int
    mismatch: tuple[int, int, object, object] | None = None

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    def message(self) -> str:
        if self.ok:
            return (
                f"{self.anumber}: {self.entries_matched} entries over "
                f"{self.rows_compared} rows match"
            )
        n, k, got, want = self.mismatch
        return f"{self.anumber}: mismatch at row {n}, column {k}: got {got}, want {want}"


def _plain_rows(triangle) -> list[list]:
    rows = triangle.rows if isinstance(triangle, LowerTriMatrix) else triangle
    out = []
    for row in rows:
        clean = []
        for e in row:
            if isinstance(e, MultiPoly):
                if not e.is_constant():
                    raise SymbolicEntries(f"symbolic entry {e}; specialize first")
                e = e.constant_value()
                e = int(e) if e.denominator == 1 else e
            clean.append(e)
        out.append(clean)
    return out


def check_triangle(triangle, fixture: TriangleFixture) -> CheckReport:
    """Compare generated rows (row 0 first) against the fixture's rows.

    Generated row j is aligned with the fixture's j-th stored row (OEIS row
    j + offset).  Fixture rows may be shorter than the generated ones; the
    surplus generated entries must then be zero.
    """
    got_rows = _plain_rows(triangle)
    want_rows = fixture.rows()
    compared = min(len(got_rows), len(want_rows))
    matched = 0
    for j in range(compared):
        got, want = got_rows[j], want_rows[j]
        if len(want) > len(got):
            return CheckReport(fixture.anumber, compared, matched, (j, len(got), "absent", want[len(got)]))
        for k in range(len(got)):
            expect = want[k] if k < len(want) else 0
            if got[k] != expect:
                return CheckReport(fixture.anumber, compared, matched, (j, k, got[k], expect))
            matched += 1
    return CheckReport(fixture.anumber, compared, matched)


def check_sequence(values, fixture: TriangleFixture) -> CheckReport:
    """Compare a flat value list against a sequence-shaped fixture."""
    want = fixture.values
    compared = min(len(values), len(want))
    for i in range(compared):
        if values[i] != want[i]:
            return CheckReport(fixture.anumber, compared, i, (i, 0, values[i], want[i]))
    return CheckReport(fixture.anumber, compared, compared)


# -- fetching ----------------------------------------------------------------


def _normalize_anumber(anumber: str) -> str:
    text = anumber.strip().upper()
    if not text.startswith("A") or not text[1:].isdigit():
        raise ValueError(f"not an OEIS A-number: {anumber!r}")
    return "A" + text[1:].zfill(6)


def bfile_url(anumber: str, base_url: str | None = None) -> str:
    anumber = _normalize_anumber(anumber)
    base = (base_url or os.environ.get(BASE_URL_ENV) or DEFAULT_BASE_URL).rstrip("/")
    return f"{base}/{anumber}/b{anumber[1:]}.txt"


def fetch_bfile(
    anumber: str,
    cache_dir: str | Path,
    *,
    offline: bool = False,
    base_url: str | None = None,
    timeout: float = 30.0,
) -> BFile:
    """Return the b-file for an A-number, downloading at most once.

    The cache (one verbatim file per A-number) always wins; the network is
    only touched on a cache miss with ``offline`` unset.  Downloads are
    written atomically so concurrent fetchers cannot see partial files.
    """
    anumber = _normalize_anumber(anumber)
    cache_dir = Path(cache_dir)
    cached = cache_dir / f"{anumber}.txt"
    if cached.exists():
        return parse_bfile(cached.read_text())
    if offline:
        raise CacheMiss(f"no cached b-file for {anumber} in {cache_dir}")
    url = bfile_url(anumber, base_url)
    try:
        with urllib.request.urlopen(url, timeout=timeout) as response:
            payload = response.read()
    except (urllib.error.URLError, OSError) as exc:
        raise NetworkUnavailable(f"could not fetch {url}: {exc}") from exc
    cache_dir.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=cache_dir, prefix=f".{anumber}.")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(payload)
        os.replace(tmp_name, cached)
    except BaseException:
        os.unlink(tmp_name)
        raise
    return parse_bfile(payload.decode())


# -- embedded fixtures ---------------------------------------------------------


def _fixture(anumber, description, offset, rows, reading=Reading.BY_ROWS):
    return TriangleFixture(
        anumber=anumber,
        description=description,
        offset=offset,
        reading=reading,
        row_lengths=tuple(len(row) for row in rows),
        values=tuple(v for row in rows for v in row),
    )


FIXTURES: dict[str, TriangleFixture] = {
    fx.anumber: fx
    for fx in [
        _fixture(
            "A007318",
            "Pascal's triangle C(n,k)",
            0,
            [
                [1],
                [1, 1],
                [1, 2, 1],
                [1, 3, 3, 1],
                [1, 4, 6, 4, 1],
                [1, 5, 10, 10, 5, 1],
                [1, 6, 15, 20, 15, 6, 1],
                [1, 7, 21, 35, 35, 21, 7, 1],
                [1, 8, 28, 56, 70, 56, 28, 8, 1],
                [1, 9, 36, 84, 126, 126, 84, 36, 9, 1],
                [1, 10, 45, 120, 210, 252, 210, 120, 45, 10, 1],
            ],
        ),
        _fixture(
            "A135278",
            "face triangle of the simplex: C(n+1, k+1)",
            0,
            [
                [1],
                [2, 1],
                [3, 3, 1],
                [4, 6, 4, 1],
                [5, 10, 10, 5, 1],
                [6, 15, 20, 15, 6, 1],
                [7, 21, 35, 35, 21, 7, 1],
                [8, 28, 56, 70, 56, 28, 8, 1],
                [9, 36, 84, 126, 126, 84, 36, 9, 1],
                [10, 45, 120, 210, 252, 210, 120, 45, 10, 1],
            ],
        ),
        _fixture(
            "A074909",
            "reversed face triangle of the simplex: C(n+1, k)",
            0,
            [
                [1],
                [1, 2],
                [1, 3, 3],
                [1, 4, 6, 4],
                [1, 5, 10, 10, 5],
                [1, 6, 15, 20, 15, 6],
                [1, 7, 21, 35, 35, 21, 7],
                [1, 8, 28, 56, 70, 56, 28, 8],
                [1, 9, 36, 84, 126, 126, 84, 36, 9],
                [1, 10, 45, 120, 210, 252, 210, 120, 45, 10],
            ],
        ),
        _fixture(
            "A038207",
            "face triangle of the hypercube: C(n,k) 2^(n-k)",
            0,
            [
                [1],
                [2, 1],
                [4, 4, 1],
                [8, 12, 6, 1],
                [16, 32, 24, 8, 1],
                [32, 80, 80, 40, 10, 1],
                [64, 192, 240, 160, 60, 12, 1],
                [128, 448, 672, 560, 280, 84, 14, 1],
                [256, 1024, 1792, 1792, 1120, 448, 112, 16, 1],
                [512, 2304, 4608, 5376, 4032, 2016, 672, 144, 18, 1],
            ],
        ),
        _fixture(
            "A013609",
            "reversed face triangle of the hypercube: C(n,k) 2^k",
            0,
            [
                [1],
                [1, 2],
                [1, 4, 4],
                [1, 6, 12, 8],
                [1, 8, 24, 32, 16],
                [1, 10, 40, 80, 80, 32],
                [1, 12, 60, 160, 240, 192, 64],
                [1, 14, 84, 280, 560, 672, 448, 128],
                [1, 16, 112, 448, 1120, 1792, 1792, 1024, 256],
                [1, 18, 144, 672, 2016, 4032, 5376, 4608, 2304, 512],
            ],
        ),
        _fixture(
            "A001147",
            "double factorials (2n-1)!!; aerate with zeros for the EGF of exp(x^2/2)",
            0,
            [[1], [1], [3], [15], [105], [945], [10395], [135135], [2027025], [34459425], [654729075]],
        ),
        _fixture(
            "A001263",
            "Narayana triangle, h-triangle of the associahedron",
            1,
            [
                [1],
                [1, 1],
                [1, 3, 1],
                [1, 6, 6, 1],
                [1, 10, 20, 10, 1],
                [1, 15, 50, 50, 15, 1],
                [1, 21, 105, 175, 105, 21, 1],
                [1, 28, 196, 490, 490, 196, 28, 1],
                [1, 36, 336, 1176, 1764, 1176, 336, 36, 1],
                [1, 45, 540, 2520, 5292, 5292, 2520, 540, 45, 1],
            ],
        ),
        _fixture(
            "A008292",
            "Eulerian triangle, h-triangle of the permutahedron",
            1,
            [
                [1],
                [1, 1],
                [1, 4, 1],
                [1, 11, 11, 1],
                [1, 26, 66, 26, 1],
                [1, 57, 302, 302, 57, 1],
                [1, 120, 1191, 2416, 1191, 120, 1],
                [1, 247, 4293, 15619, 15619, 4293, 247, 1],
                [1, 502, 14608, 88234, 156190, 88234, 14608, 502, 1],
                [1, 1013, 47840, 455192, 1310354, 1310354, 455192, 47840, 1013, 1],
            ],
        ),
        _fixture(
            "A019538",
            "k! S2(n,k), face triangle of the permutahedron",
            1,
            [
                [1],
                [1, 2],
                [1, 6, 6],
                [1, 14, 36, 24],
                [1, 30, 150, 240, 120],
                [1, 62, 540, 1560, 1800, 720],
                [1, 126, 1806, 8400, 16800, 15120, 5040],
                [1, 254, 5796, 40824, 126000, 191520, 141120, 40320],
                [1, 510, 18150, 186480, 834120, 1905120, 2328480, 1451520, 362880],
            ],
        ),
        _fixture(
            "A033282",
            "polygon dissections, face triangle of the type-A associahedron",
            3,
            [
                [1],
                [1, 2],
                [1, 5, 5],
                [1, 9, 21, 14],
                [1, 14, 56, 84, 42],
                [1, 20, 120, 300, 330, 132],
                [1, 27, 225, 825, 1485, 1287, 429],
                [1, 35, 385, 1925, 5005, 7007, 5005, 1430],
                [1, 44, 616, 4004, 14014, 28028, 32032, 19448, 4862],
            ],
        ),
        _fixture(
            "A055151",
            "Motzkin polynomial coefficients, gamma-triangle of the associahedron",
            0,
            [
                [1],
                [1],
                [1, 1],
                [1, 3],
                [1, 6, 2],
                [1, 10, 10],
                [1, 15, 30, 5],
                [1, 21, 70, 35],
                [1, 28, 140, 140, 14],
                [1, 36, 252, 420, 126],
                [1, 45, 420, 1050, 630, 42],
            ],
        ),
        _fixture(
            "A101280",
            "gamma-triangle of the permutahedron (from Eulerian polynomials)",
            1,
            [
                [1],
                [1],
                [1, 2],
                [1, 8],
                [1, 22, 16],
                [1, 52, 136],
                [1, 114, 720, 272],
                [1, 240, 3072, 3968],
                [1, 494, 11616, 34304, 7936],
                [1, 1004, 40776, 230144, 176896],
            ],
        ),
    ]
}


def aerated(values, length: int | None = None) -> list[int]:
    """Interleave zeros: v0, 0, v1, 0, ...; optionally truncated to length."""
    out: list[int] = []
    for v in values:
        out.extend((v, 0))
    if length is not None:
        out = out[:length]
    return out
