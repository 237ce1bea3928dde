"""File formats: centroid CSV, polygon JSON, PFM density maps, 16-bit PGM
label masks, and report serialization.

All writers emit a single canonical byte stream for a given value (LF line
endings, shortest round-tripping float repr, fixed header layout), so
write -> read -> write is byte-identical. Readers accept exactly the
documented formats and raise FormatError with the offending path plus a
line number (text formats) or byte offset (binary formats).

Raster conventions: PFM is grayscale `Pf`, scale -1.0 (little-endian
float32), rows bottom-to-top per the PFM convention. Label masks are raw
PGM `P5` with maxval 65535 and big-endian sample bytes per the PGM spec.
Netpbm comment lines are not supported in either direction.
"""

import dataclasses
import json

import numpy as np

from .validation import check_centroids, check_density_map, check_label_mask

__all__ = [
    "FormatError",
    "read_centroids_csv",
    "write_centroids_csv",
    "read_polygons_json",
    "write_polygons_json",
    "read_pfm",
    "write_pfm",
    "read_pgm16",
    "write_pgm16",
    "to_jsonable",
    "write_json",
    "write_csv_rows",
]

CSV_HEADER = "x,y"


class FormatError(ValueError):
    """A file violated its format contract. `where` is "line N" for text
    formats and "byte N" for binary formats."""

    def __init__(self, path, where, message):
        self.path = str(path)
        self.where = where
        self.message = message
        super().__init__(f"{self.path}: {where}: {message}")


def write_centroids_csv(path, points):
    points = check_centroids(points)
    lines = [CSV_HEADER]
    lines.extend(f"{repr(float(x))},{repr(float(y))}" for x, y in points)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write("\n".join(lines) + "\n")


def read_centroids_csv(path):
    with open(path, "r", encoding="utf-8", newline="") as f:
        text = f.read()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != CSV_HEADER:
        got = lines[0] if lines else "<empty file>"
        raise FormatError(path, "line 1", f"expected header '{CSV_HEADER}', got {got!r}")
    points = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 2:
            raise FormatError(
                path, f"line {lineno}", f"expected two comma-separated values, got {line!r}"
            )
        try:
            x, y = float(parts[0]), float(parts[1])
        except ValueError:
            raise FormatError(path, f"line {lineno}", f"not a number: {line!r}") from None
        if not (np.isfinite(x) and np.isfinite(y)):
            raise FormatError(path, f"line {lineno}", f"non-finite coordinate: {line!r}")
        points.append((x, y))
    return np.array(points, dtype=np.float64).reshape(len(points), 2)


def write_polygons_json(path, polygons):
    payload = [[[float(x), float(y)] for x, y in np.asarray(p, dtype=np.float64)] for p in polygons]
    with open(path, "w", encoding="utf-8", newline="") as f:
        json.dump(payload, f, separators=(",", ":"))
        f.write("\n")


def read_polygons_json(path):
    """JSON array of polygons, each an array of [x, y] pairs. Returns a list
    of (k, 2) float64 arrays; vertex-count validation happens at use site."""
    with open(path, "r", encoding="utf-8") as f:
        try:
            payload = json.load(f)
        except json.JSONDecodeError as e:
            raise FormatError(path, f"line {e.lineno}", e.msg) from None
    if not isinstance(payload, list):
        raise FormatError(path, "line 1", "top-level value must be an array of polygons")
    polygons = []
    for idx, poly in enumerate(payload):
        ok = isinstance(poly, list) and all(
            isinstance(v, list) and len(v) == 2 and all(isinstance(c, (int, float)) for c in v)
            for v in poly
        )
        if not ok:
            raise FormatError(
                path, "line 1", f"polygon {idx} is not an array of [x, y] pairs"
            )
        polygons.append(np.array(poly, dtype=np.float64).reshape(len(poly), 2))
    return polygons


class _ByteScanner:
    """Whitespace-token scanner over a binary header, tracking byte offsets
    for diagnostics."""

    def __init__(self, data, path):
        self.data = data
        self.path = path
        self.pos = 0

    def token(self, what):
        data = self.data
        while self.pos < len(data) and data[self.pos : self.pos + 1].isspace():
            self.pos += 1
        if self.pos >= len(data):
            raise FormatError(self.path, f"byte {self.pos}", f"missing {what}")
        start = self.pos
        while self.pos < len(data) and not data[self.pos : self.pos + 1].isspace():
            self.pos += 1
        return data[start : self.pos], start

    def data_start(self):
        # Exactly one whitespace byte separates the header from the raster.
        if self.pos >= len(self.data):
            raise FormatError(self.path, f"byte {self.pos}", "missing raster data")
        return self.pos + 1


def _parse_dims(scanner):
    wtok, wpos = scanner.token("width")
    htok, hpos = scanner.token("height")
    try:
        w, h = int(wtok), int(htok)
    except ValueError:
        raise FormatError(
            scanner.path, f"byte {wpos}", f"bad dimensions {wtok!r} {htok!r}"
        ) from None
    if w < 1 or h < 1:
        raise FormatError(scanner.path, f"byte {wpos}", f"bad dimensions {w}x{h}")
    return w, h


def _check_payload(path, data, start, expected, what):
    actual = len(data) - start
    if actual != expected:
        raise FormatError(
            path, f"byte {start}", f"expected {expected} {what} bytes, found {actual}"
        )


def write_pfm(path, values):
    values = check_density_map(values)
    h, w = values.shape
    header = f"Pf\n{w} {h}\n-1.0\n".encode("ascii")
    payload = np.flipud(values).astype("<f4").tobytes()
    with open(path, "wb") as f:
        f.write(header + payload)


def read_pfm(path):
    with open(path, "rb") as f:
        data = f.read()
    sc = _ByteScanner(data, path)
    magic, mpos = sc.token("magic number")
    if magic != b"Pf":
        raise FormatError(path, f"byte {mpos}", f"expected magic 'Pf', got {magic!r}")
    w, h = _parse_dims(sc)
    stok, spos = sc.token("scale")
    try:
        scale = float(stok)
    except ValueError:
        raise FormatError(path, f"byte {spos}", f"bad scale {stok!r}") from None
    if scale == 0:
        raise FormatError(path, f"byte {spos}", "scale must be non-zero")
    start = sc.data_start()
    _check_payload(path, data, start, w * h * 4, "float32")
    dtype = "<f4" if scale < 0 else ">f4"
    rows = np.frombuffer(data, dtype=dtype, offset=start, count=w * h).reshape(h, w)
    return np.flipud(rows).astype(np.float32, copy=True)


def write_pgm16(path, labels):
    labels = check_label_mask(labels)
    h, w = labels.shape
    header = f"P5\n{w} {h}\n65535\n".encode("ascii")
    with open(path, "wb") as f:
        f.write(header + labels.astype(">u2").tobytes())


def read_pgm16(path):
    with open(path, "rb") as f:
        data = f.read()
    sc = _ByteScanner(data, path)
    magic, mpos = sc.token("magic number")
    if magic != b"P5":
        raise FormatError(path, f"byte {mpos}", f"expected magic 'P5', got {magic!r}")
    w, h = _parse_dims(sc)
    vtok, vpos = sc.token("maxval")
    if vtok != b"65535":
        raise FormatError(path, f"byte {vpos}", f"expected maxval 65535, got {vtok!r}")
    start = sc.data_start()
    _check_payload(path, data, start, w * h * 2, "uint16")
    rows = np.frombuffer(data, dtype=">u2", offset=start, count=w * h).reshape(h, w)
    return rows.astype(np.uint16, copy=True)


def to_jsonable(value):
    """Recursively convert dataclasses, numpy scalars/arrays, and tuples
    into plain JSON-serializable Python values."""
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {k: to_jsonable(v) for k, v in dataclasses.asdict(value).items()}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, np.generic):
        return value.item()
    return value


def write_json(path, value):
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    with open(path, "w", encoding="utf-8", newline="") as f:
        json.dump(to_jsonable(value), f, sort_keys=True, indent=2)
        f.write("\n")


def write_csv_rows(path, header, rows):
    """Comma-joined str() cells; floats should be pre-formatted by callers
    that need round-trip exactness."""
    lines = [",".join(header)]
    lines.extend(",".join(str(c) for c in row) for row in rows)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write("\n".join(lines) + "\n")
