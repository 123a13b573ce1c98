"""Mask and report serialization.

Four interchange formats:

* ``binary`` -- the MaskFile container: magic ``SRNM``, little-endian
  32-bit header words (version, rows, cols, flags, seed as two words,
  reduced density numerator/denominator), optional row/column
  permutations, a row-major LSB-first bitset payload padded per row, and
  optional per-edge (pass, diagonal) labels.  Lossless, integrity
  checked against the payload popcount.
* ``edge-csv`` -- ``row,col`` lines sorted by (row, col); lossless given
  the shape.
* ``dense-text`` -- one ``0``/``1`` character row per line; lossless.
* ``structured-text`` -- a self-describing JSON document carrying bits,
  labels, permutations and optionally a balance report; lossless and
  byte-stable (sorted keys, fixed indentation).
"""

from __future__ import annotations

import json
import struct
import warnings
from fractions import Fraction

import numpy as np

from .compose import PermutedMask
from .errors import ArgumentError, FormatError, IntegrityError
from .mask import NO_LABEL, BinaryMask, labels_like
from .verify import RegularityReport, SubsetWitness

MAGIC = b"SRNM"
FORMAT_VERSION = 1
FORMATS = ("binary", "edge-csv", "dense-text", "structured-text")

_FLAG_PERMS = 1
_FLAG_LABELS = 2


def _split_permuted(obj) -> tuple[BinaryMask, PermutedMask | None]:
    if isinstance(obj, PermutedMask):
        return obj.base, obj
    if isinstance(obj, BinaryMask):
        return obj, None
    raise ArgumentError(f"cannot export object of type {type(obj).__name__}")


# ---------------------------------------------------------------------------
# binary


def _pack_binary(obj) -> bytes:
    mask, permuted = _split_permuted(obj)
    flags = 0
    seed = 0
    if permuted is not None:
        flags |= _FLAG_PERMS
        seed = permuted.seed & 0xFFFFFFFFFFFFFFFF
    if mask.labels is not None:
        flags |= _FLAG_LABELS
    dens = mask.density
    if dens.denominator > 0xFFFFFFFF:
        raise ArgumentError(
            f"mask of {mask.rows}x{mask.cols} exceeds the 32-bit density"
            " fields of binary format v1"
        )
    head = struct.pack(
        "<4sIIIIIIII",
        MAGIC,
        FORMAT_VERSION,
        mask.rows,
        mask.cols,
        flags,
        seed & 0xFFFFFFFF,
        seed >> 32,
        dens.numerator,
        dens.denominator,
    )
    parts = [head]
    if permuted is not None:
        parts.append(np.asarray(permuted.row_perm, dtype="<u4").tobytes())
        parts.append(np.asarray(permuted.col_perm, dtype="<u4").tobytes())
    parts.append(np.packbits(mask.bits, axis=1, bitorder="little").tobytes())
    if mask.labels is not None:
        edge = mask.bits.astype(bool)
        pairs = mask.labels[edge]
        if pairs.max(initial=0) > 0xFFFF:
            raise ArgumentError("labels beyond 65535 do not fit the binary format")
        parts.append(pairs.astype("<u2").tobytes())
    return b"".join(parts)


def _unpack_binary(data: bytes):
    if len(data) < 36 or data[:4] != MAGIC:
        raise FormatError("not a mask file: bad magic")
    _, version, rows, cols, flags, seed_lo, seed_hi, num, den = struct.unpack(
        "<4sIIIIIIII", data[:36]
    )
    if version != FORMAT_VERSION:
        raise FormatError(f"unsupported mask file version {version}")
    offset = 36
    row_perm = col_perm = None
    if flags & _FLAG_PERMS:
        end = offset + 4 * rows
        row_perm = np.frombuffer(data[offset:end], dtype="<u4")
        offset = end
        end = offset + 4 * cols
        col_perm = np.frombuffer(data[offset:end], dtype="<u4")
        offset = end
    stride = (cols + 7) // 8
    end = offset + rows * stride
    if len(data) < end:
        raise FormatError("mask file truncated before payload end")
    packed = np.frombuffer(data[offset:end], dtype=np.uint8).reshape(rows, stride)
    bits = np.unpackbits(packed, axis=1, bitorder="little", count=cols)
    offset = end
    labels = None
    if flags & _FLAG_LABELS:
        count = int(bits.sum())
        end = offset + 4 * count
        if len(data) < end:
            raise FormatError("mask file truncated before label end")
        pairs = np.frombuffer(data[offset:end], dtype="<u2").reshape(count, 2)
        labels = labels_like(bits)
        labels[bits.astype(bool)] = pairs
        offset = end
    if offset != len(data):
        raise FormatError(f"{len(data) - offset} trailing bytes after mask payload")
    if den == 0 or Fraction(int(bits.sum()), rows * cols) != Fraction(num, den):
        raise IntegrityError(
            f"header density {num}/{den} does not match payload popcount {int(bits.sum())}"
        )
    mask = BinaryMask(bits, labels)
    if flags & _FLAG_PERMS:
        seed = seed_lo | (seed_hi << 32)
        return PermutedMask(
            base=mask,
            row_perm=tuple(int(i) for i in row_perm),
            col_perm=tuple(int(i) for i in col_perm),
            seed=seed,
        )
    return mask


# ---------------------------------------------------------------------------
# text formats


def _effective(obj) -> BinaryMask:
    mask, permuted = _split_permuted(obj)
    return permuted.to_mask() if permuted is not None else mask


def _pack_edge_csv(obj) -> bytes:
    mask = _effective(obj)
    lines = [f"{r},{c}" for r, c in mask.edges()]
    return ("\n".join(lines) + "\n" if lines else "").encode()


def _unpack_edge_csv(data: bytes, rows: int | None, cols: int | None) -> BinaryMask:
    edges = []
    for lineno, line in enumerate(data.decode().splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            r, c = (int(part) for part in line.split(","))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: expected 'row,col', got {line!r}") from exc
        if r < 0 or c < 0:
            raise FormatError(f"line {lineno}: negative index")
        edges.append((r, c))
    if rows is None or cols is None:
        if not edges:
            raise FormatError("cannot infer the shape of an empty edge list")
        warnings.warn("edge list carries no shape; inferring it from the largest index")
        rows = max(r for r, _ in edges) + 1
        cols = max(c for _, c in edges) + 1
    return BinaryMask.from_edges(rows, cols, edges)


def _pack_dense_text(obj) -> bytes:
    mask = _effective(obj)
    return ("\n".join("".join(str(b) for b in row) for row in mask.bits) + "\n").encode()


def _unpack_dense_text(data: bytes) -> BinaryMask:
    lines = [line for line in data.decode().splitlines() if line.strip()]
    if not lines:
        raise FormatError("empty dense-text mask")
    if any(set(line) - {"0", "1"} for line in lines):
        raise FormatError("dense-text rows must contain only 0 and 1")
    if len({len(line) for line in lines}) != 1:
        raise FormatError("dense-text rows have inconsistent lengths")
    return BinaryMask(np.array([[int(ch) for ch in line] for line in lines], dtype=np.uint8))


def witness_to_dict(witness: SubsetWitness | None):
    if witness is None:
        return None
    return {
        "x": list(witness.x),
        "y": list(witness.y),
        "subset_density": str(witness.subset_density),
        "deviation": str(witness.deviation),
    }


def report_to_dict(report: RegularityReport) -> dict:
    return {
        "density": str(report.density),
        "epsilon_star": str(report.epsilon_star),
        "delta_star": str(report.delta_star),
        "min_row_degree": report.min_row_degree,
        "min_col_degree": report.min_col_degree,
        "method": report.method,
        "sample_count": report.sample_count,
        "worst_witness": witness_to_dict(report.worst_witness),
    }


def _dump_json(payload: dict) -> bytes:
    return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode()


def _pack_structured(obj, report: RegularityReport | None = None) -> bytes:
    mask, permuted = _split_permuted(obj)
    payload: dict = {
        "format": "srn-mask",
        "version": FORMAT_VERSION,
        "rows": mask.rows,
        "cols": mask.cols,
        "bits": ["".join(str(b) for b in row) for row in mask.bits],
    }
    if mask.labels is not None:
        edge_rows, edge_cols = np.nonzero(mask.bits)
        payload["labels"] = [
            [int(r), int(c), int(mask.labels[r, c, 0]), int(mask.labels[r, c, 1])]
            for r, c in zip(edge_rows, edge_cols)
        ]
    if permuted is not None:
        payload["seed"] = permuted.seed
        payload["row_perm"] = list(permuted.row_perm)
        payload["col_perm"] = list(permuted.col_perm)
    if report is not None:
        payload["report"] = report_to_dict(report)
    return _dump_json(payload)


def _unpack_structured(data: bytes):
    try:
        payload = json.loads(data.decode())
    except (ValueError, UnicodeDecodeError) as exc:
        raise FormatError(f"not a structured-text mask: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("format") != "srn-mask":
        raise FormatError("not a structured-text mask document")
    bits = np.array([[int(ch) for ch in row] for row in payload["bits"]], dtype=np.uint8)
    if bits.shape != (payload["rows"], payload["cols"]):
        raise IntegrityError("bit rows do not match the declared shape")
    labels = None
    if "labels" in payload:
        labels = labels_like(bits)
        for r, c, gen_pass, diagonal in payload["labels"]:
            if not bits[r, c]:
                raise IntegrityError(f"label at ({r}, {c}) has no edge")
            labels[r, c] = (gen_pass, diagonal)
        if (labels[bits.astype(bool)] == NO_LABEL).any():
            raise IntegrityError("labeled document leaves some edges unlabeled")
    mask = BinaryMask(bits, labels)
    if "row_perm" in payload:
        return PermutedMask(
            base=mask,
            row_perm=tuple(payload["row_perm"]),
            col_perm=tuple(payload["col_perm"]),
            seed=int(payload.get("seed", 0)),
        )
    return mask


# ---------------------------------------------------------------------------
# public surface


def export_mask(obj, fmt: str, *, report: RegularityReport | None = None) -> bytes:
    """Serialize a mask (plain or permuted) into the requested format."""
    if fmt == "binary":
        return _pack_binary(obj)
    if fmt == "edge-csv":
        return _pack_edge_csv(obj)
    if fmt == "dense-text":
        return _pack_dense_text(obj)
    if fmt == "structured-text":
        return _pack_structured(obj, report)
    raise ArgumentError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def import_mask(data: bytes, fmt: str, *, rows: int | None = None, cols: int | None = None):
    """Parse mask bytes; the inverse of export_mask for lossless formats."""
    if fmt == "binary":
        return _unpack_binary(data)
    if fmt == "edge-csv":
        return _unpack_edge_csv(data, rows, cols)
    if fmt == "dense-text":
        return _unpack_dense_text(data)
    if fmt == "structured-text":
        return _unpack_structured(data)
    raise ArgumentError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def detect_format(data: bytes) -> str:
    """Best-effort format sniffing for CLI inputs."""
    if data[:4] == MAGIC:
        return "binary"
    try:
        text = data.decode()
    except UnicodeDecodeError as exc:
        raise FormatError("unrecognized mask data: neither mask file nor text") from exc
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return "structured-text"
    lines = [line for line in text.splitlines() if line.strip()]
    if lines and all(set(line) <= {"0", "1"} for line in lines):
        return "dense-text"
    if lines and all("," in line for line in lines):
        return "edge-csv"
    raise FormatError("unrecognized mask data: neither mask file nor text")
