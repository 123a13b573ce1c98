import json

import numpy as np
import pytest

from srn.base import BaseMatrixSpec, generate_base
from srn.compose import permute
from srn.errors import ArgumentError, FormatError, IntegrityError
from srn.io import detect_format, export_mask, import_mask, report_to_dict
from srn.mask import BinaryMask
from srn.verify import regularity_report

LOSSLESS = ("binary", "edge-csv", "dense-text", "structured-text")


def random_masks(count, rng, labeled=False):
    for _ in range(count):
        rows = int(rng.integers(1, 12))
        cols = int(rng.integers(1, 12))
        bits = (rng.random((rows, cols)) < rng.uniform(0.1, 0.9)).astype(np.uint8)
        if labeled:
            from srn.mask import labels_like

            labels = labels_like(bits)
            labels[bits.astype(bool)] = (0, 1)
            yield BinaryMask(bits, labels)
        else:
            yield BinaryMask(bits)


class TestRoundTrips:
    def test_plain_masks_all_formats(self):
        rng = np.random.default_rng(19)
        for mask in random_masks(25, rng):
            for fmt in LOSSLESS:
                data = export_mask(mask, fmt)
                back = import_mask(data, fmt, rows=mask.rows, cols=mask.cols)
                flat = back if isinstance(back, BinaryMask) else back.to_mask()
                assert flat.same_bits(mask), fmt
                assert export_mask(flat.without_labels(), fmt) == export_mask(
                    mask.without_labels(), fmt
                )

    def test_labels_survive_binary_and_structured(self):
        mask = generate_base(BaseMatrixSpec(3, {1, 2}))
        for fmt in ("binary", "structured-text"):
            back = import_mask(export_mask(mask, fmt), fmt)
            assert back == mask

    def test_permutations_survive_binary_and_structured(self):
        pm = permute(generate_base(BaseMatrixSpec(3, {1, 2, 3, 4})), seed=77)
        for fmt in ("binary", "structured-text"):
            back = import_mask(export_mask(pm, fmt), fmt)
            assert back.row_perm == pm.row_perm
            assert back.col_perm == pm.col_perm
            assert back.seed == pm.seed
            assert back.to_mask() == pm.to_mask()

    def test_byte_identical_reexport(self):
        rng = np.random.default_rng(23)
        for mask in random_masks(10, rng):
            for fmt in LOSSLESS:
                data = export_mask(mask, fmt)
                back = import_mask(data, fmt, rows=mask.rows, cols=mask.cols)
                assert export_mask(back, fmt) == data


class TestTextFormats:
    def test_dense_text_single_cell(self):
        assert export_mask(BinaryMask.ones(1, 1), "dense-text") == b"1\n"

    def test_edge_csv_content(self):
        mask = generate_base(BaseMatrixSpec(2, {1, 2}))
        lines = export_mask(mask, "edge-csv").decode().splitlines()
        assert len(lines) == 8
        assert lines[0] == "0,0"
        assert lines == sorted(lines, key=lambda s: tuple(map(int, s.split(","))))

    def test_edge_csv_shape_inference_warns(self):
        data = b"0,0\n2,1\n"
        with pytest.warns(UserWarning, match="inferring"):
            mask = import_mask(data, "edge-csv")
        assert mask.shape == (3, 2)

    def test_edge_csv_bad_line(self):
        with pytest.raises(FormatError, match="line 2"):
            import_mask(b"0,0\nnope\n", "edge-csv", rows=2, cols=2)

    def test_dense_text_bad_rows(self):
        with pytest.raises(FormatError):
            import_mask(b"01\n0\n", "dense-text")
        with pytest.raises(FormatError):
            import_mask(b"02\n", "dense-text")

    def test_structured_text_carries_report(self):
        mask = generate_base(BaseMatrixSpec(2, {1, 2}))
        bare = json.loads(export_mask(mask, "structured-text").decode())
        assert "report" not in bare
        report = regularity_report(mask)
        doc = json.loads(export_mask(mask, "structured-text", report=report).decode())
        assert doc["report"] == report_to_dict(report)
        assert doc["rows"] == 4 and len(doc["bits"]) == 4


class TestBinaryFormat:
    def test_magic_and_version(self):
        data = export_mask(BinaryMask.ones(2, 3), "binary")
        assert data[:4] == b"SRNM"
        with pytest.raises(FormatError, match="magic"):
            import_mask(b"XXXX" + data[4:], "binary")

    def test_popcount_integrity(self):
        mask = generate_base(BaseMatrixSpec(2, {1, 2}))
        data = bytearray(export_mask(mask, "binary"))
        payload_start = len(data) - mask.rows * 1 - mask.edge_count * 4
        data[payload_start] ^= 0b10  # flip a payload bit
        with pytest.raises((IntegrityError, FormatError)):
            import_mask(bytes(data), "binary")

    def test_truncation_detected(self):
        data = export_mask(BinaryMask.ones(4, 4), "binary")
        with pytest.raises(FormatError, match="truncated"):
            import_mask(data[:-1], "binary")
        with pytest.raises(FormatError, match="trailing"):
            import_mask(data + b"\x00", "binary")

    def test_unknown_format_name(self):
        with pytest.raises(ArgumentError):
            export_mask(BinaryMask.ones(1, 1), "parquet")


class TestDetect:
    def test_detects_each_format(self):
        mask = generate_base(BaseMatrixSpec(2, {1, 2}))
        assert detect_format(export_mask(mask, "binary")) == "binary"
        assert detect_format(export_mask(mask, "edge-csv")) == "edge-csv"
        assert detect_format(export_mask(mask, "dense-text")) == "dense-text"
        assert detect_format(export_mask(mask, "structured-text")) == "structured-text"

    def test_rejects_garbage(self):
        with pytest.raises(FormatError):
            detect_format(b"\xff\xfe\x00garbage")
