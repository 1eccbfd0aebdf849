import pytest

from hurwitz.bfile import BFileParseError, compare_bfile, parse_bfile


def write(tmp_path, text):
    path = tmp_path / "b.txt"
    path.write_text(text)
    return path


class TestParse:
    def test_basic(self, tmp_path):
        entries = parse_bfile(write(tmp_path, "0 1\n1 1\n2 2\n3 7\n"))
        assert [(e.index, e.value) for e in entries] == [(0, 1), (1, 1), (2, 2), (3, 7)]

    def test_comments_and_blanks(self, tmp_path):
        entries = parse_bfile(write(tmp_path, "# comment\n\n1 1\n"))
        assert entries == [(1, 1)]

    def test_non_monotone(self, tmp_path):
        with pytest.raises(BFileParseError, match="strictly increasing"):
            parse_bfile(write(tmp_path, "2 5\n1 3\n"))

    def test_malformed_line(self, tmp_path):
        with pytest.raises(BFileParseError, match="line 2"):
            parse_bfile(write(tmp_path, "1 1\n2 2 3\n"))

    def test_non_integer(self, tmp_path):
        with pytest.raises(BFileParseError, match="non-integer"):
            parse_bfile(write(tmp_path, "1 x\n"))


class TestCompare:
    def test_full_match_with_offset(self, tmp_path):
        # entry index i aligns with coefficient i + offset_shift
        entries = parse_bfile(write(tmp_path, "1 1\n2 2\n3 7\n4 36\n"))
        coeffs = [0, 1, 2, 7, 36]
        assert compare_bfile(coeffs, entries, offset_shift=0).ok

    def test_offset_shift(self, tmp_path):
        entries = parse_bfile(write(tmp_path, "0 1\n1 2\n2 7\n"))
        coeffs = [0, 1, 2, 7]
        result = compare_bfile(coeffs, entries, offset_shift=1)
        assert result.ok
        assert result.matched == 3

    def test_mismatch_reported(self, tmp_path):
        entries = parse_bfile(write(tmp_path, "0 1\n1 99\n"))
        result = compare_bfile([1, 2], entries)
        assert not result.ok
        assert result.first_mismatch_index == 1
        assert result.expected == 99
        assert result.actual == 2

    def test_out_of_range_entries_skipped(self, tmp_path):
        entries = parse_bfile(write(tmp_path, "0 1\n50 123\n"))
        result = compare_bfile([1, 2], entries)
        assert result.ok
        assert result.matched == 1
