import pytest

from indexcast import (EmptyInputError, MonthStamp, ParseError, make_series,
                       read_daily_csv, read_values_file, write_values_file)


class TestValuesFormat:
    def test_round_trip_is_bit_exact(self, tmp_path):
        series = make_series("2010-01", [3890.0, 4006.125, 4150.0078125,
                                         1.0 / 3.0, 2.0 / 7.0] * 5)
        path = tmp_path / "values.txt"
        write_values_file(path, series, full_precision=True)
        back = read_values_file(path, MonthStamp(2010, 1))
        assert back == series

    def test_comments_and_blank_lines_skipped(self, tmp_path):
        path = tmp_path / "values.txt"
        path.write_text("# header\n\n100\n# middle comment\n200\n\n")
        series = read_values_file(path, MonthStamp(2012, 6))
        assert series.values == (100.0, 200.0)
        assert series.start == MonthStamp(2012, 6)

    def test_parse_error_carries_line_number(self, tmp_path):
        path = tmp_path / "values.txt"
        path.write_text("100\n200\noops\n")
        with pytest.raises(ParseError) as exc:
            read_values_file(path, MonthStamp(2010, 1))
        assert exc.value.line_number == 3

    def test_non_finite_rejected(self, tmp_path):
        path = tmp_path / "values.txt"
        path.write_text("100\ninf\n")
        with pytest.raises(ParseError):
            read_values_file(path, MonthStamp(2010, 1))

    def test_empty_file(self, tmp_path):
        path = tmp_path / "values.txt"
        path.write_text("# nothing but comments\n")
        with pytest.raises(EmptyInputError):
            read_values_file(path, MonthStamp(2010, 1))


class TestDailyCsv:
    def test_parse(self, tmp_path):
        path = tmp_path / "daily.csv"
        path.write_text("date,value\n2010-01-04,3875.25\n2010-01-05,3904.75\n")
        obs = read_daily_csv(path)
        assert len(obs) == 2
        assert obs[0].date.isoformat() == "2010-01-04"
        assert obs[1].value == 3904.75

    def test_bad_header(self, tmp_path):
        path = tmp_path / "daily.csv"
        path.write_text("day,close\n2010-01-04,1\n")
        with pytest.raises(ParseError) as exc:
            read_daily_csv(path)
        assert exc.value.line_number == 1

    def test_bad_date_and_bad_value(self, tmp_path):
        path = tmp_path / "daily.csv"
        path.write_text("date,value\n04/01/2010,1\n")
        with pytest.raises(ParseError) as exc:
            read_daily_csv(path)
        assert exc.value.line_number == 2
        path.write_text("date,value\n2010-01-04,one\n")
        with pytest.raises(ParseError):
            read_daily_csv(path)
