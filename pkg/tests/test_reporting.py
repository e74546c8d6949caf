import csv
import io
import re

import pytest

from smoothfem import ElementParams, assign_dofs
from smoothfem.reporting import (
    fixed_width_report,
    table_from_dict,
    table_to_csv,
    table_to_dict,
)

# Frozen fixed-width tabulation for (n, m, k1) = (3, 3, 2); the data lines
# are a byte-for-byte compatibility contract.
REFERENCE_DATA_LINES = """\
simplex 0  derivative 0 dof       1  sum=       1
simplex 0  derivative 1 dof       3  sum=       4
simplex 0  derivative 2 dof       6  sum=      10
simplex 0  derivative 3 dof      10  sum=      20
simplex 0  derivative 4 dof      15  sum=      35
simplex 0  derivative 5 dof      21  sum=      56
simplex 0  derivative 6 dof      28  sum=      84
simplex 0  derivative 7 dof      36  sum=     120
simplex 0  derivative 8 dof      45  sum=     165
simplex 0  derivative 9 dof      55  sum=     220
simplex 0  derivative10 dof      66  sum=     286
simplex 0  derivative11 dof      78  sum=     364
simplex 0  derivative12 dof      91  sum=     455
level   0  #simplex   4 dofs    455 total    1820
simplex 1  derivative 0 dof       2  sum=       2
simplex 1  derivative 1 dof       6  sum=       8
simplex 1  derivative 2 dof      12  sum=      20
simplex 1  derivative 3 dof      20  sum=      40
simplex 1  derivative 4 dof      30  sum=      70
simplex 1  derivative 5 dof      42  sum=     112
simplex 1  derivative 6 dof      56  sum=     168
level   1  #simplex   6 dofs    168 total    1008
simplex 2  derivative 0 dof      28  sum=      28
simplex 2  derivative 1 dof      45  sum=      73
simplex 2  derivative 2 dof      63  sum=     136
simplex 2  derivative 3 dof      82  sum=     218
level   2  #simplex   4 dofs    218 total     872
simplex 3  derivative 0 dof     360  sum=     360
level   3  #simplex   1 dofs    360 total     360
""".splitlines()

REFERENCE_FINAL_LINE = (
    "(n m k_1)= 3 3 2,dim P_{ 27}=    4060C^m-P_k^n=    4060"
)

FINAL_LINE_PATTERN = re.compile(
    r"^\(n m k_1\)=(.{2})(.{2})(.{2}),dim P_\{(.{3})\}=(.{8})C\^m-P_k\^n=(.{8})$"
)


@pytest.fixture(scope="module")
def reference_table():
    return assign_dofs(ElementParams(n=3, m=3, k1=2))


@pytest.fixture(scope="module")
def small_table():
    return assign_dofs(ElementParams(n=2, m=1, k1=0))


class TestFixedWidthReport:
    def test_reference_data_lines_byte_exact(self, reference_table):
        lines = fixed_width_report(reference_table).splitlines()
        assert lines[:-1] == REFERENCE_DATA_LINES

    def test_reference_final_line(self, reference_table):
        final = fixed_width_report(reference_table).splitlines()[-1]
        assert final == REFERENCE_FINAL_LINE
        match = FINAL_LINE_PATTERN.match(final)
        assert match
        fields = [int(g) for g in match.groups()]
        assert fields == [3, 3, 2, 27, 4060, 4060]

    def test_trailing_newline(self, small_table):
        assert fixed_width_report(small_table).endswith("\n")

    def test_small_case_structure(self, small_table):
        lines = fixed_width_report(small_table).splitlines()
        # 3 + 2 + 1 order lines, 3 level lines, 1 final line
        assert len(lines) == 10
        assert lines[0] == "simplex 0  derivative 0 dof       1  sum=       1"
        assert lines[3] == "level   0  #simplex   3 dofs      6 total      18"
        assert lines[-1] == (
            "(n m k_1)= 2 1 0,dim P_{  5}=      21C^m-P_k^n=      21"
        )

    def test_debug_face_checks(self, reference_table):
        lines = fixed_width_report(reference_table, debug_face_checks=True).splitlines()
        checks = [ln for ln in lines if ln.startswith("check: ")]
        assert len(checks) == 4  # orders 0..3 at the face level
        assert all(not ln.startswith("check") for ln in lines[len(checks):])
        # first claimed face member for order 0
        assert re.match(r"^check: (\s+\d+){4}\s+2\s+0\s+0\s+1\s+2$", checks[0])

    def test_debug_lines_off_by_default(self, reference_table):
        assert "check:" not in fixed_width_report(reference_table)


class TestJsonRoundTrip:
    @pytest.mark.parametrize(
        "params",
        [ElementParams(n=2, m=1, k1=0), ElementParams(n=3, m=1, k1=1)],
    )
    def test_dict_round_trip(self, params):
        table = assign_dofs(params)
        data = table_to_dict(table)
        assert table_from_dict(data) == table

    def test_dict_shape(self, small_table):
        data = table_to_dict(small_table)
        assert data["params"] == {"n": 2, "m": 1, "k1": 0, "k": 5}
        assert data["totals"]["grand_total"] == 21
        assert data["totals"]["dim_pk"] == 21
        assert sum(len(g["members"]) for g in data["groups"]) == 21
        levels = [row["level"] for row in data["totals"]["per_level"]]
        assert levels == [0, 1, 2]


class TestCsvExport:
    def test_row_count_and_header(self, small_table):
        text = table_to_csv(small_table)
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == [
            "alpha_0", "alpha_1", "alpha_2", "level", "vertices", "order", "ordinal"
        ]
        assert len(rows) == 22

    def test_rows_encode_membership(self, small_table):
        k = small_table.params.k
        rows = list(csv.DictReader(io.StringIO(table_to_csv(small_table))))
        for row in rows:
            alpha = [int(row[f"alpha_{i}"]) for i in range(3)]
            assert sum(alpha) == k
            verts = [int(v) for v in row["vertices"].split("-")]
            assert sum(alpha[v] for v in verts) == k - int(row["order"])

    def test_ordinals_contiguous(self, small_table):
        rows = list(csv.DictReader(io.StringIO(table_to_csv(small_table))))
        seen = {}
        for row in rows:
            key = (row["vertices"], row["order"])
            expect = seen.get(key, 0)
            assert int(row["ordinal"]) == expect
            seen[key] = expect + 1
