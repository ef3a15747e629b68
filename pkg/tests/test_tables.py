import csv
import io
import json

import pytest

from modules.diagram import FamilyId
from modules.errors import UnsupportedError, ValidationError
from modules.reference_data import TL_DIMS
from modules.tables import CSV_COLUMNS, dims_table, render, render_records, ssdims_table


def test_tl_dims_table():
    table = dims_table(FamilyId.TL, 10)
    for n in range(11):
        assert table.tuple_for(n) == TL_DIMS[0][n]
    assert {r.source for r in table.rows} == {'table-formula'}


def test_dims_depend_on_characteristic():
    assert dims_table(FamilyId.TL, 8, 2).tuple_for(8) == (1, 27, 13, 7, 1)


def test_planar_rook_dims_are_binomials():
    assert dims_table(FamilyId.PLANAR_ROOK, 4).tuple_for(4) == (1, 4, 6, 4, 1)


def test_motzkin_dims_from_gram_ranks():
    table = dims_table(FamilyId.MOTZKIN, 3)
    assert {r.source for r in table.rows if r.n == 3} == {'gram-rank'}
    for r in table.rows:
        assert 1 <= r.dim <= r.ssdim


def test_symmetric_type_needs_ssdims():
    with pytest.raises(UnsupportedError):
        dims_table(FamilyId.BRAUER, 4)
    assert ssdims_table(FamilyId.BRAUER, 4).tuple_for(4) == (3, 6, 1)


def test_negative_size_rejected():
    with pytest.raises(ValidationError):
        ssdims_table(FamilyId.TL, -1)
    with pytest.raises(ValidationError):
        dims_table(FamilyId.TL, 3, 4)


def test_csv_output():
    text = render(dims_table(FamilyId.TL, 4), 'csv')
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows[-1] == ['TL', '4', '4', '0', '1', '1', 'table-formula']
    assert render(dims_table(FamilyId.TL, 4), 'csv') == text


def test_json_output():
    payload = json.loads(render(ssdims_table(FamilyId.TL, 3), 'json'))
    assert payload['schema_version'] == 1
    assert payload['kind'] == 'ssdims'
    assert payload['rows'][0]['dim'] is None


def test_text_output():
    text = render(dims_table(FamilyId.TL, 6))
    assert text.splitlines()[0] == "dims of tl, char 0"
    assert text.splitlines()[-1].split() == ['6', '1', '9', '4', '1']


def test_unknown_format():
    with pytest.raises(ValidationError):
        render(dims_table(FamilyId.TL, 2), 'xml')
    with pytest.raises(ValidationError):
        render_records([], 'yaml')


def test_records():
    records = [{'a': 1, 'b': 'x'}, {'a': 2, 'b': 'y'}]
    assert render_records(records) == "a=1  b=x\na=2  b=y\n"
    assert render_records(records, 'csv').splitlines()[0] == "a,b"
    assert json.loads(render_records(records, 'json'))['rows'] == records
