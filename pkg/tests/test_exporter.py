from fractions import Fraction as F

import pandas as pd

from src.tetragap.config import OUTPUT_ENCODING
from src.tetragap.construct import Point3
from src.tetragap.exporter import (export_examples_excel, export_fuzz, print_report, render_approx,
                                   render_value, report_json)
from src.tetragap.fixtures import run_example
from src.tetragap.fuzzer import run_fuzz
from src.tetragap.scalar import QuadExt
from src.tetragap.verifier import Report


def test_render_value():
    assert render_value(F(-3, 6)) == "-1/2"
    assert render_value(True) == "true"
    assert render_value(Point3(F(1), QuadExt(F(0), F(1, 3), 3), F(4))) == "1, 0+1/3*sqrt(3), 4"
    assert render_value("r < r_reg") == "r < r_reg"


def test_render_approx():
    assert render_approx(F(1, 4)) == "~0.25"
    assert render_approx(True) is None
    assert render_approx("text") is None


def test_report_json_is_flat():
    report = Report("Demo", values={'gap': F(7, 81), 'equality': False},
                    checks={'lhs = rhs': True}, notes=['careful'])
    data = report_json(report)
    assert data == {'title': 'Demo', 'gap': '7/81', 'equality': False,
                    'check: lhs = rhs': True, 'notes': 'careful', 'ok': True}


def test_print_report_markers(capsys):
    report = Report("Demo", values={'r': F(1, 3)}, checks={'good': True, 'bad': False},
                    notes=['odd'])
    print_report(report, approx=True)
    out = capsys.readouterr().out
    assert "DEMO" in out
    assert "1/3   (~0.333333333333)" in out
    assert "✓ good" in out and "✗ bad" in out and "⚠ odd" in out
    assert not report.ok


def test_export_fuzz(tmp_path, capsys):
    summary = run_fuzz(trials=3, seed=42, verbose=False)
    path = export_fuzz(summary, output_dir=tmp_path)
    df = pd.read_csv(path, encoding=OUTPUT_ENCODING)
    assert list(df.columns) == ['trial', 'ok', 'failed', 'gap', 'config']
    assert list(df['trial']) == [0, 1, 2]
    assert df['ok'].all()
    assert "3 casos exportados" in capsys.readouterr().out


def test_export_examples_excel(tmp_path):
    results = [run_example(n) for n in (3, 1)]
    path = export_examples_excel(results, output_dir=tmp_path)
    sheets = pd.read_excel(path, sheet_name=None)
    assert list(sheets) == ['Example 1', 'Example 3']
    example1 = sheets['Example 1'].set_index('name')
    assert str(example1.loc['a0', 'actual']) == '20328'
    assert sheets['Example 3']['ok'].all()


def test_export_examples_excel_empty(tmp_path):
    assert export_examples_excel([], output_dir=tmp_path) is None
