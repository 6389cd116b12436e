"""
Export module - Renders reports and writes result files.

Output files:
- fuzz_trials.csv: one row per fuzz trial (config, failed checks, gap)
- examples.xlsx: one sheet per built-in example (name/expected/actual/ok)

Exact values are always rendered in the scalar literal grammar; decimal
renderings carry a '~' prefix and are never read back.
"""
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from .base import Point2
from .config import EXAMPLES_EXPORT_FILE, FUZZ_EXPORT_FILE, OUTPUT_DIR, OUTPUT_ENCODING
from .construct import Point3
from .fixtures import ExampleResult
from .fuzzer import FuzzSummary
from .scalar import QuadExt, format_approx, format_scalar
from .verifier import Report


def _coordinates(value) -> Optional[tuple]:
    if isinstance(value, Point3):
        return (value.x1, value.x2, value.x3)
    if isinstance(value, Point2):
        return (value.x1, value.x2)
    if isinstance(value, tuple):
        return value
    return None


def render_value(value: Any) -> str:
    """Exact literal: points as comma-separated coordinates, booleans as true/false."""
    coords = _coordinates(value)
    if coords is not None:
        return ', '.join(render_value(c) for c in coords)
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (Fraction, QuadExt)):
        return format_scalar(value)
    return str(value)


def render_approx(value: Any) -> Optional[str]:
    """Decimal rendering of scalars and points, None for anything else."""
    coords = _coordinates(value)
    if coords is not None:
        return ', '.join(render_approx(c) or str(c) for c in coords)
    if isinstance(value, bool) or not isinstance(value, (int, Fraction, QuadExt)):
        return None
    return format_approx(value)


def print_report(report: Report, approx: bool = False):
    """Print a report: values, checks with status markers, then notes."""
    print("=" * 50)
    print(report.title.upper())
    print("=" * 50)

    width = max((len(name) for name in report.values), default=0)
    for name, value in report.values.items():
        line = f"  {name.ljust(width)}: {render_value(value)}"
        if approx:
            rendered = render_approx(value)
            if rendered is not None:
                line += f"   ({rendered})"
        print(line)

    if report.checks:
        print()
        for name, ok in report.checks.items():
            print(f"  {'✓' if ok else '✗'} {name}")

    for note in report.notes:
        print(f"  ⚠ {note}")

    print("=" * 50)


def report_json(report: Report) -> Dict[str, Any]:
    """
    Flat JSON object: every value as an exact literal string except booleans,
    which stay JSON booleans like the checks under their 'check: ' keys.
    """
    data: Dict[str, Any] = {'title': report.title}
    for name, value in report.values.items():
        data[name] = value if isinstance(value, bool) else render_value(value)
    for name, ok in report.checks.items():
        data[f'check: {name}'] = ok
    if report.notes:
        data['notes'] = '; '.join(report.notes)
    data['ok'] = report.ok
    return data


def print_json(report: Report):
    json.dump(report_json(report), sys.stdout, ensure_ascii=False)
    print()


def print_example_diff(result: ExampleResult):
    """Field-by-field diff of the mismatching rows of an example."""
    for row in result.mismatches:
        print(f"  ✗ {row.name}")
        print(f"      esperado: {render_value(row.expected)}")
        print(f"      obtido:   {render_value(row.actual)}")


def print_fuzz_summary(summary: FuzzSummary):
    print("\n" + "=" * 50)
    print("RESUMO DO FUZZ")
    print("=" * 50)
    print(f"\n{summary.line()}")
    for failure in summary.failures:
        print(f"\n✗ caso {failure.trial}: {', '.join(failure.failed)}")
        print(failure.config, end='')
    print("\n" + "=" * 50)


def ensure_output_dir(output_dir: Optional[Path] = None) -> Path:
    """Ensure output directory exists."""
    output_dir = Path(output_dir) if output_dir is not None else OUTPUT_DIR
    output_dir.mkdir(parents=True, exist_ok=True)
    return output_dir


def fuzz_frame(summary: FuzzSummary) -> pd.DataFrame:
    rows = [{
        'trial': t.trial,
        'ok': t.ok,
        'failed': '; '.join(t.failed),
        'gap': t.gap,
        'config': t.config.strip().replace('\n', '; '),
    } for t in summary.results]
    return pd.DataFrame(rows, columns=['trial', 'ok', 'failed', 'gap', 'config'])


def export_fuzz(summary: FuzzSummary, filename: str = FUZZ_EXPORT_FILE,
                output_dir: Optional[Path] = None) -> Path:
    """Export per-trial fuzz results to CSV."""
    output_path = ensure_output_dir(output_dir) / filename
    df = fuzz_frame(summary)
    df.to_csv(output_path, index=False, encoding=OUTPUT_ENCODING)

    print(f"\n✓ {len(df):,} casos exportados para {output_path}")
    return output_path


def example_frame(result: ExampleResult) -> pd.DataFrame:
    rows = [{
        'name': row.name,
        'expected': render_value(row.expected),
        'actual': render_value(row.actual),
        'ok': row.ok,
    } for row in result.rows]
    return pd.DataFrame(rows, columns=['name', 'expected', 'actual', 'ok'])


def export_examples_excel(results: List[ExampleResult], filename: str = EXAMPLES_EXPORT_FILE,
                          output_dir: Optional[Path] = None) -> Optional[Path]:
    """
    Export examples.xlsx with one sheet per example.

    Args:
        results: example results to write
        filename: Output filename
        output_dir: directory (default OUTPUT_DIR)

    Returns:
        Path to the exported file
    """
    if not results:
        print("\n⚠ Nenhum resultado de exemplo para exportar")
        return None

    output_path = ensure_output_dir(output_dir) / filename

    with pd.ExcelWriter(output_path, engine='openpyxl') as writer:
        for result in sorted(results, key=lambda r: r.number):
            sheet_name = f"Example {result.number}"
            output_df = example_frame(result)
            output_df.to_excel(writer, sheet_name=sheet_name, index=False)
            print(f"  ✓ {sheet_name}: {len(output_df)} valores")

    print(f"\n✓ {len(results)} exemplos exportados para {output_path}")
    return output_path
