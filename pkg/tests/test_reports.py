"""
Tests pour le module reports.py
Tests des tableaux de bornes, du balayage et des exports
"""

import pytest
import os
import sys
import json
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import reports
from combinatorics import lifted_mrd_size
from partial_spreads import ps_best_upper
from reports import TABLE_COLUMNS, ReportGenerator, format_ratio, load_ea_values

# Valeurs publiées des tableaux 2 et 3 (bklb, mrdb, bkub, lold, lnew, ea)
TABLE_2 = {
    6: [1.203125, 1.109375, 1.203125, 1.015625, 1.015625, None],
    7: [1.300781, 1.136719, 1.488281, 1.003906, 1.035156, 1.175781],
    13: [1.523252, 1.166179, 1.523252, 1.461427, 1.461434, 1.228292],
    16: [1.523252, 1.166606, 1.523554, 1.523252, 1.523252, 1.186257],
    19: [1.523252, 1.166659, 1.523801, 1.523252, 1.523252, 1.210928],
}
TABLE_3 = {
    6: [1.084507, 1.0, 1.084507, 0.915493, 0.915493, None],
    7: [1.144330, 1.0, 1.309278, 0.883162, 0.910653, 1.034364],
    13: [1.306190, 1.0, 1.306190, 1.253176, 1.253182, 1.053263],
    19: [1.305653, 1.0, 1.306124, 1.305653, 1.305653, 1.037945],
}


@pytest.fixture
def generator(default_seeds, tmp_path):
    """Générateur avec les graines par défaut et un dossier d'export temporaire."""
    return ReportGenerator(seeds=default_seeds, export_dir=str(tmp_path / "exports"))


class TestFormatRatio:
    """Tests de l'arrondi des rapports."""

    def test_half_even(self):
        assert format_ratio(Fraction(1, 8), 2) == '0.12'
        assert format_ratio(Fraction(3, 8), 2) == '0.38'

    def test_six_places(self):
        assert format_ratio(Fraction(77, 71)) == '1.084507'
        assert format_ratio(1) == '1.000000'


class TestEaValues:
    """Tests du fichier de valeurs affichées seulement."""

    def test_default_file(self):
        values = load_ea_values()
        assert values[7] == 301
        assert values[19] == 5200895489
        assert 17 not in values

    def test_missing_file(self, tmp_path):
        assert load_ea_values(str(tmp_path / "absent.json")) == {}

    def test_custom_file(self, tmp_path):
        path = tmp_path / "ea.json"
        path.write_text(json.dumps({'values': {'8': 1200}}), encoding='utf-8')
        assert load_ea_values(str(path)) == {8: 1200}


class TestTables:
    """Tests de la reproduction des tableaux 1 à 3."""

    def test_table_1_row_13(self, generator):
        rows = {row['v']: row for row in generator.table_rows(1)}
        row = rows[13]
        assert [row[c] for c in TABLE_COLUMNS[:5]] == [1597245, 1222827, 1597245, 1532417, 1532425]
        assert row['ea'] == 1287958

    def test_table_1_mrdb_column(self, generator):
        rows = generator.table_rows(1)
        assert [row['mrdb'] for row in rows][:4] == [71, 291, 1179, 4747]
        assert rows[-1]['mrdb'] == 5010762411
        assert rows[0]['ea'] == ''

    @pytest.mark.parametrize("v", sorted(TABLE_2))
    def test_table_2(self, generator, v):
        entry = next(e for e in generator.table_values() if e['v'] == v)
        divisor = lifted_mrd_size(2, 3, v, 4)
        for column, expected in zip(TABLE_COLUMNS, TABLE_2[v]):
            if expected is None:
                assert entry[column] is None
                continue
            assert abs(float(Fraction(entry[column], divisor)) - expected) <= 5e-7

    @pytest.mark.parametrize("v", sorted(TABLE_3))
    def test_table_3(self, generator, v):
        entry = next(e for e in generator.table_values() if e['v'] == v)
        for column, expected in zip(TABLE_COLUMNS, TABLE_3[v]):
            if expected is None:
                continue
            assert abs(float(Fraction(entry[column], entry['mrdb'])) - expected) <= 5e-7

    def test_formatted_rows(self, generator):
        row = generator.table_rows(3)[0]
        assert row['v'] == 6
        assert row['bklb'] == '1.084507'
        assert row['mrdb'] == '1.000000'
        assert row['ea'] == ''
        assert generator.table_rows(2)[0]['lold'] == '1.015625'

    def test_unknown_table(self, generator):
        with pytest.raises(ValueError):
            generator.table_rows(4)

    def test_deterministic(self, generator):
        first = generator.to_json(generator.table_rows(2))
        second = generator.to_json(generator.table_rows(2))
        assert first == second

    def test_dataframe(self, generator):
        df = generator.table(1)
        assert list(df.columns) == ['v'] + TABLE_COLUMNS
        assert len(df) == 14


class TestBoundReport:
    """Tests du rapport de bornes."""

    def test_seven_four_three(self, generator):
        report = generator.bound_report(2, 7, 4, 3)
        assert report.best_lower.value == 333
        assert report.best_upper.value == 381
        sides = {row['side'] for row in generator.bound_rows(report)}
        assert sides == {'lower', 'upper', 'upper (lmrd subclass)'}

    def test_json_round_trip(self, generator):
        data = generator.bound_report(2, 19, 4, 3).to_dict()
        assert json.loads(json.dumps(data)) == data
        assert data['best_lower']['value'] == 6542315853


class TestSweep:
    """Tests du balayage des paramètres."""

    def test_rows(self, generator):
        rows = generator.sweep_rows([3, 2], 8)
        assert rows[0]['q'] == 2
        assert [r['q'] for r in rows] == sorted(r['q'] for r in rows)
        for row in rows:
            assert 4 <= row['d'] <= 2 * row['k'] <= row['v'] <= 8
            assert row['best_lower'] <= row['best_upper']

    def test_partial_spread_rows(self, generator):
        for row in generator.sweep_rows([2], 9):
            if row['d'] == 2 * row['k']:
                assert row['best_upper'] == ps_best_upper(2, row['v'], row['k']).value

    def test_summary(self, generator):
        summary = generator.sweep_summary(generator.sweep_rows([2], 8))
        assert summary['cells'] > 0
        assert 0 <= summary['original_fraction'] <= summary['improved_fraction'] <= 1

    def test_empty_summary(self):
        assert ReportGenerator.sweep_summary([])['cells'] == 0


class TestExports:
    """Tests des exports CSV, Excel et PDF."""

    def test_csv(self, generator, tmp_path):
        path = generator.export_csv(generator.table(1), str(tmp_path / "t1.csv"))
        with open(path, encoding='utf-8') as f:
            lines = f.read().splitlines()
        assert lines[0] == 'v,bklb,mrdb,bkub,lold,lnew,ea'
        assert lines[1].startswith('6,77,71,77,65,65')

    def test_excel_default_path(self, generator):
        from openpyxl import load_workbook

        path = generator.export_excel(generator.table(2), sheet_name="Tableau 2")
        assert os.path.exists(path)
        assert os.path.dirname(path) == generator.export_dir
        sheet = load_workbook(path)["Tableau 2"]
        assert sheet.cell(row=1, column=1).value == 'v'
        assert sheet.cell(row=1, column=1).font.bold
        assert sheet.cell(row=1, column=1).fill.start_color.rgb.endswith('4F81BD')

    def test_pdf(self, generator, tmp_path):
        path = generator.export_pdf(generator.table(3), str(tmp_path / "t3.pdf"), "Tableau 3")
        with open(path, 'rb') as f:
            assert f.read(4) == b'%PDF'

    def test_export_dir_from_environment(self, default_seeds, tmp_path):
        """Test que CDC_EXPORT_DIR fixe le dossier par défaut."""
        original = reports.EXPORT_DIR
        reports.EXPORT_DIR = str(tmp_path / "env_exports")
        try:
            generator = ReportGenerator(seeds=default_seeds)
            path = generator.export_csv(generator.table(1))
            assert path == os.path.join(str(tmp_path / "env_exports"), 'bornes.csv')
            assert os.path.exists(path)
        finally:
            reports.EXPORT_DIR = original
