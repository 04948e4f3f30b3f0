"""
Bound Tables and Reports
Génération des tableaux de bornes et exports CSV, JSON, Excel et PDF
"""

import json
import os
from datetime import datetime
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

import pandas as pd
from dotenv import load_dotenv

from asymptotics import mrd_subclass_bound
from bound_types import BoundReport
from combinatorics import lifted_mrd_size
from lower_bounds import best_lower, linkage_dp, load_seed_table
from upper_bounds import best_upper

load_dotenv()

# Configuration
EXPORT_DIR = os.getenv('CDC_EXPORT_DIR', 'exports')
EA_FILE = os.getenv('CDC_EA_FILE', os.path.join(os.path.dirname(os.path.abspath(__file__)), 'ea_values.json'))

TABLE_COLUMNS = ['bklb', 'mrdb', 'bkub', 'lold', 'lnew', 'ea']
TABLE_TITLES = {
    1: "Bornes inférieures et supérieures pour A_2(v,4;3)",
    2: "Bornes pour A_2(v,4;3) divisées par la taille d'un code MRD relevé",
    3: "Bornes pour A_2(v,4;3) divisées par la borne MRD",
}
TABLE_ROWS = range(6, 20)


def format_ratio(value, places=6):
    """Round an exact fraction half-even to `places` decimals."""
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = 50
        decimal = Decimal(value.numerator) / Decimal(value.denominator)
        return str(decimal.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


def load_ea_values(path=None):
    """Display-only sizes from the expurgation-augmentation construction, keyed by v."""
    path = path or EA_FILE
    if not os.path.exists(path):
        return {}
    with open(path, 'r', encoding='utf-8') as f:
        data = json.load(f)
    return {int(v): value for v, value in data.get('values', {}).items()}


class ReportGenerator:
    """Build bound reports, tables and sweeps, and export them."""

    def __init__(self, seeds=None, export_dir=None):
        self.seeds = seeds if seeds is not None else load_seed_table()
        self.export_dir = export_dir or EXPORT_DIR

    # ==================== Bounds ====================

    def bound_report(self, q, v, d, k):
        """Lower and upper bounds for A_q(v, d; k) in one report."""
        return best_lower(q, v, d, k, self.seeds).merge(best_upper(q, v, d, k))

    @staticmethod
    def bound_rows(report: BoundReport):
        rows = []
        for side, bounds in (('lower', report.lower), ('upper', report.upper)):
            for bound in bounds:
                rows.append({'side': side, 'name': bound.name, 'value': bound.value, 'detail': bound.detail})
        if report.mrd_subclass_upper is not None:
            bound = report.mrd_subclass_upper
            rows.append({'side': 'upper (lmrd subclass)', 'name': bound.name, 'value': bound.value,
                         'detail': bound.detail})
        return rows

    # ==================== Tables ====================

    def table_values(self, q=2, d=4, k=3, rows=TABLE_ROWS):
        """Absolute values of every column, as exact integers (ea may be None)."""
        v_max = max(rows)
        original = linkage_dp(q, d, k, v_max, self.seeds, 'original')
        improved = linkage_dp(q, d, k, v_max, self.seeds, 'improved')
        ea = load_ea_values() if (q, d, k) == (2, 4, 3) else {}
        values = []
        for v in rows:
            values.append({
                'v': v,
                'bklb': best_lower(q, v, d, k, self.seeds).best_lower.value,
                'mrdb': mrd_subclass_bound(q, v),
                'bkub': best_upper(q, v, d, k).best_upper.value,
                'lold': original[v].value,
                'lnew': improved[v].value,
                'ea': ea.get(v),
            })
        return values

    def table_rows(self, which, q=2, rows=TABLE_ROWS):
        """
        Rows of table 1 (absolute values), 2 (over the lifted MRD size) or 3 (over the MRD bound).

        Ratios are formatted with 6 decimals; missing ea values are empty strings.
        """
        if which not in (1, 2, 3):
            raise ValueError(f"unknown table {which}, expected 1, 2 or 3")
        result = []
        for entry in self.table_values(q, rows=rows):
            v = entry['v']
            if which == 1:
                row = {'v': v, **{c: entry[c] if entry[c] is not None else '' for c in TABLE_COLUMNS}}
            else:
                divisor = lifted_mrd_size(q, 3, v, 4) if which == 2 else entry['mrdb']
                row = {'v': v}
                for column in TABLE_COLUMNS:
                    value = entry[column]
                    row[column] = format_ratio(Fraction(value, divisor)) if value is not None else ''
            result.append(row)
        return result

    def table(self, which, q=2, rows=TABLE_ROWS):
        return pd.DataFrame(self.table_rows(which, q, rows), columns=['v'] + TABLE_COLUMNS)

    # ==================== Sweep ====================

    def sweep_rows(self, q_values, v_max):
        """Best bounds for every q in q_values, 4 <= v <= v_max, 4 <= d <= 2k <= v with d even."""
        rows = []
        for q in sorted(set(q_values)):
            for v in range(4, v_max + 1):
                for k in range(2, v // 2 + 1):
                    for d in range(4, 2 * k + 1, 2):
                        lower = best_lower(q, v, d, k, self.seeds)
                        upper = best_upper(q, v, d, k)
                        improved = linkage_dp(q, d, k, v, self.seeds, 'improved')[v].value
                        original = linkage_dp(q, d, k, v, self.seeds, 'original')[v].value
                        mrd = upper.mrd_subclass_upper
                        rows.append({
                            'q': q, 'v': v, 'd': d, 'k': k,
                            'best_lower': lower.best_lower.value,
                            'lower_source': lower.best_lower.label(),
                            'best_upper': upper.best_upper.value,
                            'upper_source': upper.best_upper.label(),
                            'mrd_subclass_upper': mrd.value if mrd else None,
                            'improved_attains': improved == lower.best_lower.value,
                            'original_attains': original == lower.best_lower.value,
                        })
        return rows

    @staticmethod
    def sweep_summary(rows):
        total = len(rows)
        if not total:
            return {'cells': 0, 'improved_fraction': None, 'original_fraction': None}
        return {
            'cells': total,
            'improved_fraction': sum(r['improved_attains'] for r in rows) / total,
            'original_fraction': sum(r['original_attains'] for r in rows) / total,
        }

    # ==================== Exports ====================

    @staticmethod
    def format_text(df):
        return df.to_string(index=False)

    @staticmethod
    def to_json(rows):
        return json.dumps(rows, indent=2, ensure_ascii=False)

    def _export_path(self, filepath, default_name):
        filepath = filepath or os.path.join(self.export_dir, default_name)
        directory = os.path.dirname(filepath)
        if directory:
            os.makedirs(directory, exist_ok=True)
        return filepath

    def export_csv(self, df, filepath=None):
        filepath = self._export_path(filepath, 'bornes.csv')
        df.to_csv(filepath, index=False)
        return filepath

    def export_excel(self, df, filepath=None, sheet_name="Bornes"):
        """Write `df` with a styled header row and auto column widths."""
        from openpyxl.styles import Alignment, Border, Font, PatternFill, Side

        filepath = self._export_path(filepath, 'bornes.xlsx')
        with pd.ExcelWriter(filepath, engine='openpyxl') as writer:
            df.to_excel(writer, index=False, sheet_name=sheet_name)
            worksheet = writer.sheets[sheet_name]

            header_fill = PatternFill(start_color="4F81BD", end_color="4F81BD", fill_type="solid")
            header_font = Font(color="FFFFFF", bold=True, size=10)
            thin = Side(style='thin')
            for col_num in range(1, len(df.columns) + 1):
                cell = worksheet.cell(row=1, column=col_num)
                cell.fill = header_fill
                cell.font = header_font
                cell.alignment = Alignment(horizontal='center', wrap_text=True)
                cell.border = Border(left=thin, right=thin, top=thin, bottom=thin)

            for column in worksheet.columns:
                width = max(len(str(cell.value)) if cell.value is not None else 0 for cell in column)
                worksheet.column_dimensions[column[0].column_letter].width = min(width + 2, 30)
        return filepath

    def export_pdf(self, df, filepath=None, title="Bornes pour les codes de dimension constante"):
        from reportlab.lib import colors
        from reportlab.lib.pagesizes import A4, landscape
        from reportlab.lib.styles import getSampleStyleSheet
        from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

        filepath = self._export_path(filepath, 'bornes.pdf')
        doc = SimpleDocTemplate(filepath, pagesize=landscape(A4))
        styles = getSampleStyleSheet()
        elements = [
            Paragraph(title, styles['Heading1']),
            Paragraph(f"Généré le {datetime.now().strftime('%d/%m/%Y %H:%M')}", styles['Normal']),
            Spacer(1, 20),
        ]

        data = [list(df.columns)] + [['' if pd.isna(x) else str(x) for x in row] for row in df.itertuples(index=False)]
        table = Table(data, repeatRows=1)
        table.setStyle(TableStyle([
            ('BACKGROUND', (0, 0), (-1, 0), colors.HexColor('#667eea')),
            ('TEXTCOLOR', (0, 0), (-1, 0), colors.whitesmoke),
            ('ALIGN', (0, 0), (-1, -1), 'CENTER'),
            ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
            ('FONTSIZE', (0, 0), (-1, -1), 8),
            ('BACKGROUND', (0, 1), (-1, -1), colors.HexColor('#f3f4f6')),
            ('GRID', (0, 0), (-1, -1), 1, colors.white),
        ]))
        elements.append(table)
        doc.build(elements)
        return filepath
