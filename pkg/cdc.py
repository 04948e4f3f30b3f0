"""
Constant Dimension Codes - Command Line
Bornes, tableaux, construction et vérification de codes de dimension constante

Usage:
    python cdc.py bound -q2 -v7 -d4 -k3 [--format text|json|csv]
    python cdc.py table {1,2,3} [--format text|json|csv] [--xlsx PATH] [--pdf PATH]
    python cdc.py construct {lmrd,spread,greedy,improved-linkage} -q2 -v7 [-d4] -k3 [--out PATH]
    python cdc.py verify FILE [--format text|json]
    python cdc.py sweep --q 2 3 --v-max 12 [--format csv|json|text] [--out PATH] [--xlsx PATH]
"""

import argparse
import json
import sys

import pandas as pd

from code_construction import (GREEDY_ORDERS, construct_best_linkage, greedy_cdc, lifted_mrd_code, spread_construct)
from code_io import CodeFormatError, format_code, read_code, write_code
from code_verify import verify_code
from finite_field import field_for_order
from fq_linalg import BudgetExceeded
from reports import TABLE_TITLES, ReportGenerator

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARAMS = 2
EXIT_BUDGET = 3


def status(message, machine=False):
    """Status line; kept off stdout when stdout carries json or csv."""
    print(message, file=sys.stderr if machine else sys.stdout)


def cmd_bound(args):
    machine = args.format != 'text'
    field_for_order(args.q)
    generator = ReportGenerator()
    report = generator.bound_report(args.q, args.v, args.d, args.k)

    if args.format == 'json':
        print(json.dumps(report.to_dict(), indent=2))
    elif args.format == 'csv':
        print(pd.DataFrame(generator.bound_rows(report)).to_csv(index=False), end='')
    else:
        print(f"\n📊 A_{args.q}({args.v},{args.d};{args.k})")
        print(generator.format_text(pd.DataFrame(generator.bound_rows(report))))
        print(f"\n   Borne inférieure: {report.best_lower.value}  [{report.best_lower.label()}]")
        print(f"   Borne supérieure: {report.best_upper.value}  [{report.best_upper.label()}]")
        if report.mrd_subclass_upper is not None:
            print(f"   Codes contenant un MRD relevé: <= {report.mrd_subclass_upper.value}")
    status(f"✅ {report.best_lower.value} <= A_{args.q}({args.v},{args.d};{args.k}) <= {report.best_upper.value}",
           machine)
    return EXIT_OK


def cmd_table(args):
    machine = args.format != 'text'
    generator = ReportGenerator()
    rows = generator.table_rows(args.which)
    df = pd.DataFrame(rows, columns=list(rows[0].keys()))

    if args.format == 'json':
        print(generator.to_json(rows))
    elif args.format == 'csv':
        print(df.to_csv(index=False), end='')
    else:
        print(f"\n📊 Tableau {args.which}: {TABLE_TITLES[args.which]}\n")
        print(generator.format_text(df))

    if args.xlsx:
        status(f"📄 Excel: {generator.export_excel(df, args.xlsx, f'Tableau {args.which}')}", machine)
    if args.pdf:
        status(f"📄 PDF: {generator.export_pdf(df, args.pdf, TABLE_TITLES[args.which])}", machine)
    return EXIT_OK


def _build_code(args):
    field = field_for_order(args.q)
    if args.method == 'spread':
        return spread_construct(field, args.v, args.k)
    if args.d is None:
        raise ValueError(f"--d est requis pour la méthode {args.method}")
    if args.d < 2 or args.d % 2:
        raise ValueError(f"la distance doit être paire et >= 2, reçu {args.d}")
    if args.method == 'lmrd':
        return lifted_mrd_code(field, args.v, args.d, args.k)
    if args.method == 'greedy':
        return greedy_cdc(field, args.v, args.d, args.k, args.order)
    return construct_best_linkage(field, args.v, args.d, args.k)


def cmd_construct(args):
    code = _build_code(args)
    machine = args.out is None
    if args.out:
        write_code(code, args.out)
    else:
        print(format_code(code), end='')

    d = 'inf' if code.claimed_d is None else code.claimed_d
    status(f"✅ Code ({code.v}, {len(code)}, {d}; {code.k})_{code.q} construit [{code.provenance}]", machine)
    if args.out:
        status(f"   📄 Fichier: {args.out}", machine)
    return EXIT_OK


def cmd_verify(args):
    machine = args.format == 'json'
    try:
        code = read_code(args.file)
    except CodeFormatError as e:
        status(f"❌ Fichier de code invalide: {e}", machine)
        return EXIT_VERIFY_FAILED

    report = verify_code(code)
    if args.format == 'json':
        print(json.dumps({'claimed': {'q': code.q, 'v': code.v, 'k': code.k, 'N': len(code), 'd': code.claimed_d},
                          'report': report.to_dict()}, indent=2))

    for i, j in report.duplicates:
        status(f"❌ duplicate codeword: blocs {i} et {j}", machine)
    if report.malformed:
        status(f"❌ Blocs mal formés (dimension ou forme échelonnée): {report.malformed}", machine)
    if report.budget_exceeded:
        status(f"⚠️ Budget dépassé après {report.pairs_checked} paires", machine)
        return EXIT_BUDGET

    distance = 'inf' if report.min_distance is None else report.min_distance
    if not report.passes(code.claimed_d):
        if report.witness and code.claimed_d is not None and report.min_distance < code.claimed_d:
            i, j = report.witness
            status(f"❌ Distance minimale {distance} < {code.claimed_d} annoncée, témoin: blocs {i} et {j}", machine)
        return EXIT_VERIFY_FAILED

    status(f"✅ Code ({code.v}, {report.N}, {distance}; {code.k})_{code.q} vérifié", machine)
    if code.claimed_d is not None and report.min_distance is not None and report.min_distance > code.claimed_d:
        status(f"⚠️ Distance minimale {report.min_distance} supérieure à la valeur annoncée {code.claimed_d}", machine)
    return EXIT_OK


def cmd_sweep(args):
    machine = args.format != 'text' and args.out is None
    for q in args.q:
        field_for_order(q)
    generator = ReportGenerator()
    rows = generator.sweep_rows(args.q, args.v_max)
    summary = generator.sweep_summary(rows)
    df = pd.DataFrame(rows)

    if args.format == 'json':
        output = json.dumps({'rows': rows, 'summary': summary}, indent=2)
    elif args.format == 'csv':
        output = df.to_csv(index=False)
    else:
        output = generator.format_text(df) + '\n'

    if args.out:
        with open(args.out, 'w', encoding='utf-8') as f:
            f.write(output)
        status(f"📄 Fichier: {args.out}", machine)
    else:
        print(output, end='')

    if args.xlsx:
        status(f"📄 Excel: {generator.export_excel(df, args.xlsx, 'Balayage')}", machine)
    if summary['cells']:
        status(f"📊 {summary['cells']} cas, liaison améliorée optimale: {summary['improved_fraction']:.1%}, "
               f"liaison originale: {summary['original_fraction']:.1%}", machine)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(description="Bornes et constructions pour les codes de dimension constante A_q(v,d;k)")
    subparsers = parser.add_subparsers(dest='command', required=True)

    bound = subparsers.add_parser('bound', help="toutes les bornes connues pour A_q(v,d;k)")
    bound.add_argument('-q', type=int, required=True, help="taille du corps")
    bound.add_argument('-v', type=int, required=True, help="dimension ambiante")
    bound.add_argument('-d', type=int, required=True, help="distance de sous-espaces (paire)")
    bound.add_argument('-k', type=int, required=True, help="dimension des mots de code")
    bound.add_argument('--format', choices=['text', 'json', 'csv'], default='text')
    bound.set_defaults(func=cmd_bound)

    table = subparsers.add_parser(
        'table', help="tableaux pour A_2(v,4;3), 6 <= v <= 19: 1 valeurs absolues, "
                      "2 rapport au code MRD relevé, 3 rapport à la borne MRD")
    table.add_argument('which', type=int, choices=[1, 2, 3])
    table.add_argument('--format', choices=['text', 'json', 'csv'], default='text')
    table.add_argument('--xlsx', help="export Excel")
    table.add_argument('--pdf', help="export PDF")
    table.set_defaults(func=cmd_table)

    construct = subparsers.add_parser('construct', help="construire un code explicite")
    construct.add_argument('method', choices=['lmrd', 'spread', 'greedy', 'improved-linkage'])
    construct.add_argument('-q', type=int, required=True)
    construct.add_argument('-v', type=int, required=True)
    construct.add_argument('-d', type=int, help="distance (défaut 2k pour un spread)")
    construct.add_argument('-k', type=int, required=True)
    construct.add_argument('--out', help="fichier de sortie (défaut: sortie standard)")
    construct.add_argument('--order', choices=list(GREEDY_ORDERS), default='enumeration',
                           help="ordre de parcours du glouton (défaut: énumération)")
    construct.set_defaults(func=cmd_construct)

    verify = subparsers.add_parser('verify', help="vérifier un fichier de code")
    verify.add_argument('file')
    verify.add_argument('--format', choices=['text', 'json'], default='text')
    verify.set_defaults(func=cmd_verify)

    sweep = subparsers.add_parser('sweep', help="balayage des paramètres 4 <= d <= 2k <= v <= v-max")
    sweep.add_argument('--q', type=int, nargs='+', default=[2])
    sweep.add_argument('--v-max', type=int, default=12)
    sweep.add_argument('--format', choices=['text', 'json', 'csv'], default='csv')
    sweep.add_argument('--out', help="fichier de sortie")
    sweep.add_argument('--xlsx', help="export Excel")
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    machine = getattr(args, 'format', 'text') != 'text'
    try:
        return args.func(args)
    except BudgetExceeded as e:
        status(f"⚠️ Budget dépassé: {e}", machine)
        return EXIT_BUDGET
    except (ValueError, ZeroDivisionError) as e:
        status(f"❌ Erreur de paramètres: {e}", machine)
        return EXIT_PARAMS


if __name__ == '__main__':
    sys.exit(main())
