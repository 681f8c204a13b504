#!/usr/bin/env python3
"""Command-line entry point: coproducts, products, λ-images, coefficient matrices and checks."""

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional

from canonical import CanonicalKey, canonicalize, describe
from census import census, rank_profile
from catalogue_store import CatalogueStore
from config import OUTPUT_FORMATS, get_config, set_config
from families import family_names, get_family
from fixtures import display_names, parse_matroid_ref
from free_structure import dual_basis_check, freeness_certificate, inverse_coefficients, matrix_C
from freedom import build, flag_of_word, word_of_key
from hopf import TensorSum, coproduct, multisection_coefficient, product, section_coefficient
from matroid import Matroid, bases, coloops, loops
from matroid_errors import DomainError, MatroidError, SizeCapExceeded
from word_order import (DominanceLattice, distinguished_word, hasse_dot, lambda_fibres,
                        maximal_elements, principal_ideal, validate_word)

import acceptance


def _namer(prefer_words: bool) -> Callable[[CanonicalKey], str]:
    names = display_names()

    def name(key: CanonicalKey) -> str:
        if prefer_words:
            word = word_of_key(key)
            if word is not None:
                return word or '∅'
        return describe(key, names)

    return name


def _matroid_arg(args) -> Matroid:
    if getattr(args, 'word', None):
        return build(validate_word(args.word)).matroid
    if getattr(args, 'matroid', None):
        return parse_matroid_ref(args.matroid)
    raise DomainError("give a matroid with --word or --matroid")


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=False)


def _term_lines(total: TensorSum, namer: Callable[[CanonicalKey], str]) -> str:
    lines = []
    for (left, right), coeff in total.items():
        lines.append(f"{coeff:>6}  {namer(left)} ⊗ {namer(right)}")
    lines.append(f"{len(total)} terms, coefficients sum to {total.total()}")
    return '\n'.join(lines)


# Subcommands. Each returns the text to print.

def cmd_build(args, fmt: str) -> str:
    M = _matroid_arg(args)
    word = distinguished_word(M) if args.word is None else args.word
    basis_list = sorted(sorted(b) for b in bases(M))
    # canonical forms stop at canon_n; the table itself goes up to matroid_n
    key = canonicalize(M) if M.n <= get_config().canon_n else None
    if fmt == 'json':
        doc = M.to_json()
        doc.update({'word': args.word, 'rank': M.rank, 'bases': basis_list,
                    'class': key.to_json() if key is not None else None})
        if args.word is not None:
            doc["flag"] = [sorted(s) for s in flag_of_word(args.word)]
        return _dump(doc)
    lines = [f"n={M.n} rank={M.rank} nullity={M.nullity}",
             f"distinguished word: {word}"]
    if args.word is not None:
        lines.append("flag: " + ' ⊂ '.join('{' + ','.join(map(str, sorted(s))) + '}'
                                          for s in flag_of_word(args.word)))
    lines.append(f"loops: {sorted(loops(M))}  coloops: {sorted(coloops(M))}")
    lines.append(f"{len(basis_list)} bases:")
    lines.extend('  ' + ''.join(str(x) for x in b) if M.n < 10 else '  ' + str(b)
                 for b in basis_list)
    if key is not None:
        lines.append(f"class: {describe(key, display_names())} ({key.digest})")
    else:
        lines.append(f"class: not computed, n={M.n} is above canon_n={get_config().canon_n}")
    return '\n'.join(lines)


def cmd_coproduct(args, fmt: str) -> str:
    M = _matroid_arg(args)
    total = coproduct(M, threads=args.threads)
    if fmt == 'json':
        return _dump(total.to_json())
    return _term_lines(total, _namer(prefer_words=args.word is not None))


def cmd_product(args, fmt: str) -> str:
    family = get_family(args.family)
    left, right = parse_matroid_ref(args.left), parse_matroid_ref(args.right)
    result = product(left, right, family)
    if fmt == 'json':
        return _dump(result.to_json())
    namer = _namer(prefer_words=args.family.startswith('freedom'))
    lines = [f"{coeff:>6}  {namer(key)}" for key, coeff in result.items()]
    lines.append(f"{len(result)} terms in family '{family.name}'")
    return '\n'.join(lines)


def cmd_section(args, fmt: str) -> str:
    M = _matroid_arg(args)
    value = section_coefficient(M, parse_matroid_ref(args.left), parse_matroid_ref(args.right))
    return _dump({'coefficient': str(value)}) if fmt == 'json' else str(value)


def cmd_multisection(args, fmt: str) -> str:
    M = _matroid_arg(args)
    value = multisection_coefficient(M, [parse_matroid_ref(p) for p in args.parts])
    return _dump({'coefficient': str(value)}) if fmt == 'json' else str(value)


def cmd_image(args, fmt: str) -> str:
    M = _matroid_arg(args)
    fibres = lambda_fibres(M, threads=args.threads, verbose=args.verbose)
    image = sorted(fibres, reverse=True)
    tops = sorted(maximal_elements(image), reverse=True)
    principal = len(tops) == 1 and set(image) == principal_ideal(tops[0])
    if fmt == 'json':
        return _dump({'image': image, 'fibres': {w: fibres[w] for w in image},
                      'maximal': tops, 'principal': principal})
    lines = [f"{w}  {fibres[w]}" for w in image]
    lines.append(f"{len(image)} words; maximal: {', '.join(tops)}")
    lines.append(f"principal ideal of {tops[0]}" if principal else "not a principal ideal")
    return '\n'.join(lines)


def cmd_hasse(args, fmt: str) -> str:
    lattice = DominanceLattice(args.n, args.r)
    if fmt == 'json':
        return _dump({'nodes': lattice.elements,
                      'edges': [[v, w] for v, w in lattice.covers()]})
    return hasse_dot(lattice).rstrip('\n')


def cmd_matrix_c(args, fmt: str) -> str:
    matrix = inverse_coefficients(args.n, args.r) if args.inverse else matrix_C(args.n, args.r, check=args.check)
    if fmt == 'json':
        return _dump(matrix.to_json())
    return matrix.to_table()


def cmd_freeness(args, fmt: str) -> str:
    report = freeness_certificate(args.n, enlarged_family=args.family or 'freedom+D', verbose=args.verbose)
    if fmt == 'json':
        return _dump({'n': report.n, 'ok': report.ok, 'classes_spanned': report.classes_spanned,
                      'blocks': [{'r': b.r, 'size': b.size, 'ok': b.ok} for b in report.blocks],
                      'enlarged': [{'r': e.r, 'rows': e.rows, 'columns': e.columns,
                                    'entries': [[str(x) for x in row] for row in e.entries],
                                    'rank': e.rank} for e in report.enlarged]})
    lines = list(report.lines())
    for block in report.enlarged:
        if len(block.columns) > len(block.rows):
            lines.append('')
            lines.append(block.to_table())
    return '\n'.join(lines)


def cmd_dual_basis(args, fmt: str) -> str:
    report = dual_basis_check(args.n)
    if fmt == 'json':
        return _dump({'n': report.n, 'checked': report.checked, 'ok': report.ok,
                      'failures': report.failures})
    lines = [f"✗ {f}" for f in report.failures]
    mark = '✓' if report.ok else '✗'
    lines.append(f"{mark} {report.checked} words up to length {report.n}: "
                 f"δ(P') is deconcatenation and M = Σ P'_λ(σ)")
    return '\n'.join(lines)


def cmd_census(args, fmt: str) -> str:
    store = None if args.no_store else CatalogueStore(args.store or get_config().catalogue_file)
    keys = census(args.n, store=store, verbose=args.verbose)
    profile = rank_profile(keys)
    if fmt == 'json':
        return _dump({'n': args.n, 'count': len(keys),
                      'by_rank': {str(r): c for r, c in profile.items()},
                      'classes': [k.to_json() for k in keys]})
    names = display_names()
    lines = [f"  {describe(k, names)}" for k in keys]
    lines.append(f"{len(keys)} matroids on {args.n} elements; by rank: "
                 + ', '.join(f"r={r}: {c}" for r, c in profile.items()))
    return '\n'.join(lines)


COMMANDS: Dict[str, Callable] = {
    'build': cmd_build,
    'coproduct': cmd_coproduct,
    'product': cmd_product,
    'section': cmd_section,
    'multisection': cmd_multisection,
    'image': cmd_image,
    'hasse': cmd_hasse,
    'matrix-c': cmd_matrix_c,
    'freeness': cmd_freeness,
    'dual-basis': cmd_dual_basis,
    'census': cmd_census,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--threads', type=int, default=None, help="worker processes")
    common.add_argument('--format', choices=OUTPUT_FORMATS, default=None, help="output format")
    common.add_argument('--verbose', action='store_true', help="print progress lines")
    for cap in ('coproduct_n', 'canon_n', 'perm_n', 'census_n'):
        common.add_argument('--' + cap.replace('_', '-'), dest=cap, type=int, default=None,
                            help=f"raise or lower the {cap} size cap")

    def matroid_options(p: argparse.ArgumentParser) -> None:
        p.add_argument('--word', help="freedom matroid M_w, e.g. 0101")
        p.add_argument('--matroid', help="file.json, word:0101, named:L, uniform:2,4, ...")

    parser = argparse.ArgumentParser(prog='matroid_cli', description=__doc__)
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('build', parents=[common], help="build and describe a matroid")
    matroid_options(p)
    p = sub.add_parser('coproduct', parents=[common], help="restriction-contraction coproduct")
    matroid_options(p)
    p = sub.add_parser('product', parents=[common], help="product of two classes in a family")
    p.add_argument('--left', required=True)
    p.add_argument('--right', required=True)
    p.add_argument('--family', default='freedom', help=', '.join(family_names()))
    p = sub.add_parser('section', parents=[common], help="section coefficient [M; N1, N2]")
    matroid_options(p)
    p.add_argument('--left', required=True)
    p.add_argument('--right', required=True)
    p = sub.add_parser('multisection', parents=[common], help="multisection coefficient")
    matroid_options(p)
    p.add_argument('--parts', nargs='+', required=True)
    p = sub.add_parser('image', parents=[common], help="image of λ over all orderings")
    matroid_options(p)
    for name, text in (('hasse', "Hasse diagram of W(n, r)"), ('matrix-c', "coefficient matrix C")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument('--n', type=int, required=True)
        p.add_argument('--r', type=int, required=True)
        if name == 'matrix-c':
            p.add_argument('--inverse', action='store_true', help="print C^{-1} instead")
            p.add_argument('--check', action='store_true', help="recount columns over orderings")
    p = sub.add_parser('freeness', parents=[common], help="freeness certificate in degree n")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--family', default=None, help="enlarged family (default freedom+D)")
    p = sub.add_parser('dual-basis', parents=[common], help="check the dual basis P'")
    p.add_argument('--n', type=int, required=True)
    p = sub.add_parser('census', parents=[common], help="all matroids on n elements")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--store', default=None, help="catalogue file")
    p.add_argument('--no-store', action='store_true', help="do not read or write a catalogue")
    p = sub.add_parser('verify', parents=[common], help="run the acceptance suite")
    p.add_argument('--full', action='store_true', help="include the long-running checks")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand.

    Returns:
        0 on success, 1 if verify reports a failure, 2 on usage or domain
        errors, 3 when a size cap is exceeded
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = get_config().with_overrides(
            threads=args.threads, output_format=args.format, coproduct_n=args.coproduct_n,
            canon_n=args.canon_n, perm_n=args.perm_n, census_n=args.census_n)
        set_config(config)
        if args.command == 'verify':
            return acceptance.run_acceptance(full=args.full)
        fmt = config.output_format
        if fmt == 'dot' and args.command != 'hasse':
            raise DomainError("--format dot is only available for hasse")
        print(COMMANDS[args.command](args, fmt))
        return 0
    except SizeCapExceeded as e:
        print(f"Error: {e}", file=sys.stderr)
        return 3
    except MatroidError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
