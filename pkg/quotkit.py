#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Command line front end. Splitting types are comma separated integers; write
negative leading entries as --b=-5,8,12 so they are not taken for options.

Exit codes: 0 success (boolean answers are part of the output), 1 internal
consistency failure, 2 bad input, 3 search space guard exceeded.
"""
import os
import sys
import json
import logging
import logging.config
import argparse
from typing import Optional
from util.balancing import construct_datum, is_minimal, search_datum, verify_datum
from util.betti import (decompose, diagram_to_triple, fraction_json, in_cone,
                        lattice_point_realizable)
from util.config import Config
from util.errors import (ConnectivityError, GuardExceededError, NotRealizableError,
                         PreconditionError, QuotkitError)
from util.matrixgen import certify_ses, render
from util.oracle import OracleConfig, generic_cokernel_split_numeric, generic_kernel_split_numeric
from util.quot_geometry import ORDERS, connectedness_certificate, irreducible, verify_certificate
from util.realizability import Triple, is_realizable, quantities, realizable
from util.report import (census_text, datum_text, decomposition_frame, diagram_frame, edges_frame,
                         write_census_workbook)
from util.splitting import parse_splitting_type
from util.stable_pairs import component_census, enumerate_stable_pairs

log = logging.getLogger(__name__)

LOGGING_CONF = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'util', 'logging.conf')

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


def splitting_type(text: str):
    """argparse type for "0,4,5,6,8,12"."""
    try:
        return parse_splitting_type(text)
    except PreconditionError as error:
        raise argparse.ArgumentTypeError(str(error)) from error


def parse_args(argv: Optional[list] = None) -> dict:
    """Parse the command line arguments. If any of the rules defined by this function
    is broken, the program will abort with a clear error message given by argparse.
    Returns: vars as a dict with all available arguments as keys.
    """
    parser = argparse.ArgumentParser(
        prog='quotkit',
        description='Splitting types of vector bundles on the projective line: realizability '
                    'of short exact sequences and the components of the locally free Quot locus',
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument("-c", "--config-file", type=str,
                        help="Specify alternate configuration input file in yaml format")
    parser.add_argument("-l", "--log-level", type=str,
                        help="Set the log level, default is WARNING")
    parser.add_argument("--json", dest='json_global', action='store_true',
                        help="Emit JSON instead of text")
    parser.add_argument("--guard-limit", type=int,
                        help="Largest search space an exhaustive search may visit")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--json", action='store_true', help="Emit JSON instead of text")
    output.add_argument("--format", choices=('text', 'json'), default='text',
                        help="Output format")

    triple = argparse.ArgumentParser(add_help=False)
    triple.add_argument("--b", type=splitting_type, required=True, help="Kernel splitting type")
    triple.add_argument("--e", type=splitting_type, required=True, help="Ambient splitting type")
    triple.add_argument("--a", type=splitting_type, required=True,
                        help="Quotient splitting type")

    locus = argparse.ArgumentParser(add_help=False)
    locus.add_argument("--e", type=splitting_type, required=True, help="Ambient splitting type")
    locus.add_argument("--n", type=int, required=True, help="Rank of the quotients")
    locus.add_argument("--d", type=int, required=True, help="Degree of the quotients")

    commands = parser.add_subparsers(dest='command', required=True)

    command = commands.add_parser('realizable', parents=[triple, output],
                                  help="Decide whether 0 -> O(b) -> O(e) -> O(a) -> 0 exists")
    command.add_argument("--cross-check", action='store_true',
                         help="Evaluate the S-condition as well and compare")
    command.add_argument("--tables", action='store_true',
                         help="Include the A, B, S and T tables")

    command = commands.add_parser('balance', parents=[triple, output],
                                  help="Balancing datum of a realizable triple")
    command.add_argument("--search", action='store_true',
                         help="Search all order preserving assignments instead of constructing")
    command.add_argument("--minimal", action='store_true', help="Also decide minimality")

    command = commands.add_parser('construct', parents=[triple, output],
                                  help="Explicit matrices of the short exact sequence")
    command.add_argument("--no-fast-path", action='store_true',
                         help="Always compute the gcd of the maximal minors")

    command = commands.add_parser('components', parents=[locus, output],
                                  help="Strongly stable pairs, one per component")
    command.add_argument("--all-stable", action='store_true',
                         help="List every stable pair, not only the strongly stable ones")
    command.add_argument("--cross-check", action='store_true',
                         help="Compare the strongly stable test with D = T")
    command.add_argument("--xlsx", type=str, help="Also store the census in this workbook")

    command = commands.add_parser('irreducible', parents=[locus, output],
                                  help="Decide irreducibility of the locally free locus")
    command.add_argument("--cross-check", action='store_true',
                         help="Compare with the balance condition and the census")

    command = commands.add_parser('connected', parents=[locus, output],
                                  help="Certificate that the locally free locus is connected")
    command.add_argument("--exhaustive", action='store_true',
                         help="Run the ascent from every stable pair")
    command.add_argument("--order", choices=ORDERS, help="Side iterative balancing updates first")

    command = commands.add_parser('betti', parents=[output],
                                  help="Betti diagrams of length two resolutions")
    command.add_argument("action", choices=('decompose', 'realizable'))
    command.add_argument("--diagram", type=str, required=True, help="Diagram file")
    command.add_argument("--importer", type=str, help="Importer plugin module")

    command = commands.add_parser('oracle', parents=[output],
                                  help="Generic kernels and cokernels from random matrices")
    command.add_argument("action", choices=('kernel-split', 'cokernel-split'))
    command.add_argument("--b", type=splitting_type, help="Kernel splitting type")
    command.add_argument("--e", type=splitting_type, required=True, help="Ambient splitting type")
    command.add_argument("--a", type=splitting_type, help="Quotient splitting type")
    command.add_argument("--prime", type=int, help="Prime modulus")
    command.add_argument("--trials", type=int, help="Number of random trials")
    command.add_argument("--seed", type=int, help="Seed of the random matrices")
    return vars(parser.parse_args(argv))


def setup_logging(level: Optional[str]):
    """Logging from util/logging.conf, optionally with every logger set to level."""
    logging.config.fileConfig(LOGGING_CONF, disable_existing_loggers=False)
    if level is not None:
        numeric_level = getattr(logging, level.upper(), None)
        if not isinstance(numeric_level, int):
            raise PreconditionError(f'unknown log level {level!r}')
        logging.getLogger().setLevel(numeric_level)
        # pylint: disable=E1101
        for logger in logging.root.manager.loggerDict:
            logging.getLogger(logger).setLevel(numeric_level)
        # pylint: enable=E1101


def _triple(args: dict) -> Triple:
    return Triple(args['b'], args['e'], args['a'])


def cmd_realizable(args: dict, conf: Config) -> tuple:
    """realizable subcommand."""
    t = _triple(args)
    verdict = realizable(t, cross_check=conf.cross_check)
    payload = {'triple': t.to_json(), **verdict.to_json()}
    if args.get('tables') and t.ranks_match():
        payload['quantities'] = quantities(t).to_json()

    lines = [f'b = {t.b}  e = {t.e}  a = {t.a}',
             f"realizable: {'yes' if verdict else 'no'}"]
    if verdict:
        lines.append(datum_text(verdict.witness, t.m, t.n))
    else:
        lines.append(f'{verdict.witness.kind}: {verdict.witness.detail}')
        if verdict.witness.violations:
            lines.append('violations: ' + ', '.join(str(v) for v in verdict.witness.violations))
    return payload, '\n'.join(lines)


def cmd_balance(args: dict, conf: Config) -> tuple:
    """balance subcommand."""
    t = _triple(args)
    if args.get('search'):
        datum = search_datum(t, conf.guard_limit)
    elif is_realizable(t):
        datum = construct_datum(t)
    else:
        datum = None
    payload = {'triple': t.to_json(), 'found': datum is not None,
               'datum': None if datum is None else datum.to_json()}
    if datum is None:
        return payload, f'b = {t.b}  e = {t.e}  a = {t.a}\nno balancing datum'

    payload['verified'] = verify_datum(t, datum)
    lines = [f'b = {t.b}  e = {t.e}  a = {t.a}', datum_text(datum, t.m, t.n)]
    if args.get('minimal'):
        payload['minimal'] = is_minimal(t, datum, conf.guard_limit)
        lines.append(f"minimal: {'yes' if payload['minimal'] else 'no'}")
    return payload, '\n'.join(lines)


def cmd_construct(args: dict, _conf: Config) -> tuple:
    """construct subcommand."""
    t = _triple(args)
    certificate = certify_ses(t, fast_path=not args.get('no_fast_path'))
    checks = ', '.join(f"{name}={'ok' if certificate.checks.get(name) else 'FAILED'}"
                       for name in certificate.CHECKS)
    text = '\n'.join([f'b = {t.b}  e = {t.e}  a = {t.a}',
                      'G =', render(certificate.G), 'C =', render(certificate.C), checks])
    if not certificate.valid:
        raise QuotkitError(f'certificate checks failed for {t}: {certificate.checks}')
    return certificate.to_json(), text


def cmd_components(args: dict, conf: Config) -> tuple:
    """components subcommand."""
    e, n, d = args['e'], args['n'], args['d']
    if args.get('all_stable'):
        records = enumerate_stable_pairs(e, n, d, conf.guard_limit, conf.cross_check)
    else:
        records = component_census(e, n, d, conf.guard_limit, conf.cross_check)
    if args.get('xlsx'):
        conf.output_file = args.get('xlsx')
        if write_census_workbook(conf, records, e, n, d) is False:
            raise QuotkitError(f'census workbook {conf.output_file} could not be written')
    payload = {'e': e.to_json(), 'n': n, 'd': d, 'count': len(records),
               'records': [record.to_json() for record in records]}
    return payload, census_text(records, e, n, d)


def cmd_irreducible(args: dict, conf: Config) -> tuple:
    """irreducible subcommand."""
    e, n, d = args['e'], args['n'], args['d']
    report = irreducible(e, n, d, cross_check=conf.cross_check, guard_limit=conf.guard_limit)
    payload = {'e': e.to_json(), 'n': n, 'd': d, **report.to_json()}
    lines = [f'e = {e}, n = {n}, d = {d}',
             f"irreducible: {'yes' if report else 'no'}",
             f'most balanced quotient: {report.a}',
             f'most balanced kernel: {report.b}',
             f"n' = {report.n_prime}, m' = {report.m_prime}, Delta = {report.delta}",
             f"irreducibility bound holds: {'yes' if report.corollary else 'no'}"]
    if report.census_size is not None:
        lines.append(f'components: {report.census_size}')
    return payload, '\n'.join(lines)


def cmd_connected(args: dict, conf: Config) -> tuple:
    """connected subcommand."""
    e, n, d = args['e'], args['n'], args['d']
    certificate = connectedness_certificate(e, n, d, exhaustive=bool(args.get('exhaustive')),
                                            order=conf.ib_order, guard_limit=conf.guard_limit)
    if not verify_certificate(e, certificate, conf.guard_limit):
        raise ConnectivityError(f'certificate for e={e}, n={n}, d={d} does not verify',
                                certificate)
    payload = {**certificate.to_json(), 'verified': True}
    lines = [f'e = {e}, n = {n}, d = {d}',
             f'root: {certificate.root[0]} | {certificate.root[1]}',
             f'components: {len(certificate.nodes)}, auxiliary pairs: '
             f'{len(certificate.auxiliary)}, witnesses: {len(certificate.edges)}',
             'connected: yes']
    if certificate.edges:
        lines.append(edges_frame(certificate).to_string(index=False))
    return payload, '\n'.join(lines)


def cmd_betti(args: dict, conf: Config) -> tuple:
    """betti subcommand."""
    filename = args['diagram']
    importer = conf.importer_for(filename)
    if importer is None:
        raise PreconditionError(f'no importer for {filename}; name one with --importer')
    beta = importer.load(filename)
    if beta is None:
        raise PreconditionError(f'cannot read diagram file {filename}')
    text = [diagram_frame(beta).to_string()]

    if args['action'] == 'decompose':
        parts = decompose(beta)
        payload = {'diagram': beta.to_json(), 'in_cone': parts is not None,
                   'parts': None if parts is None else
                   [{'coefficient': fraction_json(coefficient), 'degrees': list(degrees),
                     'pure': pure.to_json()} for coefficient, degrees, pure in parts]}
        if parts is None:
            text.append('not in the cone')
        else:
            text.append(decomposition_frame(parts).to_string(index=False))
        return payload, '\n'.join(text)

    t = diagram_to_triple(beta)
    cone = in_cone(beta)
    triple_ok = is_realizable(t)
    payload = {'diagram': beta.to_json(), 'triple': t.to_json(), 'in_cone': cone,
               'triple_realizable': triple_ok,
               'lattice_point_realizable': lattice_point_realizable(beta)}
    text += [f'b = {t.b}  e = {t.e}  a = {t.a}',
             f"in cone: {'yes' if cone else 'no'}",
             f"triple realizable: {'yes' if triple_ok else 'no'}"]
    return payload, '\n'.join(text)


def cmd_oracle(args: dict, conf: Config) -> tuple:
    """oracle subcommand."""
    config = OracleConfig.from_config(conf)
    e = args['e']
    if args['action'] == 'kernel-split':
        if args.get('a') is None:
            raise PreconditionError('kernel-split needs --a')
        result = generic_kernel_split_numeric(e, args['a'], config)
        payload = {'e': e.to_json(), 'a': args['a'].to_json(), 'b': result.to_json()}
        text = f'generic kernel of {e} -> {args["a"]}: {result}'
    else:
        if args.get('b') is None:
            raise PreconditionError('cokernel-split needs --b')
        result = generic_cokernel_split_numeric(args['b'], e, config)
        payload = {'b': args['b'].to_json(), 'e': e.to_json(), 'a': result.to_json()}
        text = f'generic cokernel of {args["b"]} -> {e}: {result}'
    payload['config'] = config.to_json()
    text += f'\nprime = {config.prime}, trials = {config.trials}, seed = {config.seed}'
    return payload, text


COMMANDS = {
    'realizable': cmd_realizable,
    'balance': cmd_balance,
    'construct': cmd_construct,
    'components': cmd_components,
    'irreducible': cmd_irreducible,
    'connected': cmd_connected,
    'betti': cmd_betti,
    'oracle': cmd_oracle,
}


def run(argv: Optional[list] = None) -> int:
    """Parse argv, dispatch and print the result. Returns the exit code."""
    try:
        args = parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else EXIT_INPUT

    try:
        setup_logging(args.get('log_level'))
    except PreconditionError as error:
        print(f'error: {error}', file=sys.stderr)
        return EXIT_INPUT
    conf = Config()
    if conf.load_config(args) is False:
        log.error('Failed to load the configuration %s', conf.filename)
        return EXIT_INPUT

    try:
        payload, text = COMMANDS[args['command']](args, conf)
    except GuardExceededError as error:
        print(f'error: {error}', file=sys.stderr)
        return EXIT_GUARD
    except (PreconditionError, NotRealizableError) as error:
        print(f'error: {error}', file=sys.stderr)
        return EXIT_INPUT
    except QuotkitError as error:
        log.error('%s failed: %s', args['command'], error)
        print(f'error: {error}', file=sys.stderr)
        return EXIT_INTERNAL

    if args.get('json') or args.get('json_global') or args.get('format') == 'json':
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    return EXIT_OK


def main():
    """Main program"""
    sys.exit(run())


if __name__ == '__main__':
    try:
        main()
    except KeyboardInterrupt as err:
        print('Interrupted')
        sys.exit(err)
